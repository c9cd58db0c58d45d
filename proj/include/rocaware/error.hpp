#pragma once

#include <stdexcept>
#include <string>

namespace rocaware {

// Raised for any contract violation caused by the caller's data: bad
// thresholds, single-class datasets, malformed files. The CLI maps it to
// exit status 1; anything else escaping is treated as an internal error.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rocaware
