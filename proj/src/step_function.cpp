#include "rocaware/step_function.hpp"

#include <algorithm>
#include <iterator>

#include "rocaware/core_metrics.hpp"
#include "rocaware/error.hpp"

namespace rocaware {

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values,
                           std::vector<double> complements)
    : breakpoints_(std::move(breakpoints)),
      values_(std::move(values)),
      complements_(std::move(complements)) {
    if (breakpoints_.size() < 2 || breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0)
        throw Error("step function breakpoints must run from 0 to 1");
    for (std::size_t i = 1; i < breakpoints_.size(); ++i)
        if (!(breakpoints_[i] > breakpoints_[i - 1]))
            throw Error("step function breakpoints must be strictly increasing");
    if (values_.size() != breakpoints_.size())
        throw Error("step function needs one value per breakpoint");
    for (double v : values_)
        if (!(v >= 0.0 && v <= 1.0)) throw Error("step function value outside [0,1]");
    if (complements_.empty()) {
        complements_.reserve(values_.size());
        for (double v : values_) complements_.push_back(1.0 - v);
    } else if (complements_.size() != values_.size()) {
        throw Error("step function complement count mismatch");
    }
}

StepFunction StepFunction::constant(double value) {
    return StepFunction({0.0, 1.0}, {value, value});
}

std::size_t StepFunction::segment_of(double t) const {
    require_threshold(t);
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    return static_cast<std::size_t>(std::distance(breakpoints_.begin(), it)) - 1;
}

double StepFunction::at(double t) const { return values_[segment_of(t)]; }

double StepFunction::complement_at(double t) const { return complements_[segment_of(t)]; }

bool StepFunction::non_increasing() const {
    return std::is_sorted(values_.begin(), values_.end(), std::greater<>{});
}

StepFunction StepFunction::refined(std::span<const double> breakpoints) const {
    std::vector<double> bps(breakpoints.begin(), breakpoints.end());
    std::vector<double> vals, comps;
    vals.reserve(bps.size());
    comps.reserve(bps.size());
    for (double b : bps) {
        auto seg = segment_of(b);
        vals.push_back(values_[seg]);
        comps.push_back(complements_[seg]);
    }
    StepFunction out(std::move(bps), std::move(vals), std::move(comps));
    for (double b : breakpoints_)
        if (!std::binary_search(out.breakpoints_.begin(), out.breakpoints_.end(), b))
            throw Error("refinement must contain every original breakpoint");
    return out;
}

std::vector<double> merge_breakpoints(const StepFunction& a, const StepFunction& b) {
    std::vector<double> out;
    std::set_union(a.breakpoints().begin(), a.breakpoints().end(), b.breakpoints().begin(),
                   b.breakpoints().end(), std::back_inserter(out));
    return out;
}

} // namespace rocaware
