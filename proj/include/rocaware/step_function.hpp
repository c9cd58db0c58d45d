#pragma once

#include <span>
#include <vector>

namespace rocaware {

// Piecewise-constant function on [0,1].
//
// breakpoints: 0 = b_0 < b_1 < ... < b_m = 1
// values[i]:   the value on [b_i, b_{i+1}) for i < m, values[m] the value at t = 1
//
// Each value also carries its complement 1 - value. Profiles built from
// counts store the complement as (AP - TP) / AP so that comparisons against
// the line 1 - t line up exactly with breakpoints that are data scores.
class StepFunction {
public:
    StepFunction(std::vector<double> breakpoints, std::vector<double> values,
                 std::vector<double> complements = {});

    static StepFunction constant(double value);

    // Throws Error for t outside [0,1].
    double at(double t) const;
    double complement_at(double t) const;

    // Index of the segment containing t.
    std::size_t segment_of(double t) const;

    std::size_t segment_count() const { return values_.size(); }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<double>& complements() const { return complements_; }

    bool non_increasing() const;

    // Same function re-expressed on a superset of its breakpoints.
    StepFunction refined(std::span<const double> breakpoints) const;

private:
    std::vector<double> breakpoints_;
    std::vector<double> values_;
    std::vector<double> complements_;
};

std::vector<double> merge_breakpoints(const StepFunction& a, const StepFunction& b);

} // namespace rocaware
