#pragma once

#include <limits>
#include <string>
#include <vector>

namespace rocaware {

// A real interval with explicit endpoint closure. Threshold sets produced by
// the strict "score > t" rule are naturally half-open ([s_i, s_j)), so every
// interval we report carries both flags instead of assuming a convention.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool lo_closed = false;
    bool hi_closed = false;

    static Interval closed(double lo, double hi) { return {lo, hi, true, true}; }
    static Interval open(double lo, double hi) { return {lo, hi, false, false}; }
    static Interval closed_open(double lo, double hi) { return {lo, hi, true, false}; }
    static Interval open_closed(double lo, double hi) { return {lo, hi, false, true}; }
    static Interval point(double x) { return {x, x, true, true}; }
    static Interval empty() { return {0.0, 0.0, false, false}; }

    static Interval below(double x, bool inclusive) {
        return {-std::numeric_limits<double>::infinity(), x, false, inclusive};
    }
    static Interval above(double x, bool inclusive) {
        return {x, std::numeric_limits<double>::infinity(), inclusive, false};
    }

    // The open unit interval, the domain of every threshold condition.
    static Interval unit_interior() { return open(0.0, 1.0); }

    bool is_empty() const {
        if (lo < hi) return false;
        return !(lo == hi && lo_closed && hi_closed);
    }
    bool is_degenerate() const { return !is_empty() && lo == hi; }
    double width() const { return is_empty() ? 0.0 : hi - lo; }
    bool contains(double x) const {
        if (x < lo || x > hi) return false;
        if (x == lo && !lo_closed) return false;
        if (x == hi && !hi_closed) return false;
        return true;
    }

    friend bool operator==(const Interval&, const Interval&) = default;
};

Interval intersect(const Interval& a, const Interval& b);

// "[0.3, 0.45)" style rendering; used in reports and SVG tooltips.
std::string to_string(const Interval& iv);

// Sorted, pairwise-disjoint, non-empty intervals. Touching pieces whose
// shared endpoint is covered by either side are merged on insertion.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(std::vector<Interval> pieces);

    void add(const Interval& iv);

    const std::vector<Interval>& intervals() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }
    std::size_t size() const { return pieces_.size(); }
    double total_width() const;
    bool contains(double x) const;

    IntervalSet intersect(const IntervalSet& other) const;
    IntervalSet intersect(const Interval& iv) const;
    IntervalSet without_degenerate() const;

    auto begin() const { return pieces_.begin(); }
    auto end() const { return pieces_.end(); }

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    void normalize();

    std::vector<Interval> pieces_;
};

} // namespace rocaware
