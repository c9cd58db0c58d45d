#include "rocaware/interval.hpp"

#include <algorithm>
#include <cstdio>

namespace rocaware {

Interval intersect(const Interval& a, const Interval& b) {
    Interval r;
    if (a.lo > b.lo) {
        r.lo = a.lo;
        r.lo_closed = a.lo_closed;
    } else if (b.lo > a.lo) {
        r.lo = b.lo;
        r.lo_closed = b.lo_closed;
    } else {
        r.lo = a.lo;
        r.lo_closed = a.lo_closed && b.lo_closed;
    }
    if (a.hi < b.hi) {
        r.hi = a.hi;
        r.hi_closed = a.hi_closed;
    } else if (b.hi < a.hi) {
        r.hi = b.hi;
        r.hi_closed = b.hi_closed;
    } else {
        r.hi = a.hi;
        r.hi_closed = a.hi_closed && b.hi_closed;
    }
    return r.is_empty() ? Interval::empty() : r;
}

std::string to_string(const Interval& iv) {
    if (iv.is_empty()) return "{}";
    char buf[96];
    std::snprintf(buf, sizeof buf, "%c%.6g, %.6g%c", iv.lo_closed ? '[' : '(', iv.lo, iv.hi,
                  iv.hi_closed ? ']' : ')');
    return buf;
}

IntervalSet::IntervalSet(std::vector<Interval> pieces) : pieces_(std::move(pieces)) {
    normalize();
}

void IntervalSet::add(const Interval& iv) {
    if (iv.is_empty()) return;
    pieces_.push_back(iv);
    normalize();
}

void IntervalSet::normalize() {
    std::erase_if(pieces_, [](const Interval& iv) { return iv.is_empty(); });
    std::sort(pieces_.begin(), pieces_.end(), [](const Interval& a, const Interval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.lo_closed && !b.lo_closed;
    });
    std::vector<Interval> merged;
    merged.reserve(pieces_.size());
    for (const auto& iv : pieces_) {
        if (!merged.empty()) {
            auto& cur = merged.back();
            bool joins = iv.lo < cur.hi || (iv.lo == cur.hi && (cur.hi_closed || iv.lo_closed));
            if (joins) {
                if (iv.lo == cur.lo) cur.lo_closed = cur.lo_closed || iv.lo_closed;
                if (iv.hi > cur.hi) {
                    cur.hi = iv.hi;
                    cur.hi_closed = iv.hi_closed;
                } else if (iv.hi == cur.hi) {
                    cur.hi_closed = cur.hi_closed || iv.hi_closed;
                }
                continue;
            }
        }
        merged.push_back(iv);
    }
    pieces_ = std::move(merged);
}

double IntervalSet::total_width() const {
    double w = 0.0;
    for (const auto& iv : pieces_) w += iv.width();
    return w;
}

bool IntervalSet::contains(double x) const {
    return std::any_of(pieces_.begin(), pieces_.end(),
                       [x](const Interval& iv) { return iv.contains(x); });
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
    std::vector<Interval> out;
    for (const auto& a : pieces_)
        for (const auto& b : other.pieces_) {
            auto r = rocaware::intersect(a, b);
            if (!r.is_empty()) out.push_back(r);
        }
    return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::intersect(const Interval& iv) const {
    return intersect(IntervalSet({iv}));
}

IntervalSet IntervalSet::without_degenerate() const {
    IntervalSet r;
    for (const auto& iv : pieces_)
        if (!iv.is_degenerate()) r.pieces_.push_back(iv);
    return r;
}

} // namespace rocaware
