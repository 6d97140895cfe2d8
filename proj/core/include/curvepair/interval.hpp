// Closed intervals with dyadic endpoints. All operations are exact, so the
// computed interval contains the exact set image (inclusion soundness) with
// no rounding slack on the endpoints themselves.
#pragma once

#include "curvepair/dyadic.hpp"

#include <string>

namespace curvepair {

struct Interval {
    Dyadic lo;
    Dyadic hi;

    Interval() = default;
    explicit Interval(const Dyadic& v) : lo(v), hi(v) {}
    Interval(Dyadic l, Dyadic h);

    static Interval of_ints(std::int64_t l, std::int64_t h) {
        return Interval(Dyadic::from_int(l), Dyadic::from_int(h));
    }

    Dyadic width() const { return hi - lo; }
    Dyadic midpoint() const { return Dyadic::midpoint(lo, hi); }
    bool is_point() const { return lo == hi; }

    bool contains(const Dyadic& v) const { return lo <= v && v <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
    // Strict interior containment on both endpoints.
    bool strictly_contains(const Interval& o) const { return lo < o.lo && o.hi < hi; }
    bool strictly_contains(const Dyadic& v) const { return lo < v && v < hi; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }

    std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);

bool contains_zero(const Interval& i);
Interval hull(const Interval& a, const Interval& b);
// Exact range of x^k over the interval; even powers are clamped at zero
// instead of multiplied out, which is tighter than iterated products.
Interval pow(const Interval& base, unsigned k);

// Axis-aligned box (possibly a non-square rectangle).
struct IBox {
    Interval x;
    Interval y;

    bool contains(const Point& p) const { return x.contains(p.x) && y.contains(p.y); }
    bool contains(const IBox& o) const { return x.contains(o.x) && y.contains(o.y); }
    bool strictly_contains(const Point& p) const {
        return x.strictly_contains(p.x) && y.strictly_contains(p.y);
    }
    bool strictly_contains(const IBox& o) const {
        return x.strictly_contains(o.x) && y.strictly_contains(o.y);
    }
    bool intersects(const IBox& o) const { return x.intersects(o.x) && y.intersects(o.y); }
    Point midpoint() const { return Point{x.midpoint(), y.midpoint()}; }

    friend bool operator==(const IBox& a, const IBox& b) { return a.x == b.x && a.y == b.y; }
    std::string str() const { return x.str() + " x " + y.str(); }
};

inline IBox hull(const IBox& a, const IBox& b) {
    return IBox{hull(a.x, b.x), hull(a.y, b.y)};
}

}  // namespace curvepair
