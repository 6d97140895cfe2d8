#include "curvepair/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace curvepair {

Interval::Interval(Dyadic l, Dyadic h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw std::invalid_argument("interval endpoints out of order");
}

Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo + b.lo, a.hi + b.hi);
}

Interval operator-(const Interval& a, const Interval& b) {
    return Interval(a.lo - b.hi, a.hi - b.lo);
}

Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval operator*(const Interval& a, const Interval& b) {
    Dyadic p1 = a.lo * b.lo;
    Dyadic p2 = a.lo * b.hi;
    Dyadic p3 = a.hi * b.lo;
    Dyadic p4 = a.hi * b.hi;
    Dyadic lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Dyadic hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return Interval(std::move(lo), std::move(hi));
}

bool contains_zero(const Interval& i) {
    return i.lo.sign() <= 0 && i.hi.sign() >= 0;
}

Interval hull(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

Interval pow(const Interval& base, unsigned k) {
    if (k == 0) return Interval(Dyadic(1));
    if (k == 1) return base;
    if (k % 2 != 0) {
        // Odd powers are monotone.
        return Interval(base.lo.pow(k), base.hi.pow(k));
    }
    Dyadic alo = base.lo.abs();
    Dyadic ahi = base.hi.abs();
    Dyadic big = std::max(alo, ahi);
    if (contains_zero(base)) return Interval(Dyadic(), big.pow(k));
    Dyadic small = std::min(alo, ahi);
    return Interval(small.pow(k), big.pow(k));
}

}  // namespace curvepair
