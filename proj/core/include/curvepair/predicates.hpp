// The three interval predicates driving box acceptance. c0 excludes a curve
// from a box; c1 excludes perpendicular gradient pairs of one curve over two
// independent copies of a box; c1_cross excludes parallel gradient pairs of
// the two curves over two independent copies of a rectangle.
#pragma once

#include "curvepair/polynomial.hpp"

namespace curvepair {

struct PredicateResult {
    bool value = false;
    // The deciding enclosure: value == true implies 0 is outside it.
    Interval witness;

    explicit operator bool() const { return value; }
};

// True guarantees the zero set of p misses the box.
PredicateResult c0(const BivariatePolynomial& p, const IBox& box);

// True guarantees no two points of the box carry perpendicular gradients of
// the selected curve. The two gradient arguments range over the box
// independently; shared subexpressions are never squared.
PredicateResult c1(const CurvePair& pair, CurveId which, const IBox& box);

// True guarantees no pair of points in rect has parallel grad f and grad g.
// rect may be a non-square neighborhood hull.
PredicateResult c1_cross(const CurvePair& pair, const IBox& rect);

}  // namespace curvepair
