#include "curvepair/predicates.hpp"

#include <array>
#include <map>

namespace curvepair {

namespace {

// Polynomial form over an ordered pair of plane points (x1,y1), (x2,y2).
// Expanding the gradient products into these four variables keeps the two
// arguments genuinely independent when the form is range-evaluated.
struct PairMonomial {
    std::array<int, 4> deg{};  // x1, y1, x2, y2
    friend auto operator<=>(const PairMonomial&, const PairMonomial&) = default;
};

using TwoPointForm = std::map<PairMonomial, mpz_class>;

void accumulate(TwoPointForm& form, const PairMonomial& m, const mpz_class& c) {
    auto it = form.find(m);
    if (it == form.end()) {
        if (sgn(c) != 0) form.emplace(m, c);
    } else {
        it->second += c;
        if (sgn(it->second) == 0) form.erase(it);
    }
}

// p evaluated at the first point times q at the second.
TwoPointForm outer_product(const BivariatePolynomial& p, const BivariatePolynomial& q) {
    TwoPointForm form;
    for (const auto& [mp, cp] : p.terms())
        for (const auto& [mq, cq] : q.terms())
            accumulate(form, PairMonomial{{mp.dx, mp.dy, mq.dx, mq.dy}}, cp * cq);
    return form;
}

TwoPointForm subtract(TwoPointForm a, const TwoPointForm& b) {
    for (const auto& [m, c] : b) accumulate(a, m, -c);
    return a;
}

TwoPointForm add(TwoPointForm a, const TwoPointForm& b) {
    for (const auto& [m, c] : b) accumulate(a, m, c);
    return a;
}

// Term-wise range enclosure over rect x rect; each monomial uses exact
// interval powers of the coordinate ranges.
Interval eval_two_point(const TwoPointForm& form, const IBox& rect) {
    Interval acc;
    for (const auto& [m, c] : form) {
        Interval term(Dyadic(c, 0));
        if (m.deg[0] > 0) term = term * pow(rect.x, static_cast<unsigned>(m.deg[0]));
        if (m.deg[1] > 0) term = term * pow(rect.y, static_cast<unsigned>(m.deg[1]));
        if (m.deg[2] > 0) term = term * pow(rect.x, static_cast<unsigned>(m.deg[2]));
        if (m.deg[3] > 0) term = term * pow(rect.y, static_cast<unsigned>(m.deg[3]));
        acc = acc + term;
    }
    return acc;
}

}  // namespace

PredicateResult c0(const BivariatePolynomial& p, const IBox& box) {
    Interval range = eval_interval(p, box);
    return PredicateResult{!contains_zero(range), range};
}

PredicateResult c1(const CurvePair& pair, CurveId which, const IBox& box) {
    const BivariatePolynomial& px = which == CurveId::F ? pair.fx : pair.gx;
    const BivariatePolynomial& py = which == CurveId::F ? pair.fy : pair.gy;
    TwoPointForm dot = add(outer_product(px, px), outer_product(py, py));
    Interval range = eval_two_point(dot, box);
    return PredicateResult{!contains_zero(range), range};
}

PredicateResult c1_cross(const CurvePair& pair, const IBox& rect) {
    TwoPointForm cross = subtract(outer_product(pair.fx, pair.gy), outer_product(pair.fy, pair.gx));
    Interval range = eval_two_point(cross, rect);
    return PredicateResult{!contains_zero(range), range};
}

}  // namespace curvepair
