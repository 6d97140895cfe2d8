// Seeded random value generators shared by the property tests.
#pragma once

#include "curvepair/interval.hpp"
#include "curvepair/polynomial.hpp"

#include <random>

namespace curvepair::testing {

class Gen {
  public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    Dyadic dyadic(std::int64_t mant_bound = 1 << 20, int exp_range = 10) {
        return Dyadic(mpz_class(int_in(-mant_bound, mant_bound)),
                      int_in(-exp_range, exp_range / 2));
    }

    Interval interval() {
        Dyadic a = dyadic();
        Dyadic b = dyadic();
        return a <= b ? Interval(a, b) : Interval(b, a);
    }

    // Exact sample inside the interval: lo + (hi-lo) * k/1024.
    Dyadic sample(const Interval& i) {
        Dyadic t(mpz_class(int_in(0, 1024)), -10);
        return i.lo + i.width() * t;
    }

    Point sample(const IBox& box) { return Point{sample(box.x), sample(box.y)}; }

    BivariatePolynomial polynomial(int max_degree = 4, int max_terms = 6,
                                   std::int64_t coeff_bound = 50) {
        BivariatePolynomial p;
        int terms = static_cast<int>(int_in(1, max_terms));
        for (int t = 0; t < terms; ++t) {
            Monomial m{static_cast<int>(int_in(0, max_degree)),
                       static_cast<int>(int_in(0, max_degree))};
            p.add_term(m, mpz_class(int_in(-coeff_bound, coeff_bound)));
        }
        return p;
    }

  private:
    std::mt19937 rng_;
};

}  // namespace curvepair::testing
