// Integer-coefficient bivariate polynomials: parsing, formal derivatives,
// exact evaluation at dyadic points and interval range enclosure over boxes.
#pragma once

#include "curvepair/interval.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

namespace curvepair {

enum class Axis { X, Y };

struct Monomial {
    int dx = 0;
    int dy = 0;
    friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Rectangle with integer corners, x0 < x1 and y0 < y1.
struct RectRegion {
    std::int64_t x0 = 0;
    std::int64_t y0 = 0;
    std::int64_t x1 = 0;
    std::int64_t y1 = 0;

    std::int64_t width() const { return x1 - x0; }
    std::int64_t height() const { return y1 - y0; }
    bool is_square() const { return width() == height(); }
    IBox to_ibox() const;
    friend constexpr auto operator<=>(const RectRegion&, const RectRegion&) = default;
};

class BivariatePolynomial {
  public:
    BivariatePolynomial() = default;
    explicit BivariatePolynomial(long constant);

    static BivariatePolynomial variable(Axis a);
    static BivariatePolynomial constant(mpz_class c);

    // No zero coefficients stored; the zero polynomial has an empty term map.
    const std::map<Monomial, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree_x() const;
    int degree_y() const;
    int total_degree() const;

    void add_term(Monomial m, const mpz_class& coeff);

    friend BivariatePolynomial operator+(const BivariatePolynomial& a,
                                         const BivariatePolynomial& b);
    friend BivariatePolynomial operator-(const BivariatePolynomial& a,
                                         const BivariatePolynomial& b);
    friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                         const BivariatePolynomial& b);
    BivariatePolynomial operator-() const;
    BivariatePolynomial pow(unsigned k) const;

    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        return a.terms_ == b.terms_;
    }

    // Grammar-compatible printing, e.g. "x^2 + y^2 - 4"; parse(str(p)) == p.
    std::string str() const;

  private:
    std::map<Monomial, mpz_class> terms_;
};

// Thrown by parse_polynomial with a byte offset into the input.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

// Grammar: integer literals, variables x and y, operators + - * ^ and
// parentheses; ^ takes a nonnegative integer literal. Implicit
// multiplication is rejected ("2x" is invalid, "2*x" is valid).
BivariatePolynomial parse_polynomial(const std::string& text);

BivariatePolynomial partial_derivative(const BivariatePolynomial& p, Axis var);

Dyadic eval_exact(const BivariatePolynomial& p, const Point& point);
// Horner enclosure of p over the box; gaps between exponents are bridged by
// exact interval powers, so even powers of sign-straddling factors stay tight.
Interval eval_interval(const BivariatePolynomial& p, const IBox& box);

// Integer polynomial q with q = c * (p ∘ A) for the affine map A taking
// `square` onto `rect` and a positive integer c; zero sets correspond under A.
BivariatePolynomial rescale_to_square(const BivariatePolynomial& p, const RectRegion& rect,
                                      const RectRegion& square);

// A curve pair with cached partial derivatives.
struct CurvePair {
    BivariatePolynomial f;
    BivariatePolynomial g;
    BivariatePolynomial fx, fy, gx, gy;

    CurvePair(BivariatePolynomial f_in, BivariatePolynomial g_in);
};

enum class CurveId { F, G };

}  // namespace curvepair
