// Exact dyadic rationals m * 2^e with an arbitrary-precision mantissa.
// Every coordinate in the library is a Dyadic; addition, subtraction and
// multiplication never round.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

namespace curvepair {

class Dyadic {
  public:
    // Canonical form: mantissa odd or zero; zero has exponent 0.
    Dyadic() : mant_(0), exp_(0) {}
    explicit Dyadic(long value) : mant_(value), exp_(0) { normalize(); }
    Dyadic(mpz_class mantissa, std::int64_t exponent)
        : mant_(std::move(mantissa)), exp_(exponent) {
        normalize();
    }

    static Dyadic from_int(std::int64_t v);
    // Parses "m*2^e" (also accepts a bare integer literal).
    static Dyadic parse(const std::string& text);

    const mpz_class& mantissa() const { return mant_; }
    std::int64_t exponent() const { return exp_; }

    int sign() const { return sgn(mant_); }
    bool is_zero() const { return sgn(mant_) == 0; }

    Dyadic halved() const { return is_zero() ? Dyadic() : Dyadic(mant_, exp_ - 1); }
    static Dyadic midpoint(const Dyadic& a, const Dyadic& b) { return (a + b).halved(); }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
    Dyadic operator-() const { return Dyadic(-mant_, exp_); }

    Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
    Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
    Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }

    // Exact three-way comparison.
    static int compare(const Dyadic& a, const Dyadic& b);
    friend bool operator==(const Dyadic& a, const Dyadic& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return compare(a, b) != 0; }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return compare(a, b) >= 0; }

    Dyadic abs() const { return sign() < 0 ? -*this : *this; }
    Dyadic pow(unsigned k) const;

    double to_double() const;
    mpq_class to_rational() const;
    // Largest dyadic with exponent >= -precision_bits that is <= *this.
    static Dyadic from_rational_floor(const mpq_class& q, unsigned precision_bits);

    // "m*2^e", e.g. "-3*2^-2".
    std::string str() const;

  private:
    void normalize();

    mpz_class mant_;
    std::int64_t exp_;
};

struct Point {
    Dyadic x;
    Dyadic y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) {
        int c = Dyadic::compare(a.x, b.x);
        return c != 0 ? c < 0 : a.y < b.y;
    }
};

}  // namespace curvepair
