#include "curvepair/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace curvepair {

void Dyadic::normalize() {
    if (sgn(mant_) == 0) {
        exp_ = 0;
        return;
    }
    mp_bitcnt_t tz = mpz_scan1(mant_.get_mpz_t(), 0);
    if (tz > 0) {
        mpz_tdiv_q_2exp(mant_.get_mpz_t(), mant_.get_mpz_t(), tz);
        exp_ += static_cast<std::int64_t>(tz);
    }
}

Dyadic Dyadic::from_int(std::int64_t v) {
    mpz_class m;
    if (v >= 0) {
        m = mpz_class(static_cast<unsigned long>(v));
    } else {
        m = mpz_class(static_cast<unsigned long>(-(v + 1)));
        m += 1;
        m = -m;
    }
    return Dyadic(std::move(m), 0);
}

namespace {

// Mantissas of a and b shifted to the common exponent min(ea, eb).
std::pair<mpz_class, mpz_class> aligned(const Dyadic& a, const Dyadic& b, std::int64_t& e) {
    e = std::min(a.exponent(), b.exponent());
    mpz_class ma = a.mantissa();
    mpz_class mb = b.mantissa();
    if (a.exponent() > e)
        mpz_mul_2exp(ma.get_mpz_t(), ma.get_mpz_t(),
                     static_cast<mp_bitcnt_t>(a.exponent() - e));
    if (b.exponent() > e)
        mpz_mul_2exp(mb.get_mpz_t(), mb.get_mpz_t(),
                     static_cast<mp_bitcnt_t>(b.exponent() - e));
    return {std::move(ma), std::move(mb)};
}

}  // namespace

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::int64_t e;
    auto [ma, mb] = aligned(a, b, e);
    return Dyadic(ma + mb, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return -b;
    std::int64_t e;
    auto [ma, mb] = aligned(a, b, e);
    return Dyadic(ma - mb, e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero() || b.is_zero()) return Dyadic();
    return Dyadic(a.mantissa() * b.mantissa(), a.exponent() + b.exponent());
}

int Dyadic::compare(const Dyadic& a, const Dyadic& b) {
    int sa = a.sign();
    int sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    std::int64_t e;
    auto [ma, mb] = aligned(a, b, e);
    return cmp(ma, mb) < 0 ? -1 : (cmp(ma, mb) > 0 ? 1 : 0);
}

Dyadic Dyadic::pow(unsigned k) const {
    if (k == 0) return Dyadic(1);
    mpz_class m;
    mpz_pow_ui(m.get_mpz_t(), mant_.get_mpz_t(), k);
    return Dyadic(std::move(m), exp_ * static_cast<std::int64_t>(k));
}

double Dyadic::to_double() const {
    if (is_zero()) return 0.0;
    signed long e2 = 0;
    double d = mpz_get_d_2exp(&e2, mant_.get_mpz_t());
    std::int64_t total = static_cast<std::int64_t>(e2) + exp_;
    if (total > 4000) return sign() > 0 ? HUGE_VAL : -HUGE_VAL;
    if (total < -4000) return sign() > 0 ? 0.0 : -0.0;
    return std::ldexp(d, static_cast<int>(total));
}

mpq_class Dyadic::to_rational() const {
    mpq_class q(mant_);
    if (exp_ >= 0) {
        mpz_class num = mant_;
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(exp_));
        q = mpq_class(num);
    } else {
        mpz_class den = 1;
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-exp_));
        q = mpq_class(mant_, den);
        q.canonicalize();
    }
    return q;
}

Dyadic Dyadic::from_rational_floor(const mpq_class& q, unsigned precision_bits) {
    mpz_class scaled_num = q.get_num();
    mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), precision_bits);
    mpz_class m;
    mpz_fdiv_q(m.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den().get_mpz_t());
    return Dyadic(std::move(m), -static_cast<std::int64_t>(precision_bits));
}

std::string Dyadic::str() const {
    return mant_.get_str() + "*2^" + std::to_string(exp_);
}

Dyadic Dyadic::parse(const std::string& text) {
    auto pos = text.find("*2^");
    try {
        if (pos == std::string::npos) {
            return Dyadic(mpz_class(text), 0);
        }
        mpz_class m(text.substr(0, pos));
        std::int64_t e = std::stoll(text.substr(pos + 3));
        return Dyadic(std::move(m), e);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a dyadic literal: \"" + text + "\"");
    }
}

}  // namespace curvepair
