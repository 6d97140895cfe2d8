#include "curvepair/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <vector>

namespace curvepair {

IBox RectRegion::to_ibox() const {
    return IBox{Interval(Dyadic::from_int(x0), Dyadic::from_int(x1)),
                Interval(Dyadic::from_int(y0), Dyadic::from_int(y1))};
}

BivariatePolynomial::BivariatePolynomial(long constant_value) {
    if (constant_value != 0) terms_[{0, 0}] = constant_value;
}

BivariatePolynomial BivariatePolynomial::variable(Axis a) {
    BivariatePolynomial p;
    p.terms_[a == Axis::X ? Monomial{1, 0} : Monomial{0, 1}] = 1;
    return p;
}

BivariatePolynomial BivariatePolynomial::constant(mpz_class c) {
    BivariatePolynomial p;
    if (sgn(c) != 0) p.terms_[{0, 0}] = std::move(c);
    return p;
}

int BivariatePolynomial::degree_x() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.dx);
    return d;
}

int BivariatePolynomial::degree_y() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.dy);
    return d;
}

int BivariatePolynomial::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.dx + m.dy);
    return d;
}

void BivariatePolynomial::add_term(Monomial m, const mpz_class& coeff) {
    if (sgn(coeff) == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff);
    } else {
        it->second += coeff;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term({ma.dx + mb.dx, ma.dy + mb.dy}, ca * cb);
    return r;
}

BivariatePolynomial BivariatePolynomial::operator-() const {
    BivariatePolynomial r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

BivariatePolynomial BivariatePolynomial::pow(unsigned k) const {
    BivariatePolynomial r(1);
    BivariatePolynomial base = *this;
    while (k > 0) {
        if (k & 1u) r = r * base;
        base = base * base;
        k >>= 1u;
    }
    return r;
}

std::string BivariatePolynomial::str() const {
    if (terms_.empty()) return "0";
    // Highest total degree first, then x-degree, for readable output.
    std::vector<std::pair<Monomial, mpz_class>> items(terms_.begin(), terms_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        int ta = a.first.dx + a.first.dy, tb = b.first.dx + b.first.dy;
        if (ta != tb) return ta > tb;
        if (a.first.dx != b.first.dx) return a.first.dx > b.first.dx;
        return a.first.dy > b.first.dy;
    });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : items) {
        mpz_class a = c;
        if (first) {
            if (sgn(a) < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += sgn(a) < 0 ? " - " : " + ";
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        std::string factors;
        if (m.dx > 0) factors += m.dx == 1 ? "x" : "x^" + std::to_string(m.dx);
        if (m.dy > 0) {
            if (!factors.empty()) factors += "*";
            factors += m.dy == 1 ? "y" : "y^" + std::to_string(m.dy);
        }
        if (factors.empty()) {
            out += a.get_str();
        } else if (a == 1) {
            out += factors;
        } else {
            out += a.get_str() + "*" + factors;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parser: expr := ['+'|'-'] term (('+'|'-') term)*
//         term := factor ('*' factor)*
//         factor := base ('^' uint)?
//         base := integer | 'x' | 'y' | '(' expr ')'
namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    BivariatePolynomial run() {
        BivariatePolynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return p;
    }

  private:
    BivariatePolynomial expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = take() == '-';
        BivariatePolynomial p = term();
        if (negate) p = -p;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            take();
            BivariatePolynomial t = term();
            p = c == '+' ? p + t : p - t;
        }
        return p;
    }

    BivariatePolynomial term() {
        BivariatePolynomial p = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            take();
            p = p * factor();
        }
        return p;
    }

    BivariatePolynomial factor() {
        BivariatePolynomial base_poly = base();
        skip_ws();
        if (peek() == '^') {
            take();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("exponent must be a nonnegative integer literal");
            unsigned long e = std::stoul(integer_literal());
            base_poly = base_poly.pow(static_cast<unsigned>(e));
        }
        return base_poly;
    }

    BivariatePolynomial base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            BivariatePolynomial p = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            take();
            return p;
        }
        if (c == 'x') {
            take();
            return BivariatePolynomial::variable(Axis::X);
        }
        if (c == 'y') {
            take();
            return BivariatePolynomial::variable(Axis::Y);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            std::string digits = integer_literal();
            if (peek() == '.') {
                pos_ = start;
                fail("non-integer coefficient");
            }
            return BivariatePolynomial::constant(mpz_class(digits));
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected character");
    }

    std::string integer_literal() {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += take();
        return digits;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

BivariatePolynomial parse_polynomial(const std::string& text) {
    return Parser(text).run();
}

BivariatePolynomial partial_derivative(const BivariatePolynomial& p, Axis var) {
    BivariatePolynomial r;
    for (const auto& [m, c] : p.terms()) {
        if (var == Axis::X && m.dx > 0) r.add_term({m.dx - 1, m.dy}, c * m.dx);
        if (var == Axis::Y && m.dy > 0) r.add_term({m.dx, m.dy - 1}, c * m.dy);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Evaluation. Both evaluators run sparse Horner in x whose coefficients are
// sparse Horner evaluations in y.
namespace {

template <typename Value, typename CoeffToValue, typename PowFn>
Value sparse_horner(const std::vector<std::pair<int, Value>>& coeffs_desc, const PowFn& power,
                    const CoeffToValue& zero) {
    if (coeffs_desc.empty()) return zero();
    Value acc = coeffs_desc.front().second;
    for (std::size_t i = 1; i < coeffs_desc.size(); ++i) {
        int gap = coeffs_desc[i - 1].first - coeffs_desc[i].first;
        acc = acc * power(static_cast<unsigned>(gap)) + coeffs_desc[i].second;
    }
    int tail = coeffs_desc.back().first;
    if (tail > 0) acc = acc * power(static_cast<unsigned>(tail));
    return acc;
}

// Terms regrouped as x-degree -> (y-degree -> coefficient), descending.
std::vector<std::pair<int, std::vector<std::pair<int, const mpz_class*>>>> regroup(
    const BivariatePolynomial& p) {
    std::map<int, std::map<int, const mpz_class*>, std::greater<>> grouped;
    for (const auto& [m, c] : p.terms()) grouped[m.dx][m.dy] = &c;
    std::vector<std::pair<int, std::vector<std::pair<int, const mpz_class*>>>> out;
    for (const auto& [dx, ys] : grouped) {
        std::vector<std::pair<int, const mpz_class*>> row(ys.begin(), ys.end());
        std::reverse(row.begin(), row.end());
        out.emplace_back(dx, std::move(row));
    }
    return out;
}

}  // namespace

Dyadic eval_exact(const BivariatePolynomial& p, const Point& point) {
    auto grouped = regroup(p);
    auto pow_x = [&](unsigned k) { return point.x.pow(k); };
    auto pow_y = [&](unsigned k) { return point.y.pow(k); };
    std::vector<std::pair<int, Dyadic>> outer;
    outer.reserve(grouped.size());
    for (const auto& [dx, ys] : grouped) {
        std::vector<std::pair<int, Dyadic>> inner;
        inner.reserve(ys.size());
        for (const auto& [dy, c] : ys) inner.emplace_back(dy, Dyadic(*c, 0));
        outer.emplace_back(dx, sparse_horner(inner, pow_y, [] { return Dyadic(); }));
    }
    return sparse_horner(outer, pow_x, [] { return Dyadic(); });
}

Interval eval_interval(const BivariatePolynomial& p, const IBox& box) {
    auto grouped = regroup(p);
    auto pow_x = [&](unsigned k) { return pow(box.x, k); };
    auto pow_y = [&](unsigned k) { return pow(box.y, k); };
    std::vector<std::pair<int, Interval>> outer;
    outer.reserve(grouped.size());
    for (const auto& [dx, ys] : grouped) {
        std::vector<std::pair<int, Interval>> inner;
        inner.reserve(ys.size());
        for (const auto& [dy, c] : ys) inner.emplace_back(dy, Interval(Dyadic(*c, 0)));
        outer.emplace_back(dx, sparse_horner(inner, pow_y, [] { return Interval(); }));
    }
    return sparse_horner(outer, pow_x, [] { return Interval(); });
}

BivariatePolynomial rescale_to_square(const BivariatePolynomial& p, const RectRegion& rect,
                                      const RectRegion& square) {
    if (rect.width() <= 0 || rect.height() <= 0)
        throw std::invalid_argument("degenerate rectangle");
    if (!square.is_square() || square.width() <= 0)
        throw std::invalid_argument("target region is not a square");

    const std::int64_t S = square.width();
    const std::int64_t W = rect.width();
    const std::int64_t H = rect.height();

    // A(s) = (x0 + (s_x - u0) W / S, y0 + (s_y - v0) H / S); substituting the
    // numerators and scaling by S^deg clears all denominators.
    BivariatePolynomial x_num =
        BivariatePolynomial::constant(mpz_class(W)) * BivariatePolynomial::variable(Axis::X) +
        BivariatePolynomial::constant(mpz_class(rect.x0) * S - mpz_class(square.x0) * W);
    BivariatePolynomial y_num =
        BivariatePolynomial::constant(mpz_class(H)) * BivariatePolynomial::variable(Axis::Y) +
        BivariatePolynomial::constant(mpz_class(rect.y0) * S - mpz_class(square.y0) * H);

    const int d = p.total_degree();
    BivariatePolynomial q;
    for (const auto& [m, c] : p.terms()) {
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(S),
                      static_cast<unsigned long>(d - m.dx - m.dy));
        BivariatePolynomial term = BivariatePolynomial::constant(c * scale);
        if (m.dx > 0) term = term * x_num.pow(static_cast<unsigned>(m.dx));
        if (m.dy > 0) term = term * y_num.pow(static_cast<unsigned>(m.dy));
        q = q + term;
    }

    // Divide out the positive content; the zero set and all signs survive.
    mpz_class content = 0;
    for (const auto& [m, c] : q.terms()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1) {
        BivariatePolynomial reduced;
        for (const auto& [m, c] : q.terms()) reduced.add_term(m, c / content);
        q = reduced;
    }
    return q;
}

CurvePair::CurvePair(BivariatePolynomial f_in, BivariatePolynomial g_in)
    : f(std::move(f_in)), g(std::move(g_in)) {
    fx = partial_derivative(f, Axis::X);
    fy = partial_derivative(f, Axis::Y);
    gx = partial_derivative(g, Axis::X);
    gy = partial_derivative(g, Axis::Y);
}

}  // namespace curvepair
