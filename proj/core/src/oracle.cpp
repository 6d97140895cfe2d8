#include "curvepair/oracle.hpp"

#include "curvepair/errors.hpp"

#include <algorithm>
#include <optional>

namespace curvepair {

namespace {

// Dyadic approximation of 1/d with about `prec` correct bits.
Dyadic approx_reciprocal(const Dyadic& d, unsigned prec) {
    mpz_class m = d.mantissa();
    bool negative = sgn(m) < 0;
    if (negative) m = -m;
    std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    mp_bitcnt_t k = static_cast<mp_bitcnt_t>(bits + prec);
    mpz_class num = 1;
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), k);
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), m.get_mpz_t());
    if (negative) q = -q;
    return Dyadic(std::move(q), -static_cast<std::int64_t>(k) - d.exponent());
}

struct SquareSystem {
    const BivariatePolynomial& a;
    const BivariatePolynomial& b;
    BivariatePolynomial ax, ay, bx, by;

    SquareSystem(const BivariatePolynomial& a_in, const BivariatePolynomial& b_in)
        : a(a_in), b(b_in) {
        ax = partial_derivative(a, Axis::X);
        ay = partial_derivative(a, Axis::Y);
        bx = partial_derivative(b, Axis::X);
        by = partial_derivative(b, Axis::Y);
    }
};

enum class KrawczykOutcome { certified, excluded, undecided };

struct KrawczykStep {
    KrawczykOutcome outcome = KrawczykOutcome::undecided;
    IBox refined;  // meaningful for certified: K(X) ∩ X
};

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    Dyadic lo = std::max(a.lo, b.lo);
    Dyadic hi = std::min(a.hi, b.hi);
    if (hi < lo) return std::nullopt;
    return Interval(lo, hi);
}

KrawczykStep krawczyk_step(const SquareSystem& sys, const IBox& x) {
    Point m = x.midpoint();
    Dyadic am = eval_exact(sys.a, m);
    Dyadic bm = eval_exact(sys.b, m);
    Dyadic j11 = eval_exact(sys.ax, m), j12 = eval_exact(sys.ay, m);
    Dyadic j21 = eval_exact(sys.bx, m), j22 = eval_exact(sys.by, m);
    Dyadic det = j11 * j22 - j12 * j21;
    if (det.is_zero()) return {};  // near-singular midpoint: caller splits

    Dyadic r = approx_reciprocal(det, 64);
    // Y ~= inverse of the midpoint Jacobian.
    Interval y11(r * j22), y12(-(r * j12)), y21(-(r * j21)), y22(r * j11);

    Interval ja(eval_interval(sys.ax, x)), jb(eval_interval(sys.ay, x));
    Interval jc(eval_interval(sys.bx, x)), jd(eval_interval(sys.by, x));

    Interval one(Dyadic(1));
    Interval e11 = one - (y11 * ja + y12 * jc);
    Interval e12 = Interval(Dyadic()) - (y11 * jb + y12 * jd);
    Interval e21 = Interval(Dyadic()) - (y21 * ja + y22 * jc);
    Interval e22 = one - (y21 * jb + y22 * jd);

    Interval cx = x.x - Interval(m.x);
    Interval cy = x.y - Interval(m.y);

    Interval kx = Interval(m.x) - (y11 * Interval(am) + y12 * Interval(bm)) + e11 * cx + e12 * cy;
    Interval ky = Interval(m.y) - (y21 * Interval(am) + y22 * Interval(bm)) + e21 * cx + e22 * cy;

    KrawczykStep step;
    if (x.x.strictly_contains(kx) && x.y.strictly_contains(ky)) {
        step.outcome = KrawczykOutcome::certified;
        auto ix = intersect(kx, x.x);
        auto iy = intersect(ky, x.y);
        step.refined = IBox{*ix, *iy};
        return step;
    }
    auto ix = intersect(kx, x.x);
    auto iy = intersect(ky, x.y);
    if (!ix || !iy) {
        step.outcome = KrawczykOutcome::excluded;
        return step;
    }
    return step;
}

IBox shrink_certified(const SquareSystem& sys, IBox box, int rounds) {
    Dyadic tiny(mpz_class(1), -80);
    for (int i = 0; i < rounds; ++i) {
        if (box.x.width() < tiny && box.y.width() < tiny) break;
        KrawczykStep step = krawczyk_step(sys, box);
        if (step.outcome != KrawczykOutcome::certified) break;
        if (step.refined == box) break;
        box = step.refined;
    }
    return box;
}

void solve_cell(const SquareSystem& sys, const IBox& cell, int budget, std::vector<IBox>& found,
                std::vector<IBox>& undecided) {
    if (!contains_zero(eval_interval(sys.a, cell)) || !contains_zero(eval_interval(sys.b, cell)))
        return;
    KrawczykStep step = krawczyk_step(sys, cell);
    if (step.outcome == KrawczykOutcome::excluded) return;
    if (step.outcome == KrawczykOutcome::certified) {
        found.push_back(cell);
        return;
    }
    if (budget <= 0) {
        undecided.push_back(cell);
        return;
    }
    // Split the wider axis.
    if (cell.y.width() < cell.x.width()) {
        Dyadic mid = cell.x.midpoint();
        solve_cell(sys, IBox{Interval(cell.x.lo, mid), cell.y}, budget - 1, found, undecided);
        solve_cell(sys, IBox{Interval(mid, cell.x.hi), cell.y}, budget - 1, found, undecided);
    } else {
        Dyadic mid = cell.y.midpoint();
        solve_cell(sys, IBox{cell.x, Interval(cell.y.lo, mid)}, budget - 1, found, undecided);
        solve_cell(sys, IBox{cell.x, Interval(mid, cell.y.hi)}, budget - 1, found, undecided);
    }
}

struct GridResult {
    std::vector<IBox> certified;
    std::vector<IBox> undecided;
};

GridResult certified_boxes(const SquareSystem& sys, const RectRegion& region, int grid_depth,
                           const OracleOptions& options, const std::string& what) {
    if (grid_depth < 1) throw std::invalid_argument("grid_depth must be at least 1");
    IBox region_box = region.to_ibox();
    const std::int64_t n = std::int64_t{1} << grid_depth;

    std::vector<IBox> found;
    std::vector<IBox> undecided;
    for (std::int64_t j = 0; j < n; ++j) {
        for (std::int64_t i = 0; i < n; ++i) {
            // Cell inflated by half a step on each side and clipped to the
            // region, so roots on grid lines land strictly inside some cell.
            auto coord = [&](std::int64_t origin, std::int64_t span, std::int64_t num) {
                return Dyadic::from_int(origin) +
                       Dyadic(mpz_class(num) * span, -(static_cast<std::int64_t>(grid_depth) + 1));
            };
            Interval cx(std::max(region_box.x.lo, coord(region.x0, region.width(), 2 * i - 1)),
                        std::min(region_box.x.hi, coord(region.x0, region.width(), 2 * i + 3)));
            Interval cy(std::max(region_box.y.lo, coord(region.y0, region.height(), 2 * j - 1)),
                        std::min(region_box.y.hi, coord(region.y0, region.height(), 2 * j + 3)));
            solve_cell(sys, IBox{cx, cy}, options.split_cap, found, undecided);
        }
    }
    if (!undecided.empty()) return GridResult{{}, std::move(undecided)};

    for (IBox& b : found) b = shrink_certified(sys, b, options.shrink_rounds);

    // The same root can be certified from several overlapping inflated cells;
    // merge overlap groups and re-certify uniqueness on the merged hull.
    std::sort(found.begin(), found.end(), [](const IBox& a, const IBox& b) {
        if (a.x.lo != b.x.lo) return a.x.lo < b.x.lo;
        return a.y.lo < b.y.lo;
    });
    std::vector<IBox> merged;
    std::vector<bool> taken(found.size(), false);
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (taken[i]) continue;
        IBox group = found[i];
        taken[i] = true;
        bool grew = true;
        bool multi = false;
        while (grew) {
            grew = false;
            for (std::size_t j = 0; j < found.size(); ++j) {
                if (taken[j] || !group.intersects(found[j])) continue;
                group = hull(group, found[j]);
                taken[j] = true;
                grew = true;
                multi = true;
            }
        }
        if (multi) {
            KrawczykStep step = krawczyk_step(sys, group);
            if (step.outcome != KrawczykOutcome::certified) {
                // Widen slightly so the operator has room to contract into.
                Dyadic pad = std::max(std::max(group.x.width(), group.y.width()),
                                      Dyadic(mpz_class(1), -40));
                Interval gx(group.x.lo - pad, group.x.hi + pad);
                Interval gy(group.y.lo - pad, group.y.hi + pad);
                step = krawczyk_step(sys, IBox{gx, gy});
                if (step.outcome != KrawczykOutcome::certified)
                    throw Error("Inconclusive", "oracle",
                                what + ": overlapping certificates near " + group.str() +
                                    " could not be merged");
                group = shrink_certified(sys, step.refined, options.shrink_rounds);
            }
        }
        merged.push_back(group);
    }
    return GridResult{std::move(merged), {}};
}

[[noreturn]] void throw_inconclusive(const std::string& what, const std::vector<IBox>& undecided) {
    throw Error("Inconclusive", "oracle",
                what + ": " + std::to_string(undecided.size()) +
                    " cells undecided at the split cap, first " + undecided.front().str());
}

}  // namespace

std::vector<CertifiedRoot> certify_intersections(const CurvePair& pair, const RectRegion& region,
                                                 int grid_depth, const OracleOptions& options) {
    SquareSystem sys(pair.f, pair.g);
    GridResult grid = certified_boxes(sys, region, grid_depth, options, "intersections");
    if (!grid.undecided.empty()) throw_inconclusive("intersections", grid.undecided);
    std::vector<CertifiedRoot> roots;
    for (const IBox& b : grid.certified) roots.push_back(CertifiedRoot{b, b.midpoint()});
    return roots;
}

namespace {

// Certifies that p, px, py have no common zero, or finds an exact one.
// Returns true when smooth, false on an exact singular point; throws when
// undecidable at the cap.
bool certify_smooth(const BivariatePolynomial& p, const RectRegion& region, int grid_depth,
                    const OracleOptions& options) {
    BivariatePolynomial px = partial_derivative(p, Axis::X);
    BivariatePolynomial py = partial_derivative(p, Axis::Y);

    struct Walker {
        const BivariatePolynomial& p;
        const BivariatePolynomial& px;
        const BivariatePolynomial& py;
        std::vector<IBox> stuck;

        void visit(const IBox& box, int budget) {
            if (!contains_zero(eval_interval(p, box)) || !contains_zero(eval_interval(px, box)) ||
                !contains_zero(eval_interval(py, box)))
                return;
            if (budget <= 0) {
                stuck.push_back(box);
                return;
            }
            Point m = box.midpoint();
            IBox q[4] = {IBox{Interval(box.x.lo, m.x), Interval(box.y.lo, m.y)},
                         IBox{Interval(m.x, box.x.hi), Interval(box.y.lo, m.y)},
                         IBox{Interval(box.x.lo, m.x), Interval(m.y, box.y.hi)},
                         IBox{Interval(m.x, box.x.hi), Interval(m.y, box.y.hi)}};
            for (const IBox& c : q) visit(c, budget - 1);
        }
    } walker{p, px, py, {}};

    walker.visit(region.to_ibox(), grid_depth + options.split_cap);
    if (walker.stuck.empty()) return true;

    // Try to pin an exact critical point of p near a stuck box and check
    // whether p vanishes there. The box is inflated first; stuck boxes often
    // only touch the critical point at a corner.
    SquareSystem grad(px, py);
    IBox region_box = region.to_ibox();
    for (const IBox& box : walker.stuck) {
        Dyadic pad = std::max(std::max(box.x.width(), box.y.width()), Dyadic(mpz_class(1), -40));
        IBox inflated{Interval(box.x.lo - pad, box.x.hi + pad),
                      Interval(box.y.lo - pad, box.y.hi + pad)};
        KrawczykStep step = krawczyk_step(grad, inflated);
        if (step.outcome != KrawczykOutcome::certified) continue;
        IBox tight = shrink_certified(grad, step.refined, options.shrink_rounds);
        Point m = tight.midpoint();
        if (region_box.contains(m) && eval_exact(px, m).is_zero() &&
            eval_exact(py, m).is_zero() && eval_exact(p, m).is_zero())
            return false;  // exact singular point of the curve
    }
    throw Error("Inconclusive", "oracle",
                "smoothness of " + p.str() + " undecided near " + walker.stuck.front().str());
}

}  // namespace

bool check_smooth_transversal(const CurvePair& pair, const RectRegion& region, int grid_depth,
                              const OracleOptions& options) {
    if (!certify_smooth(pair.f, region, grid_depth, options)) return false;
    if (!certify_smooth(pair.g, region, grid_depth, options)) return false;

    BivariatePolynomial cross = pair.fx * pair.gy - pair.fy * pair.gx;
    SquareSystem sys(pair.f, pair.g);
    GridResult grid = certified_boxes(sys, region, grid_depth, options, "intersections");
    if (!grid.undecided.empty()) {
        // A tangential intersection has a singular Jacobian and can never be
        // certified; look for an exact witness before giving up. Undecided
        // boxes pile up around such a point, with the point itself on their
        // corners or centers.
        for (const IBox& box : grid.undecided) {
            for (const Point& m :
                 {box.midpoint(), Point{box.x.lo, box.y.lo}, Point{box.x.hi, box.y.lo},
                  Point{box.x.hi, box.y.hi}, Point{box.x.lo, box.y.hi}}) {
                if (eval_exact(pair.f, m).is_zero() && eval_exact(pair.g, m).is_zero() &&
                    eval_exact(cross, m).is_zero())
                    return false;
            }
        }
        throw_inconclusive("transversality", grid.undecided);
    }
    for (const IBox& box : grid.certified) {
        if (!contains_zero(eval_interval(cross, box))) continue;
        Point m = box.midpoint();
        if (eval_exact(pair.f, m).is_zero() && eval_exact(pair.g, m).is_zero() &&
            eval_exact(cross, m).is_zero())
            return false;
        throw Error("Inconclusive", "oracle",
                    "transversality undecided at root near " + box.str());
    }
    return true;
}

}  // namespace curvepair
