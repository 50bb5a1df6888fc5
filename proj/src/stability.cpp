#include "pairlat/stability.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pairlat {

bool StabilityInterval::subset_of(const StabilityInterval& o) const {
    if (is_empty) return true;
    if (o.is_empty) return false;
    if (lo < o.lo) return false;
    if (o.hi && (!hi || *o.hi < *hi)) return false;
    return true;
}

StabilityInterval StabilityInterval::intersect(const StabilityInterval& o) const {
    if (is_empty || o.is_empty) return empty();
    Rat l = std::max(lo, o.lo);
    std::optional<Rat> h = hi;
    if (o.hi && (!h || *o.hi < *h)) h = o.hi;
    if (h && *h < l) return empty();
    return {false, l, h};
}

std::string StabilityInterval::str() const {
    if (is_empty) return "empty";
    return "[" + lo.str() + ", " + (hi ? hi->str() : "inf") + "]";
}

MuFunction mu_function(const Configuration& cfg) {
    MuFunction f;
    for (const auto& m : cfg.curve_support()) f.curve.push_back(piece_of(m));
    f.line = piece_of(kCoord[cfg.line_support()]);
    return f;
}

static Rat max_piece(const std::vector<AffinePiece>& pieces, const Rat& r) {
    Rat best = pieces.front().at(r);
    for (size_t i = 1; i < pieces.size(); ++i) best = std::max(best, pieces[i].at(r));
    return best;
}

Rat mu(const Configuration& cfg, const Rat& r, const Rat& t) {
    MuFunction f = mu_function(cfg);
    return max_piece(f.curve, r) + t * f.line.at(r);
}

static std::vector<Rat> critical_r_of_pieces(const std::vector<AffinePiece>& pieces) {
    const Rat lo = rat(-1, 2), hi = Rat(1);
    std::vector<Rat> rs = {lo, hi};
    for (size_t i = 0; i < pieces.size(); ++i)
        for (size_t j = i + 1; j < pieces.size(); ++j) {
            long long ds = pieces[i].slope - pieces[j].slope;
            if (ds == 0) continue;
            Rat r = Rat(Int(pieces[j].intercept - pieces[i].intercept), Int(ds));
            if (lo < r && r < hi) rs.push_back(r);
        }
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    return rs;
}

std::vector<Rat> critical_r_values(const Configuration& cfg) {
    return critical_r_of_pieces(mu_function(cfg).curve);
}

Rat min_mu_over_r(const Configuration& cfg, const Rat& t) {
    if (t.sign() < 0) throw std::invalid_argument("min_mu_over_r: t < 0");
    MuFunction f = mu_function(cfg);
    std::optional<Rat> best;
    for (const auto& r : critical_r_of_pieces(f.curve)) {
        Rat v = max_piece(f.curve, r) + t * f.line.at(r);
        if (!best || v < *best) best = v;
    }
    return *best;
}

StabilityInterval interval_for_configuration(const Configuration& cfg) {
    // mu^t(Xi, .) is convex piecewise linear, so nonnegativity on [-1/2, 1]
    // is the conjunction of the affine-in-t constraints at the critical r's
    MuFunction f = mu_function(cfg);
    Rat lo(0);
    std::optional<Rat> hi;
    for (const auto& r : critical_r_of_pieces(f.curve)) {
        Rat a = max_piece(f.curve, r);   // mu_d(r)
        Rat b = f.line.at(r);            // mu_1(r)
        if (b.is_zero()) {
            if (a.sign() < 0) return StabilityInterval::empty();
        } else if (b.sign() > 0) {
            lo = std::max(lo, -a / b);
        } else {
            Rat u = -a / b;
            if (!hi || u < *hi) hi = u;
        }
    }
    if (hi && (*hi < lo || hi->sign() < 0)) return StabilityInterval::empty();
    return {false, lo, hi};
}

StabilityInterval diagonal_interval(int d, const std::vector<Monomial>& curve, int line_coord) {
    if (line_coord < 0 || line_coord > 2)
        throw std::invalid_argument("diagonal_interval: line must be a coordinate form");
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    StabilityInterval acc = StabilityInterval::ray(Rat(0));
    for (const auto& sigma : perms) {
        std::vector<Monomial> pc;
        pc.reserve(curve.size());
        for (const auto& m : curve) pc.push_back(permute(m, sigma));
        Configuration cfg = make_configuration(d, std::move(pc), {sigma[line_coord]});
        acc = acc.intersect(interval_for_configuration(cfg));
        if (acc.is_empty) break;
    }
    return acc;
}

Rat stability_threshold(const std::vector<Monomial>& curve) {
    std::vector<AffinePiece> pieces;
    for (const auto& m : support(curve)) pieces.push_back(piece_of(m));
    std::optional<Rat> best;
    for (const auto& r : critical_r_of_pieces(pieces)) {
        Rat v = max_piece(pieces, r);
        if (!best || v < *best) best = v;
    }
    return -*best;
}

Rat weighted_order(const WeightedOrderInput& in) {
    if (in.monomials.empty()) throw std::invalid_argument("weighted_order: empty form");
    if (in.w1 <= 0 || in.w2 <= 0) throw std::invalid_argument("weighted_order: weights must be positive");
    long long g = std::gcd(in.w1, in.w2);
    if (g != 1) throw std::invalid_argument("weighted_order: weights not coprime");
    long long best = in.monomials.front().first * in.w1 + in.monomials.front().second * in.w2;
    for (const auto& [i, j] : in.monomials) best = std::min(best, i * in.w1 + j * in.w2);
    return Rat(best);
}

Rat lct_quasihomogeneous(const WeightedOrderInput& in) {
    return Rat(in.w1 + in.w2) / weighted_order(in);
}

Rat discrepancy(long long w1, long long w2, const Rat& d, const Rat& t, const Rat& wf) {
    Rat dt = d + t;
    if (dt.is_zero()) throw std::invalid_argument("discrepancy: d + t = 0");
    return Rat(w1 + w2 - 1) - Rat(3) * wf / dt;
}

std::pair<Rat, Rat> multiplicity_bounds(int k, int d) {
    if (k < 1 || k > d) throw std::invalid_argument("multiplicity_bounds: need 1 <= k <= d");
    return {rat(3 * k, 2) - Rat(d), Rat(3 * k - d)};
}

BetaBound beta_bounds(int k, int d, bool line_component) {
    if (k < 0 || k > d) throw std::invalid_argument("beta_bounds: need 0 <= k <= d");
    if (line_component)
        return {BetaBound::kLineComponent, std::nullopt, rat(d - 3, 2), false};
    if (Rat(2 * k) <= Rat(d))
        return {BetaBound::kMildIntersection, std::nullopt, rat(d, 2), true};
    Rat excess(2 * k - d);
    Rat lo = rat(d, 2) - rat(3, 2) * excess;
    Rat hi = rat(d, 2) - Rat(3) * excess / Rat(2 * (2 * k - 1));
    return {BetaBound::kDeepIntersection, lo, hi, false};
}

}  // namespace pairlat
