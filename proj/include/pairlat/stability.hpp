#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pairlat/monoform.hpp"

namespace pairlat {

// Closed interval of slopes with exact rational endpoints.  hi empty means
// unbounded above; empty() means no semistable slope at all.
struct StabilityInterval {
    bool is_empty = true;
    Rat lo;
    std::optional<Rat> hi;

    static StabilityInterval empty() { return {}; }
    static StabilityInterval closed(Rat a, Rat b) { return {false, std::move(a), std::move(b)}; }
    static StabilityInterval ray(Rat a) { return {false, std::move(a), std::nullopt}; }

    bool contains(const Rat& t) const {
        return !is_empty && lo <= t && (!hi || t <= *hi);
    }
    bool subset_of(const StabilityInterval& o) const;
    StabilityInterval intersect(const StabilityInterval& o) const;
    bool operator==(const StabilityInterval& o) const {
        if (is_empty || o.is_empty) return is_empty == o.is_empty;
        return lo == o.lo && hi == o.hi;
    }
    std::string str() const;
};

// the two halves of mu^t(Xi, r): max over curve support pieces, plus t times
// the single line piece (1, r or -1-r by the flag rule)
struct MuFunction {
    std::vector<AffinePiece> curve;  // support pieces
    AffinePiece line;
};
MuFunction mu_function(const Configuration& cfg);

Rat mu(const Configuration& cfg, const Rat& r, const Rat& t);

// {-1/2, 1} plus all crossings of curve support pieces inside (-1/2, 1);
// the minimum of mu^t over r is attained here for every t >= 0
std::vector<Rat> critical_r_values(const Configuration& cfg);

Rat min_mu_over_r(const Configuration& cfg, const Rat& t);

// exact set { t >= 0 : min_r mu^t(Xi, r) >= 0 }
StabilityInterval interval_for_configuration(const Configuration& cfg);

// Intersection over the six coordinate permutations of the permuted
// configuration's interval.  Upper-bounds the pair's stability interval;
// exact for the binomial minimal-orbit pairs.
StabilityInterval diagonal_interval(int d, const std::vector<Monomial>& curve, int line_coord);

// t_p(C) = -min_r mu(Xi_d, r) in coordinates adapted to p
Rat stability_threshold(const std::vector<Monomial>& curve);

// log canonical threshold (w1+w2)/w(f) of a quasihomogeneous germ
struct WeightedOrderInput {
    long long w1 = 1, w2 = 1;                       // coprime positive weights
    std::vector<std::pair<int, int>> monomials;     // exponents (i, j) of x^i y^j
};
Rat weighted_order(const WeightedOrderInput& in);   // w(f)
Rat lct_quasihomogeneous(const WeightedOrderInput& in);

// discrepancy of the (w1,w2)-weighted blow-up: w1 + w2 - 1 - 3 wf/(d+t)
Rat discrepancy(long long w1, long long w2, const Rat& d, const Rat& t, const Rat& wf);

// bounds 3k/2 - d <= t_p <= 3k - d for a multiplicity-k point
std::pair<Rat, Rat> multiplicity_bounds(int k, int d);

// case split for the upper endpoint beta in terms of mult_p(C cap L)
struct BetaBound {
    enum Case { kLineComponent, kMildIntersection, kDeepIntersection } which;
    std::optional<Rat> lo;  // set in the deep case
    Rat hi;                 // upper bound; exact value in the mild case
    bool exact;             // hi is the exact beta
};
BetaBound beta_bounds(int k, int d, bool line_component);

}  // namespace pairlat
