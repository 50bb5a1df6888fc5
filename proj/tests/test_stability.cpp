#include <doctest.h>

#include <random>

#include "pairlat/stability.hpp"
#include "pairlat/tables.hpp"

using namespace pairlat;

namespace {

Configuration cfg(int d, std::vector<Monomial> curve, std::vector<int> line) {
    return make_configuration(d, std::move(curve), std::move(line));
}

std::vector<Monomial> random_curve(std::mt19937_64& rng, int d) {
    auto monos = all_monomials(d);
    std::vector<Monomial> out;
    while (out.empty())
        for (const auto& m : monos)
            if (rng() % 4 == 0) out.push_back(m);
    return out;
}

}  // namespace

TEST_CASE("mu examples") {
    CHECK(mu(cfg(5, {{5, 0, 0}}, {0}), rat(1, 3), rat(7, 2)) == Rat(5) + rat(7, 2));
    // crossing of -1-3r and 5r at r = -1/8
    CHECK(mu(cfg(5, {{2, 0, 3}, {0, 5, 0}}, {0}), rat(-1, 8), rat(5, 8)) == Rat(0));
    // all monomials with line x2 at r=1: d - 2t
    CHECK(mu(cfg(5, all_monomials(5), {2}), Rat(1), rat(5, 2)) == Rat(0));
    CHECK(mu(cfg(3, all_monomials(3), {0}), rat(1, 2), Rat(0)) == Rat(3));
}

TEST_CASE("critical r values") {
    auto r1 = critical_r_values(cfg(5, {{5, 0, 0}}, {0}));
    CHECK(r1 == std::vector<Rat>{rat(-1, 2), Rat(1)});
    auto r2 = critical_r_values(cfg(5, {{2, 0, 3}, {0, 5, 0}}, {0}));
    CHECK(r2 == std::vector<Rat>{rat(-1, 2), rat(-1, 8), Rat(1)});
    auto r3 = critical_r_values(cfg(5, {{4, 0, 1}, {2, 3, 0}}, {2}));
    CHECK(r3 == std::vector<Rat>{rat(-1, 2), rat(1, 4), Rat(1)});
}

TEST_CASE("min of mu over r") {
    CHECK(min_mu_over_r(cfg(3, all_monomials(3), {0}), Rat(0)) == Rat(3));
    CHECK(min_mu_over_r(cfg(5, {{2, 0, 3}, {0, 5, 0}}, {0}), Rat(0)) == rat(-5, 8));
    CHECK(min_mu_over_r(cfg(5, all_monomials(5), {2}), rat(5, 2)) == Rat(0));
}

TEST_CASE("min_mu_over_r agrees with dense sampling") {
    std::mt19937_64 rng(917);
    std::vector<Rat> grid;
    for (int den = 1; den <= 9; ++den)
        for (int num = -den; num <= 2 * den; ++num) {
            Rat r(num, 2 * den);
            if (rat(-1, 2) <= r && r <= Rat(1)) grid.push_back(r);
        }
    for (int trial = 0; trial < 400; ++trial) {
        int d = 2 + (int)(rng() % 4);
        Configuration c = cfg(d, random_curve(rng, d), {(int)(rng() % 3)});
        Rat t((long long)(rng() % 7), 1 + (long long)(rng() % 4));
        Rat minimum = min_mu_over_r(c, t);
        for (const auto& r : grid) CHECK(minimum <= mu(c, r, t));
        bool attained = false;
        for (const auto& r : critical_r_values(c)) attained |= mu(c, r, t) == minimum;
        CHECK(attained);
    }
}

TEST_CASE("support invariance of mu") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 1100; ++trial) {
        int d = 2 + (int)(rng() % 4);
        auto curve = random_curve(rng, d);
        Configuration full = cfg(d, curve, {(int)(rng() % 3)});
        Configuration reduced = cfg(d, full.curve_support(), full.line);
        Rat r(-(long long)(rng() % 3), 2 + (long long)(rng() % 5));
        Rat t((long long)(rng() % 9), 1 + (long long)(rng() % 3));
        CHECK(mu(full, r, t) == mu(reduced, r, t));
    }
}

TEST_CASE("interval for configuration") {
    CHECK(interval_for_configuration(cfg(5, all_monomials(5), {2})) ==
          StabilityInterval::closed(Rat(0), rat(5, 2)));
    CHECK(interval_for_configuration(cfg(5, {{4, 0, 1}, {2, 3, 0}}, {2})) ==
          StabilityInterval::closed(Rat(0), rat(11, 5)));
    CHECK(interval_for_configuration(cfg(5, {{3, 1, 1}, {1, 4, 0}}, {2})) ==
          StabilityInterval::closed(Rat(0), rat(8, 5)));
    // empty intervals are first-class
    CHECK(interval_for_configuration(cfg(1, {{0, 1, 0}}, {1})).is_empty);
}

TEST_CASE("interval monotone under adding curve monomials") {
    std::mt19937_64 rng(371);
    for (int trial = 0; trial < 1100; ++trial) {
        int d = 2 + (int)(rng() % 4);
        auto small = random_curve(rng, d);
        auto big = small;
        for (const auto& m : all_monomials(d))
            if (rng() % 3 == 0) big.push_back(m);
        int line = (int)(rng() % 3);
        auto i1 = interval_for_configuration(cfg(d, small, {line}));
        auto i2 = interval_for_configuration(cfg(d, big, {line}));
        CHECK(i1.subset_of(i2));
    }
}

TEST_CASE("diagonal intervals") {
    // E8 quintic with its eigenline
    CHECK(diagonal_interval(5, {{2, 0, 3}, {0, 5, 0}}, 0) ==
          StabilityInterval::closed(rat(5, 8), rat(5, 8)));
    // W12 with the derived eigenline
    CHECK(diagonal_interval(5, {{1, 0, 4}, {0, 5, 0}}, 0) ==
          StabilityInterval::closed(rat(5, 3), rat(5, 3)));
    // generic quintic
    CHECK(diagonal_interval(5, all_monomials(5), 2) ==
          StabilityInterval::closed(Rat(0), rat(5, 2)));
    CHECK_THROWS(diagonal_interval(5, {{5, 0, 0}}, 3));
}

TEST_CASE("stability thresholds") {
    CHECK(stability_threshold({{2, 0, 2}, {0, 3, 1}}) == rat(1, 2));   // quartic C1
    CHECK(stability_threshold({{2, 0, 2}, {1, 2, 1}, {0, 4, 0}, {0, 2, 2}}) == Rat(0));  // quartic C2
    CHECK(stability_threshold({{2, 0, 3}, {0, 5, 0}}) == rat(5, 8));   // E8
    CHECK(stability_threshold({{1, 0, 4}, {0, 5, 0}}) == rat(5, 3));   // W12
    CHECK(stability_threshold({{1, 1, 3}, {0, 5, 0}}) == rat(10, 7));  // Z11
}

TEST_CASE("threshold normal forms and lct consistency") {
    for (const auto& tc : threshold_cases()) {
        CAPTURE(tc.label);
        CHECK(stability_threshold(tc.curve) == tc.expected);
        if (tc.weights) {
            Rat lct = lct_quasihomogeneous(*tc.weights);
            CHECK(Rat(3) / lct - Rat(tc.d) == tc.expected);
        }
    }
}

TEST_CASE("lct formula") {
    CHECK(lct_quasihomogeneous({2, 3, {{3, 0}, {0, 2}}}) == rat(5, 6));  // cusp y^2 + x^3
    CHECK(lct_quasihomogeneous({3, 5, {{5, 0}, {0, 3}}}) == rat(8, 15)); // E8 germ
    CHECK(Rat(3) / rat(8, 15) - Rat(5) == rat(5, 8));
    CHECK(lct_quasihomogeneous({1, 1, {{1, 0}}}) == Rat(2));             // smooth
    CHECK_THROWS(lct_quasihomogeneous({2, 4, {{1, 0}}}));                // not coprime
}

TEST_CASE("discrepancy formula") {
    // nodal cubic: 1 + 1 - 1 - 3*2/3 = -1, the log-canonical boundary
    CHECK(discrepancy(1, 1, Rat(3), Rat(0), Rat(2)) == Rat(-1));
    CHECK(discrepancy(1, 1, Rat(3), Rat(0), Rat(2)) >= Rat(-1));
    // cusp: value < -1 exactly when t < 3/5
    CHECK(discrepancy(2, 3, Rat(3), rat(3, 5), Rat(6)) == Rat(-1));
    CHECK(discrepancy(2, 3, Rat(3), rat(3, 5) - rat(1, 100), Rat(6)) < Rat(-1));
    CHECK(discrepancy(2, 3, Rat(3), rat(3, 5) + rat(1, 100), Rat(6)) > Rat(-1));
    CHECK(discrepancy(4, 7, Rat(5), Rat(1), Rat(0)) == Rat(10));         // wf = 0
    CHECK_THROWS(discrepancy(1, 1, Rat(0), Rat(0), Rat(1)));
}

TEST_CASE("multiplicity bounds") {
    CHECK(multiplicity_bounds(4, 5) == std::pair<Rat, Rat>{Rat(1), Rat(7)});
    CHECK(multiplicity_bounds(5, 5) == std::pair<Rat, Rat>{rat(5, 2), Rat(10)});
    CHECK(multiplicity_bounds(2, 5) == std::pair<Rat, Rat>{Rat(-2), Rat(1)});
    CHECK_THROWS(multiplicity_bounds(0, 5));
}

TEST_CASE("threshold lies within the multiplicity bounds") {
    std::mt19937_64 rng(550);
    int cases = 0;
    while (cases < 1000) {
        int d = 3 + (int)(rng() % 3);
        int k = 1 + (int)(rng() % d);
        // adapted configurations of declared multiplicity k: every monomial
        // has b + c >= k, at least one attains it
        std::vector<Monomial> curve;
        for (const auto& m : all_monomials(d))
            if (m.b + m.c >= k && rng() % 3 == 0) curve.push_back(m);
        bool attained = false;
        for (const auto& m : curve) attained |= m.b + m.c == k;
        if (curve.empty() || !attained) continue;
        Rat tp = stability_threshold(curve);
        auto [lo, hi] = multiplicity_bounds(k, d);
        CHECK(lo <= tp);
        CHECK(tp <= hi);
        ++cases;
    }
}

TEST_CASE("excluded slopes have discrepancy below the log-canonical bound") {
    // the quintic with the triple-tangent degeneration: diagonal interval
    // [5/8, 5/8], quasihomogeneous witness y^3 + x^5 with weights (3, 5)
    StabilityInterval iv = diagonal_interval(5, {{2, 0, 3}, {0, 5, 0}}, 0);
    Rat wf = weighted_order({3, 5, {{5, 0}, {0, 3}}});
    for (const Rat& t : {Rat(0), rat(1, 4), rat(5, 8) - rat(1, 1000)}) {
        CHECK_FALSE(iv.contains(t));
        CHECK(discrepancy(3, 5, Rat(5), t, wf) < Rat(-1));
    }
    CHECK(iv.contains(rat(5, 8)));
    CHECK(discrepancy(3, 5, Rat(5), rat(5, 8), wf) == Rat(-1));
}

TEST_CASE("beta bounds") {
    auto b1 = beta_bounds(5, 5, true);
    CHECK(b1.which == BetaBound::kLineComponent);
    CHECK(b1.hi == Rat(1));
    auto b2 = beta_bounds(2, 5, false);
    CHECK(b2.which == BetaBound::kMildIntersection);
    CHECK(b2.exact);
    CHECK(b2.hi == rat(5, 2));
    auto b3 = beta_bounds(5, 5, false);
    CHECK(b3.which == BetaBound::kDeepIntersection);
    CHECK(*b3.lo == Rat(-5));
    CHECK(b3.hi == rat(5, 3));  // attained by the k=5 smooth tangency row
}
