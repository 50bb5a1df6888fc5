#include "pairlat/walls.hpp"

#include <algorithm>
#include <unordered_set>

namespace pairlat {

namespace {

struct Poset {
    std::vector<Monomial> mono;           // canonical order
    std::vector<uint32_t> comparable;     // mask of elements comparable to i (strictly)
    std::vector<uint32_t> dominators;     // mask of elements strictly dominating i
};

Poset build_poset(int d) {
    Poset p;
    p.mono = all_monomials(d);
    int n = (int)p.mono.size();
    p.comparable.assign(n, 0);
    p.dominators.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (dominates(p.mono[j], p.mono[i])) {
                p.dominators[i] |= 1u << j;
                p.comparable[i] |= 1u << j;
                p.comparable[j] |= 1u << i;
            }
        }
    return p;
}

void antichains(const Poset& p, int start, uint32_t chosen, uint32_t blocked,
                const std::function<void(uint32_t)>& fn) {
    int n = (int)p.mono.size();
    for (int i = start; i < n; ++i) {
        if (blocked & (1u << i)) continue;
        uint32_t next = chosen | (1u << i);
        fn(next);
        antichains(p, i + 1, next, blocked | p.comparable[i], fn);
    }
}

std::vector<Monomial> unmask(const Poset& p, uint32_t mask) {
    std::vector<Monomial> out;
    for (int i = 0; i < (int)p.mono.size(); ++i)
        if (mask & (1u << i)) out.push_back(p.mono[i]);
    return out;
}

}  // namespace

void enumerate_supports(int d, const std::function<void(const SupportChoice&)>& fn) {
    Poset p = build_poset(d);
    antichains(p, 0, 0, 0, [&](uint32_t mask) {
        SupportChoice sc;
        sc.curve = unmask(p, mask);
        for (int line = 0; line < 3; ++line) {
            sc.line = line;
            fn(sc);
        }
    });
}

long long count_curve_antichains(int d) {
    long long n = 0;
    Poset p = build_poset(d);
    antichains(p, 0, 0, 0, [&](uint32_t) { ++n; });
    return n;
}

long long brute_force_support_count(int d) {
    Poset p = build_poset(d);
    int n = (int)p.mono.size();
    if (n > 28) return -1;
    std::unordered_set<uint32_t> seen;
    for (uint32_t s = 1; s < (1u << n); ++s) {
        uint32_t supp = 0;
        for (int i = 0; i < n; ++i)
            if ((s & (1u << i)) && !(s & p.dominators[i])) supp |= 1u << i;
        seen.insert(supp);
    }
    return (long long)seen.size();
}

namespace {

// binding critical r for an interval endpoint: mu^t is zero there and the
// configuration is unstable just across the endpoint
std::optional<WallWitness> witness_at(const Configuration& cfg, const SupportChoice& sc,
                                      const Rat& t, bool lower_endpoint) {
    MuFunction f = mu_function(cfg);
    for (const auto& r : critical_r_values(cfg)) {
        Rat a = mu(cfg, r, t);
        if (!a.is_zero()) continue;
        Rat b = f.line.at(r);
        if (lower_endpoint && b.sign() > 0) return WallWitness{sc, r, "below"};
        if (!lower_endpoint && b.sign() < 0) return WallWitness{sc, r, "above"};
    }
    return std::nullopt;
}

}  // namespace

WallReport candidate_walls(int d) {
    WallReport rep;
    rep.d = d;
    const Rat half_d = rat(d, 2);
    std::map<Rat, WallWitness> realized;
    std::unordered_set<std::string> raw_seen;
    std::vector<Rat> raw;

    enumerate_supports(d, [&](const SupportChoice& sc) {
        ++rep.support_count;
        Configuration cfg = make_configuration(d, sc.curve, {sc.line});
        StabilityInterval iv = interval_for_configuration(cfg);
        if (iv.is_empty) return;
        auto consider = [&](const Rat& t, bool lower) {
            if (t > half_d) return;  // post-processing: slopes beyond d/2 are irrelevant
            if (raw_seen.insert(t.str()).second) raw.push_back(t);
            if (realized.count(t)) return;
            if (auto w = witness_at(cfg, sc, t, lower)) {
                realized.emplace(t, std::move(*w));
            } else if (lower && t.is_zero()) {
                // t = 0 is the boundary wall: the semistable set changes there
                // by convention (no slopes below zero), no crossing witness
                Rat rmin = rat(-1, 2), best = mu(cfg, rmin, Rat(0));
                for (const auto& r : critical_r_values(cfg)) {
                    Rat v = mu(cfg, r, Rat(0));
                    if (v < best) { best = v; rmin = r; }
                }
                realized.emplace(t, WallWitness{sc, rmin, "boundary"});
            } else {
                rep.notes.push_back("endpoint " + t.str() + " of " + cfg.str() +
                                    " produced no tight witness");
            }
        };
        consider(iv.lo, /*lower=*/true);
        if (iv.hi) consider(*iv.hi, /*lower=*/false);
    });

    // t = 0 is always a wall (the quotient at slope 0 is the curve-only one);
    // configurations with interval [0, ...] witness it via the r where the
    // curve part vanishes, or trivially
    std::sort(raw.begin(), raw.end());
    rep.raw = std::move(raw);
    rep.realized = std::move(realized);
    return rep;
}

}  // namespace pairlat
