#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "pairlat/stability.hpp"

namespace pairlat {

// A support choice: an antichain of degree-d monomials plus a line coordinate.
struct SupportChoice {
    std::vector<Monomial> curve;  // antichain
    int line = 0;                 // coordinate index of the line support
};

// Enumerates every antichain of the degree-d dominance poset combined with
// each of the three line supports, in deterministic order.
void enumerate_supports(int d, const std::function<void(const SupportChoice&)>& fn);
long long count_curve_antichains(int d);

// Brute-force oracle: distinct support sets over all non-empty subsets of the
// degree-d monomials (2^#monomials - 1 subsets, support-reduced and deduped).
long long brute_force_support_count(int d);

struct WallWitness {
    SupportChoice config;
    Rat r;            // critical weight where the constraint is tight
    std::string side; // "below" or "above": where the configuration is unstable
};

struct WallReport {
    int d = 0;
    std::vector<Rat> raw;                 // candidate slopes, clipped to [0, d/2]
    std::map<Rat, WallWitness> realized;  // slope -> witness
    std::vector<std::string> notes;       // audit trail for non-realized candidates
    long long support_count = 0;          // configurations examined
};

WallReport candidate_walls(int d);

}  // namespace pairlat
