#pragma once

#include "pairlat/stability.hpp"

namespace pairlat {

// One verification row: a representative configuration for a published table
// entry together with the value it must reproduce.
struct RowResult {
    std::string table;     // "table1" | "table2" | "table3" | "orbits" | "example"
    std::string label;
    std::string expected;
    std::string computed;
    bool pass = false;
    bool flagged = false;  // excluded from the pass/fail tally, with a note
    std::string note;
};

// Degree-5 threshold normal forms (one per stability-threshold value).
struct ThresholdCase {
    std::string label;
    int d;
    std::vector<Monomial> curve;  // adapted coordinates: p = (1:0:0), special tangent x2 = 0
    Rat expected;
    // quasihomogeneous data when the germ is linearly semi-quasihomogeneous
    std::optional<WeightedOrderInput> weights;
};
const std::vector<ThresholdCase>& threshold_cases();

// Minimal-orbit rows (critical slopes t != 0, 1, 5/2): binomial quintic plus
// the eigenline of the C*-stabilizer balancing mu^t = 0 at the stated t.
struct OrbitRow {
    Rat t;
    std::vector<Monomial> curve;
    int line;      // coordinate index, derived from the balance equation
    std::string sing_p, sing_pp;
    bool flagged;  // the published 8/5 row: its equation duplicates the 13/7 row
    std::string note;
};
const std::vector<OrbitRow>& orbit_rows();

std::vector<RowResult> verify_minimal_orbits();
std::vector<RowResult> verify_degree5_tables();

}  // namespace pairlat
