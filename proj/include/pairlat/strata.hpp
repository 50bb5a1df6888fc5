#pragma once

#include "pairlat/lattice.hpp"

namespace pairlat {

// one row of the stratification table for the non-transversal-intersection
// locus: wall, singularity at infinity, Picard lattice of the stratum
struct StratumRow {
    int case_id;
    Rat wall;
    std::string sing_at_infinity;
    std::string picard_spec;
    int codim;
    std::vector<int> specializes_to;  // case ids with the row as specialization
    bool equation_flagged;            // inherits the duplicated-equation caveat
};
const std::vector<StratumRow>& stratum_rows();

struct StratumCheck {
    std::string label;
    bool pass;
    std::string detail;
};

// codim = rank(M_t) - 6 for every row, specialization rank monotonicity, and
// the full Gram/primitivity/D10 verification of the explicit M -> T(2,3,8)
std::vector<StratumCheck> verify_strata();

// the explicit embedding M -> T(2,3,8): images of (l', e1..e5) as rows
IMat m_into_t238();

}  // namespace pairlat
