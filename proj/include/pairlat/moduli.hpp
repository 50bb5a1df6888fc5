#pragma once

#include "pairlat/lattice.hpp"
#include "pairlat/parse.hpp"

namespace pairlat {

// roots orthogonal to the polarization split by their pairing with M
enum class RootLocus { kInfinity, kFinite };
RootLocus classify_root(const Int& norm, const Int& pair_h, const std::vector<Int>& pair_e);

// (a, b) = (2(d-1), d(d-1)), the bidegree of the tangency discriminant
std::pair<Int, Int> discriminant_bidegree(int d);

// result of the simple-singularity occurrence test
struct OccursCertificate {
    GramLattice N;
    std::vector<std::string> subgroup;  // generators of H, printed
    long long subgroup_order = 1;
    std::string embed_note;
    std::string invariant;              // symmetry-class invariant of H
};

struct OccursResult {
    enum Verdict { kYes, kNo, kUndetermined } verdict;
    std::optional<OccursCertificate> certificate;
    std::vector<std::string> trace;     // per-candidate failure notes
    long long candidates = 0;           // isotropic subgroups examined
    long long passing = 0;              // candidates passing all three steps
    std::vector<std::string> passing_invariants;
};

OccursResult config_occurs(const std::vector<AdeComponent>& config);

// R' must arise from R by deleting nodes of the Dynkin diagram; checks the
// implication occurs(R) => occurs(R') on the given instance
struct MonotonicityReport {
    bool relation_valid = false;
    OccursResult::Verdict r_verdict, rp_verdict;
    bool implication_holds = false;
};
MonotonicityReport deformation_monotonicity(const std::vector<AdeComponent>& R,
                                            const std::vector<AdeComponent>& Rp);
bool is_subdiagram_deformation(const std::vector<AdeComponent>& R,
                               const std::vector<AdeComponent>& Rp);

}  // namespace pairlat
