#pragma once

#include "pairlat/lattice.hpp"

namespace pairlat {

// root-norm menu entry: vectors with square -norm; when div_exactly is set
// the divisibility in L must equal it (the generalized-root condition)
struct RootNorm {
    long long norm = 2;
    std::optional<long long> div_exactly;
};

struct VinbergOptions {
    std::vector<RootNorm> menu = {{2, std::nullopt}, {4, 2}};
    long long max_m = 40;        // search radius: |delta.h| <= max_m
    long long max_roots = 64;    // accepted-root budget
};

enum class EdgeKind { kNone, kSimple, kDouble, kTriple, kParabolic, kDotted };

struct CoxeterDiagram {
    std::vector<IVec> roots;     // accepted roots, in L coordinates
    std::vector<Int> norms;      // squares (negative)
    std::vector<std::vector<EdgeKind>> edge;
    std::string dot() const;     // DOT export
};

struct VinbergResult {
    CoxeterDiagram diagram;
    bool stopped = false;        // stop condition reached (vs budget exhausted)
    long long shells_done = 0;
};

// Vinberg's algorithm on a hyperbolic lattice (signature (1, n)), based at h
// with h^2 > 0.  Roots are accepted in increasing (delta.h)^2/|delta^2| order,
// pairing >= 0 with everything accepted before.
VinbergResult vinberg(const GramLattice& L, const IVec& h, const VinbergOptions& opts = {});

// connected parabolic subdiagrams and their maximal-rank packings
struct ParabolicComponent {
    std::vector<int> nodes;   // indices into diagram.roots
    int rank = 0;             // nodes - 1
    IVec null_vector;         // primitive isotropic vector of the span
};

struct ParabolicClass {
    std::vector<ParabolicComponent> components;
    int rank = 0;
    IVec null_vector;              // common primitive isotropic line
    std::string type_multiset;     // e.g. "A1~ x5 + E7~" (affine types by rank)
};

// all connected parabolic subdiagrams of the accepted-root diagram
std::vector<ParabolicComponent> connected_parabolics(const GramLattice& L, const CoxeterDiagram& d);

// parabolic subdiagrams of the given rank, grouped into classes
std::vector<ParabolicClass> parabolic_subdiagrams(const GramLattice& L, const CoxeterDiagram& d,
                                                  int rank);

// quotient E_perp/E for a primitive isotropic e
GramLattice isotropic_quotient(const GramLattice& L, const IVec& e);

// Baily-Borel boundary classification for a 2-elementary T with two
// hyperbolic summands (rank-1 classes) and a supplied split T = N + U
// (rank-2 classes).
struct IsotropicClass {
    int rank = 1;
    std::string h_label;        // "trivial" or order of H_E
    std::string quotient_label; // isometry class of E_perp/E
    IVec representative;        // in T (rank 1) or the N-part vector (rank 2)
    std::vector<std::string> contains;  // rank-1 labels under this rank-2 class
};

std::vector<IsotropicClass> isotropic_rank1_classes(const GramLattice& T);
std::vector<IsotropicClass> isotropic_rank2_classes(const GramLattice& N_part, const IVec& h,
                                                    const VinbergOptions& opts = {});

// move v into the fundamental chamber of the accepted roots by reflections
IVec reduce_to_chamber(const GramLattice& L, const CoxeterDiagram& d, IVec v);

}  // namespace pairlat
