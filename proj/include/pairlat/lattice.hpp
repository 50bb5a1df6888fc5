#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pairlat/intmat.hpp"

namespace pairlat {

// Even integral lattice given by its Gram matrix.
struct GramLattice {
    IMat gram;
    std::string name;

    int rank() const { return (int)gram.size(); }
    Int det() const { return imat_det(gram); }
    Signature sig() const { return signature_of(gram); }
    bool is_even() const;
    bool is_degenerate() const { return det() == 0; }
    Int pair(const IVec& x, const IVec& y) const;
    Int norm(const IVec& x) const { return pair(x, x); }
};

// ---- constructors -------------------------------------------------------

// root lattices are negative definite (roots have square -2)
GramLattice lat_A(int n);
GramLattice lat_D(int n);
GramLattice lat_E(int n);  // n = 6, 7, 8
GramLattice lat_U();
GramLattice lat_U_scaled(long long n);  // off-diagonal n
GramLattice lat_rank1(long long k);     // <k>, k even
GramLattice lat_T(int p, int q, int r);
GramLattice lat_M();  // the rank 6 lattice spanned by l', e1..e5
GramLattice direct_sum(const GramLattice& a, const GramLattice& b);
GramLattice rescale(const GramLattice& L, long long n);

// spec mini-language: "E8+D4+U(2)", "T(2,3,8)", "M", "A12", "10A1", "<-4>"
GramLattice parse_lattice_spec(const std::string& spec);

// distinguished vectors of M in the basis (l', e1..e5)
IVec m_polarization_h();       // h = 2l' + e1 + ... + e5
IVec m_f_vector(int i);        // f_i = h - e_i, i in 1..5

// ---- discriminant form ---------------------------------------------------

// finite abelian group with Q/2Z-valued quadratic form
struct FiniteQuadraticForm {
    std::vector<Int> orders;  // invariant factors > 1, d1 | d2 | ...
    std::vector<Rat> q;       // q(g_i), normalized into [0, 2)
    QMat b;                   // b(g_i, g_j), normalized into [0, 1)

    using Elem = std::vector<long long>;
    Int group_order() const;
    size_t ngens() const { return orders.size(); }
    Rat q_of(const Elem& x) const;
    Rat b_of(const Elem& x, const Elem& y) const;
    std::vector<Elem> all_elements(long long budget = 1 << 20) const;
    std::vector<Elem> isotropic_elements(long long budget = 1 << 20) const;
    FiniteQuadraticForm negated() const;
};

struct DiscriminantForm {
    FiniteQuadraticForm form;
    QMat generator_lifts;  // one row per generator, coordinates in L (x) Q
};
DiscriminantForm discriminant_form(const GramLattice& L);

// gcd of the pairings of x with a basis
Int divisibility(const GramLattice& L, const IVec& x);

// class of x/divisibility(x) in A_L, in generator coordinates; empty when x/d
// is not in L* (never for lattice vectors)
FiniteQuadraticForm::Elem disc_class_of(const GramLattice& L, const DiscriminantForm& D,
                                        const IVec& x, const Int& div);

// true iff the span of the given vectors is saturated (all invariant factors 1)
bool is_primitive_sublattice(const std::vector<IVec>& basis_in_L);

// ---- overlattices --------------------------------------------------------

struct Overlattice {
    std::vector<FiniteQuadraticForm::Elem> subgroup_gens;  // isotropic subgroup H
    Int index;                                             // |H|
    GramLattice lattice;
    QMat basis_in_L;  // rows: overlattice basis in L-coordinates
};

// one even overlattice per totally isotropic subgroup of A_L (including the
// trivial one); requires |A_L| within budget
std::vector<Overlattice> overlattices(const GramLattice& L, long long budget = 4096);

// the lattice generated by L and a set of rational glue vectors; basis_out
// receives its basis in L coordinates (rows)
GramLattice overlattice_from_glue(const GramLattice& L, const std::vector<QVec>& lifts,
                                  QMat* basis_out = nullptr);

// ---- roots ---------------------------------------------------------------

struct AdeComponent {
    char family = 'A';
    int rank = 0;
    std::string str() const { return std::string(1, family) + std::to_string(rank); }
    bool operator<(const AdeComponent& o) const {
        return family != o.family ? family < o.family : rank < o.rank;
    }
    bool operator==(const AdeComponent&) const = default;
};

struct RootSystemReport {
    std::vector<IVec> roots;        // all vectors of square -2, closed under negation
    std::vector<IVec> simple;       // one simple system
    std::vector<AdeComponent> components;  // sorted multiset
    long long count = 0;
    std::string components_str() const;
};

// exhaustive root enumeration; L must be negative definite
RootSystemReport root_system(const GramLattice& L);

// all x (+ shift) with -x^t G x == value, G negative definite
std::vector<IVec> vectors_of_norm(const GramLattice& L, const Int& value);
std::vector<QVec> coset_vectors_of_norm(const GramLattice& L, const QVec& shift, const Rat& value);

// same signature and isometric discriminant forms
bool in_genus(const GramLattice& a, const GramLattice& b);

// ---- finite form isometries ----------------------------------------------

// existence / count of isomorphisms preserving q and b; budget bounds |A|
bool forms_isometric(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b,
                     long long budget = 20000);
long long form_isometry_count(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b,
                              long long budget = 20000);

// all automorphisms of q, each as the list of generator images
std::vector<std::vector<FiniteQuadraticForm::Elem>> form_automorphism_images(
    const FiniteQuadraticForm& f, long long budget = 20000);

// ---- primitive embeddings into the K3 lattice -----------------------------

struct EmbedResult {
    enum Verdict { kYes, kNo, kUndetermined } verdict;
    std::string reason;
    std::optional<GramLattice> complement;  // certificate when found by search
};

// three-valued test for a primitive embedding into E8^2 + U^3
EmbedResult embeds_primitively_K3(const GramLattice& N);

GramLattice k3_lattice();  // E8 + E8 + U + U + U

}  // namespace pairlat
