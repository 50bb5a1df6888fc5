#pragma once

#include <vector>

#include "pairlat/rational.hpp"

namespace pairlat {

using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;  // row-major
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

IMat imat_identity(int n);
IMat imat_mul(const IMat& A, const IMat& B);
IVec imat_mul_vec(const IMat& A, const IVec& x);
IMat imat_transpose(const IMat& A);
bool imat_is_symmetric(const IMat& A);

// exact determinant (fraction-free Bareiss)
Int imat_det(const IMat& A);

// Smith normal form  U*A*V = D  with U, V unimodular.
// Uinv is maintained so that generators of coker(A) can be read off.
struct SmithResult {
    std::vector<Int> d;  // diagonal, d[i] >= 0, d[i] | d[i+1] (trailing zeros allowed)
    IMat Uinv;           // rows(A) x rows(A)
    IMat V;              // cols(A) x cols(A)
};
SmithResult smith(IMat A);

// invariant factors > 1 of an integer matrix (for primitivity tests etc.)
std::vector<Int> invariant_factors(const IMat& A);

// basis of { x : A x = 0 } as columns collected into row vectors
std::vector<IVec> int_kernel(const IMat& A);

// solve A x = b over Q; empty optional when inconsistent
std::optional<QVec> solve_rational(const IMat& A, const QVec& b);

// signature of a symmetric rational matrix via congruence diagonalization
struct Signature {
    int pos = 0, neg = 0, zero = 0;
};
Signature signature_of(const QMat& G);
Signature signature_of(const IMat& G);

// extend a primitive integer vector to a unimodular basis; returns B with
// first column = c and |det B| = 1
IMat extend_to_unimodular(const IVec& c);

QMat qmat_from(const IMat& A);

}  // namespace pairlat
