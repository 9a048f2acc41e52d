#pragma once

#include "latmon/matrix.hpp"

namespace latmon {

// Smith normal form U*M*V = D with U, V unimodular and D diagonal with
// d_1 | d_2 | ... >= 0. Uinv and Vinv are maintained alongside so callers
// can move between coordinates without re-inverting.
struct SmithResult {
    IMat U, Uinv, D, V, Vinv;
    std::vector<Int> diag;   // min(m,n) entries of D
    int rank = 0;            // number of nonzero diagonal entries
};

SmithResult smith_normal_form(const IMat& M);

// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IMat& M);

// Inverse of an integer matrix with det = +-1.
IMat inverse_unimodular(const IMat& M);

// Exact rational inverse; throws if singular.
QMat inverse(const QMat& M);

// Solve A*X = B over Q for A with full column rank (least-squares style via
// normal equations, then verified exactly). Throws if inconsistent.
QMat solve_full_col_rank(const QMat& A, const QMat& B);

// Basis of the integer kernel {x in Z^n : M x = 0}, as columns. The kernel of
// an integer matrix is automatically saturated.
IMat kernel_int(const IMat& M);

// Does the column span of `basis` (over Z) contain v? basis must have full
// column rank.
bool span_contains(const IMat& basis, const IVec& v);

// Z-span equality of two full-column-rank integer matrices.
bool same_lattice(const IMat& A, const IMat& B);

// Divide out the gcd of the entries; zero vectors are returned unchanged.
IVec primitive_part(const IVec& v);

Int content(const IVec& v);

// Basis (columns) of the Z-span of the columns of M.
IMat column_span_basis(const IMat& M);

} // namespace latmon
