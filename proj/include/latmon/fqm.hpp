#pragma once

#include "latmon/lattice.hpp"

#include <optional>

namespace latmon {

// Discriminant quadratic module A_L = L*/L of an even lattice, with the
// Q/2Z-valued quadratic form and Q/Z-valued bilinear form. Elements are
// stored as canonical tuples c with 0 <= c_i < d_i against the generator
// list coming from the Smith normal form of the Gram matrix.
//
// Dual vectors are handled through their "dual coordinates": the vector of
// pairings with the lattice basis, which is an integer vector for any
// element of L*. In those coordinates A_L = Z^n / G Z^n.
class FiniteQuadraticModule {
public:
    using Elem = std::vector<Int>;

    explicit FiniteQuadraticModule(const Lattice& L);

    int ngens() const { return int(factors_.size()); }
    const std::vector<Int>& invariant_factors() const { return factors_; }
    Int order() const;
    bool is_two_elementary() const;

    // generator i as dual coordinates (a column of Uinv)
    IVec generator_dual_coords(int i) const { return gens_dual_.col(i); }

    // class of an element of L* given by dual coordinates
    Elem class_of_dual(const IVec& a) const;

    // class of x in L tensor Q; requires G x integral (i.e. x in L*)
    Elem class_of_rational(const QVec& x) const;

    Elem zero() const { return Elem(factors_.size(), Int(0)); }
    Elem add(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem scale(const Int& n, const Elem& a) const;
    bool is_zero(const Elem& a) const;

    // quadratic form, value in [0,2) mod 2Z
    Rat q(const Elem& a) const;
    // bilinear form, value in [0,1) mod Z
    Rat b(const Elem& x, const Elem& y) const;

    // All elements in deterministic order; order() must be small.
    std::vector<Elem> elements() const;

    const Lattice& source() const { return lattice_; }

    // dual coordinates of (a representative of) the class
    IVec representative_dual_coords(const Elem& a) const;

private:
    Lattice lattice_;
    std::vector<Int> factors_;     // d_i > 1
    std::vector<int> keep_;        // SNF diagonal indices with d_i > 1
    IMat proj_;                    // SNF U (full): class coords = (U a) mod d
    IMat gens_dual_;               // columns: Uinv columns for kept indices
    QMat gram_inv_;                // G^{-1}, for q and b on dual coordinates
    std::vector<Rat> q_gen_;       // q(g_i) mod 2
    QMat b_gen_;                   // b(g_i, g_j) mod 1
};

FiniteQuadraticModule discriminant_module(const Lattice& L);

// Isometry of a discriminant module: matrix action on the generator tuples,
// entries reduced mod the row invariant factor. Verified to be well defined
// and to preserve q on construction.
class DiscriminantIsometry {
public:
    DiscriminantIsometry(FiniteQuadraticModule A, IMat action);

    const IMat& matrix() const { return m_; }
    FiniteQuadraticModule::Elem apply(const FiniteQuadraticModule::Elem& a) const;
    DiscriminantIsometry compose(const DiscriminantIsometry& o) const;
    bool operator==(const DiscriminantIsometry& o) const { return m_ == o.m_; }
    bool is_identity() const { return m_.is_identity(); }

    const FiniteQuadraticModule& module() const { return A_; }

private:
    FiniteQuadraticModule A_;
    IMat m_;
};

} // namespace latmon
