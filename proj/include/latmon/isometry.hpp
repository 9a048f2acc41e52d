#pragma once

#include "latmon/fqm.hpp"

#include <cstdint>
#include <span>

namespace latmon {

// Integer matrix preserving a Gram matrix, acting on column coordinate
// vectors. Construction verifies M^T G M = G exactly.
class Isometry {
public:
    Isometry(Lattice L, IMat m);

    static Isometry identity(const Lattice& L) { return Isometry(L, IMat::identity(L.rank())); }
    static Isometry minus_identity(const Lattice& L) { return Isometry(L, -IMat::identity(L.rank())); }

    const Lattice& lattice() const { return lat_; }
    const IMat& matrix() const { return m_; }

    IVec apply(const IVec& v) const { return m_ * v; }

    Isometry compose(const Isometry& o) const;   // this after o
    Isometry inverse() const;
    Isometry negate() const { return Isometry(lat_, -m_); }

    bool operator==(const Isometry& o) const { return m_ == o.m_ && lat_ == o.lat_; }
    bool is_identity() const { return m_.is_identity(); }

private:
    Lattice lat_;
    IMat m_;
};

// R_v(x) = x - 2 (x,v)/(v,v) v. Throws for isotropic v and reports the first
// basis vector witnessing non-integrality.
Isometry reflection(const Lattice& L, const IVec& v);

bool reflection_is_integral(const Lattice& L, const IVec& v, int* witness = nullptr);

// Real spinor norm: factor over Q into reflections (Cartan-Dieudonne) and
// take the product of -sign(v_i^2). Kernel = O^+.
int spinor_norm(const Isometry& f);

// Spinor norm of an isometry of a rational quadratic space given by its Gram
// matrix; used internally and by the glue module for block isometries.
int spinor_norm_rational(const QMat& gram, const QMat& f);

bool is_orientation_preserving(const Isometry& f);

// Action induced on the discriminant group, as pushforward [x] -> [f x].
DiscriminantIsometry induced_discriminant_action(const Isometry& f, const FiniteQuadraticModule& A);

// Deterministic product of `length` generators selected by a seeded PRNG.
Isometry random_word(const Lattice& L, std::span<const Isometry> generators, int length,
                     std::uint64_t seed);

} // namespace latmon
