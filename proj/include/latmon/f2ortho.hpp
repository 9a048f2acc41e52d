#pragma once

#include "latmon/bsgs.hpp"
#include "latmon/isometry.hpp"

namespace latmon {

// E8/2E8 with the quadratic form q([e]) = (e,e)/2 mod 2, in the Bourbaki
// simple-root coordinates. This is the plus-type form in dimension 8 and is
// identified with A_{E8(-2)} by e + 2E8 -> [e/2].
struct E8ModTwo {
    F2QuadraticSpace space;                 // q on F2^8
    std::vector<F2Mat> transvections;       // images of the 120 positive root reflections
    const std::vector<IVec>* roots;         // the matching positive roots
};

const E8ModTwo& e8_mod_two();

// BSGS for the group generated by the root reflection images; built once.
const BSGSGroup& e8_orthogonal_group_f2();

// image of an E8 vector in F2^8 together with its q-value
struct ReducedVector {
    F2Vec cls;
    bool q;
};
ReducedVector reduce_mod2(const IVec& e);

// |O^+_{2n}(2)| = 2 * 2^{n(n-1)} (2^n - 1) prod_{i=1}^{n-1} (2^{2i} - 1)
Int orthogonal_group_order_plus(int n);

// Checks over all 256 classes that e + 2E8 -> [e/2] is a group isomorphism
// E8/2E8 -> A_{E8(-2)} matching the quadratic forms (F2 value 1 maps to the
// residue 1 in Q/2Z). Returns true and fills `checked` with the class count.
bool verify_e8_discriminant_isomorphism(int* checked = nullptr);

// Lift an isometry of A_{E8(-2)} to an integral isometry of E8(-2): factor
// the corresponding F2 matrix into root transvections and multiply the
// root reflections. The induced action of the result is verified to equal
// the target.
Isometry lift_discriminant_isometry(const F2Mat& target);

// Same entry point for a DiscriminantIsometry of A_{E8(-2)} expressed in the
// generators [alpha_i / 2].
Isometry lift_discriminant_isometry(const DiscriminantIsometry& target);

// The E8(-2) lattice used throughout (negated, doubled Bourbaki Gram).
const Lattice& e8_minus_two();

} // namespace latmon
