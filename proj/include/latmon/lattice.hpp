#pragma once

#include "latmon/intlinalg.hpp"

#include <string>
#include <vector>

namespace latmon {

// Finite-rank free Z-module with a nondegenerate symmetric integer Gram
// matrix. Immutable after construction. The block list remembers how a
// direct sum was assembled so vector components stay addressable.
class Lattice {
public:
    struct Block {
        std::string name;
        int offset;
        int rank;
    };

    Lattice(IMat gram, std::string label = "");

    int rank() const { return gram_.rows(); }
    const IMat& gram() const { return gram_; }
    const std::string& label() const { return label_; }
    const Int& det() const { return det_; }
    bool is_even() const { return even_; }

    const std::vector<Block>& blocks() const { return blocks_; }
    const Block& block(const std::string& name) const;

    // Component of v lying in the named block (as a coordinate slice).
    IVec block_component(const IVec& v, const std::string& name) const;

    bool operator==(const Lattice& o) const {
        return gram_ == o.gram_;
    }

    // standard models
    static Lattice hyperbolic();              // U = [[0,1],[1,0]]
    static Lattice rank_one(const Int& k);    // <k>
    static Lattice e8();                      // Bourbaki ordering, positive definite

    friend Lattice direct_sum(const std::vector<Lattice>& parts);
    friend Lattice twist(const Lattice& L, const Int& n);

private:
    IMat gram_;
    std::string label_;
    Int det_;
    bool even_;
    std::vector<Block> blocks_;
};

Lattice twist(const Lattice& L, const Int& n);
Lattice direct_sum(const std::vector<Lattice>& parts);

Int inner(const Lattice& L, const IVec& v, const IVec& w);

// gcd of the pairings of v with a lattice basis; v must be nonzero.
Int divisibility(const Lattice& L, const IVec& v);

// Basis of {v in L : (v, s) = 0 for all s in span}, saturated in L.
// `span` holds the vectors as columns.
IMat orthogonal_complement(const Lattice& L, const IMat& span);

// Saturation span_Q(S) cap L of an independent set S (columns).
IMat saturate(const Lattice& L, const IMat& S);

bool is_primitive(const Lattice& L, const IMat& S);

// Gram matrix of a sublattice given by basis columns B: B^T G B.
IMat sublattice_gram(const Lattice& L, const IMat& B);

// All 240 roots of E8 in the Bourbaki simple-root coordinates, and the 120
// positive ones (nonnegative coordinates), lexicographically sorted.
const std::vector<IVec>& e8_roots();
const std::vector<IVec>& e8_positive_roots();

} // namespace latmon
