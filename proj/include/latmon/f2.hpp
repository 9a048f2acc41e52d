#pragma once

#include "latmon/matrix.hpp"

#include <cstdint>
#include <vector>

namespace latmon {

// Vectors over F_2 are bitmasks (bit i = coordinate i), matrices are stored
// as column bitmasks. Dimensions stay <= 32.
using F2Vec = std::uint32_t;

class F2Mat {
public:
    F2Mat() = default;
    explicit F2Mat(int dim) : n_(dim), cols_(dim, 0) {}

    static F2Mat identity(int dim) {
        F2Mat m(dim);
        for (int j = 0; j < dim; ++j) m.cols_[j] = F2Vec(1) << j;
        return m;
    }

    int dim() const { return n_; }
    F2Vec col(int j) const { return cols_[j]; }
    void set_col(int j, F2Vec v) { cols_[j] = v; }

    bool get(int i, int j) const { return (cols_[j] >> i) & 1; }
    void set(int i, int j, bool v) {
        if (v) cols_[j] |= (F2Vec(1) << i);
        else cols_[j] &= ~(F2Vec(1) << i);
    }

    F2Vec apply(F2Vec v) const {
        F2Vec out = 0;
        while (v) {
            int j = __builtin_ctz(v);
            out ^= cols_[j];
            v &= v - 1;
        }
        return out;
    }

    F2Mat operator*(const F2Mat& o) const {
        F2Mat out(n_);
        for (int j = 0; j < n_; ++j) out.cols_[j] = apply(o.cols_[j]);
        return out;
    }

    bool operator==(const F2Mat&) const = default;
    auto operator<=>(const F2Mat&) const = default;

    bool is_identity() const { return *this == identity(n_); }

    F2Mat transpose() const {
        F2Mat out(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) out.set(j, i, get(i, j));
        return out;
    }

    // Gauss-Jordan inverse; throws if singular.
    F2Mat inverse() const;

    bool invertible() const;

    // reduction of an integer matrix mod 2
    static F2Mat from_int(const IMat& m);

private:
    int n_ = 0;
    std::vector<F2Vec> cols_;
};

F2Vec f2_from_int(const IVec& v);
IVec f2_to_int(F2Vec v, int dim);

// Solve B x = rhs over F_2 for invertible B.
F2Vec f2_solve(const F2Mat& B, F2Vec rhs);

// Symmetric bilinear space over F_2 (not necessarily alternating).
// The characteristic vector is the unique w with b(w,v) = b(v,v) for all v;
// it exists because v -> b(v,v) is linear in characteristic 2.
struct F2BilinearSpace {
    int dim = 0;
    F2Mat b;

    bool is_nondegenerate() const { return b.invertible(); }
    bool bform(F2Vec x, F2Vec y) const { return __builtin_popcount(x & b.apply(y)) & 1; }
    F2Vec characteristic_vector() const;
};

// Quadratic form over F_2 given by an upper-triangular coefficient matrix:
// q(x) = sum_{i<=j} Q_ij x_i x_j. The polar form b(x,y) = q(x+y)+q(x)+q(y)
// is alternating.
struct F2QuadraticSpace {
    int dim = 0;
    F2Mat coeff;   // upper triangular

    bool q(F2Vec v) const;
    bool bform(F2Vec x, F2Vec y) const { return q(x ^ y) ^ q(x) ^ q(y); }
    F2BilinearSpace polar() const;
};

} // namespace latmon
