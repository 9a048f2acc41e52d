#pragma once

#include "latmon/numeric.hpp"

#include <initializer_list>
#include <optional>
#include <sstream>
#include <vector>

namespace latmon {

// Dense matrix over an exact scalar (Int or Rat). Column vectors are plain
// std::vector<T>; matrices act on the left.
template <class T>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * size_t(cols)) {}

    Mat(std::initializer_list<std::initializer_list<T>> rows) {
        r_ = int(rows.size());
        c_ = r_ ? int(rows.begin()->size()) : 0;
        a_.reserve(size_t(r_) * size_t(c_));
        for (const auto& row : rows) {
            if (int(row.size()) != c_) throw std::invalid_argument("ragged matrix literal");
            for (const auto& x : row) a_.push_back(x);
        }
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Mat zero(int r, int c) { return Mat(r, c); }

    int rows() const { return r_; }
    int cols() const { return c_; }

    T& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const T& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    bool operator==(const Mat&) const = default;

    Mat operator*(const Mat& o) const {
        if (c_ != o.r_) throw std::invalid_argument("matrix product shape mismatch");
        Mat out(r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const T& aik = (*this)(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < o.c_; ++j)
                    out(i, j) += aik * o(k, j);
            }
        return out;
    }

    Mat operator+(const Mat& o) const {
        Mat out(r_, c_);
        for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
        return out;
    }

    Mat operator-(const Mat& o) const {
        Mat out(r_, c_);
        for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
        return out;
    }

    Mat operator-() const {
        Mat out(r_, c_);
        for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
        return out;
    }

    Mat operator*(const T& s) const {
        Mat out(r_, c_);
        for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * s;
        return out;
    }

    Mat transpose() const {
        Mat out(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    bool is_identity() const {
        if (r_ != c_) return false;
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                if ((*this)(i, j) != (i == j ? T(1) : T(0))) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& x : a_) if (x != 0) return false;
        return true;
    }

    std::vector<T> col(int j) const {
        std::vector<T> v(r_);
        for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void set_col(int j, const std::vector<T>& v) {
        for (int i = 0; i < r_; ++i) (*this)(i, j) = v[i];
    }

    std::vector<T> row(int i) const {
        std::vector<T> v(c_);
        for (int j = 0; j < c_; ++j) v[j] = (*this)(i, j);
        return v;
    }

    // Columns [j0, j0+k) as a new matrix.
    Mat cols_slice(int j0, int k) const {
        Mat out(r_, k);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < k; ++j) out(i, j) = (*this)(i, j0 + j);
        return out;
    }

    static Mat hcat(const Mat& a, const Mat& b) {
        if (a.rows() != b.rows()) throw std::invalid_argument("hcat row mismatch");
        Mat out(a.rows(), a.cols() + b.cols());
        for (int i = 0; i < a.rows(); ++i) {
            for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
            for (int j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
        }
        return out;
    }

    static Mat block_diag(const std::vector<Mat>& blocks) {
        int r = 0, c = 0;
        for (const auto& b : blocks) { r += b.rows(); c += b.cols(); }
        Mat out(r, c);
        int ro = 0, co = 0;
        for (const auto& b : blocks) {
            for (int i = 0; i < b.rows(); ++i)
                for (int j = 0; j < b.cols(); ++j) out(ro + i, co + j) = b(i, j);
            ro += b.rows();
            co += b.cols();
        }
        return out;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < r_; ++i) {
            os << (i ? " [" : "[");
            for (int j = 0; j < c_; ++j) os << (j ? "," : "") << to_string((*this)(i, j));
            os << "]" << (i + 1 < r_ ? "\n" : "");
        }
        os << "]";
        return os.str();
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;
using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

template <class T>
std::vector<T> operator*(const Mat<T>& m, const std::vector<T>& v) {
    if (m.cols() != int(v.size())) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> out(m.rows(), T(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0 && v[j] != 0) out[i] += m(i, j) * v[j];
    return out;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    T s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

template <class T>
std::vector<T> vec_sub(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

template <class T>
std::vector<T> vec_add(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

template <class T>
std::vector<T> vec_scale(const T& s, const std::vector<T>& a) {
    std::vector<T> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
    return out;
}

template <class T>
bool vec_is_zero(const std::vector<T>& a) {
    for (const auto& x : a) if (x != 0) return false;
    return true;
}

inline QMat to_rat(const IMat& m) {
    QMat out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
    return out;
}

inline QVec to_rat(const IVec& v) {
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

// Integer content check; returns the matrix if all entries are integers.
inline std::optional<IMat> to_int(const QMat& m) {
    IMat out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (!is_integer(m(i, j))) return std::nullopt;
            out(i, j) = numerator(m(i, j));
        }
    return out;
}

inline std::optional<IVec> to_int(const QVec& v) {
    IVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (!is_integer(v[i])) return std::nullopt;
        out[i] = numerator(v[i]);
    }
    return out;
}

} // namespace latmon
