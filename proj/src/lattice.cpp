#include "latmon/lattice.hpp"

#include <algorithm>
#include <set>

namespace latmon {

Lattice::Lattice(IMat gram, std::string label)
    : gram_(std::move(gram)), label_(std::move(label)) {
    if (gram_.rows() != gram_.cols() || gram_.rows() == 0)
        throw std::invalid_argument("lattice Gram matrix must be square and nonempty");
    for (int i = 0; i < gram_.rows(); ++i)
        for (int j = i + 1; j < gram_.cols(); ++j)
            if (gram_(i, j) != gram_(j, i))
                throw std::invalid_argument("lattice Gram matrix must be symmetric");
    det_ = determinant(gram_);
    if (det_ == 0)
        throw std::invalid_argument("lattice Gram matrix is degenerate");
    even_ = true;
    for (int i = 0; i < gram_.rows(); ++i)
        if (gram_(i, i) % 2 != 0) { even_ = false; break; }
    blocks_.push_back({label_, 0, gram_.rows()});
}

const Lattice::Block& Lattice::block(const std::string& name) const {
    for (const auto& b : blocks_)
        if (b.name == name) return b;
    throw std::invalid_argument("no block named '" + name + "' in lattice " + label_);
}

IVec Lattice::block_component(const IVec& v, const std::string& name) const {
    const Block& b = block(name);
    return IVec(v.begin() + b.offset, v.begin() + b.offset + b.rank);
}

Lattice Lattice::hyperbolic() {
    return Lattice(IMat{{Int(0), Int(1)}, {Int(1), Int(0)}}, "U");
}

Lattice Lattice::rank_one(const Int& k) {
    IMat g(1, 1);
    g(0, 0) = k;
    return Lattice(g, "<" + k.str() + ">");
}

Lattice Lattice::e8() {
    // Bourbaki numbering: the branch node is alpha_4, with alpha_2 attached;
    // the chain is 1-3-4-5-6-7-8.
    IMat g(8, 8);
    for (int i = 0; i < 8; ++i) g(i, i) = 2;
    auto edge = [&](int a, int b) { g(a - 1, b - 1) = -1; g(b - 1, a - 1) = -1; };
    edge(1, 3);
    edge(2, 4);
    edge(3, 4);
    edge(4, 5);
    edge(5, 6);
    edge(6, 7);
    edge(7, 8);
    return Lattice(std::move(g), "E8");
}

Lattice twist(const Lattice& L, const Int& n) {
    if (n == 0) throw std::invalid_argument("twist by 0 is degenerate");
    if (n == 1) return L;
    IMat g = L.gram() * n;
    std::string base = L.label_;
    std::string label;
    if (base == "U" || base == "E8") {
        label = base + "(" + n.str() + ")";
    } else if (L.rank() == 1) {
        label = "<" + Int(L.gram()(0, 0) * n).str() + ">";
    } else {
        label = "(" + base + ")(" + n.str() + ")";
    }
    Lattice out(std::move(g), label);
    if (L.blocks_.size() > 1) {
        out.blocks_.clear();
        for (const auto& b : L.blocks_) out.blocks_.push_back({b.name + "(" + n.str() + ")", b.offset, b.rank});
    }
    return out;
}

Lattice direct_sum(const std::vector<Lattice>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct sum of an empty list");
    if (parts.size() == 1) return parts[0];
    std::vector<IMat> grams;
    grams.reserve(parts.size());
    std::string label;
    for (const auto& p : parts) {
        grams.push_back(p.gram());
        if (!label.empty()) label += "+";
        label += p.label();
    }
    Lattice out(IMat::block_diag(grams), label);
    out.blocks_.clear();
    int offset = 0;
    int idx = 0;
    for (const auto& p : parts) {
        // disambiguate repeated summands by position
        out.blocks_.push_back({p.label() + "#" + std::to_string(idx), offset, p.rank()});
        offset += p.rank();
        ++idx;
    }
    return out;
}

Int inner(const Lattice& L, const IVec& v, const IVec& w) {
    if (int(v.size()) != L.rank() || int(w.size()) != L.rank())
        throw std::invalid_argument("vector length does not match lattice rank");
    return dot(v, L.gram() * w);
}

Int divisibility(const Lattice& L, const IVec& v) {
    if (int(v.size()) != L.rank())
        throw std::invalid_argument("vector length does not match lattice rank");
    if (vec_is_zero(v)) throw std::invalid_argument("divisibility of the zero vector");
    IVec pairings = L.gram() * v;
    Int g = content(pairings);
    return g;
}

IMat orthogonal_complement(const Lattice& L, const IMat& span) {
    // pairing matrix: rows are (s_i, -) evaluated on the basis
    IMat P = span.transpose() * L.gram();
    return kernel_int(P);
}

IMat saturate(const Lattice& L, const IMat& S) {
    if (S.rows() != L.rank()) throw std::invalid_argument("saturate: wrong ambient rank");
    SmithResult s = smith_normal_form(S);
    if (s.rank != S.cols())
        throw std::invalid_argument("saturate: columns are not linearly independent");
    // span_Q(S) cap Z^n is spanned by the first rank columns of Uinv
    IMat out(S.rows(), s.rank);
    for (int j = 0; j < s.rank; ++j)
        for (int i = 0; i < S.rows(); ++i) out(i, j) = s.Uinv(i, j);
    return out;
}

bool is_primitive(const Lattice& L, const IMat& S) {
    (void)L;
    SmithResult s = smith_normal_form(S);
    if (s.rank != S.cols())
        throw std::invalid_argument("is_primitive: columns are not linearly independent");
    for (int i = 0; i < s.rank; ++i)
        if (s.diag[i] != 1) return false;
    return true;
}

IMat sublattice_gram(const Lattice& L, const IMat& B) {
    return B.transpose() * L.gram() * B;
}

namespace {

std::vector<IVec> compute_e8_roots() {
    const Lattice E8 = Lattice::e8();
    std::set<IVec> seen;
    std::vector<IVec> queue;
    for (int i = 0; i < 8; ++i) {
        IVec a(8, Int(0));
        a[i] = 1;
        seen.insert(a);
        queue.push_back(a);
    }
    // close the simple roots under the simple reflections
    while (!queue.empty()) {
        IVec x = queue.back();
        queue.pop_back();
        IVec gx = E8.gram() * x;
        for (int i = 0; i < 8; ++i) {
            IVec y = x;
            y[i] -= gx[i];   // reflection in alpha_i: x - (x, alpha_i) alpha_i
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    std::vector<IVec> roots(seen.begin(), seen.end());
    if (roots.size() != 240) throw std::logic_error("E8 root enumeration did not find 240 roots");
    return roots;
}

} // namespace

const std::vector<IVec>& e8_roots() {
    static const std::vector<IVec> roots = compute_e8_roots();
    return roots;
}

const std::vector<IVec>& e8_positive_roots() {
    static const std::vector<IVec> pos = [] {
        std::vector<IVec> out;
        for (const auto& r : e8_roots()) {
            bool nonneg = true;
            for (const auto& c : r)
                if (c < 0) { nonneg = false; break; }
            if (nonneg) out.push_back(r);
        }
        std::sort(out.begin(), out.end());
        if (out.size() != 120) throw std::logic_error("expected 120 positive E8 roots");
        return out;
    }();
    return pos;
}

} // namespace latmon
