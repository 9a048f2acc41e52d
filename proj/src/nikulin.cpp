#include "latmon/nikulin.hpp"

#include "latmon/f2ortho.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace latmon {

namespace {

constexpr int E8_OFF_NIK = 6;    // E8(-1) block offset in lambda_nik
constexpr int G1 = 14, G2 = 15;  // <-2> generators in lambda_nik

IVec unit(int n, int i) {
    IVec v(n, Int(0));
    v[i] = 1;
    return v;
}

} // namespace

NikulinConstants::NikulinConstants()
    : lambda_nik(direct_sum({twist(Lattice::hyperbolic(), 2), twist(Lattice::hyperbolic(), 2),
                             twist(Lattice::hyperbolic(), 2), twist(Lattice::e8(), -1),
                             Lattice::rank_one(-2), Lattice::rank_one(-2)})),
      lambda_k3(direct_sum({Lattice::hyperbolic(), Lattice::hyperbolic(), Lattice::hyperbolic(),
                            twist(Lattice::e8(), -1), twist(Lattice::e8(), -1),
                            Lattice::rank_one(-2)})),
      lambda_fix(direct_sum({Lattice::hyperbolic(), Lattice::hyperbolic(), Lattice::hyperbolic(),
                             twist(Lattice::e8(), -2), Lattice::rank_one(-2)})),
      lambda_1(direct_sum({Lattice::hyperbolic(), Lattice::hyperbolic(), Lattice::hyperbolic(),
                           twist(Lattice::e8(), -2), Lattice::rank_one(-1), Lattice::rank_one(-1)})),
      delta_X(unit(23, 22)),
      delta_Y(16, Int(0)),
      sigma_Y(16, Int(0)),
      delta_1(16, Int(0)),
      sigma_1(16, Int(0)),
      sigma(Isometry::identity(lambda_k3)),
      j_fix(23, 15),
      j_nik(16, 15),
      k3_perp(23, 8),
      glue_k3{IMat(), IMat(), lambda_k3, lambda_k3,
              FiniteQuadraticModule(Lattice::hyperbolic()), FiniteQuadraticModule(Lattice::hyperbolic()),
              {}, {}, Int(0)},
      phi_matrix(16, 16),
      sigma_perp_basis(),
      even_div_basis() {
    delta_Y[G1] = 1; delta_Y[G2] = 1;
    sigma_Y[G1] = 1; sigma_Y[G2] = -1;
    delta_1[14] = 1; delta_1[15] = 1;
    sigma_1[14] = 1; sigma_1[15] = -1;

    // sigma swaps the two E8(-1) blocks of lambda_k3
    IMat s(23, 23);
    for (int i = 0; i < 6; ++i) s(i, i) = 1;
    s(22, 22) = 1;
    for (int i = 0; i < 8; ++i) {
        s(6 + i, 14 + i) = 1;
        s(14 + i, 6 + i) = 1;
    }
    sigma = Isometry(lambda_k3, std::move(s));

    // j_fix: u + e + k d_X  ->  u + e + e + k d_X
    for (int i = 0; i < 6; ++i) j_fix(i, i) = 1;
    for (int i = 0; i < 8; ++i) {
        j_fix(6 + i, 6 + i) = 1;
        j_fix(14 + i, 6 + i) = 1;
    }
    j_fix(22, 14) = 1;

    // j_nik: u + e + k d_X  ->  u + 2e + k g1 + k g2
    for (int i = 0; i < 6; ++i) j_nik(i, i) = 1;
    for (int i = 0; i < 8; ++i) j_nik(6 + i, 6 + i) = 2;
    j_nik(14, 14) = 1;
    j_nik(15, 14) = 1;

    // fixed identification of (j_fix image)^perp with E8(-2)
    for (int i = 0; i < 8; ++i) {
        k3_perp(6 + i, i) = 1;
        k3_perp(14 + i, i) = -1;
    }

    glue_k3 = glue_group(lambda_k3, j_fix, k3_perp);

    for (int i = 0; i < 16; ++i) phi_matrix(i, i) = (i >= 6 && i < 14) ? 2 : 1;

    IMat sig_col(16, 1);
    sig_col.set_col(0, sigma_Y);
    sigma_perp_basis = orthogonal_complement(lambda_nik, sig_col);
    even_div_basis = even_divisibility_sublattice(*this);
}

const NikulinConstants& NikulinConstants::get() {
    static const NikulinConstants pc;
    return pc;
}

IVec phi_map(const NikulinConstants& pc, const IVec& v) {
    if (int(v.size()) != 16) throw std::invalid_argument("phi_map expects a lambda_1 vector");
    return pc.phi_matrix * v;
}

Isometry transfer(const NikulinConstants& pc, const Isometry& f) {
    if (!(f.lattice() == pc.lambda_nik))
        throw std::invalid_argument("transfer expects an isometry of lambda_nik");
    QMat D = to_rat(pc.phi_matrix);
    QMat g = inverse(D) * to_rat(f.matrix()) * D;
    auto m = to_int(g);
    if (!m)
        throw std::logic_error("transfer produced a non-integral matrix; "
                               "the image of phi should be preserved by every isometry");
    return Isometry(pc.lambda_1, *m);
}

Isometry transfer_back(const NikulinConstants& pc, const Isometry& g) {
    if (!(g.lattice() == pc.lambda_1))
        throw std::invalid_argument("transfer_back expects an isometry of lambda_1");
    QMat D = to_rat(pc.phi_matrix);
    QMat f = D * to_rat(g.matrix()) * inverse(D);
    auto m = to_int(f);
    if (!m)
        throw std::logic_error("transfer_back produced a non-integral matrix");
    return Isometry(pc.lambda_nik, *m);
}

namespace {

// Restriction of f through an embedding with basis columns B: solves
// f B = B X exactly; X integral because f preserves the image.
IMat restrict_through(const IMat& B, const IMat& fmat, const char* what) {
    QMat X = solve_full_col_rank(to_rat(B), to_rat(fmat * B));
    auto xi = to_int(X);
    if (!xi) throw std::logic_error(std::string("restriction through ") + what + " is not integral");
    return *xi;
}

} // namespace

Extension equivariant_extension(const NikulinConstants& pc, const Isometry& phi_fix) {
    if (!(phi_fix.lattice() == pc.lambda_fix))
        throw std::invalid_argument("equivariant_extension expects an isometry of lambda_fix");
    const GlueData& gd = pc.glue_k3;
    Isometry phi_T(gd.T_lat, phi_fix.matrix());

    PsiSolver solver = [](const GlueData& g, const Isometry& phi) -> std::optional<Isometry> {
        // required action on A_Tperp: psibar = gamma^{-1} . phibar . gamma
        DiscriminantIsometry phibar = induced_discriminant_action(phi, g.A_T);
        std::map<GlueData::Elem, GlueData::Elem> gamma_inv;
        for (const auto& [mP, mT] : g.gamma) gamma_inv[mT] = mP;

        const int k = g.A_perp.ngens();
        IMat target(k, k);
        for (int j = 0; j < k; ++j) {
            GlueData::Elem gcol = g.A_perp.zero();
            gcol[j] = 1;
            auto it = g.gamma.find(gcol);
            if (it == g.gamma.end()) return std::nullopt;
            auto mapped = phibar.apply(it->second);
            auto back = gamma_inv.find(mapped);
            if (back == gamma_inv.end()) return std::nullopt;   // phibar leaves Mbar
            for (int i = 0; i < k; ++i) target(i, j) = back->second[size_t(i)];
        }
        DiscriminantIsometry psibar(g.A_perp, std::move(target));
        Isometry lift = lift_discriminant_isometry(psibar);
        return Isometry(g.Tperp_lat, lift.matrix());
    };

    auto ext = nikulin_extends(pc.lambda_k3, gd, phi_T, solver);
    if (!ext)
        throw std::logic_error("equivariant extension failed; "
                               "surjectivity of the restriction map is a theorem");

    // sigma-equivariance, exact on the full matrix
    if (!(pc.sigma.matrix() * ext->Phi.matrix() == ext->Phi.matrix() * pc.sigma.matrix()))
        throw std::logic_error("extension does not commute with sigma");
    return *ext;
}

Isometry induce_from_k3(const NikulinConstants& pc, const Isometry& f) {
    if (!(f.lattice() == pc.lambda_k3))
        throw std::invalid_argument("induce_from_k3 expects an isometry of lambda_k3");
    if (!(pc.sigma.matrix() * f.matrix() == f.matrix() * pc.sigma.matrix()))
        throw std::invalid_argument("induce_from_k3 requires a sigma-equivariant isometry");

    IMat phi_fix = restrict_through(pc.j_fix, f.matrix(), "j_fix");

    IMat B(16, 16);
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 15; ++j) B(i, j) = pc.j_nik(i, j);
    B.set_col(15, pc.sigma_Y);

    QMat bd = to_rat(IMat::block_diag({phi_fix, IMat::identity(1)}));
    QMat full = to_rat(B) * bd * inverse(to_rat(B));
    auto m = to_int(full);
    if (!m)
        throw std::logic_error("induced operator is not integral on lambda_nik");
    Isometry fhat(pc.lambda_nik, *m);

    if (!(fhat.apply(pc.sigma_Y) == pc.sigma_Y))
        throw std::logic_error("induced operator moves Sigma_Y");
    if (!(fhat.matrix() * pc.j_nik == pc.j_nik * phi_fix))
        throw std::logic_error("induced operator does not restrict to f on the fixed lattice");
    return fhat;
}

MonodromyGenerator monodromy_reflection(const NikulinConstants& pc, const IVec& v) {
    if (int(v.size()) != 16)
        throw std::invalid_argument("monodromy_reflection expects a lambda_nik vector");
    if (content(v) != 1)
        throw std::invalid_argument("monodromy_reflection: vector is not primitive");
    Int sq = inner(pc.lambda_nik, v, v);
    if (sq != -2 && sq != -4)
        throw std::invalid_argument("monodromy_reflection: square must be -2 or -4, got " + sq.str());
    Int dv = divisibility(pc.lambda_nik, v);
    if (dv != 2)
        throw std::invalid_argument("monodromy_reflection: divisibility must be 2, got " + dv.str());
    Isometry r = reflection(pc.lambda_nik, v);
    return MonodromyGenerator{MonodromyGenerator::Kind::Reflection, std::nullopt, v, std::move(r)};
}

MonodromyGenerator monodromy_induced(const NikulinConstants& pc, const Isometry& f) {
    if (spinor_norm(f) != 1)
        throw std::invalid_argument("monodromy_induced requires an orientation-preserving source");
    Isometry realized = induce_from_k3(pc, f);
    return MonodromyGenerator{MonodromyGenerator::Kind::InducedFromK3, f, std::nullopt,
                              std::move(realized)};
}

OrbitInvariants orbit_invariants(const NikulinConstants& pc, const IVec& v) {
    if (int(v.size()) != 16 || vec_is_zero(v))
        throw std::invalid_argument("orbit_invariants expects a nonzero lambda_nik vector");

    OrbitInvariants inv{inner(pc.lambda_nik, v, v), divisibility(pc.lambda_nik, v), false, false};

    // preimage of the ray of v in lambda_1: v itself if the E8 block is even,
    // otherwise 2v, then reduced to the primitive generator
    bool e8_even = true;
    for (int i = E8_OFF_NIK; i < E8_OFF_NIK + 8; ++i)
        if (v[i] % 2 != 0) { e8_even = false; break; }
    IVec w(16);
    for (int i = 0; i < 16; ++i) {
        if (i >= E8_OFF_NIK && i < E8_OFF_NIK + 8)
            w[i] = e8_even ? v[i] / 2 : v[i];
        else
            w[i] = e8_even ? v[i] : 2 * v[i];
    }
    IVec what = primitive_part(w);
    inv.lambda1_ray_div1 = (divisibility(pc.lambda_1, what) == 1);

    inv.e8_mod4_zero = true;
    for (int i = E8_OFF_NIK; i < E8_OFF_NIK + 8; ++i)
        if (v[i] % 4 != 0) { inv.e8_mod4_zero = false; break; }
    return inv;
}

IMat even_divisibility_sublattice(const NikulinConstants& pc) {
    const IMat& K = pc.sigma_perp_basis;

    // pairings of Sigma_Y^perp vectors with the ambient basis, mod 2
    IMat GK = pc.lambda_nik.gram() * K;   // 16 x 15
    // kernel over F2: x with GK x = 0 mod 2
    const int rows = GK.rows(), cols = GK.cols();
    std::vector<std::uint32_t> rr(rows, 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            Int t = GK(i, j) % 2;
            if (t < 0) t += 2;
            if (t != 0) rr[i] |= (std::uint32_t(1) << j);
        }
    // Gaussian elimination on the rows to find the F2 kernel
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if ((rr[i] >> c) & 1) { p = i; break; }
        if (p < 0) continue;
        std::swap(rr[r], rr[p]);
        for (int i = 0; i < rows; ++i)
            if (i != r && ((rr[i] >> c) & 1)) rr[i] ^= rr[r];
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;

    std::vector<IVec> lifts;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        IVec x(cols, Int(0));
        x[c] = 1;
        for (int i = 0; i < r; ++i) {
            if ((rr[i] >> c) & 1) x[pivot_col[size_t(i)]] = 1;
        }
        lifts.push_back(x);
    }

    // sublattice {x : GK x = 0 mod 2} = span(lifts) + 2 Z^15
    IMat gen(cols, int(lifts.size()) + cols);
    for (size_t j = 0; j < lifts.size(); ++j)
        for (int i = 0; i < cols; ++i) gen(i, int(j)) = lifts[j][size_t(i)];
    for (int i = 0; i < cols; ++i) gen(i, int(lifts.size()) + i) = 2;
    IMat basis_in_K = column_span_basis(gen);

    IMat out = K * basis_in_K;
    if (!same_lattice(out, pc.j_nik))
        throw std::logic_error("even-divisibility sublattice differs from the j_nik image");
    return out;
}

Reconstruction reconstruct(const NikulinConstants& pc, const Isometry& f) {
    if (!(f.lattice() == pc.lambda_nik))
        throw std::invalid_argument("reconstruct expects an isometry of lambda_nik");
    if (!(f.apply(pc.sigma_Y) == pc.sigma_Y))
        throw std::invalid_argument("reconstruct requires f(Sigma_Y) = Sigma_Y");

    // (i) read off the action on lambda_fix through the even-divisibility sublattice
    IMat phi_fix_m = restrict_through(pc.j_nik, f.matrix(), "j_nik");
    Isometry phi_fix(pc.lambda_fix, phi_fix_m);

    // (ii) sigma-equivariant extension to lambda_k3
    Extension ext = equivariant_extension(pc, phi_fix);

    // (iii) the sign: eps F lies in O^+, i.e. in Mon of the fourfold
    int eps = spinor_norm(ext.Phi);
    Isometry F_mon = eps == 1 ? ext.Phi : ext.Phi.negate();

    // (iv) induce back and, for eps = -1, append R_{Sigma_Y}
    Reconstruction out{eps, {}, Isometry::identity(pc.lambda_nik)};
    Isometry fhat = induce_from_k3(pc, F_mon);
    if (!fhat.is_identity()) {
        out.word.push_back(MonodromyGenerator{MonodromyGenerator::Kind::InducedFromK3, F_mon,
                                              std::nullopt, fhat});
        out.realized = fhat;
    }
    if (eps == -1) {
        MonodromyGenerator rs = monodromy_reflection(pc, pc.sigma_Y);
        out.realized = out.realized.compose(rs.realized);
        out.word.push_back(std::move(rs));
    }

    IMat expected = eps == 1 ? f.matrix() : -f.matrix();
    if (!(out.realized.matrix() == expected))
        throw std::logic_error("reconstruction certificate does not reproduce eps * f");
    return out;
}

namespace {

std::vector<IVec> orthogonal_reflection_vectors(const NikulinConstants& pc) {
    // monodromy reflection vectors orthogonal to Sigma_Y
    std::vector<IVec> out;
    out.push_back(pc.delta_Y);
    for (int blk = 0; blk < 3; ++blk) {
        IVec v(16, Int(0));
        v[2 * blk] = 1;
        v[2 * blk + 1] = -1;   // e - f in a U(2) block: square -4, divisibility 2
        out.push_back(v);
    }
    return out;
}

// sigma-equivariant generator pool on lambda_k3: reflections in sigma-fixed
// vectors j_fix(v) and in sigma-negated vectors of the E8(-2) complement
std::vector<Isometry> equivariant_k3_pool(const NikulinConstants& pc, std::uint64_t seed) {
    std::vector<Isometry> pool;
    std::mt19937_64 rng(seed);
    int found = 0;
    while (found < 10) {
        IVec v(15);
        bool all_zero = true;
        for (int i = 0; i < 15; ++i) {
            v[i] = Int(int(rng() % 5)) - 2;
            if (v[i] != 0) all_zero = false;
        }
        if (all_zero) continue;
        if (inner(pc.lambda_fix, v, v) == 0) continue;
        if (!reflection_is_integral(pc.lambda_fix, v)) continue;
        IVec w = pc.j_fix * v;
        if (!reflection_is_integral(pc.lambda_k3, w)) continue;
        pool.push_back(reflection(pc.lambda_k3, w));
        ++found;
    }
    // sigma itself: id on T, -id on T_perp, commutes with everything here
    pool.push_back(pc.sigma);
    return pool;
}

Isometry random_equivariant_oplus(const NikulinConstants& pc, std::uint64_t seed, int length) {
    auto pool = equivariant_k3_pool(pc, seed ^ 0x9e3779b97f4a7c15ULL);
    Isometry f = random_word(pc.lambda_k3, pool, length, seed);
    if (spinor_norm(f) == -1) {
        // fix the sign with a positive-square sigma-fixed reflection
        IVec u(15, Int(0));
        u[0] = 1;
        u[1] = 1;   // e+f in the first U of lambda_fix, square +2
        f = f.compose(reflection(pc.lambda_k3, pc.j_fix * u));
    }
    return f;
}

} // namespace

Isometry sample_sigma_fixing_isometry(const NikulinConstants& pc, std::uint64_t seed, int length) {
    std::mt19937_64 rng(seed);
    auto orth = orthogonal_reflection_vectors(pc);
    Isometry f = Isometry::identity(pc.lambda_nik);
    for (int i = 0; i < length; ++i) {
        std::uint64_t pick = rng() % 10;
        if (pick < 6) {
            const IVec& v = orth[size_t(rng() % orth.size())];
            f = f.compose(reflection(pc.lambda_nik, v));
        } else if (pick < 9) {
            Isometry src = random_equivariant_oplus(pc, rng(), 1 + int(rng() % 4));
            f = f.compose(induce_from_k3(pc, src));
        } else {
            // global sign flip: -R_{Sigma_Y} fixes Sigma_Y
            f = f.compose(reflection(pc.lambda_nik, pc.sigma_Y).negate());
        }
    }
    if (!(f.apply(pc.sigma_Y) == pc.sigma_Y))
        throw std::logic_error("sampler produced an isometry moving Sigma_Y");
    return f;
}

std::vector<Isometry> reflection_pool(const Lattice& L, std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::vector<Isometry> pool;
    std::set<IVec> used;
    int guard = 0;
    while (int(pool.size()) < count && guard < 200000) {
        ++guard;
        IVec v(size_t(L.rank()));
        bool all_zero = true;
        for (int i = 0; i < L.rank(); ++i) {
            v[size_t(i)] = Int(int(rng() % 5)) - 2;
            if (v[size_t(i)] != 0) all_zero = false;
        }
        if (all_zero) continue;
        if (inner(L, v, v) == 0) continue;
        if (!reflection_is_integral(L, v)) continue;
        if (!used.insert(v).second) continue;
        pool.push_back(reflection(L, v));
    }
    if (int(pool.size()) < count)
        throw std::logic_error("reflection pool sampling starved on " + L.label());
    return pool;
}

std::vector<MonodromyGenerator> monodromy_generator_pool(const NikulinConstants& pc,
                                                         std::uint64_t seed) {
    std::vector<MonodromyGenerator> pool;
    // (-2) and (-4) classes of divisibility 2
    std::vector<IVec> vecs;
    IVec g1v(16, Int(0)); g1v[G1] = 1;
    IVec g2v(16, Int(0)); g2v[G2] = 1;
    vecs.push_back(g1v);
    vecs.push_back(g2v);
    vecs.push_back(pc.sigma_Y);
    vecs.push_back(pc.delta_Y);
    for (int blk = 0; blk < 3; ++blk) {
        IVec v(16, Int(0));
        v[2 * blk] = 1;
        v[2 * blk + 1] = -1;
        vecs.push_back(v);
        IVec w(16, Int(0));   // e + g1: square -2, divisibility 2
        w[2 * blk] = 1;
        w[G1] = 1;
        vecs.push_back(w);
    }
    for (const auto& v : vecs) pool.push_back(monodromy_reflection(pc, v));
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 3; ++i) {
        Isometry src = random_equivariant_oplus(pc, rng(), 2 + int(rng() % 3));
        pool.push_back(monodromy_induced(pc, src));
    }
    return pool;
}

std::optional<std::vector<MonodromyGenerator>>
experimental_orbit_reduce(const NikulinConstants& pc, const IVec& v, std::uint64_t seed,
                          int max_steps) {
    auto pool = monodromy_generator_pool(pc, seed);
    std::mt19937_64 rng(seed ^ 0xda3e39cb94b95bdbULL);

    auto potential = [&](const IVec& x) {
        Int p(0);
        IVec d = vec_sub(x, pc.sigma_Y);
        for (const auto& c : d) p += c * c;
        return p;
    };

    IVec cur = v;
    std::vector<MonodromyGenerator> applied;
    for (int step = 0; step < max_steps; ++step) {
        if (cur == pc.sigma_Y) {
            // word applied left-to-right as a product: reverse application order
            std::reverse(applied.begin(), applied.end());
            return applied;
        }
        Int base = potential(cur);
        int best = -1;
        Int best_pot = base;
        for (size_t gi = 0; gi < pool.size(); ++gi) {
            IVec nxt = pool[gi].realized.apply(cur);
            Int p = potential(nxt);
            if (p < best_pot) { best_pot = p; best = int(gi); }
        }
        if (best < 0) best = int(rng() % pool.size());   // random kick
        cur = pool[size_t(best)].realized.apply(cur);
        applied.push_back(pool[size_t(best)]);
    }
    if (cur == pc.sigma_Y) {
        std::reverse(applied.begin(), applied.end());
        return applied;
    }
    return std::nullopt;
}

} // namespace latmon
