#include "latmon/f2ortho.hpp"
#include "latmon/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <regex>

using namespace latmon;
using nlohmann::json;

namespace {

Lattice lattice_from_symbol(const std::string& sym) {
    static const std::regex twisted(R"(^(U|E8)\((-?\d+)\)$)");
    static const std::regex rank_one(R"(^<(-?\d+)>$)");
    std::smatch m;
    if (sym == "U") return Lattice::hyperbolic();
    if (sym == "E8") return Lattice::e8();
    if (std::regex_match(sym, m, twisted)) {
        Lattice base = m[1] == "U" ? Lattice::hyperbolic() : Lattice::e8();
        return twist(base, Int(m[2].str()));
    }
    if (std::regex_match(sym, m, rank_one)) return Lattice::rank_one(Int(m[1].str()));
    throw std::invalid_argument("unknown lattice symbol: " + sym);
}

Lattice lattice_from_json(const json& j) {
    if (j.contains("sum")) {
        std::vector<Lattice> parts;
        for (const auto& s : j["sum"]) parts.push_back(lattice_from_symbol(s.get<std::string>()));
        return direct_sum(parts);
    }
    if (!j.contains("gram")) throw std::invalid_argument("lattice JSON needs 'gram' or 'sum'");
    const auto& g = j["gram"];
    int n = int(g.size());
    IMat gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) gram(i, k) = Int(g[size_t(i)][size_t(k)].get<long long>());
    return Lattice(gram, j.value("label", std::string("custom")));
}

Lattice resolve_lattice(const std::string& name) {
    const auto& pc = NikulinConstants::get();
    static const std::map<std::string, int> builtin = {
        {"lambda-nik", 0}, {"lambda-k3", 1}, {"lambda-fix", 2}, {"lambda-1", 3},
        {"u", 4}, {"u2", 5}, {"e8", 6}, {"e8m1", 7}, {"e8m2", 8}};
    auto it = builtin.find(name);
    if (it != builtin.end()) {
        switch (it->second) {
            case 0: return pc.lambda_nik;
            case 1: return pc.lambda_k3;
            case 2: return pc.lambda_fix;
            case 3: return pc.lambda_1;
            case 4: return Lattice::hyperbolic();
            case 5: return twist(Lattice::hyperbolic(), 2);
            case 6: return Lattice::e8();
            case 7: return twist(Lattice::e8(), -1);
            case 8: return twist(Lattice::e8(), -2);
        }
    }
    std::ifstream in(name);
    if (!in) throw std::invalid_argument("not a builtin lattice and not a readable file: " + name);
    json j;
    in >> j;
    return lattice_from_json(j);
}

IMat matrix_from_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read matrix file: " + path);
    json j;
    in >> j;
    const json& rows = j.contains("matrix") ? j["matrix"] : j;
    if (int(rows.size()) != n) throw std::invalid_argument("matrix has wrong number of rows");
    IMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) m(i, k) = Int(rows[size_t(i)][size_t(k)].get<long long>());
    return m;
}

void emit(const json& j, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_file);
        out << j.dump(2) << "\n";
    }
}

json fqm_summary(const FiniteQuadraticModule& A) {
    json j;
    std::string group;
    const auto& f = A.invariant_factors();
    for (size_t i = 0; i < f.size(); ++i) {
        size_t run = 1;
        while (i + run < f.size() && f[i + run] == f[i]) ++run;
        if (!group.empty()) group += " x ";
        group += "(Z/" + f[i].str() + ")";
        if (run > 1) group += "^" + std::to_string(run);
        i += run - 1;
    }
    if (group.empty()) group = "trivial";
    j["group"] = group;
    j["order"] = A.order().str();
    json qvals = json::array();
    for (int i = 0; i < A.ngens(); ++i) {
        auto g = A.zero();
        g[size_t(i)] = 1;
        qvals.push_back(to_string(A.q(g)));
    }
    j["q_on_generators"] = qvals;
    return j;
}

// audit dump: factorizations of seeded random group elements into the
// labeled root-transvection generators
void emit_words(const std::string& path, std::uint64_t seed, int trials) {
    const BSGSGroup& G = e8_orthogonal_group_f2();
    const auto& gens = G.generators();
    std::mt19937_64 rng(seed);
    json out = json::array();
    for (int t = 0; t < trials; ++t) {
        F2Mat target = F2Mat::identity(8);
        int len = 3 + int(rng() % 18);
        for (int i = 0; i < len; ++i) target = target * gens[size_t(rng() % gens.size())];
        auto word = G.factor(target);
        out.push_back({{"trial", t}, {"word", word}});
    }
    std::ofstream f(path);
    f << out.dump(2) << "\n";
}

int run_suite(const std::string& name, std::uint64_t seed, int trials, bool have_trials,
              const std::string& out_file) {
    auto pick = [&](int dflt) { return have_trials ? trials : dflt; };
    SuiteReport rep;
    if (name == "structural") rep = suite_structural();
    else if (name == "embeddings") rep = suite_embeddings();
    else if (name == "index") rep = suite_index();
    else if (name == "lemma-2-3") rep = suite_lemma_2_3();
    else if (name == "prop-2-1") rep = suite_prop_2_1(seed, pick(500));
    else if (name == "prop-2-2") rep = suite_prop_2_2(seed, pick(50));
    else if (name == "prop-2-5-surjectivity") rep = suite_prop_2_5_surjectivity(seed, pick(100));
    else if (name == "characteristic-vector") rep = suite_characteristic_vector(seed, pick(1000));
    else if (name == "lemma-3-1") rep = suite_lemma_3_1(seed, pick(200));
    else if (name == "main-theorem") rep = suite_main_theorem(seed, pick(100));
    else if (name == "spinor-norm") rep = suite_spinor_norm(seed, pick(200));
    else {
        std::cerr << "unknown suite: " << name << "\n";
        return 2;
    }
    emit(rep.to_json(), out_file);
    return rep.pass() ? 0 : 1;
}

const std::vector<std::string> kSuites = {
    "embeddings", "lemma-2-3", "prop-2-1", "prop-2-2", "prop-2-5-surjectivity",
    "characteristic-vector", "lemma-3-1", "index", "main-theorem",
    "structural", "spinor-norm"};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic lattice toolkit for the Nikulin-orbifold monodromy constructions"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    int trials = 0;
    bool json_out = false;
    std::string out_file;
    app.add_option("--seed", seed, "PRNG seed for randomized suites");
    auto* trials_opt = app.add_option("--trials", trials, "trial count for randomized suites");
    app.add_flag("--json", json_out, "JSON output for query subcommands");
    app.add_option("--out", out_file, "write the report to a file instead of stdout");

    std::string lattice_name, matrix_file, vector_file, suite_name;

    auto* info = app.add_subcommand("info", "rank, determinant, discriminant group, parity");
    info->add_option("lattice", lattice_name)->required();

    auto* discr = app.add_subcommand("discriminant", "discriminant quadratic module");
    discr->add_option("lattice", lattice_name)->required();

    auto* spin = app.add_subcommand("spinor", "real spinor norm of an isometry");
    spin->add_option("--lattice", lattice_name)->required();
    spin->add_option("--matrix", matrix_file)->required();

    auto* inv = app.add_subcommand("invariants", "orbit invariants of a lambda_nik vector");
    inv->add_option("--vector", vector_file)->required();

    std::string emit_words_file;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite_name, "one of: all, " + [] {
                           std::string s;
                           for (const auto& n : kSuites) s += (s.empty() ? "" : ", ") + n;
                           return s;
                       }())->required();
    verify->add_option("--emit-words", emit_words_file,
                       "with prop-2-5-surjectivity: dump factorization words for audit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (info->parsed()) {
            Lattice L = resolve_lattice(lattice_name);
            json j;
            j["label"] = L.label();
            j["rank"] = L.rank();
            j["det"] = L.det().str();
            j["even"] = L.is_even();
            if (L.is_even()) j["discriminant_group"] = fqm_summary(FiniteQuadraticModule(L));
            if (json_out || !out_file.empty()) {
                emit(j, out_file);
            } else {
                std::cout << j["label"].get<std::string>() << ": rank " << L.rank() << ", det "
                          << L.det().str() << ", " << (L.is_even() ? "even" : "odd");
                if (L.is_even())
                    std::cout << ", A = " << j["discriminant_group"]["group"].get<std::string>();
                std::cout << "\n";
            }
            return 0;
        }
        if (discr->parsed()) {
            Lattice L = resolve_lattice(lattice_name);
            emit(fqm_summary(FiniteQuadraticModule(L)), out_file);
            return 0;
        }
        if (spin->parsed()) {
            Lattice L = resolve_lattice(lattice_name);
            IMat m = matrix_from_file(matrix_file, L.rank());
            int s = spinor_norm(Isometry(L, m));
            std::cout << (s > 0 ? "+1" : "-1") << "\n";
            return 0;
        }
        if (inv->parsed()) {
            std::ifstream in(vector_file);
            if (!in) throw std::invalid_argument("cannot read vector file: " + vector_file);
            json j;
            in >> j;
            const json& coords = j.contains("coords") ? j["coords"] : j;
            IVec v;
            for (const auto& c : coords) v.push_back(Int(c.get<long long>()));
            auto oi = orbit_invariants(NikulinConstants::get(), v);
            json out = {{"square", oi.square.str()},
                        {"div", oi.div.str()},
                        {"lambda1_ray_div1", oi.lambda1_ray_div1},
                        {"e8_mod4_zero", oi.e8_mod4_zero}};
            emit(out, out_file);
            return 0;
        }
        if (verify->parsed()) {
            bool have_trials = trials_opt->count() > 0;
            if (!emit_words_file.empty() && suite_name == "prop-2-5-surjectivity")
                emit_words(emit_words_file, seed, have_trials ? trials : 100);
            if (suite_name == "all") {
                int worst = 0;
                for (const auto& n : kSuites) {
                    int rc = run_suite(n, seed, trials, have_trials, "");
                    if (rc == 2) return 2;
                    worst = std::max(worst, rc);
                }
                return worst;
            }
            return run_suite(suite_name, seed, trials, have_trials, out_file);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
