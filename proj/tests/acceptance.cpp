// Acceptance runner: executes every verification suite at its contractual
// trial count, enforces the wall-clock budget, and prints one line per
// criterion. Exit code 0 iff everything passes.

#include "latmon/suites.hpp"

#include <iostream>

using namespace latmon;

namespace {

int failures_total = 0;

void line(int idx, const char* name, const SuiteReport& rep, std::int64_t budget_ms) {
    bool ok = rep.pass() && rep.elapsed_ms <= budget_ms;
    if (!ok) ++failures_total;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << idx << ": " << name << " ("
              << rep.trials << " checks, " << rep.elapsed_ms << " ms";
    if (rep.elapsed_ms > budget_ms) std::cout << ", over budget " << budget_ms << " ms";
    std::cout << ")\n";
    for (size_t i = 0; i < rep.failures.size() && i < 4; ++i)
        std::cout << "       - " << rep.failures[i].description << "\n";
    if (rep.failures.size() > 4)
        std::cout << "       ... " << rep.failures.size() - 4 << " more\n";
}

void expect_value(const SuiteReport& rep, const char* key, const std::string& want) {
    auto it = rep.values.find(key);
    if (it == rep.values.end() || it->get<std::string>() != want) {
        ++failures_total;
        std::cout << "[FAIL]   expected " << key << " = " << want << "\n";
    }
}

} // namespace

int main() {
    constexpr std::uint64_t kSeed = 7;

    std::cout << "== acceptance: exact lattice verification ==\n";

    {
        SuiteReport rep = suite_structural();
        line(1, "structural constants (determinants, A_{lambda_nik})", rep, 1000);
        expect_value(rep, "det_lambda_nik", "-256");
        expect_value(rep, "det_lambda_k3", "2");
        expect_value(rep, "det_lambda_fix", "512");
    }
    {
        SuiteReport rep = suite_embeddings();
        line(2, "embedding suite (j_fix, j_nik, fixed lattice of sigma)", rep, 1000);
    }
    {
        SuiteReport rep = suite_index();
        line(3, "index [lambda_nik : j_nik(lambda_fix(2)) + Z Sigma_Y] = 512, two ways", rep, 1000);
    }
    {
        SuiteReport rep = suite_lemma_2_3();
        line(4, "E8/2E8 = A_{E8(-2)} on all 256 classes", rep, 1000);
    }
    {
        SuiteReport rep = suite_prop_2_1(kSeed, 500);
        line(5, "twisted-sum transfer: 500 integral transfers, multiplicativity, intertwining",
             rep, 30000);
    }
    {
        SuiteReport rep = suite_prop_2_2(kSeed, 50);
        line(6, "glue group diagonal of order 256 and anti-isometry gamma", rep, 30000);
        // criterion 8 rides on the same suite: 50 seeded equivariant extensions
        line(8, "equivariant extensions: restriction, sigma-commutation, orientation handling",
             rep, 60000);
    }
    {
        SuiteReport rep = suite_characteristic_vector(kSeed, 1000);
        line(6, "characteristic vector of A_{lambda_fix} fixed by 1000 discriminant isometries",
             rep, 30000);
    }
    {
        SuiteReport rep = suite_prop_2_5_surjectivity(kSeed, 100);
        line(7, "BSGS order certificate 348364800 and 100 lifting round trips", rep, 60000);
        expect_value(rep, "bsgs_order", "348364800");
        expect_value(rep, "formula_order", "348364800");
    }
    {
        SuiteReport rep = suite_lemma_3_1(kSeed, 200);
        line(9, "orbit invariants of Sigma_Y constant under 200 G-words; generators in O^+",
             rep, 60000);
    }
    {
        SuiteReport rep = suite_main_theorem(kSeed, 100);
        line(10, "main-theorem round trip: 100 reconstructions equal eps * f exactly", rep, 120000);
    }
    {
        SuiteReport rep = suite_spinor_norm(kSeed, 200);
        line(11, "spinor norms: -sign(v^2) on 200 reflections, multiplicativity, -id = -1",
             rep, 30000);
    }

    if (failures_total == 0) {
        std::cout << "== all acceptance criteria pass ==\n";
        return 0;
    }
    std::cout << "== " << failures_total << " acceptance failure(s) ==\n";
    return 1;
}
