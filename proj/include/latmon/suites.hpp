#pragma once

#include "latmon/nikulin.hpp"
#include "latmon/report.hpp"

namespace latmon {

// Named verification suites backing `latmon verify <suite>` and the
// acceptance runner. All are deterministic in (seed, trials).

SuiteReport suite_structural();
SuiteReport suite_embeddings();
SuiteReport suite_index();
SuiteReport suite_lemma_2_3();
SuiteReport suite_prop_2_1(std::uint64_t seed, int trials);
SuiteReport suite_prop_2_2(std::uint64_t seed, int trials);
SuiteReport suite_prop_2_5_surjectivity(std::uint64_t seed, int trials);
SuiteReport suite_characteristic_vector(std::uint64_t seed, int trials);
SuiteReport suite_lemma_3_1(std::uint64_t seed, int trials);
SuiteReport suite_main_theorem(std::uint64_t seed, int trials);
SuiteReport suite_spinor_norm(std::uint64_t seed, int trials);

} // namespace latmon
