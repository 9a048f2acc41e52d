#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latmon/suites.hpp"

#include <fstream>

using namespace latmon;

namespace {

nlohmann::json load_schema() {
#ifdef LATMON_SCHEMA_PATH
    std::ifstream in(LATMON_SCHEMA_PATH);
#else
    std::ifstream in("report.schema.json");
#endif
    REQUIRE(bool(in));
    nlohmann::json j;
    in >> j;
    return j;
}

} // namespace

TEST_CASE("suite reports validate against the shipped schema") {
    nlohmann::json schema = load_schema();
    std::string err;

    for (const SuiteReport& rep : {suite_structural(), suite_index(), suite_lemma_2_3(),
                                   suite_prop_2_1(3, 5), suite_lemma_3_1(3, 3)}) {
        nlohmann::json j = rep.to_json();
        CHECK_MESSAGE(validate_report_json(j, schema, &err), err);
    }

    // a broken report is rejected
    nlohmann::json bad = suite_structural().to_json();
    bad.erase("pass");
    CHECK_FALSE(validate_report_json(bad, schema, &err));
    nlohmann::json bad2 = suite_structural().to_json();
    bad2["trials"] = "many";
    CHECK_FALSE(validate_report_json(bad2, schema, &err));
}

TEST_CASE("reports are reproducible for a fixed seed") {
    SuiteReport a = suite_prop_2_1(11, 10);
    SuiteReport b = suite_prop_2_1(11, 10);
    nlohmann::json ja = a.to_json(), jb = b.to_json();
    ja.erase("elapsed_ms");
    jb.erase("elapsed_ms");
    CHECK(ja == jb);

    SuiteReport c = suite_main_theorem(5, 4);
    SuiteReport d = suite_main_theorem(5, 4);
    nlohmann::json jc = c.to_json(), jd = d.to_json();
    jc.erase("elapsed_ms");
    jd.erase("elapsed_ms");
    CHECK(jc == jd);
}

TEST_CASE("pass flag tracks the failure list") {
    SuiteReport rep;
    rep.suite = "synthetic";
    CHECK(rep.pass());
    rep.fail(0, 1, "boom");
    CHECK_FALSE(rep.pass());
    nlohmann::json j = rep.to_json();
    CHECK(j["pass"] == false);
    CHECK(j["failures"][0]["description"] == "boom");
}
