#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"
#include "minfact/verify.hpp"

using namespace minfact;

TEST_CASE("the battery passes at small bounds") {
    BatteryOptions opt;
    opt.max_n = 4;
    opt.threads = 2;
    auto reports = run_all(opt);
    CHECK(!reports.empty());
    for (const auto& r : reports) {
        CHECK(r.pass);
        CHECK(r.witness.empty());
        CHECK(r.count >= 0);
    }
}

TEST_CASE("reports are well-formed json lines") {
    BatteryOptions opt;
    opt.max_n = 3;
    auto reports = run_checks({"product_formula", "hook"}, opt);
    for (const auto& r : reports) {
        auto j = nlohmann::json::parse(report_json(r));
        CHECK(j.at("check").is_string());
        CHECK(j.at("status") == "pass");
        CHECK(!j.contains("millis"));  // byte-stable by default
        auto jt = nlohmann::json::parse(report_json(r, true));
        CHECK(jt.contains("millis"));
    }
}

TEST_CASE("parallelism changes timing only") {
    BatteryOptions serial{.max_n = 4, .threads = 1};
    BatteryOptions wide{.max_n = 4, .threads = 8};
    auto a = run_checks({"product_formula", "counting", "final_chains"}, serial);
    auto b = run_checks({"product_formula", "counting", "final_chains"}, wide);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(report_json(a[i]) == report_json(b[i]));
}

TEST_CASE("check selection and unknown names") {
    BatteryOptions opt;
    opt.max_n = 3;
    auto reports = run_checks({"recursion"}, opt);
    CHECK(reports.size() == 1);  // n = 2 only at this bound
    CHECK(reports[0].check == "recursion");
    CHECK_THROWS_AS(run_checks({"nonsense"}, opt), std::invalid_argument);
}

TEST_CASE("the family list is stable") {
    auto names = check_names();
    CHECK(names.size() == 11);
    CHECK(names.front() == "product_formula");
}
