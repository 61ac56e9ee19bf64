#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "config.hpp"
#include "emit.hpp"
#include "suites.hpp"

using namespace sqf;

TEST_CASE("real formatting uses 12 significant digits") {
    CHECK(jreal(7.0 / 9.0) == "0.777777777778");
    CHECK(jreal(0.5) == "0.5");
    CHECK(jreal(1.0) == "1");
    CHECK(jreal(-3.25) == "-3.25");
    CHECK(jint(1296) == "1296");
    CHECK(jint(-12) == "-12");
    CHECK(jbool(true) == "true");
}

TEST_CASE("json strings are escaped") {
    CHECK(jstr("plain") == "\"plain\"");
    CHECK(jstr("a\"b\\c") == "\"a\\\"b\\\\c\"");
    CHECK(jstr("line\nbreak") == "\"line\\nbreak\"");
}

TEST_CASE("object and array building") {
    JsonObject o;
    o.str("name", "x").integer("count", 3).real("value", 0.5);
    CHECK(o.build() == R"({"name":"x","count":3,"value":0.5})");
    CHECK(jarray({"1", "2"}) == "[1,2]");
    CHECK(jarray({}) == "[]");
    CHECK(csv_line({"H", "count"}) == "H,count\n");
}

TEST_CASE("config keys") {
    Config cfg;
    CHECK(cfg.get_int("gauss.q_max") == 150);
    CHECK(cfg.budget() == 1'000'000'000);
    cfg.set("mobius.h_max", "6");
    CHECK(cfg.get_int("mobius.h_max") == 6);
    CHECK(cfg.get_int_list("decomposition.h_list") == std::vector<i64>{5, 8, 13});
    CHECK_THROWS_AS(cfg.set("nonsense.key", "1"), error);
    CHECK_THROWS_AS(cfg.get("nonsense.key"), error);
    try {
        cfg.load_file("definitely_missing_config_file.cfg");
        FAIL("expected io error");
    } catch (const error& e) {
        CHECK(e.code() == errc::io);
    }
}

TEST_CASE("config file parsing") {
    const std::string path = "sqfpairs_test_config.cfg";
    std::remove(path.c_str());
    {
        std::ofstream out(path);
        out << "# comment line\n"
            << "\n"
            << "  mobius.h_max = 7\n"
            << "decomposition.h_list = 3, 5 , 8\n"
            << "geom.min_dist=0.1\n";
    }
    Config cfg;
    cfg.load_file(path);
    CHECK(cfg.get_int("mobius.h_max") == 7);
    CHECK(cfg.get_int_list("decomposition.h_list") == std::vector<i64>{3, 5, 8});
    CHECK(cfg.get_real("geom.min_dist") == doctest::Approx(0.1));

    {
        std::ofstream out(path);
        out << "mobius.h_max 7\n"; // no equals sign
    }
    Config fresh;
    CHECK_THROWS_AS(fresh.load_file(path), error);
    {
        std::ofstream out(path);
        out << "unknown.key = 1\n";
    }
    CHECK_THROWS_AS(fresh.load_file(path), error);
    std::remove(path.c_str());
}

TEST_CASE("unknown suite is a usage error") {
    Config cfg;
    CHECK_FALSE(is_suite_name("unknown"));
    CHECK(is_suite_name("gauss"));
    CHECK(is_suite_name("all"));
    try {
        run_suite("unknown", cfg, nullptr);
        FAIL("expected usage error");
    } catch (const error& e) {
        CHECK(e.code() == errc::usage);
    }
}

namespace {

Config reduced_config() {
    Config cfg;
    cfg.set("gauss.q_max", "12");
    cfg.set("salie.q_max", "15");
    cfg.set("weil.q_max", "15");
    cfg.set("geom.grid_steps", "13");
    cfg.set("lambda.closed_product_max", "15");
    cfg.set("lambda.exact_law_product_max", "12");
    cfg.set("lambda.symmetry_product_max", "10");
    cfg.set("mult.product_max", "24");
    cfg.set("bounds.product_max", "10");
    cfg.set("bounds.h0", "3");
    cfg.set("sigma.cutoff_a", "13");
    cfg.set("sigma.dual_path_p_max", "5");
    cfg.set("sigma.exact_law_p_max", "31");
    cfg.set("decomposition.product_max", "6");
    cfg.set("decomposition.h_list", "3,5");
    cfg.set("mobius.h_max", "5");
    cfg.set("census.h_max", "5");
    cfg.set("census.table_check_limit", "200000");
    return cfg;
}

} // namespace

TEST_CASE("suite reports are deterministic and pass at reduced ranges") {
    Config cfg = reduced_config();
    DensityStore store;
    for (const auto& name : suite_names()) {
        SuiteReport first = run_suite(name, cfg, &store);
        SuiteReport second = run_suite(name, cfg, &store);
        CHECK(first.passed());
        CHECK(suite_report_json(first) == suite_report_json(second));
    }
}

TEST_CASE("the all suite aggregates the union of individual cases") {
    Config cfg = reduced_config();
    DensityStore store;
    i64 total = 0;
    for (const auto& name : suite_names())
        total += run_suite(name, cfg, &store).sweep.cases;
    SuiteReport all = run_suite("all", cfg, &store);
    CHECK(all.sweep.cases == total);
    CHECK(all.passed());
    std::string json = suite_report_json(all);
    CHECK(json.find("\"suite\":\"all\"") != std::string::npos);
}

TEST_CASE("suite csv summary") {
    Config cfg = reduced_config();
    SuiteReport report = run_suite("geom", cfg, nullptr);
    std::string csv = suite_report_csv(report);
    CHECK(csv.rfind("suite,cases,failures,max_deviation,passed\n", 0) == 0);
    CHECK(csv.find("geom") != std::string::npos);
}
