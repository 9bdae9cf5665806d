#include "braidlab/report.hpp"

#include <atomic>
#include <string>

#include "doctest.h"
#include "braidlab/commands.hpp"
#include "braidlab/qgroup.hpp"

using namespace braidlab;

namespace {

RunConfig base_config(const std::string& command) {
    RunConfig cfg;
    cfg.command = command;
    return cfg;
}

}  // namespace

TEST_CASE("config_validation_rejects_bad_input") {
    auto cfg = base_config("spectrum");
    cfg.format = "xml";
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);

    cfg = base_config("spectrum");
    cfg.tol = 1e-9;  // exact mode must not carry a tolerance
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);

    cfg = base_config("spectrum");
    cfg.particles_lo = 5;
    cfg.particles_hi = 2;
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);

    cfg = base_config("spectrum");
    cfg.mode = Mode::floating;
    validate_config(cfg);
    CHECK(cfg.tol == 1e-9);  // float mode picks a default tolerance
}

TEST_CASE("spec_parsers") {
    CHECK(parse_level_spec("1/3") == std::pair<long, long>{1, 3});
    CHECK(parse_level_spec("2/5") == std::pair<long, long>{2, 5});
    CHECK_THROWS_AS(parse_level_spec("banana"), ConfigError);
    CHECK_THROWS_AS(parse_level_spec("1/"), ConfigError);
    CHECK_THROWS_AS(parse_level_spec("1/3x"), ConfigError);

    CHECK(parse_particles_spec("3") == std::pair<unsigned, unsigned>{3, 3});
    CHECK(parse_particles_spec("2..5") == std::pair<unsigned, unsigned>{2, 5});
    CHECK_THROWS_AS(parse_particles_spec("many"), ConfigError);

    auto p = parse_t_spec("1/2,-1/3", Mode::exact);
    CHECK(p.t_value(Mode::exact) ==
          Scalar(mpq_class(1, 2)) + Scalar::i_unit(Mode::exact) * Scalar(mpq_class(-1, 3)));
    CHECK_THROWS_AS(parse_t_spec("0.25,0", Mode::exact), ConfigError);
    auto pf = parse_t_spec("0.25,0", Mode::floating);
    CHECK(pf.t_value(Mode::floating) == Scalar::embed_complex(0.25, 0.0));
    CHECK_THROWS_AS(parse_t_spec("nope", Mode::floating), ConfigError);
}

TEST_CASE("scalar_and_angle_serialization_shape") {
    auto j = scalar_json(Scalar::root_of_unity(1, 6));
    REQUIRE(j.contains("exact"));
    REQUIRE(j.contains("approx"));
    CHECK(j["exact"][1] == 6);
    CHECK(j["approx"].size() == 2);

    auto jf = scalar_json(Scalar::embed_complex(0.5, -0.25));
    CHECK(!jf.contains("exact"));
    CHECK(jf["approx"][0] == 0.5);

    auto ja = angle_json(PiRational(5, 6));
    CHECK(ja["pi_rational"] == "5/6");
    CHECK(ja["approx"].get<double>() == doctest::Approx(5.0 * 3.14159265358979323846 / 6.0));
}

TEST_CASE("report_json_is_canonical") {
    Report rep;
    rep.config = base_config("verify");
    rep.checks.push_back({"zeta", true, 0.0, {}});
    rep.checks.push_back({"alpha", true, 0.0, {}});
    rep.duration_seconds = 1.25;

    auto j = report_json(rep);
    // sorted by name regardless of insertion order
    CHECK(j["checks"][0]["name"] == "alpha");
    CHECK(j["checks"][1]["name"] == "zeta");
    // duration withheld unless timing was requested
    CHECK(!j.contains("duration_seconds"));
    rep.config.timing = true;
    CHECK(report_json(rep).contains("duration_seconds"));

    rep.config.timing = false;
    const std::string once = render_report(rep);
    CHECK(once == render_report(rep));
}

TEST_CASE("csv_and_table_renderings") {
    Report rep;
    rep.config = base_config("verify");
    rep.config.format = "csv";
    rep.checks.push_back({"a_check", true, 0.0, {}});
    rep.checks.push_back({"b_check", false, 0.5, {}});
    auto csv = render_report(rep);
    CHECK(csv.find("name,passed,residual") == 0);
    CHECK(csv.find("\"b_check\",false") != std::string::npos);
    CHECK(!rep.all_passed());

    rep.config.format = "table";
    auto table = render_report(rep);
    CHECK(table.find("FAIL") != std::string::npos);
    CHECK(table.find("FAILURES PRESENT") != std::string::npos);
}

TEST_CASE("job_runner_preserves_order_and_exceptions") {
    auto job = [](std::size_t i) {
        return std::vector<CheckResult>{{"job-" + std::to_string(i), true, 0.0, {}}};
    };
    auto chunks = run_jobs(4, 9, job);
    REQUIRE(chunks.size() == 9);
    for (std::size_t i = 0; i < 9; ++i) CHECK(chunks[i][0].name == "job-" + std::to_string(i));

    auto thrower = [](std::size_t i) -> std::vector<CheckResult> {
        if (i == 3) throw SingularLevelError("test");
        return {};
    };
    CHECK_THROWS_AS(run_jobs(4, 8, thrower), SingularLevelError);
}
