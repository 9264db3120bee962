#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "twinslit/amplitude.hpp"
#include "twinslit/verify.hpp"

using namespace twinslit;

namespace {

std::string golden_text() {
    std::ifstream in(TWINSLIT_GOLDEN_TABLE2, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_CASE("events suite passes clean") {
    const auto results = verify_events();
    for (const CheckResult& r : results) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.passed);
    }
}

TEST_CASE("table2 suite passes clean against the golden transcription") {
    const auto results = verify_table2(golden_text());
    for (const CheckResult& r : results) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.passed);
    }
    CHECK(all_passed(results));
}

TEST_CASE("table2 suite marks the golden comparison skipped without a file") {
    const auto results = verify_table2(std::nullopt);
    CHECK(all_passed(results));
    bool found = false;
    for (const CheckResult& r : results)
        if (r.name == "table2.golden_reproduction") {
            found = true;
            CHECK(r.detail.find("skipped") != std::string::npos);
        }
    CHECK(found);
}

TEST_CASE("optics suite passes clean") {
    const auto results = verify_optics();
    for (const CheckResult& r : results) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.passed);
    }
}

TEST_CASE("negative control: a corrupted envelope fails the closed-form oracle") {
    OpticsProbe corrupted;
    corrupted.closed_form = [](const ExperimentConfig& cfg, double y, double z) {
        const double kt = cfg.k_theta();
        const double env = 1.01 * envelope(cfg.k_theta_d()); // corrupted factor
        return env * 0.5 * std::cos(0.5 * kt * (y + z)) +
               0.5 * std::cos(0.5 * kt * (y - z));
    };
    const auto results = verify_optics(corrupted);
    bool oracle_failed = false;
    for (const CheckResult& r : results)
        if (r.name == "optics.closed_form_oracle") oracle_failed = !r.passed;
    CHECK(oracle_failed);
    CHECK_FALSE(all_passed(results));
}

TEST_CASE("suite dispatch and report formatting") {
    CHECK_THROWS_AS(verify_suite("bogus", std::nullopt), std::invalid_argument);
    const auto all = verify_suite("all", golden_text());
    CHECK(all.size() > 20);
    const std::string report = format_report(all);
    CHECK(report.find("PASS optics.closed_form_oracle") != std::string::npos);
    CHECK(report.find("checks passed") != std::string::npos);
    CHECK(report.find("FAIL") == std::string::npos);
}
