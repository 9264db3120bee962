#ifndef TWINSLIT_VERIFY_HPP
#define TWINSLIT_VERIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twinslit/config.hpp"

namespace twinslit {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // counterexample on failure, metric on success
};

// Override point for negative-control fixtures; empty members fall back to
// the production evaluators.
struct OpticsProbe {
    std::function<double(const ExperimentConfig&, double, double)> closed_form;
};

std::vector<CheckResult> verify_optics(const OpticsProbe& probe = {});
std::vector<CheckResult> verify_events();
// golden_json: text of the checked-in table transcription; without it the
// golden comparison is reported as skipped (not failed).
std::vector<CheckResult> verify_table2(const std::optional<std::string>& golden_json);

// suite: optics | events | table2 | all. Throws std::invalid_argument on an
// unknown suite name.
std::vector<CheckResult> verify_suite(std::string_view suite,
                                      const std::optional<std::string>& golden_json);

bool all_passed(const std::vector<CheckResult>& results);
// One "PASS name (detail)" / "FAIL name: detail" line per check plus a
// summary line.
std::string format_report(const std::vector<CheckResult>& results);

} // namespace twinslit

#endif // TWINSLIT_VERIFY_HPP
