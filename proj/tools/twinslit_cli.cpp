// twinslit command-line front end. Talks to the shared library through the
// C interface only.

#include <cstdio>
#include <cstring>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "twinslit.h"

namespace {

// 0 success, 1 validation failure, 2 internal error.
int exit_code(int rc) {
    switch (rc) {
        case TWINSLIT_OK:
            return 0;
        case TWINSLIT_ERR_NON_CONVERGENCE:
        case TWINSLIT_ERR_INTERNAL:
            return 2;
        default:
            return 1;
    }
}

int report_failure(int rc) {
    std::fprintf(stderr, "error: %s\n", twinslit_last_error());
    return exit_code(rc);
}

struct ConfigHandle {
    twinslit_config* ptr = nullptr;
    ~ConfigHandle() { twinslit_config_free(ptr); }
};

struct GridHandle {
    twinslit_grid* ptr = nullptr;
    ~GridHandle() { twinslit_grid_free(ptr); }
};

struct StringHandle {
    char* ptr = nullptr;
    ~StringHandle() { twinslit_string_free(ptr); }
};

int print_string_result(int rc, const StringHandle& text) {
    if (rc != TWINSLIT_OK) return report_failure(rc);
    std::fputs(text.ptr, stdout);
    if (text.ptr[0] != '\0' && text.ptr[std::strlen(text.ptr) - 1] != '\n')
        std::fputc('\n', stdout);
    return 0;
}

int run_pattern(const std::string& config_path, const std::string& method,
                const std::string& out_path, const std::string& format) {
    ConfigHandle cfg;
    if (int rc = twinslit_config_load(config_path.c_str(), &cfg.ptr))
        return report_failure(rc);

    const char* method_arg = method.empty() ? nullptr : method.c_str();

    int valid = 1;
    twinslit_config_approximation_valid(cfg.ptr, &valid);
    if (!valid && method != "exact")
        std::fprintf(stderr,
                     "warning: small-angle approximation invalid for this config "
                     "(needs h/l <= 0.01 and d/2 <= 0.01*h); computing anyway\n");

    GridHandle grid;
    if (int rc = twinslit_grid_compute(cfg.ptr, method_arg, &grid.ptr))
        return report_failure(rc);

    const int rc = format == "json"
                       ? twinslit_grid_write_json(grid.ptr, out_path.c_str())
                       : twinslit_grid_write_csv(grid.ptr, out_path.c_str());
    if (rc != TWINSLIT_OK) return report_failure(rc);

    StringHandle regime;
    if (int rrc = twinslit_regime_json(cfg.ptr, &regime.ptr))
        return report_failure(rrc);
    std::printf("%s\n", regime.ptr);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-double-slit joint interference amplitudes and the "
                 "permutation-symmetry classification of its events"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(twinslit_version()));

    // pattern
    std::string config_path, method, out_path, format = "csv";
    auto* pattern = app.add_subcommand(
        "pattern", "compute an amplitude grid and write it to a file");
    pattern->add_option("--config", config_path, "config file")->required();
    pattern->add_option("--method", method,
                        "quadrature|closed|ci|qi|exact (default: config key, then closed)");
    pattern->add_option("--out", out_path, "output file")->required();
    pattern->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    // regime
    std::string regime_config;
    auto* regime = app.add_subcommand("regime", "print the regime report as JSON");
    regime->add_option("--config", regime_config, "config file")->required();

    // enumerate
    std::string kind = "even";
    auto* enumerate = app.add_subcommand("enumerate", "dump the event algebra as JSON");
    enumerate->add_option("--kind", kind, "elementary|combined|even")
        ->check(CLI::IsMember({"elementary", "combined", "even"}));

    // table2
    std::string table_format = "text", table_rule = "system";
    std::string golden_path = "data/table2_golden.json";
    bool golden_check = false;
    auto* table = app.add_subcommand("table2", "print the full event classification");
    table->add_option("--format", table_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    table->add_option("--rule", table_rule, "system|absolute prohibition rule")
        ->check(CLI::IsMember({"system", "absolute"}));
    table->add_flag("--golden-check", golden_check,
                    "compare against the checked-in transcription and fail on mismatch");
    table->add_option("--golden", golden_path, "golden transcription path");

    // symmetries
    std::string sym_event;
    bool exhaustive = false;
    auto* symmetries =
        app.add_subcommand("symmetries", "print the symmetry signature of an event");
    symmetries->add_option("event", sym_event, "event literal, e.g. X(1,2)+X(2,1)")
        ->required();
    symmetries->add_flag("--exhaustive", exhaustive,
                         "also list the full attribute-permutation stabilizer");

    // generate
    std::string gen_event;
    auto* generate = app.add_subcommand(
        "generate", "generate the four non-LS events from a label-symmetric event");
    generate->add_option("event", gen_event, "label-symmetric event literal")->required();

    // rotate
    std::string rot_event;
    auto* rotate = app.add_subcommand("rotate", "apply the 90-degree rotation (B<->C)");
    rotate->add_option("event", rot_event, "event literal")->required();

    // classify
    std::string cls_event, cls_rule = "system";
    auto* classify = app.add_subcommand("classify", "print the classification record");
    classify->add_option("event", cls_event, "event literal")->required();
    classify->add_option("--rule", cls_rule, "system|absolute prohibition rule")
        ->check(CLI::IsMember({"system", "absolute"}));

    // verify
    std::string suite = "all", verify_golden = "data/table2_golden.json";
    auto* verify = app.add_subcommand("verify", "run the invariant suites");
    verify->add_option("--suite", suite, "optics|events|table2|all")
        ->check(CLI::IsMember({"optics", "events", "table2", "all"}));
    verify->add_option("--golden", verify_golden, "golden transcription path");

    CLI11_PARSE(app, argc, argv);

    if (pattern->parsed()) return run_pattern(config_path, method, out_path, format);

    if (regime->parsed()) {
        ConfigHandle cfg;
        if (int rc = twinslit_config_load(regime_config.c_str(), &cfg.ptr))
            return report_failure(rc);
        StringHandle text;
        return print_string_result(twinslit_regime_json(cfg.ptr, &text.ptr), text);
    }

    if (enumerate->parsed()) {
        StringHandle text;
        return print_string_result(twinslit_enumerate_json(kind.c_str(), &text.ptr),
                                   text);
    }

    if (table->parsed()) {
        if (golden_check) {
            StringHandle report;
            const int rc =
                twinslit_table2_golden_check(golden_path.c_str(), &report.ptr);
            if (report.ptr) std::fputs(report.ptr, stdout);
            if (rc != TWINSLIT_OK && !report.ptr) return report_failure(rc);
            return exit_code(rc);
        }
        StringHandle text;
        const int rc = table_format == "json"
                           ? twinslit_table2_json(table_rule.c_str(), &text.ptr)
                           : twinslit_table2_text(table_rule.c_str(), &text.ptr);
        return print_string_result(rc, text);
    }

    if (symmetries->parsed()) {
        StringHandle text;
        return print_string_result(
            twinslit_event_symmetries_json(sym_event.c_str(), exhaustive ? 1 : 0,
                                           &text.ptr),
            text);
    }

    if (generate->parsed()) {
        StringHandle text;
        return print_string_result(
            twinslit_event_generate_nls_json(gen_event.c_str(), &text.ptr), text);
    }

    if (rotate->parsed()) {
        StringHandle text;
        return print_string_result(
            twinslit_event_rotate90_json(rot_event.c_str(), &text.ptr), text);
    }

    if (classify->parsed()) {
        StringHandle text;
        return print_string_result(
            twinslit_event_classify_json(cls_event.c_str(), cls_rule.c_str(),
                                         &text.ptr),
            text);
    }

    if (verify->parsed()) {
        StringHandle report;
        FILE* probe = std::fopen(verify_golden.c_str(), "rb");
        const char* golden_arg = nullptr;
        if (probe) {
            std::fclose(probe);
            golden_arg = verify_golden.c_str();
        }
        const int rc = twinslit_verify(suite.c_str(), golden_arg, &report.ptr);
        if (report.ptr) std::fputs(report.ptr, stdout);
        if (rc != TWINSLIT_OK && !report.ptr) return report_failure(rc);
        return exit_code(rc);
    }

    return 0;
}
