#include "twinslit.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "twinslit/amplitude.hpp"
#include "twinslit/config.hpp"
#include "twinslit/events.hpp"
#include "twinslit/geometry.hpp"
#include "twinslit/grid.hpp"
#include "twinslit/serialize.hpp"
#include "twinslit/systems.hpp"
#include "twinslit/verify.hpp"

struct twinslit_config {
    twinslit::RunConfig run;
};

struct twinslit_grid {
    twinslit::AmplitudeGrid grid;
    twinslit::RegimeReport regime;
};

namespace {

thread_local std::string g_last_error;

int set_error(int code, const std::string& message) {
    g_last_error = message;
    return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const twinslit::ConfigParseError& e) {
        return set_error(TWINSLIT_ERR_PARSE, e.what());
    } catch (const twinslit::EventParseError& e) {
        return set_error(TWINSLIT_ERR_PARSE, e.what());
    } catch (const twinslit::NonConvergence& e) {
        return set_error(TWINSLIT_ERR_NON_CONVERGENCE, e.what());
    } catch (const twinslit::GridTooSmall& e) {
        return set_error(TWINSLIT_ERR_DOMAIN, e.what());
    } catch (const twinslit::NotLabelSymmetric& e) {
        return set_error(TWINSLIT_ERR_DOMAIN, e.what());
    } catch (const twinslit::NotRISystem& e) {
        return set_error(TWINSLIT_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return set_error(TWINSLIT_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return set_error(TWINSLIT_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(TWINSLIT_ERR_INTERNAL, "unknown error");
    }
}

int require(bool condition, const char* message) {
    return condition ? TWINSLIT_OK : set_error(TWINSLIT_ERR_INVALID_ARGUMENT, message);
}

char* dup_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out) std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

int emit(char** out, const std::string& text) {
    *out = dup_string(text);
    return *out ? TWINSLIT_OK
                : set_error(TWINSLIT_ERR_INTERNAL, "allocation failed");
}

twinslit::Method resolve_method(const twinslit_config* cfg, const char* method) {
    if (method) return twinslit::method_from_name(method);
    if (cfg->run.method) return twinslit::method_from_name(*cfg->run.method);
    return twinslit::Method::Closed;
}

struct IoError {
    std::string message;
};

std::string read_file(const char* path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError{std::string("cannot open ") + path};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int write_file(const char* path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return set_error(TWINSLIT_ERR_IO, std::string("cannot open ") + path);
    out << text;
    out.flush();
    if (!out) return set_error(TWINSLIT_ERR_IO, std::string("write failed: ") + path);
    return TWINSLIT_OK;
}

} // namespace

extern "C" {

const char* twinslit_version(void) { return "0.1.0"; }

const char* twinslit_last_error(void) { return g_last_error.c_str(); }

void twinslit_string_free(char* s) { std::free(s); }

int twinslit_config_create(double k, double h, double l, double m, double d,
                           twinslit_config** out) {
    if (int rc = require(out != nullptr, "null output pointer")) return rc;
    *out = nullptr;
    return guarded([&]() -> int {
        twinslit::RunConfig run;
        run.experiment.k = k;
        run.experiment.h = h;
        run.experiment.l = l;
        run.experiment.m = m;
        run.experiment.d = d;
        run.experiment.validate();
        *out = new twinslit_config{std::move(run)};
        return TWINSLIT_OK;
    });
}

int twinslit_config_load(const char* path, twinslit_config** out) {
    if (int rc = require(path && out, "null argument")) return rc;
    *out = nullptr;
    return guarded([&]() -> int {
        *out = new twinslit_config{twinslit::load_run_config(path)};
        return TWINSLIT_OK;
    });
}

void twinslit_config_free(twinslit_config* cfg) { delete cfg; }

int twinslit_config_set_u_interval(twinslit_config* cfg, double u1, double u2) {
    if (int rc = require(cfg != nullptr, "null config")) return rc;
    return guarded([&]() -> int {
        twinslit::ExperimentConfig candidate = cfg->run.experiment;
        candidate.u1 = u1;
        candidate.u2 = u2;
        candidate.validate();
        cfg->run.experiment = candidate;
        return TWINSLIT_OK;
    });
}

int twinslit_config_set_grid(twinslit_config* cfg, double y_min, double y_max,
                             int y_steps, double z_min, double z_max,
                             int z_steps) {
    if (int rc = require(cfg != nullptr, "null config")) return rc;
    return guarded([&]() -> int {
        twinslit::GridSpec spec{y_min, y_max, y_steps, z_min, z_max, z_steps};
        spec.validate();
        cfg->run.grid = spec;
        return TWINSLIT_OK;
    });
}

int twinslit_config_theta(const twinslit_config* cfg, double* out) {
    if (int rc = require(cfg && out, "null argument")) return rc;
    *out = cfg->run.experiment.theta();
    return TWINSLIT_OK;
}

int twinslit_config_k_theta_d(const twinslit_config* cfg, double* out) {
    if (int rc = require(cfg && out, "null argument")) return rc;
    *out = cfg->run.experiment.k_theta_d();
    return TWINSLIT_OK;
}

int twinslit_config_approximation_valid(const twinslit_config* cfg, int* out) {
    if (int rc = require(cfg && out, "null argument")) return rc;
    *out = cfg->run.experiment.approximation_valid() ? 1 : 0;
    return TWINSLIT_OK;
}

int twinslit_amplitude(const twinslit_config* cfg, const char* method, double y,
                       double z, double* out) {
    if (int rc = require(cfg && method && out, "null argument")) return rc;
    return guarded([&]() -> int {
        const twinslit::ExperimentConfig& exp = cfg->run.experiment;
        switch (twinslit::method_from_name(method)) {
            case twinslit::Method::Quadrature:
                *out = twinslit::amplitude_quadrature(exp, y, z);
                break;
            case twinslit::Method::Closed:
                *out = twinslit::amplitude_closed(exp, y, z);
                break;
            case twinslit::Method::Ci:
                *out = twinslit::amplitude_ci(exp, y, z);
                break;
            case twinslit::Method::Qi:
                *out = twinslit::amplitude_qi(exp, y, z);
                break;
            case twinslit::Method::Exact: {
                twinslit::AmplitudeQuadOptions opts;
                opts.exact_paths = true;
                *out = twinslit::amplitude_quadrature(exp, y, z, opts);
                break;
            }
        }
        return TWINSLIT_OK;
    });
}

int twinslit_path_difference_exact(const twinslit_config* cfg, const char* side,
                                   double u, double x, double screen_coord,
                                   double* out) {
    if (int rc = require(cfg && side && out, "null argument")) return rc;
    return guarded([&]() -> int {
        twinslit::Side parsed;
        if (std::strcmp(side, "east") == 0)
            parsed = twinslit::Side::East;
        else if (std::strcmp(side, "west") == 0)
            parsed = twinslit::Side::West;
        else
            throw std::invalid_argument(std::string("unknown side '") + side +
                                        "' (expected east or west)");
        *out = twinslit::path_difference_exact(cfg->run.experiment, parsed,
                                               twinslit::SourcePoint{u, x},
                                               screen_coord);
        return TWINSLIT_OK;
    });
}

int twinslit_path_difference_approx(const twinslit_config* cfg, double x,
                                    double screen_coord, double* out) {
    if (int rc = require(cfg && out, "null argument")) return rc;
    *out = twinslit::path_difference_approx(cfg->run.experiment, x, screen_coord);
    return TWINSLIT_OK;
}

int twinslit_regime_json(const twinslit_config* cfg, char** json_out) {
    if (int rc = require(cfg && json_out, "null argument")) return rc;
    return guarded([&]() -> int {
        return emit(json_out, twinslit::regime_report_json(
                                  twinslit::classify_regime(cfg->run.experiment), 2));
    });
}

int twinslit_grid_compute(const twinslit_config* cfg, const char* method,
                          twinslit_grid** out) {
    if (int rc = require(cfg && out, "null argument")) return rc;
    *out = nullptr;
    return guarded([&]() -> int {
        if (!cfg->run.grid)
            throw std::invalid_argument(
                "config carries no grid block (y_min..z_steps)");
        const twinslit::Method resolved = resolve_method(cfg, method);
        auto grid = twinslit::compute_grid(cfg->run.experiment, *cfg->run.grid,
                                           resolved);
        *out = new twinslit_grid{std::move(grid),
                                 twinslit::classify_regime(cfg->run.experiment)};
        return TWINSLIT_OK;
    });
}

void twinslit_grid_free(twinslit_grid* grid) { delete grid; }

int twinslit_grid_shape(const twinslit_grid* grid, size_t* rows, size_t* cols) {
    if (int rc = require(grid && rows && cols, "null argument")) return rc;
    *rows = grid->grid.rows();
    *cols = grid->grid.cols();
    return TWINSLIT_OK;
}

int twinslit_grid_value(const twinslit_grid* grid, size_t i, size_t j,
                        double* out) {
    if (int rc = require(grid && out, "null argument")) return rc;
    if (int rc = require(i < grid->grid.rows() && j < grid->grid.cols(),
                         "grid index out of range"))
        return rc;
    *out = grid->grid.at(i, j);
    return TWINSLIT_OK;
}

int twinslit_grid_coords(const twinslit_grid* grid, size_t i, size_t j,
                         double* y, double* z) {
    if (int rc = require(grid && y && z, "null argument")) return rc;
    if (int rc = require(i < grid->grid.rows() && j < grid->grid.cols(),
                         "grid index out of range"))
        return rc;
    *y = grid->grid.y[i];
    *z = grid->grid.z[j];
    return TWINSLIT_OK;
}

int twinslit_grid_separability_defect(const twinslit_grid* grid, double* out) {
    if (int rc = require(grid && out, "null argument")) return rc;
    return guarded([&]() -> int {
        *out = twinslit::separability_defect(grid->grid);
        return TWINSLIT_OK;
    });
}

int twinslit_grid_write_csv(const twinslit_grid* grid, const char* path) {
    if (int rc = require(grid && path, "null argument")) return rc;
    return guarded([&]() -> int { return write_file(path, twinslit::csv_string(grid->grid)); });
}

int twinslit_grid_csv_string(const twinslit_grid* grid, char** out) {
    if (int rc = require(grid && out, "null argument")) return rc;
    return guarded([&]() -> int { return emit(out, twinslit::csv_string(grid->grid)); });
}

int twinslit_grid_write_json(const twinslit_grid* grid, const char* path) {
    if (int rc = require(grid && path, "null argument")) return rc;
    return guarded([&]() -> int {
        return write_file(path, twinslit::grid_json(grid->grid, grid->regime, 2));
    });
}

int twinslit_grid_json_string(const twinslit_grid* grid, char** out) {
    if (int rc = require(grid && out, "null argument")) return rc;
    return guarded(
        [&] { return emit(out, twinslit::grid_json(grid->grid, grid->regime, 2)); });
}

int twinslit_enumerate_json(const char* kind, char** json_out) {
    if (int rc = require(kind && json_out, "null argument")) return rc;
    return guarded([&]() -> int { return emit(json_out, twinslit::enumerate_json(kind, 2)); });
}

int twinslit_event_canonical_json(const char* literal, char** json_out) {
    if (int rc = require(literal && json_out, "null argument")) return rc;
    return guarded([&]() -> int {
        return emit(json_out,
                    twinslit::event_json(twinslit::parse_even_event(literal), 2));
    });
}

int twinslit_event_symmetries_json(const char* literal, int exhaustive,
                                   char** json_out) {
    if (int rc = require(literal && json_out, "null argument")) return rc;
    return guarded([&]() -> int {
        return emit(json_out,
                    twinslit::symmetries_json(twinslit::parse_even_event(literal),
                                              exhaustive != 0, 2));
    });
}

int twinslit_event_generate_nls_json(const char* literal, char** json_out) {
    if (int rc = require(literal && json_out, "null argument")) return rc;
    return guarded([&]() -> int {
        return emit(json_out, twinslit::generated_events_json(
                                  twinslit::parse_even_event(literal), 2));
    });
}

int twinslit_event_rotate90_json(const char* literal, char** json_out) {
    if (int rc = require(literal && json_out, "null argument")) return rc;
    return guarded([&]() -> int {
        return emit(json_out,
                    twinslit::rotate90_json(twinslit::parse_even_event(literal), 2));
    });
}

int twinslit_event_classify_json(const char* literal, const char* rule,
                                 char** json_out) {
    if (int rc = require(literal && json_out, "null argument")) return rc;
    return guarded([&]() -> int {
        const twinslit::ProhibitionRule parsed =
            rule ? twinslit::prohibition_rule_from_name(rule)
                 : twinslit::ProhibitionRule::SystemRelative;
        return emit(json_out,
                    twinslit::classification_json(
                        twinslit::classify(twinslit::parse_even_event(literal),
                                           parsed),
                        2));
    });
}

int twinslit_arrangements_json(const char* mode, char** json_out) {
    if (int rc = require(mode && json_out, "null argument")) return rc;
    return guarded([&]() -> int {
        return emit(json_out, twinslit::arrangements_json(
                                  twinslit::arrangement_mode_from_name(mode), 2));
    });
}

int twinslit_table2_json(const char* rule, char** json_out) {
    if (int rc = require(json_out != nullptr, "null output pointer")) return rc;
    return guarded([&]() -> int {
        const twinslit::ProhibitionRule parsed =
            rule ? twinslit::prohibition_rule_from_name(rule)
                 : twinslit::ProhibitionRule::SystemRelative;
        return emit(json_out, twinslit::table2_json(parsed, 2));
    });
}

int twinslit_table2_text(const char* rule, char** out) {
    if (int rc = require(out != nullptr, "null output pointer")) return rc;
    return guarded([&]() -> int {
        const twinslit::ProhibitionRule parsed =
            rule ? twinslit::prohibition_rule_from_name(rule)
                 : twinslit::ProhibitionRule::SystemRelative;
        return emit(out, twinslit::table2_text(parsed));
    });
}

int twinslit_table2_golden_check(const char* golden_path, char** report_out) {
    if (int rc = require(golden_path && report_out, "null argument")) return rc;
    *report_out = nullptr;
    return guarded([&]() -> int {
        std::string text;
        try {
            text = read_file(golden_path);
        } catch (const IoError& e) {
            return set_error(TWINSLIT_ERR_IO, e.message);
        }
        const std::vector<std::string> mismatches =
            twinslit::table2_golden_mismatches(text);
        std::ostringstream report;
        if (mismatches.empty()) {
            report << "18/18 records match " << golden_path << "\n";
            return emit(report_out, report.str());
        }
        for (const std::string& m : mismatches) report << m << '\n';
        report << mismatches.size() << " mismatch(es)\n";
        if (int rc = emit(report_out, report.str())) return rc;
        return set_error(TWINSLIT_ERR_MISMATCH, "table does not match golden transcription");
    });
}

int twinslit_screen_assignment_json(const char* regime, const char* configuration,
                                    char** json_out) {
    if (int rc = require(regime && configuration && json_out, "null argument")) return rc;
    return guarded([&]() -> int {
        return emit(json_out, twinslit::screen_assignment_json(
                                  twinslit::regime_from_name(regime),
                                  twinslit::configuration_from_name(configuration),
                                  2));
    });
}

int twinslit_verify(const char* suite, const char* golden_path, char** report_out) {
    if (int rc = require(suite && report_out, "null argument")) return rc;
    *report_out = nullptr;
    return guarded([&]() -> int {
        std::optional<std::string> golden;
        if (golden_path) {
            try {
                golden = read_file(golden_path);
            } catch (const IoError& e) {
                return set_error(TWINSLIT_ERR_IO, e.message);
            }
        }
        const std::vector<twinslit::CheckResult> results =
            twinslit::verify_suite(suite, golden);
        if (int rc = emit(report_out, twinslit::format_report(results))) return rc;
        if (!twinslit::all_passed(results))
            return set_error(TWINSLIT_ERR_MISMATCH, "verification suite reported failures");
        return TWINSLIT_OK;
    });
}

} // extern "C"
