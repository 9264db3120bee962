#include "twinslit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "twinslit/amplitude.hpp"
#include "twinslit/events.hpp"
#include "twinslit/geometry.hpp"
#include "twinslit/grid.hpp"
#include "twinslit/serialize.hpp"
#include "twinslit/systems.hpp"

namespace twinslit {

namespace {

// k*theta = 1e4 throughout: h = 0.5 mm double slits one meter out, optical k.
ExperimentConfig reference_config(double k_theta_d) {
    ExperimentConfig cfg;
    cfg.k = 1.0e7;
    cfg.h = 5.0e-4;
    cfg.l = 1.0;
    cfg.m = 1.0;
    cfg.d = k_theta_d / cfg.k_theta();
    return cfg;
}

GridSpec two_period_grid(const ExperimentConfig& cfg, int steps) {
    const double period = 4.0 * M_PI / cfg.k_theta();
    GridSpec spec;
    spec.y_min = -period;
    spec.y_max = period;
    spec.y_steps = steps;
    spec.z_min = -period;
    spec.z_max = period;
    spec.z_steps = steps;
    return spec;
}

CheckResult pass(std::string name, std::string detail = "") {
    return {std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

CheckResult bounded(std::string name, double worst, double bound,
                    std::string witness = "") {
    std::ostringstream detail;
    detail << "max " << worst << " vs bound " << bound;
    if (!witness.empty()) detail << " at " << witness;
    if (worst <= bound) return pass(std::move(name), detail.str());
    return fail(std::move(name), detail.str());
}

std::string event_list(const std::vector<EvenEvent>& events) {
    std::string out;
    for (const EvenEvent& e : events) {
        if (!out.empty()) out += ", ";
        out += e.short_string();
    }
    return out;
}

} // namespace

std::vector<CheckResult> verify_optics(const OpticsProbe& probe) {
    std::vector<CheckResult> results;
    auto closed = probe.closed_form
                      ? probe.closed_form
                      : [](const ExperimentConfig& cfg, double y, double z) {
                            return amplitude_closed(cfg, y, z);
                        };

    { // quadrature agrees with the closed form to 1e-8 everywhere sampled
        double worst = 0.0;
        std::string witness;
        for (double s : {0.01, 1.0, 100.0}) {
            const ExperimentConfig cfg = reference_config(s);
            const GridSpec spec = two_period_grid(cfg, 12);
            for (double y : linspace(spec.y_min, spec.y_max, spec.y_steps))
                for (double z : linspace(spec.z_min, spec.z_max, spec.z_steps)) {
                    const double delta =
                        std::abs(amplitude_quadrature(cfg, y, z) - closed(cfg, y, z));
                    if (delta > worst) {
                        worst = delta;
                        std::ostringstream at;
                        at << "k_theta_d=" << s << " y=" << y << " z=" << z;
                        witness = at.str();
                    }
                }
        }
        results.push_back(
            bounded("optics.closed_form_oracle", worst, 1e-8, witness));
    }

    { // CI limit: |closed - ci| <= |envelope-1|/2; envelope-1 = O(s^2)
        const ExperimentConfig cfg = reference_config(0.01);
        const double bound = 0.5 * std::abs(envelope(cfg.k_theta_d()) - 1.0) + 1e-14;
        const GridSpec spec = two_period_grid(cfg, 15);
        double worst = 0.0;
        for (double y : linspace(spec.y_min, spec.y_max, spec.y_steps))
            for (double z : linspace(spec.z_min, spec.z_max, spec.z_steps))
                worst = std::max(worst,
                                 std::abs(closed(cfg, y, z) - amplitude_ci(cfg, y, z)));
        results.push_back(bounded("optics.ci_limit_bound", worst, bound));

        bool quadratic = true;
        std::ostringstream detail;
        for (double s : {1e-2, 1e-3, 1e-4}) {
            const double error = std::abs(envelope(s) - 1.0);
            detail << "s=" << s << " |env-1|=" << error << " ";
            if (error > s * s / 20.0) quadratic = false;
        }
        results.push_back(quadratic
                              ? pass("optics.envelope_quadratic_approach", detail.str())
                              : fail("optics.envelope_quadratic_approach", detail.str()));
    }

    { // QI limit: |closed - qi| <= 1/s
        const ExperimentConfig cfg = reference_config(1000.0);
        const GridSpec spec = two_period_grid(cfg, 15);
        double worst = 0.0;
        for (double y : linspace(spec.y_min, spec.y_max, spec.y_steps))
            for (double z : linspace(spec.z_min, spec.z_max, spec.z_steps))
                worst = std::max(worst,
                                 std::abs(closed(cfg, y, z) - amplitude_qi(cfg, y, z)));
        results.push_back(bounded("optics.qi_limit_bound", worst,
                                  1.0 / cfg.k_theta_d() + 1e-14));
    }

    { // psi(y,z) = psi(z,y) and psi(-y,-z) = psi(y,z)
        const ExperimentConfig cfg = reference_config(M_PI);
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> coord(-2e-3, 2e-3);
        double worst = 0.0;
        for (int i = 0; i < 500; ++i) {
            const double y = coord(rng);
            const double z = coord(rng);
            worst = std::max(worst, std::abs(closed(cfg, y, z) - closed(cfg, z, y)));
            worst = std::max(worst, std::abs(closed(cfg, y, z) - closed(cfg, -y, -z)));
        }
        results.push_back(bounded("optics.closed_form_symmetries", worst, 1e-15));
    }

    { // qi depends on y-z only
        const ExperimentConfig cfg = reference_config(1000.0);
        std::mt19937 rng(11);
        std::uniform_real_distribution<double> coord(-2e-3, 2e-3);
        std::uniform_real_distribution<double> shift(-1.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 500; ++i) {
            const double y = coord(rng);
            const double z = coord(rng);
            const double c = shift(rng);
            worst = std::max(worst, std::abs(amplitude_qi(cfg, y + c, z + c) -
                                             amplitude_qi(cfg, y, z)));
        }
        results.push_back(bounded("optics.qi_translation_invariance", worst, 1e-9));
    }

    { // every formula stays within [-1, 1]
        std::mt19937 rng(13);
        std::uniform_real_distribution<double> log_s(-3.0, 4.0);
        std::uniform_real_distribution<double> coord(-5e-3, 5e-3);
        double worst = 0.0;
        for (int i = 0; i < 300; ++i) {
            const ExperimentConfig cfg =
                reference_config(std::pow(10.0, log_s(rng)));
            const double y = coord(rng);
            const double z = coord(rng);
            worst = std::max({worst, std::abs(closed(cfg, y, z)),
                              std::abs(amplitude_ci(cfg, y, z)),
                              std::abs(amplitude_qi(cfg, y, z)),
                              std::abs(amplitude_quadrature(cfg, y, z)),
                              std::abs(envelope(cfg.k_theta_d()))});
        }
        results.push_back(bounded("optics.boundedness", worst, 1.0 + 1e-12));
    }

    { // approximate path difference vs exact geometry, inside validity box
        std::mt19937 rng(17);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            ExperimentConfig cfg;
            cfg.k = 1e7;
            cfg.l = 0.5 + 1.5 * unit(rng);
            cfg.m = 0.5 + 1.5 * unit(rng);
            cfg.h = cfg.l * (1e-4 + (0.01 - 1e-4) * unit(rng));
            cfg.d = 0.0;
            const double x = 0.01 * cfg.h * (2.0 * unit(rng) - 1.0);
            const double y = 0.01 * cfg.m * (2.0 * unit(rng) - 1.0);
            const double exact =
                path_difference_exact(cfg, Side::East, SourcePoint{0.0, x}, y);
            const double approx = path_difference_approx(cfg, x, y);
            if (exact != 0.0)
                worst = std::max(worst, std::abs(approx - exact) / std::abs(exact));
        }
        results.push_back(bounded("optics.path_difference_approximation", worst, 1e-2));
    }

    { // envelope: |env| <= 1, env(0) = 1, signed past 2*pi
        bool ok = envelope(0.0) == 1.0 && envelope(7.0) < 0.0;
        double worst = 0.0;
        for (double s = 0.0; s <= 50.0; s += 0.25)
            worst = std::max(worst, std::abs(envelope(s)));
        ok = ok && worst <= 1.0;
        std::ostringstream detail;
        detail << "max |env| " << worst << ", env(0)=" << envelope(0.0)
               << ", env(7)=" << envelope(7.0);
        results.push_back(ok ? pass("optics.envelope_range", detail.str())
                             : fail("optics.envelope_range", detail.str()));
    }

    { // separability: product form factors, joint form does not
        const ExperimentConfig ci_cfg = reference_config(0.01);
        const GridSpec spec = two_period_grid(ci_cfg, 12);
        const double ci_defect =
            separability_defect(compute_grid(ci_cfg, spec, Method::Ci));
        const double closed_small =
            separability_defect(compute_grid(ci_cfg, spec, Method::Closed));
        const ExperimentConfig qi_cfg = reference_config(100.0);
        const double closed_large = separability_defect(
            compute_grid(qi_cfg, two_period_grid(qi_cfg, 12), Method::Closed));
        std::ostringstream detail;
        detail << "ci " << ci_defect << ", closed@0.01 " << closed_small
               << ", closed@100 " << closed_large;
        const bool ok =
            ci_defect <= 1e-12 && closed_small <= 1e-3 && closed_large >= 0.1;
        results.push_back(ok ? pass("optics.separability_defect", detail.str())
                             : fail("optics.separability_defect", detail.str()));
    }

    { // identical quadrature invocations agree bit for bit
        const ExperimentConfig cfg = reference_config(3.0);
        const double first = amplitude_quadrature(cfg, 1.1e-4, -2.3e-4);
        const double second = amplitude_quadrature(cfg, 1.1e-4, -2.3e-4);
        results.push_back(first == second
                              ? pass("optics.quadrature_determinism")
                              : fail("optics.quadrature_determinism",
                                     format_significant(first) + " != " +
                                         format_significant(second)));
    }

    return results;
}

std::vector<CheckResult> verify_events() {
    std::vector<CheckResult> results;
    const std::vector<EvenEvent> evens = enumerate_even_events();

    { // cardinalities against brute-force enumeration
        std::set<std::string> elementary;
        for (Attr a : kAllAttrs)
            for (Label l : kAllLabels)
                elementary.insert(ElementaryEvent{a, l}.to_string());

        std::set<CombinedEvent> combined_brute;
        for (Attr a1 : kAllAttrs)
            for (Label l1 : kAllLabels)
                for (Attr a2 : kAllAttrs)
                    for (Label l2 : kAllLabels)
                        if (a1 != a2 && l1 != l2)
                            combined_brute.insert(CombinedEvent::of(
                                ElementaryEvent{a1, l1}, ElementaryEvent{a2, l2}));
        const std::vector<CombinedEvent> combined = enumerate_combined_events();

        std::set<EvenEvent> even_brute;
        for (std::size_t i = 0; i < combined.size(); ++i)
            for (std::size_t j = i + 1; j < combined.size(); ++j) {
                std::set<Attr> attrs = {combined[i].lo.attr, combined[i].hi.attr,
                                        combined[j].lo.attr, combined[j].hi.attr};
                if (attrs.size() == 2 || attrs.size() == 4)
                    even_brute.insert(EvenEvent::of(combined[i], combined[j]));
            }

        const long ls_count =
            std::count_if(evens.begin(), evens.end(), is_label_symmetric);
        std::ostringstream detail;
        detail << "attrs " << kAllAttrs.size() << ", combined attrs "
               << all_combined_attrs().size() << ", elementary "
               << elementary.size() << ", combined " << combined.size()
               << ", even " << evens.size() << ", LS " << ls_count;
        const bool ok =
            kAllAttrs.size() == 4 && all_combined_attrs().size() == 6 &&
            elementary.size() == 8 && combined.size() == 12 &&
            combined_brute == std::set<CombinedEvent>(combined.begin(), combined.end()) &&
            evens.size() == 18 &&
            even_brute == std::set<EvenEvent>(evens.begin(), evens.end()) &&
            ls_count == 6;
        results.push_back(ok ? pass("events.cardinalities", detail.str())
                             : fail("events.cardinalities", detail.str()));
    }

    { // AS <=> LS <=> attribute_count == 2, exhaustively
        std::string witness;
        for (const EvenEvent& e : evens) {
            const bool as = is_auto_symmetric(e);
            const bool ls = is_label_symmetric(e);
            const bool two = e.attribute_count() == 2;
            if (as != ls || ls != two) {
                witness = e.short_string();
                break;
            }
        }
        results.push_back(witness.empty()
                              ? pass("events.as_ls_equivalence")
                              : fail("events.as_ls_equivalence", witness));
    }

    { // non-LS: exactly one simultaneous pair fixes, nothing else does
        std::string witness;
        for (const EvenEvent& e : evens) {
            if (is_label_symmetric(e)) continue;
            int simultaneous = 0;
            bool bad = false;
            for (const SymmetryOp& op : SymmetryOp::all()) {
                const bool fixed = apply(op, e) == e;
                switch (op.kind()) {
                    case SymmetryOp::Kind::Simultaneous:
                        simultaneous += fixed ? 1 : 0;
                        break;
                    case SymmetryOp::Kind::Transposition:
                    case SymmetryOp::Kind::LabelSwap:
                        bad = bad || fixed;
                        break;
                }
            }
            if (simultaneous != 1 || bad) {
                witness = e.short_string();
                break;
            }
        }
        results.push_back(witness.empty()
                              ? pass("events.nls_simultaneous_symmetry")
                              : fail("events.nls_simultaneous_symmetry", witness));
    }

    { // LS: signature is exactly its own transposition plus the label swap
        std::string witness;
        for (const EvenEvent& e : evens) {
            if (!is_label_symmetric(e)) continue;
            const std::vector<SymmetryOp> expected = {
                SymmetryOp::transposition(e.a.attr().first, e.a.attr().second),
                SymmetryOp::label_swap()};
            if (symmetry_signature(e) != expected) {
                witness = e.short_string();
                break;
            }
        }
        results.push_back(witness.empty()
                              ? pass("events.ls_signature")
                              : fail("events.ls_signature", witness));
    }

    { // each op is an involution; canonical text round-trips
        std::string witness;
        for (const EvenEvent& e : evens) {
            for (const SymmetryOp& op : SymmetryOp::all())
                if (apply(op, apply(op, e)) != e) witness = e.short_string();
            if (parse_even_event(e.short_string()) != e ||
                parse_even_event(e.expanded_string()) != e)
                witness = e.short_string();
            if (!witness.empty()) break;
        }
        results.push_back(witness.empty()
                              ? pass("events.involutions_and_roundtrip")
                              : fail("events.involutions_and_roundtrip", witness));
    }

    { // the three generated 4-sets partition the 12 non-LS events
        std::set<EvenEvent> all_generated;
        bool ok = true;
        std::string detail;
        for (System s : {System::QI, System::CI, System::RI}) {
            const auto attrs = system_attrs(s);
            std::vector<std::vector<EvenEvent>> sets;
            for (const CombinedAttr& attr : attrs) {
                const EvenEvent ls =
                    EvenEvent::of(CombinedEvent::named(attr.name(), Label::One),
                                  CombinedEvent::named(attr.name(), Label::Two));
                sets.push_back(generate_nls(ls));
            }
            if (sets[0] != sets[1]) {
                ok = false;
                detail = std::string(system_name(s)) + ": LS pair generates " +
                         event_list(sets[0]) + " vs " + event_list(sets[1]);
                break;
            }
            for (const EvenEvent& e : sets[0])
                if (!all_generated.insert(e).second) {
                    ok = false;
                    detail = "event generated twice: " + e.short_string();
                }
        }
        if (ok && all_generated.size() != 12) {
            ok = false;
            detail = "generated union has " + std::to_string(all_generated.size()) +
                     " events";
        }
        if (ok)
            for (const EvenEvent& e : evens)
                if (!is_label_symmetric(e) && !all_generated.count(e)) {
                    ok = false;
                    detail = "non-LS event not generated: " + e.short_string();
                }
        results.push_back(ok ? pass("events.generate_nls_partition")
                             : fail("events.generate_nls_partition", detail));
    }

    { // label swap is a fixed-point-free involution on the non-LS events
        std::string witness;
        for (const EvenEvent& e : evens) {
            if (is_label_symmetric(e)) continue;
            const EvenEvent swapped = apply(SymmetryOp::label_swap(), e);
            if (swapped == e || is_label_symmetric(swapped) ||
                apply(SymmetryOp::label_swap(), swapped) != e) {
                witness = e.short_string();
                break;
            }
        }
        results.push_back(witness.empty()
                              ? pass("events.label_swap_on_nls")
                              : fail("events.label_swap_on_nls", witness));
    }

    { // two-box arrangements and the bose quotient
        const auto classical = arrangements(ArrangementMode::Classical);
        const auto bose = arrangements(ArrangementMode::Bose);
        std::set<std::string> bose_names;
        for (const Arrangement& a : bose) bose_names.insert(a.to_string());
        const bool ok = classical.size() == 4 && bose.size() == 3 &&
                        bose_names.count("L(1)R(2)+L(2)R(1)") == 1 &&
                        bose_names.count("L(1)L(2)") == 1 &&
                        bose_names.count("R(1)R(2)") == 1;
        std::ostringstream detail;
        detail << "classical " << classical.size() << ", bose " << bose.size();
        results.push_back(ok ? pass("events.arrangements", detail.str())
                             : fail("events.arrangements", detail.str()));
    }

    return results;
}

std::vector<CheckResult> verify_table2(const std::optional<std::string>& golden_json) {
    std::vector<CheckResult> results;
    const std::vector<ClassificationRecord> records = table2();

    { // 18 records, six per system
        std::map<System, int> counts;
        for (const ClassificationRecord& rec : records) ++counts[rec.system];
        std::set<EvenEvent> distinct;
        for (const ClassificationRecord& rec : records) distinct.insert(rec.event);
        const bool ok = records.size() == 18 && distinct.size() == 18 &&
                        counts[System::QI] == 6 && counts[System::CI] == 6 &&
                        counts[System::RI] == 6;
        std::ostringstream detail;
        detail << "QI " << counts[System::QI] << ", CI " << counts[System::CI]
               << ", RI " << counts[System::RI];
        results.push_back(ok ? pass("table2.system_partition", detail.str())
                             : fail("table2.system_partition", detail.str()));
    }

    { // regular/anti split per system: QI 2/4, CI 4/2, RI 4/2
        std::map<System, std::pair<int, int>> counts;
        for (const ClassificationRecord& rec : records) {
            auto& [regular, anti] = counts[rec.system];
            (rec.status == Status::Regular ? regular : anti) += 1;
        }
        const bool ok = counts[System::QI] == std::pair{2, 4} &&
                        counts[System::CI] == std::pair{4, 2} &&
                        counts[System::RI] == std::pair{4, 2};
        std::ostringstream detail;
        for (System s : {System::QI, System::CI, System::RI})
            detail << system_name(s) << " " << counts[s].first << "/"
                   << counts[s].second << " ";
        results.push_back(ok ? pass("table2.status_counts", detail.str())
                             : fail("table2.status_counts", detail.str()));
    }

    { // anti <=> both summands prohibited <=> at least one prohibited
        std::string witness;
        for (const ClassificationRecord& rec : records) {
            const bool first = is_prohibited(rec.system, rec.event.a);
            const bool second = is_prohibited(rec.system, rec.event.b);
            if (first != second || (rec.status == Status::Anti) != first) {
                witness = rec.event.short_string();
                break;
            }
        }
        results.push_back(witness.empty()
                              ? pass("table2.prohibition_consistency")
                              : fail("table2.prohibition_consistency", witness));
    }

    { // rotate90: involution, QI set fixed, CI and RI sets exchanged
        std::map<System, std::set<EvenEvent>> by_system;
        for (const ClassificationRecord& rec : records)
            by_system[rec.system].insert(rec.event);
        std::set<EvenEvent> qi_image, ci_image, ri_image;
        bool involution = true;
        for (const ClassificationRecord& rec : records) {
            const EvenEvent rotated = rotate90(rec.event);
            involution = involution && rotate90(rotated) == rec.event;
            if (rec.system == System::QI) qi_image.insert(rotated);
            if (rec.system == System::CI) ci_image.insert(rotated);
            if (rec.system == System::RI) ri_image.insert(rotated);
        }
        const bool ok = involution && qi_image == by_system[System::QI] &&
                        ci_image == by_system[System::RI] &&
                        ri_image == by_system[System::CI];
        results.push_back(ok ? pass("table2.rotation_action")
                             : fail("table2.rotation_action",
                                    involution ? "image sets wrong"
                                               : "not an involution"));
    }

    { // summand-level identity between the CI and RI regular/anti families
        auto summands = [&](System s, Status status) {
            std::multiset<CombinedEvent> out;
            for (const ClassificationRecord& rec : records)
                if (rec.system == s && rec.status == status) {
                    out.insert(rec.event.a);
                    out.insert(rec.event.b);
                }
            return out;
        };
        const bool ok =
            summands(System::CI, Status::Regular) == summands(System::RI, Status::Regular) &&
            summands(System::CI, Status::Anti) == summands(System::RI, Status::Anti);
        results.push_back(ok ? pass("table2.ci_ri_summand_identity")
                             : fail("table2.ci_ri_summand_identity",
                                    "summand multisets differ"));
    }

    { // anti-events are exactly the generated events carrying prohibited
      // summands; all four QI-generated events are anti
        std::string witness;
        for (const ClassificationRecord& rec : records) {
            if (is_label_symmetric(rec.event)) continue;
            const bool prohibited = is_prohibited(rec.system, rec.event.a);
            if ((rec.status == Status::Anti) != prohibited) {
                witness = rec.event.short_string();
                break;
            }
            if (rec.system == System::QI && rec.status != Status::Anti) {
                witness = rec.event.short_string();
                break;
            }
        }
        results.push_back(witness.empty()
                              ? pass("table2.generated_anti_events")
                              : fail("table2.generated_anti_events", witness));
    }

    { // RI separability: LS events separable, generated ones fused
        std::string witness;
        for (const ClassificationRecord& rec : records) {
            if (rec.system != System::RI) continue;
            const RiSeparability sep = ri_separability(rec.event);
            const bool expect_separable = is_label_symmetric(rec.event);
            if ((sep == RiSeparability::Separable) != expect_separable) {
                witness = rec.event.short_string();
                break;
            }
        }
        bool rejects = false;
        try {
            ri_separability(parse_even_event("X(1,2)+X(2,1)"));
        } catch (const NotRISystem&) {
            rejects = true;
        }
        results.push_back(witness.empty() && rejects
                              ? pass("table2.ri_separability")
                              : fail("table2.ri_separability",
                                     witness.empty() ? "non-RI event accepted"
                                                     : witness));
    }

    { // screen assignments stated in the second-configuration discussion
        const auto qi2 = screen_assignment(Regime::QI, Configuration::Second);
        const auto ci2 = screen_assignment(Regime::CI, Configuration::Second);
        const auto ci1 = screen_assignment(Regime::CI, Configuration::First);
        const auto mid = screen_assignment(Regime::Intermediate, Configuration::Second);
        const bool ok =
            qi2.size() == 4 &&
            std::all_of(qi2.begin(), qi2.end(),
                        [](const auto& kv) { return kv.second == System::QI; }) &&
            ci2.at(ScreenId::E) == System::CI && ci2.at(ScreenId::W) == System::CI &&
            ci2.at(ScreenId::N) == System::RI && ci2.at(ScreenId::S) == System::RI &&
            ci1.size() == 2 && ci1.at(ScreenId::E) == System::CI &&
            ci1.at(ScreenId::W) == System::CI && mid.empty();
        results.push_back(ok ? pass("table2.screen_assignment")
                             : fail("table2.screen_assignment", "assignment map wrong"));
    }

    { // absolute prohibition rule is the documented weaker variant (16 of 18)
        std::map<EvenEvent, Status> absolute;
        for (const ClassificationRecord& rec : table2(ProhibitionRule::Absolute))
            absolute[rec.event] = rec.status;
        int agree = 0;
        for (const ClassificationRecord& rec : records)
            agree += absolute.at(rec.event) == rec.status ? 1 : 0;
        std::ostringstream detail;
        detail << agree << "/18 statuses agree";
        results.push_back(agree == 16
                              ? pass("table2.absolute_rule_diagnostic", detail.str())
                              : fail("table2.absolute_rule_diagnostic", detail.str()));
    }

    if (golden_json) {
        const std::vector<std::string> mismatches =
            table2_golden_mismatches(*golden_json);
        if (mismatches.empty()) {
            results.push_back(pass("table2.golden_reproduction", "18/18 records match"));
        } else {
            std::string detail;
            for (const std::string& m : mismatches) {
                if (!detail.empty()) detail += "; ";
                detail += m;
            }
            results.push_back(fail("table2.golden_reproduction", detail));
        }
    } else {
        results.push_back(pass("table2.golden_reproduction",
                               "skipped: no golden transcription supplied"));
    }

    return results;
}

std::vector<CheckResult> verify_suite(std::string_view suite,
                                      const std::optional<std::string>& golden_json) {
    if (suite == "optics") return verify_optics();
    if (suite == "events") return verify_events();
    if (suite == "table2") return verify_table2(golden_json);
    if (suite == "all") {
        std::vector<CheckResult> results = verify_optics();
        for (auto& r : verify_events()) results.push_back(std::move(r));
        for (auto& r : verify_table2(golden_json)) results.push_back(std::move(r));
        return results;
    }
    throw std::invalid_argument("unknown suite '" + std::string(suite) +
                                "' (expected optics, events, table2 or all)");
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

std::string format_report(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    int passed = 0;
    for (const CheckResult& r : results) {
        if (r.passed) {
            ++passed;
            out << "PASS " << r.name;
            if (!r.detail.empty()) out << " (" << r.detail << ")";
        } else {
            out << "FAIL " << r.name << ": " << r.detail;
        }
        out << '\n';
    }
    out << passed << "/" << results.size() << " checks passed\n";
    return out.str();
}

} // namespace twinslit
