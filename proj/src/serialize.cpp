#include "twinslit/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace twinslit {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j, int indent) {
    return indent < 0 ? j.dump() : j.dump(indent);
}

Json symmetry_names(const std::vector<SymmetryOp>& ops) {
    Json out = Json::array();
    for (const SymmetryOp& op : ops) out.push_back(op.to_string());
    return out;
}

Json event_object(const EvenEvent& e) {
    Json out;
    out["short"] = e.short_string();
    out["expanded"] = e.expanded_string();
    out["attribute_count"] = e.attribute_count();
    out["symmetries"] = symmetry_names(symmetry_signature(e));
    return out;
}

Json regime_object(const RegimeReport& report) {
    Json out;
    out["k_theta_d"] = report.k_theta_d;
    out["regime"] = regime_name(report.regime);
    if (std::isinf(report.momentum_ratio))
        out["momentum_ratio"] = "infinite";
    else
        out["momentum_ratio"] = report.momentum_ratio;
    out["envelope"] = report.envelope;
    return out;
}

Json record_object(const ClassificationRecord& rec) {
    Json out;
    out["system"] = system_name(rec.system);
    out["status"] = status_name(rec.status);
    out["short"] = rec.event.short_string();
    out["expanded"] = rec.event.expanded_string();
    out["symmetries"] = symmetry_names(rec.signature);
    return out;
}

} // namespace

std::string format_significant(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

std::string regime_report_json(const RegimeReport& report, int indent) {
    return dump(regime_object(report), indent);
}

std::string grid_json(const AmplitudeGrid& grid, const RegimeReport& report,
                      int indent) {
    Json out;
    out["method_tag"] = method_tag(grid.method);
    out["regime_report"] = regime_object(report);
    Json samples = Json::array();
    for (std::size_t i = 0; i < grid.rows(); ++i)
        for (std::size_t j = 0; j < grid.cols(); ++j) {
            Json sample;
            sample["y"] = grid.y[i];
            sample["z"] = grid.z[j];
            sample["psi"] = grid.at(i, j);
            samples.push_back(std::move(sample));
        }
    out["samples"] = std::move(samples);
    return dump(out, indent);
}

std::string enumerate_json(std::string_view kind, int indent) {
    Json out = Json::array();
    if (kind == "elementary") {
        for (Attr a : kAllAttrs)
            for (Label l : kAllLabels)
                out.push_back(ElementaryEvent{a, l}.to_string());
    } else if (kind == "combined") {
        for (const CombinedEvent& e : enumerate_combined_events()) {
            Json entry;
            entry["short"] = e.short_string();
            entry["expanded"] = e.expanded_string();
            out.push_back(std::move(entry));
        }
    } else if (kind == "even") {
        for (const EvenEvent& e : enumerate_even_events())
            out.push_back(event_object(e));
    } else {
        throw std::invalid_argument("unknown enumeration kind '" +
                                    std::string(kind) +
                                    "' (expected elementary, combined or even)");
    }
    return dump(out, indent);
}

std::string event_json(const EvenEvent& e, int indent) {
    return dump(event_object(e), indent);
}

std::string symmetries_json(const EvenEvent& e, bool exhaustive, int indent) {
    Json out;
    out["short"] = e.short_string();
    out["expanded"] = e.expanded_string();
    out["symmetries"] = symmetry_names(symmetry_signature(e));
    if (exhaustive) {
        Json full = Json::array();
        for (const std::string& element : exhaustive_stabilizer(e))
            full.push_back(element);
        out["exhaustive_stabilizer"] = std::move(full);
    }
    return dump(out, indent);
}

std::string generated_events_json(const EvenEvent& ls, int indent) {
    Json out;
    out["from"] = ls.short_string();
    Json generated = Json::array();
    for (const EvenEvent& e : generate_nls(ls)) generated.push_back(event_object(e));
    out["generated"] = std::move(generated);
    return dump(out, indent);
}

std::string rotate90_json(const EvenEvent& e, int indent) {
    const EvenEvent rotated = rotate90(e);
    Json out;
    out["input"] = e.short_string();
    out["short"] = rotated.short_string();
    out["expanded"] = rotated.expanded_string();
    return dump(out, indent);
}

std::string classification_json(const ClassificationRecord& rec, int indent) {
    Json out = record_object(rec);
    out["attribute_count"] = rec.event.attribute_count();
    if (rec.system == System::RI)
        out["ri_separability"] = ri_separability_name(ri_separability(rec.event));
    return dump(out, indent);
}

std::string arrangements_json(ArrangementMode mode, int indent) {
    Json out = Json::array();
    for (const Arrangement& a : arrangements(mode)) {
        Json entry;
        entry["arrangement"] = a.to_string();
        entry["fused"] = a.fused();
        out.push_back(std::move(entry));
    }
    return dump(out, indent);
}

std::string screen_assignment_json(Regime regime, Configuration configuration,
                                   int indent) {
    Json out;
    for (ScreenId screen : {ScreenId::E, ScreenId::W, ScreenId::N, ScreenId::S}) {
        const auto assignment = screen_assignment(regime, configuration);
        const auto it = assignment.find(screen);
        if (it == assignment.end())
            out[screen_name(screen)] = nullptr;
        else
            out[screen_name(screen)] = system_name(it->second);
    }
    return dump(out, indent);
}

std::string table2_json(ProhibitionRule rule, int indent) {
    Json out = Json::array();
    for (const ClassificationRecord& rec : table2(rule))
        out.push_back(record_object(rec));
    return dump(out, indent);
}

std::string table2_text(ProhibitionRule rule) {
    std::ostringstream out;
    const std::vector<ClassificationRecord> records = table2(rule);
    for (System s : {System::QI, System::CI, System::RI}) {
        out << "== " << system_name(s) << " ==\n";
        for (Status status : {Status::Regular, Status::Anti}) {
            out << (status == Status::Regular ? " regular events:\n"
                                              : " anti-events:\n");
            for (const ClassificationRecord& rec : records) {
                if (rec.system != s || rec.status != status) continue;
                out << "   " << rec.event.short_string() << " = "
                    << rec.event.expanded_string() << "  <";
                for (std::size_t i = 0; i < rec.signature.size(); ++i) {
                    if (i) out << ", ";
                    out << rec.signature[i].to_string();
                }
                out << ">\n";
            }
        }
    }
    return out.str();
}

std::vector<std::string> table2_golden_mismatches(std::string_view golden_json) {
    Json golden;
    try {
        golden = Json::parse(golden_json);
    } catch (const nlohmann::json::exception& e) {
        throw EventParseError(std::string("golden table is not valid JSON: ") +
                              e.what());
    }
    if (!golden.is_array())
        throw EventParseError("golden table must be a JSON array of records");

    struct GoldenRecord {
        std::string system;
        std::string status;
        std::string expanded;
        std::vector<std::string> symmetries;
    };

    std::map<std::string, GoldenRecord> expected;
    for (const Json& entry : golden) {
        for (const char* field : {"system", "status", "short", "expanded", "symmetries"})
            if (!entry.contains(field))
                throw EventParseError(std::string("golden record missing field '") +
                                      field + "'");
        GoldenRecord rec;
        rec.system = entry["system"].get<std::string>();
        rec.status = entry["status"].get<std::string>();
        rec.expanded = entry["expanded"].get<std::string>();
        for (const Json& sym : entry["symmetries"])
            rec.symmetries.push_back(sym.get<std::string>());
        const std::string key = entry["short"].get<std::string>();
        if (!expected.emplace(key, std::move(rec)).second)
            throw EventParseError("golden table lists '" + key + "' twice");
    }

    std::vector<std::string> mismatches;
    if (expected.size() != 18)
        mismatches.push_back("golden table has " + std::to_string(expected.size()) +
                             " records, expected 18");

    std::set<std::string> seen;
    for (const ClassificationRecord& rec : table2()) {
        const std::string key = rec.event.short_string();
        seen.insert(key);
        const auto it = expected.find(key);
        if (it == expected.end()) {
            mismatches.push_back("computed event " + key + " absent from golden table");
            continue;
        }
        const GoldenRecord& want = it->second;
        if (want.expanded != rec.event.expanded_string())
            mismatches.push_back(key + ": expanded form " +
                                 rec.event.expanded_string() + " != golden " +
                                 want.expanded);
        if (want.system != system_name(rec.system))
            mismatches.push_back(key + ": system " + system_name(rec.system) +
                                 " != golden " + want.system);
        if (want.status != status_name(rec.status))
            mismatches.push_back(key + ": status " + status_name(rec.status) +
                                 " != golden " + want.status);
        std::vector<std::string> got;
        for (const SymmetryOp& op : rec.signature) got.push_back(op.to_string());
        if (want.symmetries != got) {
            std::string detail = key + ": symmetries [";
            for (std::size_t i = 0; i < got.size(); ++i)
                detail += (i ? ", " : "") + got[i];
            detail += "] != golden [";
            for (std::size_t i = 0; i < want.symmetries.size(); ++i)
                detail += (i ? ", " : "") + want.symmetries[i];
            detail += "]";
            mismatches.push_back(detail);
        }
    }
    for (const auto& [key, rec] : expected)
        if (!seen.count(key))
            mismatches.push_back("golden event " + key + " missing from computed table");
    return mismatches;
}

} // namespace twinslit
