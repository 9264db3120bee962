#include "twinslit/systems.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace twinslit {

const char* system_name(System s) {
    switch (s) {
        case System::QI: return "QI";
        case System::CI: return "CI";
        case System::RI: return "RI";
    }
    return "?";
}

System system_from_name(std::string_view name) {
    if (name == "QI") return System::QI;
    if (name == "CI") return System::CI;
    if (name == "RI") return System::RI;
    throw std::invalid_argument("unknown system: " + std::string(name));
}

std::array<CombinedAttr, 2> system_attrs(System s) {
    switch (s) {
        case System::QI:
            return {CombinedAttr::by_name('X'), CombinedAttr::by_name('Y')};
        case System::CI:
            return {CombinedAttr::by_name('E'), CombinedAttr::by_name('W')};
        case System::RI:
            return {CombinedAttr::by_name('N'), CombinedAttr::by_name('S')};
    }
    throw std::logic_error("unhandled system");
}

System system_of(CombinedAttr t) {
    for (System s : {System::QI, System::CI, System::RI}) {
        const auto attrs = system_attrs(s);
        if (attrs[0] == t || attrs[1] == t) return s;
    }
    throw std::logic_error("unreachable: unowned combined attribute");
}

const char* status_name(Status s) {
    return s == Status::Regular ? "regular" : "anti";
}

ProhibitionRule prohibition_rule_from_name(std::string_view name) {
    if (name == "system") return ProhibitionRule::SystemRelative;
    if (name == "absolute") return ProhibitionRule::Absolute;
    throw std::invalid_argument("unknown prohibition rule: " + std::string(name) +
                                " (expected system or absolute)");
}

const char* prohibition_rule_name(ProhibitionRule r) {
    return r == ProhibitionRule::SystemRelative ? "system" : "absolute";
}

bool is_prohibited(System system, const CombinedEvent& ce, ProhibitionRule rule) {
    const char name = ce.attr().name();
    const bool same_side = name == 'E' || name == 'W';
    if (rule == ProhibitionRule::Absolute) return same_side;
    if (system == System::QI) return !(name == 'X' || name == 'Y');
    return same_side;
}

namespace {

// Non-LS event -> the unique system whose LS events generate it.
const std::map<EvenEvent, System>& generated_owner() {
    static const std::map<EvenEvent, System> owners = [] {
        std::map<EvenEvent, System> out;
        for (System s : {System::QI, System::CI, System::RI})
            for (const CombinedAttr& attr : system_attrs(s)) {
                const EvenEvent ls =
                    EvenEvent::of(CombinedEvent::named(attr.name(), Label::One),
                                  CombinedEvent::named(attr.name(), Label::Two));
                for (const EvenEvent& e : generate_nls(ls)) {
                    const auto [it, inserted] = out.emplace(e, s);
                    if (!inserted && it->second != s)
                        throw std::logic_error(
                            "non-LS event generated by two systems: " +
                            e.short_string());
                }
            }
        if (out.size() != 12)
            throw std::logic_error("expected 12 generated non-LS events");
        return out;
    }();
    return owners;
}

} // namespace

System owning_system(const EvenEvent& e) {
    if (is_label_symmetric(e)) return system_of(e.a.attr());
    return generated_owner().at(e);
}

ClassificationRecord classify(const EvenEvent& e, ProhibitionRule rule) {
    ClassificationRecord record;
    record.event = e;
    record.system = owning_system(e);
    const bool anti = is_prohibited(record.system, e.a, rule) ||
                      is_prohibited(record.system, e.b, rule);
    record.status = anti ? Status::Anti : Status::Regular;
    record.signature = symmetry_signature(e);
    return record;
}

std::vector<ClassificationRecord> table2(ProhibitionRule rule) {
    std::vector<ClassificationRecord> records;
    for (const EvenEvent& e : enumerate_even_events())
        records.push_back(classify(e, rule));
    std::sort(records.begin(), records.end(),
              [](const ClassificationRecord& a, const ClassificationRecord& b) {
                  if (a.system != b.system) return a.system < b.system;
                  if (a.status != b.status) return a.status < b.status;
                  return a.event < b.event;
              });
    return records;
}

EvenEvent rotate90(const EvenEvent& e) {
    return apply(SymmetryOp::transposition(Attr::B, Attr::C), e);
}

Configuration configuration_from_name(std::string_view name) {
    if (name == "first") return Configuration::First;
    if (name == "second") return Configuration::Second;
    throw std::invalid_argument("unknown configuration: " + std::string(name));
}

const char* screen_name(ScreenId s) {
    switch (s) {
        case ScreenId::E: return "E";
        case ScreenId::W: return "W";
        case ScreenId::N: return "N";
        case ScreenId::S: return "S";
    }
    return "?";
}

std::map<ScreenId, System> screen_assignment(Regime regime,
                                             Configuration configuration) {
    std::map<ScreenId, System> out;
    if (regime == Regime::Intermediate) return out; // no claim made
    if (regime == Regime::QI) {
        out[ScreenId::E] = System::QI;
        out[ScreenId::W] = System::QI;
        if (configuration == Configuration::Second) {
            out[ScreenId::N] = System::QI;
            out[ScreenId::S] = System::QI;
        }
        return out;
    }
    out[ScreenId::E] = System::CI;
    out[ScreenId::W] = System::CI;
    if (configuration == Configuration::Second) {
        out[ScreenId::N] = System::RI;
        out[ScreenId::S] = System::RI;
    }
    return out;
}

const char* ri_separability_name(RiSeparability s) {
    return s == RiSeparability::Separable ? "separable" : "fused";
}

RiSeparability ri_separability(const EvenEvent& e) {
    if (owning_system(e) != System::RI)
        throw NotRISystem("ri_separability applies to RI events only, got " +
                          e.short_string());
    return is_label_symmetric(e) ? RiSeparability::Separable
                                 : RiSeparability::Fused;
}

} // namespace twinslit
