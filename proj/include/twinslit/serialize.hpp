#ifndef TWINSLIT_SERIALIZE_HPP
#define TWINSLIT_SERIALIZE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "twinslit/amplitude.hpp"
#include "twinslit/grid.hpp"
#include "twinslit/systems.hpp"

namespace twinslit {

// indent < 0 emits compact JSON; >= 0 pretty-prints with that many spaces.

std::string regime_report_json(const RegimeReport& report, int indent = -1);

// method_tag, regime_report and one {y,z,psi} object per sample.
std::string grid_json(const AmplitudeGrid& grid, const RegimeReport& report,
                      int indent = -1);

// kind: "elementary" (8 strings), "combined" (12 {short,expanded}), or
// "even" (18 {short,expanded,attribute_count,symmetries}).
std::string enumerate_json(std::string_view kind, int indent = -1);

std::string event_json(const EvenEvent& e, int indent = -1);
std::string symmetries_json(const EvenEvent& e, bool exhaustive,
                            int indent = -1);
std::string generated_events_json(const EvenEvent& ls, int indent = -1);
std::string rotate90_json(const EvenEvent& e, int indent = -1);
std::string classification_json(const ClassificationRecord& rec,
                                int indent = -1);
std::string arrangements_json(ArrangementMode mode, int indent = -1);
std::string screen_assignment_json(Regime regime, Configuration configuration,
                                   int indent = -1);

std::string table2_json(ProhibitionRule rule = ProhibitionRule::SystemRelative,
                        int indent = -1);
// System -> regular/anti blocks with signatures, one event per line.
std::string table2_text(ProhibitionRule rule = ProhibitionRule::SystemRelative);

// Compares the computed classification against a checked-in transcription
// (a JSON array of {system,status,short,expanded,symmetries}). Returns one
// description per mismatch; empty means exact agreement on all 18 records.
// Throws EventParseError when the golden document itself is malformed.
std::vector<std::string> table2_golden_mismatches(std::string_view golden_json);

// 12 significant digits, %g style.
std::string format_significant(double value);

} // namespace twinslit

#endif // TWINSLIT_SERIALIZE_HPP
