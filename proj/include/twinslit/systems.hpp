#ifndef TWINSLIT_SYSTEMS_HPP
#define TWINSLIT_SYSTEMS_HPP

#include <map>
#include <string_view>
#include <vector>

#include "twinslit/amplitude.hpp"
#include "twinslit/events.hpp"

namespace twinslit {

// The three interference systems and their combined-attribute pairs:
// QI owns {X,Y}, CI owns {E,W}, RI owns the leftover {N,S}.
enum class System { QI, CI, RI };

const char* system_name(System s);
System system_from_name(std::string_view name); // throws std::invalid_argument

// The pair of combined attributes a system owns.
std::array<CombinedAttr, 2> system_attrs(System s);
// The system owning a combined attribute.
System system_of(CombinedAttr t);

enum class Status { Regular, Anti };
const char* status_name(Status s);

// Which combined events a system's prohibition rule rejects.
//   SystemRelative: QI prohibits everything outside {X,Y} (vertical momentum
//   conservation allows only those scenarios); CI and RI prohibit {E,W}
//   (both attributes on one horizontal side, impossible for the separated
//   photon pair). Reproduces all 18 table rows.
//   Absolute: {E,W} prohibited everywhere; comparison rule, reproduces 16.
enum class ProhibitionRule { SystemRelative, Absolute };

ProhibitionRule prohibition_rule_from_name(std::string_view name);
const char* prohibition_rule_name(ProhibitionRule r);

bool is_prohibited(System system, const CombinedEvent& ce,
                   ProhibitionRule rule = ProhibitionRule::SystemRelative);

struct ClassificationRecord {
    EvenEvent event;
    System system = System::QI;
    Status status = Status::Regular;
    std::vector<SymmetryOp> signature;

    auto operator<=>(const ClassificationRecord&) const = default;
};

// System: for an LS event, the owner of its combined attribute; for a non-LS
// event, the unique system whose LS events generate it. Status: anti iff a
// summand is prohibited under that system (the two summands always agree).
ClassificationRecord classify(const EvenEvent& e,
                              ProhibitionRule rule = ProhibitionRule::SystemRelative);

// The system claiming an even event, independent of any prohibition rule.
System owning_system(const EvenEvent& e);

// All 18 classification records, ordered by system (QI, CI, RI), status
// (regular before anti), then event.
std::vector<ClassificationRecord> table2(
    ProhibitionRule rule = ProhibitionRule::SystemRelative);

// Attribute relabeling B<->C: the 90-degree rotation of the apparatus. It
// induces E<->N and W<->S on combined attributes and fixes X and Y.
EvenEvent rotate90(const EvenEvent& e);

enum class Configuration { First, Second };
enum class ScreenId { E, W, N, S };

Configuration configuration_from_name(std::string_view name);
const char* screen_name(ScreenId s);

// Which system shows on which screen. First configuration has only E and W;
// the intermediate regime carries no claim and maps no screen.
std::map<ScreenId, System> screen_assignment(Regime regime,
                                             Configuration configuration);

enum class RiSeparability { Separable, Fused };
const char* ri_separability_name(RiSeparability s);

// Separable iff the event is label-symmetric: the pair of RI events on one
// screen splits into an LS and a non-LS member at the level of an elementary
// measurement. Throws NotRISystem for events outside RI.
RiSeparability ri_separability(const EvenEvent& e);

} // namespace twinslit

#endif // TWINSLIT_SYSTEMS_HPP
