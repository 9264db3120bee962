#ifndef TWINSLIT_EVENTS_HPP
#define TWINSLIT_EVENTS_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twinslit/errors.hpp"

namespace twinslit {

// The four slit-passage attributes of a photon.
enum class Attr : std::uint8_t { A = 0, B = 1, C = 2, D = 3 };

// The two particle labels.
enum class Label : std::uint8_t { One = 1, Two = 2 };

inline constexpr std::array<Attr, 4> kAllAttrs = {Attr::A, Attr::B, Attr::C,
                                                  Attr::D};
inline constexpr std::array<Label, 2> kAllLabels = {Label::One, Label::Two};

char attr_char(Attr a);
int label_digit(Label l);
Label other_label(Label l);

// An attribute bound to a particle label: A(1), D(2), ...
struct ElementaryEvent {
    Attr attr = Attr::A;
    Label label = Label::One;

    std::string to_string() const; // "A(1)"
    auto operator<=>(const ElementaryEvent&) const = default;
};

// Unordered pair of distinct attributes. The six carry fixed single-letter
// names: X=AD, Y=BC, E=AB, W=CD, N=AC, S=BD.
struct CombinedAttr {
    Attr first = Attr::A;  // alphabetically first of the pair
    Attr second = Attr::B;

    static CombinedAttr of(Attr a, Attr b); // sorts; throws on a == b
    static CombinedAttr by_name(char name); // throws EventParseError
    char name() const;
    bool contains(Attr a) const { return a == first || a == second; }
    // The pair formed by the two attributes this one lacks.
    CombinedAttr complement() const;

    auto operator<=>(const CombinedAttr&) const = default;
};

inline constexpr std::array<char, 6> kCombinedAttrNames = {'X', 'Y', 'E',
                                                           'W', 'N', 'S'};
std::vector<CombinedAttr> all_combined_attrs();

// Product of two elementary events with distinct attributes and distinct
// labels, e.g. X(1,2) = A(1)D(2). Stored attribute-alphabetically.
struct CombinedEvent {
    ElementaryEvent lo; // the term with the alphabetically first attribute
    ElementaryEvent hi;

    // Validates distinctness and canonicalizes; throws EventParseError.
    static CombinedEvent of(ElementaryEvent a, ElementaryEvent b);
    // name in {X,Y,E,W,N,S}; first_label goes with the alphabetically first
    // attribute, so ('X', One) is X(1,2) = A(1)D(2).
    static CombinedEvent named(char name, Label first_label);

    CombinedAttr attr() const;
    std::string short_string() const;    // "X(1,2)"
    std::string expanded_string() const; // "A(1)D(2)"

    auto operator<=>(const CombinedEvent&) const = default;
};

// Formal sum of two distinct combined events whose attribute union has even
// size (2 or 4). Terms are stored in canonical order; the sum is unordered.
struct EvenEvent {
    CombinedEvent a; // canonically smaller term
    CombinedEvent b;

    // Validates term distinctness and the even attribute count; throws
    // EventParseError.
    static EvenEvent of(CombinedEvent s, CombinedEvent t);

    int attribute_count() const; // 2 or 4
    std::array<ElementaryEvent, 4> support() const;
    std::string short_string() const;    // "X(1,2)+X(2,1)"
    std::string expanded_string() const; // "A(1)D(2)+A(2)D(1)"

    auto operator<=>(const EvenEvent&) const = default;
};

// The ten permutation symmetries in scope: the six attribute transpositions,
// the three disjoint simultaneous transposition pairs, and the label swap.
class SymmetryOp {
  public:
    enum class Kind : std::uint8_t { Transposition, Simultaneous, LabelSwap };

    static SymmetryOp transposition(Attr a, Attr b);
    static SymmetryOp simultaneous(CombinedAttr p, CombinedAttr q); // disjoint
    static SymmetryOp label_swap();
    // Fixed order: 6 transpositions, 3 simultaneous pairs, label swap.
    static const std::vector<SymmetryOp>& all();

    Kind kind() const { return kind_; }
    // For Simultaneous, the two component transpositions.
    SymmetryOp component_first() const;
    SymmetryOp component_second() const;

    ElementaryEvent apply(ElementaryEvent e) const;
    std::string to_string() const; // "(A,D)", "(A,B)∩(C,D)", "(1,2)"

    auto operator<=>(const SymmetryOp&) const = default;

  private:
    SymmetryOp(Kind k, Attr a, Attr b, Attr c, Attr d)
        : kind_(k), a_(a), b_(b), c_(c), d_(d) {}

    Kind kind_;
    Attr a_, b_, c_, d_; // normalized: a<b, c<d, a<c; unused slots mirror a,b
};

CombinedEvent apply(const SymmetryOp& op, const CombinedEvent& e);
EvenEvent apply(const SymmetryOp& op, const EvenEvent& e);

// The 12 combined events of the four-slit arrangement, canonically sorted.
std::vector<CombinedEvent> enumerate_combined_events();

// The 18 even events: one 2-attribute sum per combined attribute plus four
// 4-attribute sums per disjoint attribute pairing.
std::vector<EvenEvent> enumerate_even_events();

// Invariant under the label swap (equivalently: auto-symmetric, equivalently
// attribute_count == 2).
bool is_label_symmetric(const EvenEvent& e);

// Invariant under some single attribute transposition acting non-trivially
// on the event's support.
bool is_auto_symmetric(const EvenEvent& e);

// The ops among the ten that fix e, act non-trivially on its support, and
// (for simultaneous pairs) are not already implied by a fixing component
// transposition. LS events yield their own-pair transposition plus the label
// swap; non-LS events yield their unique simultaneous pair.
std::vector<SymmetryOp> symmetry_signature(const EvenEvent& e);

// Diagnostic: every element of the full 24-element attribute permutation
// group, optionally composed with the label swap, that fixes e. Identity
// alone is omitted. Entries are cycle-notation strings such as
// "(A,D)(B,C)(1,2)".
std::vector<std::string> exhaustive_stabilizer(const EvenEvent& e);

// The four non-label-symmetric events generated from an LS event by
// replacing, per particle label, its two attributes with the two absent
// attributes in both bijections. Throws NotLabelSymmetric.
std::vector<EvenEvent> generate_nls(const EvenEvent& ls);

// Accepts either form, mixed, with optional whitespace:
//   "X(1,2)+X(2,1)", "A(1)D(2)+A(2)D(1)", "X(1,2) + A(2)D(1)".
EvenEvent parse_even_event(std::string_view text);
CombinedEvent parse_combined_event(std::string_view text);

// Two-box arrangements of the two particles over boxes L and R.
enum class Box : std::uint8_t { L, R };
enum class ArrangementMode { Classical, Bose };

struct Arrangement {
    // Box of particle 1 and particle 2 per product term; one term, or the
    // label-swap pair fused into a two-term sum.
    std::vector<std::array<Box, 2>> terms;

    bool fused() const { return terms.size() == 2; }
    std::string to_string() const; // "L(1)R(2)" or "L(1)R(2)+L(2)R(1)"
    auto operator<=>(const Arrangement&) const = default;
};

// Classical: the four ordered assignments. Bose: label-swap orbits fused,
// leaving L(1)L(2), R(1)R(2) and the symmetric mixed sum.
std::vector<Arrangement> arrangements(ArrangementMode mode);

ArrangementMode arrangement_mode_from_name(std::string_view name);

} // namespace twinslit

#endif // TWINSLIT_EVENTS_HPP
