#include "twinslit/events.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace twinslit {

char attr_char(Attr a) { return "ABCD"[static_cast<int>(a)]; }

int label_digit(Label l) { return static_cast<int>(l); }

Label other_label(Label l) {
    return l == Label::One ? Label::Two : Label::One;
}

std::string ElementaryEvent::to_string() const {
    std::string out;
    out += attr_char(attr);
    out += '(';
    out += static_cast<char>('0' + label_digit(label));
    out += ')';
    return out;
}

CombinedAttr CombinedAttr::of(Attr a, Attr b) {
    if (a == b)
        throw EventParseError("combined attribute needs two distinct attributes");
    CombinedAttr out;
    out.first = std::min(a, b);
    out.second = std::max(a, b);
    return out;
}

CombinedAttr CombinedAttr::by_name(char name) {
    switch (name) {
        case 'X': return of(Attr::A, Attr::D);
        case 'Y': return of(Attr::B, Attr::C);
        case 'E': return of(Attr::A, Attr::B);
        case 'W': return of(Attr::C, Attr::D);
        case 'N': return of(Attr::A, Attr::C);
        case 'S': return of(Attr::B, Attr::D);
        default:
            throw EventParseError(std::string("unknown combined attribute '") +
                                  name + "'");
    }
}

char CombinedAttr::name() const {
    for (char candidate : kCombinedAttrNames)
        if (by_name(candidate) == *this) return candidate;
    throw std::logic_error("unreachable: unnamed combined attribute");
}

CombinedAttr CombinedAttr::complement() const {
    Attr missing[2];
    int found = 0;
    for (Attr a : kAllAttrs)
        if (!contains(a)) missing[found++] = a;
    return of(missing[0], missing[1]);
}

std::vector<CombinedAttr> all_combined_attrs() {
    std::vector<CombinedAttr> out;
    for (char name : kCombinedAttrNames) out.push_back(CombinedAttr::by_name(name));
    return out;
}

CombinedEvent CombinedEvent::of(ElementaryEvent a, ElementaryEvent b) {
    if (a.attr == b.attr)
        throw EventParseError("combined event needs distinct attributes: " +
                              a.to_string() + b.to_string());
    if (a.label == b.label)
        throw EventParseError("combined event needs distinct labels: " +
                              a.to_string() + b.to_string());
    CombinedEvent out;
    out.lo = std::min(a, b);
    out.hi = std::max(a, b);
    return out;
}

CombinedEvent CombinedEvent::named(char name, Label first_label) {
    const CombinedAttr attr = CombinedAttr::by_name(name);
    return of(ElementaryEvent{attr.first, first_label},
              ElementaryEvent{attr.second, other_label(first_label)});
}

CombinedAttr CombinedEvent::attr() const {
    return CombinedAttr::of(lo.attr, hi.attr);
}

std::string CombinedEvent::short_string() const {
    std::string out;
    out += attr().name();
    out += lo.label == Label::One ? "(1,2)" : "(2,1)";
    return out;
}

std::string CombinedEvent::expanded_string() const {
    return lo.to_string() + hi.to_string();
}

EvenEvent EvenEvent::of(CombinedEvent s, CombinedEvent t) {
    if (s == t)
        throw EventParseError("even event needs two distinct combined events: " +
                              s.expanded_string() + " repeated");
    std::set<Attr> attrs = {s.lo.attr, s.hi.attr, t.lo.attr, t.hi.attr};
    if (attrs.size() != 2 && attrs.size() != 4)
        throw EventParseError("not an even event (3 distinct attributes): " +
                              s.expanded_string() + "+" + t.expanded_string());
    EvenEvent out;
    out.a = std::min(s, t);
    out.b = std::max(s, t);
    return out;
}

int EvenEvent::attribute_count() const {
    std::set<Attr> attrs = {a.lo.attr, a.hi.attr, b.lo.attr, b.hi.attr};
    return static_cast<int>(attrs.size());
}

std::array<ElementaryEvent, 4> EvenEvent::support() const {
    return {a.lo, a.hi, b.lo, b.hi};
}

std::string EvenEvent::short_string() const {
    return a.short_string() + "+" + b.short_string();
}

std::string EvenEvent::expanded_string() const {
    return a.expanded_string() + "+" + b.expanded_string();
}

SymmetryOp SymmetryOp::transposition(Attr a, Attr b) {
    const CombinedAttr pair = CombinedAttr::of(a, b);
    return SymmetryOp(Kind::Transposition, pair.first, pair.second, pair.first,
                      pair.second);
}

SymmetryOp SymmetryOp::simultaneous(CombinedAttr p, CombinedAttr q) {
    if (p.contains(q.first) || p.contains(q.second))
        throw EventParseError("simultaneous transpositions must be disjoint");
    if (q < p) std::swap(p, q);
    return SymmetryOp(Kind::Simultaneous, p.first, p.second, q.first, q.second);
}

SymmetryOp SymmetryOp::label_swap() {
    return SymmetryOp(Kind::LabelSwap, Attr::A, Attr::A, Attr::A, Attr::A);
}

const std::vector<SymmetryOp>& SymmetryOp::all() {
    static const std::vector<SymmetryOp> ops = [] {
        std::vector<SymmetryOp> out;
        for (std::size_t i = 0; i < kAllAttrs.size(); ++i)
            for (std::size_t j = i + 1; j < kAllAttrs.size(); ++j)
                out.push_back(transposition(kAllAttrs[i], kAllAttrs[j]));
        for (char name : {'E', 'N', 'X'}) {
            const CombinedAttr pair = CombinedAttr::by_name(name);
            out.push_back(simultaneous(pair, pair.complement()));
        }
        out.push_back(label_swap());
        return out;
    }();
    return ops;
}

SymmetryOp SymmetryOp::component_first() const {
    if (kind_ != Kind::Simultaneous)
        throw std::logic_error("component of a non-simultaneous op");
    return transposition(a_, b_);
}

SymmetryOp SymmetryOp::component_second() const {
    if (kind_ != Kind::Simultaneous)
        throw std::logic_error("component of a non-simultaneous op");
    return transposition(c_, d_);
}

ElementaryEvent SymmetryOp::apply(ElementaryEvent e) const {
    switch (kind_) {
        case Kind::LabelSwap:
            return {e.attr, other_label(e.label)};
        case Kind::Transposition:
            if (e.attr == a_) return {b_, e.label};
            if (e.attr == b_) return {a_, e.label};
            return e;
        case Kind::Simultaneous:
            if (e.attr == a_) return {b_, e.label};
            if (e.attr == b_) return {a_, e.label};
            if (e.attr == c_) return {d_, e.label};
            if (e.attr == d_) return {c_, e.label};
            return e;
    }
    return e;
}

std::string SymmetryOp::to_string() const {
    auto pair_string = [](Attr a, Attr b) {
        std::string out = "(";
        out += attr_char(a);
        out += ',';
        out += attr_char(b);
        out += ')';
        return out;
    };
    switch (kind_) {
        case Kind::Transposition: return pair_string(a_, b_);
        case Kind::Simultaneous:
            return pair_string(a_, b_) + "∩" + pair_string(c_, d_);
        case Kind::LabelSwap: return "(1,2)";
    }
    return "?";
}

CombinedEvent apply(const SymmetryOp& op, const CombinedEvent& e) {
    return CombinedEvent::of(op.apply(e.lo), op.apply(e.hi));
}

EvenEvent apply(const SymmetryOp& op, const EvenEvent& e) {
    return EvenEvent::of(apply(op, e.a), apply(op, e.b));
}

std::vector<CombinedEvent> enumerate_combined_events() {
    std::vector<CombinedEvent> out;
    for (const CombinedAttr& attr : all_combined_attrs())
        for (Label first : kAllLabels)
            out.push_back(CombinedEvent::named(attr.name(), first));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EvenEvent> enumerate_even_events() {
    const std::vector<CombinedEvent> combined = enumerate_combined_events();
    std::set<EvenEvent> unique;
    for (std::size_t i = 0; i < combined.size(); ++i)
        for (std::size_t j = i + 1; j < combined.size(); ++j) {
            const CombinedAttr p = combined[i].attr();
            const CombinedAttr q = combined[j].attr();
            const bool shares_one_attr =
                p != q && (p.contains(q.first) || p.contains(q.second));
            if (shares_one_attr) continue; // three distinct attributes
            unique.insert(EvenEvent::of(combined[i], combined[j]));
        }
    return {unique.begin(), unique.end()};
}

namespace {

bool fixes(const SymmetryOp& op, const EvenEvent& e) {
    return apply(op, e) == e;
}

// True when the op moves no elementary event of e (a transposition of the
// two absent attributes fixes every 2-attribute event this way).
bool acts_trivially(const SymmetryOp& op, const EvenEvent& e) {
    for (const ElementaryEvent& elem : e.support())
        if (op.apply(elem) != elem) return false;
    return true;
}

} // namespace

bool is_label_symmetric(const EvenEvent& e) {
    return fixes(SymmetryOp::label_swap(), e);
}

bool is_auto_symmetric(const EvenEvent& e) {
    for (const SymmetryOp& op : SymmetryOp::all())
        if (op.kind() == SymmetryOp::Kind::Transposition && fixes(op, e) &&
            !acts_trivially(op, e))
            return true;
    return false;
}

std::vector<SymmetryOp> symmetry_signature(const EvenEvent& e) {
    std::vector<SymmetryOp> signature;
    for (const SymmetryOp& op : SymmetryOp::all()) {
        if (!fixes(op, e) || acts_trivially(op, e)) continue;
        if (op.kind() == SymmetryOp::Kind::Simultaneous &&
            (fixes(op.component_first(), e) || fixes(op.component_second(), e)))
            continue; // implied by the component transposition alone
        signature.push_back(op);
    }
    return signature;
}

std::vector<std::string> exhaustive_stabilizer(const EvenEvent& e) {
    std::array<int, 4> perm = {0, 1, 2, 3};
    std::vector<std::string> out;
    do {
        auto mapped = [&](ElementaryEvent elem, bool swap_labels) {
            return ElementaryEvent{
                static_cast<Attr>(perm[static_cast<int>(elem.attr)]),
                swap_labels ? other_label(elem.label) : elem.label};
        };
        for (bool swap_labels : {false, true}) {
            const bool identity_perm = perm == std::array<int, 4>{0, 1, 2, 3};
            if (identity_perm && !swap_labels) continue;
            EvenEvent image = EvenEvent::of(
                CombinedEvent::of(mapped(e.a.lo, swap_labels),
                                  mapped(e.a.hi, swap_labels)),
                CombinedEvent::of(mapped(e.b.lo, swap_labels),
                                  mapped(e.b.hi, swap_labels)));
            if (image != e) continue;

            // cycle notation over {A,B,C,D}
            std::string text;
            std::array<bool, 4> seen = {false, false, false, false};
            for (int start = 0; start < 4; ++start) {
                if (seen[start] || perm[start] == start) continue;
                text += '(';
                int cursor = start;
                bool first = true;
                while (!seen[cursor]) {
                    seen[cursor] = true;
                    if (!first) text += ',';
                    text += attr_char(static_cast<Attr>(cursor));
                    first = false;
                    cursor = perm[cursor];
                }
                text += ')';
            }
            if (swap_labels) text += "(1,2)";
            out.push_back(text);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EvenEvent> generate_nls(const EvenEvent& ls) {
    if (!is_label_symmetric(ls))
        throw NotLabelSymmetric("generate_nls needs a label-symmetric event, got " +
                                ls.short_string());

    const CombinedAttr present = ls.a.attr();
    const CombinedAttr absent = present.complement();

    // The two bijections from the present onto the absent attribute pair.
    using Bijection = std::array<std::pair<Attr, Attr>, 2>;
    const std::array<Bijection, 2> bijections = {
        Bijection{std::pair{present.first, absent.first},
                  std::pair{present.second, absent.second}},
        Bijection{std::pair{present.first, absent.second},
                  std::pair{present.second, absent.first}}};

    std::set<EvenEvent> generated;
    for (Label target : kAllLabels)
        for (const auto& bijection : bijections) {
            auto replace = [&](ElementaryEvent elem) {
                if (elem.label != target) return elem;
                for (const auto& [from, to] : bijection)
                    if (elem.attr == from) return ElementaryEvent{to, elem.label};
                return elem;
            };
            generated.insert(
                EvenEvent::of(CombinedEvent::of(replace(ls.a.lo), replace(ls.a.hi)),
                              CombinedEvent::of(replace(ls.b.lo), replace(ls.b.hi))));
        }
    return {generated.begin(), generated.end()};
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    std::string_view original;

    void skip_space() {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    char take() {
        skip_space();
        if (pos >= text.size())
            throw EventParseError("unexpected end of event literal: '" +
                                  std::string(original) + "'");
        return text[pos++];
    }
    void expect(char c) {
        const char got = take();
        if (got != c)
            throw EventParseError(std::string("expected '") + c + "' but got '" +
                                  got + "' in '" + std::string(original) + "'");
    }
};

Label parse_label(Cursor& in) {
    const char c = in.take();
    if (c == '1') return Label::One;
    if (c == '2') return Label::Two;
    throw EventParseError(std::string("expected particle label 1 or 2, got '") +
                          c + "' in '" + std::string(in.original) + "'");
}

CombinedEvent parse_term(Cursor& in) {
    const char head = in.take();
    if (head >= 'A' && head <= 'D') {
        // expanded form: two elementary events
        auto elementary = [&](char attr) {
            in.expect('(');
            const Label label = parse_label(in);
            in.expect(')');
            return ElementaryEvent{static_cast<Attr>(attr - 'A'), label};
        };
        const ElementaryEvent first = elementary(head);
        const char second_attr = in.take();
        if (second_attr < 'A' || second_attr > 'D')
            throw EventParseError(
                std::string("expected a second elementary event, got '") +
                second_attr + "' in '" + std::string(in.original) + "'");
        return CombinedEvent::of(first, elementary(second_attr));
    }
    // short form: name(1,2) or name(2,1)
    const CombinedAttr attr = CombinedAttr::by_name(head);
    in.expect('(');
    const Label first = parse_label(in);
    in.expect(',');
    const Label second = parse_label(in);
    in.expect(')');
    if (first == second)
        throw EventParseError("labels must differ in '" +
                              std::string(in.original) + "'");
    return CombinedEvent::named(attr.name(), first);
}

} // namespace

CombinedEvent parse_combined_event(std::string_view text) {
    Cursor in{text, 0, text};
    const CombinedEvent event = parse_term(in);
    if (!in.done())
        throw EventParseError("trailing characters in '" + std::string(text) + "'");
    return event;
}

EvenEvent parse_even_event(std::string_view text) {
    Cursor in{text, 0, text};
    const CombinedEvent first = parse_term(in);
    in.expect('+');
    const CombinedEvent second = parse_term(in);
    if (!in.done())
        throw EventParseError("trailing characters in '" + std::string(text) + "'");
    return EvenEvent::of(first, second);
}

namespace {

std::string product_string(const std::array<Box, 2>& assignment) {
    // box-alphabetical, then by label: (R,L) prints as L(2)R(1)
    struct Entry {
        Box box;
        int label;
    };
    std::array<Entry, 2> entries = {Entry{assignment[0], 1},
                                    Entry{assignment[1], 2}};
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.box != b.box ? a.box < b.box : a.label < b.label;
    });
    std::string out;
    for (const Entry& entry : entries) {
        out += entry.box == Box::L ? 'L' : 'R';
        out += '(';
        out += static_cast<char>('0' + entry.label);
        out += ')';
    }
    return out;
}

} // namespace

std::string Arrangement::to_string() const {
    std::string out = product_string(terms[0]);
    for (std::size_t i = 1; i < terms.size(); ++i)
        out += "+" + product_string(terms[i]);
    return out;
}

std::vector<Arrangement> arrangements(ArrangementMode mode) {
    const std::array<Box, 2> ll = {Box::L, Box::L};
    const std::array<Box, 2> rr = {Box::R, Box::R};
    const std::array<Box, 2> lr = {Box::L, Box::R};
    const std::array<Box, 2> rl = {Box::R, Box::L};

    std::vector<Arrangement> out;
    out.push_back(Arrangement{{ll}});
    out.push_back(Arrangement{{rr}});
    if (mode == ArrangementMode::Classical) {
        out.push_back(Arrangement{{lr}});
        out.push_back(Arrangement{{rl}});
    } else {
        out.push_back(Arrangement{{lr, rl}}); // label-swap orbit fused
    }
    return out;
}

ArrangementMode arrangement_mode_from_name(std::string_view name) {
    if (name == "classical") return ArrangementMode::Classical;
    if (name == "bose") return ArrangementMode::Bose;
    throw std::invalid_argument("unknown arrangement mode: " + std::string(name));
}

} // namespace twinslit
