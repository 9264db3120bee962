#include <doctest.h>

#include <algorithm>
#include <set>

#include "twinslit/events.hpp"

using namespace twinslit;

namespace {

EvenEvent ls_event(char name) {
    return EvenEvent::of(CombinedEvent::named(name, Label::One),
                         CombinedEvent::named(name, Label::Two));
}

std::set<std::string> short_strings(const std::vector<EvenEvent>& events) {
    std::set<std::string> out;
    for (const EvenEvent& e : events) out.insert(e.short_string());
    return out;
}

} // namespace

TEST_CASE("combined attribute naming follows the fixed table") {
    CHECK(CombinedAttr::of(Attr::A, Attr::D).name() == 'X');
    CHECK(CombinedAttr::of(Attr::B, Attr::C).name() == 'Y');
    CHECK(CombinedAttr::of(Attr::A, Attr::B).name() == 'E');
    CHECK(CombinedAttr::of(Attr::C, Attr::D).name() == 'W');
    CHECK(CombinedAttr::of(Attr::A, Attr::C).name() == 'N');
    CHECK(CombinedAttr::of(Attr::B, Attr::D).name() == 'S');
    CHECK(CombinedAttr::of(Attr::D, Attr::A) == CombinedAttr::by_name('X'));
    CHECK(CombinedAttr::by_name('E').complement() == CombinedAttr::by_name('W'));
    CHECK_THROWS_AS(CombinedAttr::by_name('Q'), EventParseError);
    CHECK_THROWS_AS(CombinedAttr::of(Attr::A, Attr::A), EventParseError);
}

TEST_CASE("enumerate_combined_events matches brute force over elementary pairs") {
    const std::vector<CombinedEvent> enumerated = enumerate_combined_events();
    CHECK(enumerated.size() == 12);

    std::set<CombinedEvent> brute;
    for (Attr a1 : kAllAttrs)
        for (Label l1 : kAllLabels)
            for (Attr a2 : kAllAttrs)
                for (Label l2 : kAllLabels)
                    if (a1 != a2 && l1 != l2)
                        brute.insert(CombinedEvent::of(ElementaryEvent{a1, l1},
                                                       ElementaryEvent{a2, l2}));
    CHECK(brute == std::set<CombinedEvent>(enumerated.begin(), enumerated.end()));

    const CombinedEvent x12 = CombinedEvent::named('X', Label::One);
    CHECK(x12.short_string() == "X(1,2)");
    CHECK(x12.expanded_string() == "A(1)D(2)");
    CHECK(std::count(enumerated.begin(), enumerated.end(), x12) == 1);
}

TEST_CASE("combined events reject repeated attributes or labels") {
    CHECK_THROWS_AS(CombinedEvent::of(ElementaryEvent{Attr::A, Label::One},
                                      ElementaryEvent{Attr::A, Label::Two}),
                    EventParseError);
    CHECK_THROWS_AS(CombinedEvent::of(ElementaryEvent{Attr::A, Label::One},
                                      ElementaryEvent{Attr::B, Label::One}),
                    EventParseError);
}

TEST_CASE("enumerate_even_events: 18 total, 6 with two attributes, 12 with four") {
    const std::vector<EvenEvent> evens = enumerate_even_events();
    CHECK(evens.size() == 18);

    // brute force over all pairs of the 12 combined events
    const std::vector<CombinedEvent> combined = enumerate_combined_events();
    std::set<EvenEvent> brute;
    int rejected_odd = 0;
    for (std::size_t i = 0; i < combined.size(); ++i)
        for (std::size_t j = i + 1; j < combined.size(); ++j) {
            std::set<Attr> attrs = {combined[i].lo.attr, combined[i].hi.attr,
                                    combined[j].lo.attr, combined[j].hi.attr};
            if (attrs.size() == 3) {
                ++rejected_odd;
                continue;
            }
            brute.insert(EvenEvent::of(combined[i], combined[j]));
        }
    CHECK(brute == std::set<EvenEvent>(evens.begin(), evens.end()));
    CHECK(rejected_odd == 66 - 18);

    const long two_attrs = std::count_if(
        evens.begin(), evens.end(),
        [](const EvenEvent& e) { return e.attribute_count() == 2; });
    CHECK(two_attrs == 6);
    CHECK(short_strings(evens).count("X(2,1)+Y(2,1)") == 1);

    CHECK_THROWS_AS(EvenEvent::of(CombinedEvent::named('X', Label::One),
                                  CombinedEvent::named('N', Label::One)),
                    EventParseError); // three distinct attributes
    CHECK_THROWS_AS(EvenEvent::of(CombinedEvent::named('X', Label::One),
                                  CombinedEvent::named('X', Label::One)),
                    EventParseError); // repeated term
}

TEST_CASE("apply: worked permutation examples") {
    const EvenEvent s_ls = ls_event('S');
    CHECK(apply(SymmetryOp::transposition(Attr::B, Attr::D), s_ls) == s_ls);

    const EvenEvent x_ls = ls_event('X');
    CHECK(apply(SymmetryOp::label_swap(), x_ls) == x_ls);

    const EvenEvent xy = parse_even_event("X(1,2)+Y(1,2)");
    const SymmetryOp ab_cd = SymmetryOp::simultaneous(CombinedAttr::by_name('E'),
                                                      CombinedAttr::by_name('W'));
    CHECK(apply(ab_cd, xy) == xy);

    // a transposition that genuinely moves the event
    CHECK(apply(SymmetryOp::transposition(Attr::A, Attr::B), xy) ==
          parse_even_event("S(1,2)+N(1,2)"));
}

TEST_CASE("symmetry ops are involutions on every even event") {
    for (const EvenEvent& e : enumerate_even_events())
        for (const SymmetryOp& op : SymmetryOp::all())
            CHECK(apply(op, apply(op, e)) == e);
}

TEST_CASE("signatures: own transposition plus label swap for LS events") {
    const std::vector<SymmetryOp> x_sig = symmetry_signature(ls_event('X'));
    REQUIRE(x_sig.size() == 2);
    CHECK(x_sig[0] == SymmetryOp::transposition(Attr::A, Attr::D));
    CHECK(x_sig[1] == SymmetryOp::label_swap());
    CHECK(x_sig[0].to_string() == "(A,D)");
    CHECK(x_sig[1].to_string() == "(1,2)");

    for (const EvenEvent& e : enumerate_even_events()) {
        if (e.attribute_count() != 2) continue;
        const std::vector<SymmetryOp> sig = symmetry_signature(e);
        REQUIRE(sig.size() == 2);
        CHECK(sig[0].kind() == SymmetryOp::Kind::Transposition);
        CHECK(sig[0] == SymmetryOp::transposition(e.a.attr().first,
                                                  e.a.attr().second));
        CHECK(sig[1] == SymmetryOp::label_swap());
    }
}

TEST_CASE("signatures: the unique simultaneous pair for non-LS events") {
    const std::vector<SymmetryOp> ns_sig =
        symmetry_signature(parse_even_event("N(1,2)+S(1,2)"));
    REQUIRE(ns_sig.size() == 1);
    CHECK(ns_sig[0].to_string() == "(A,B)∩(C,D)");

    for (const EvenEvent& e : enumerate_even_events()) {
        if (e.attribute_count() != 4) continue;
        const std::vector<SymmetryOp> sig = symmetry_signature(e);
        REQUIRE(sig.size() == 1);
        CHECK(sig[0].kind() == SymmetryOp::Kind::Simultaneous);
    }
}

TEST_CASE("AS and LS coincide and mean exactly two distinct attributes") {
    int ls_count = 0;
    for (const EvenEvent& e : enumerate_even_events()) {
        const bool ls = is_label_symmetric(e);
        CHECK(is_auto_symmetric(e) == ls);
        CHECK((e.attribute_count() == 2) == ls);
        ls_count += ls ? 1 : 0;
    }
    CHECK(ls_count == 6);

    CHECK(is_label_symmetric(ls_event('E')));
    CHECK_FALSE(is_label_symmetric(parse_even_event("X(1,2)+Y(1,2)")));
    CHECK(is_auto_symmetric(ls_event('S')));
    CHECK_FALSE(is_auto_symmetric(parse_even_event("X(2,1)+Y(2,1)")));
}

TEST_CASE("label swap moves every non-LS event and pairs them up") {
    for (const EvenEvent& e : enumerate_even_events()) {
        if (is_label_symmetric(e)) continue;
        const EvenEvent swapped = apply(SymmetryOp::label_swap(), e);
        CHECK(swapped != e);
        CHECK_FALSE(is_label_symmetric(swapped));
        CHECK(apply(SymmetryOp::label_swap(), swapped) == e);
    }
}

TEST_CASE("generate_nls: worked replacement example from W(1,2)+W(2,1)") {
    const std::vector<EvenEvent> generated = generate_nls(ls_event('W'));
    const std::set<std::string> names = short_strings(generated);
    REQUIRE(generated.size() == 4);
    CHECK(names.count("X(1,2)+Y(1,2)") == 1);
    CHECK(names.count("N(1,2)+S(1,2)") == 1); // = S(1,2)+N(1,2)
    CHECK(names.count("N(2,1)+S(2,1)") == 1);
    CHECK(names.count("X(2,1)+Y(2,1)") == 1);
}

TEST_CASE("generate_nls from the X event yields the four QI anti-events") {
    const std::set<std::string> names = short_strings(generate_nls(ls_event('X')));
    CHECK(names == std::set<std::string>{"N(2,1)+S(1,2)", "E(2,1)+W(1,2)",
                                         "N(1,2)+S(2,1)", "E(1,2)+W(2,1)"});
}

TEST_CASE("the two LS events of one attribute pairing generate the same set") {
    CHECK(generate_nls(ls_event('X')) == generate_nls(ls_event('Y')));
    CHECK(generate_nls(ls_event('E')) == generate_nls(ls_event('W')));
    CHECK(generate_nls(ls_event('N')) == generate_nls(ls_event('S')));
}

TEST_CASE("the three generated 4-sets partition the 12 non-LS events") {
    std::set<EvenEvent> all;
    for (char name : {'X', 'E', 'N'})
        for (const EvenEvent& e : generate_nls(ls_event(name))) {
            CHECK_FALSE(is_label_symmetric(e));
            CHECK(all.insert(e).second); // pairwise disjoint
        }
    CHECK(all.size() == 12);
}

TEST_CASE("generate_nls rejects non-label-symmetric input") {
    CHECK_THROWS_AS(generate_nls(parse_even_event("X(1,2)+Y(1,2)")),
                    NotLabelSymmetric);
}

TEST_CASE("event literals parse in both forms and round-trip") {
    const EvenEvent from_short = parse_even_event("X(1,2)+X(2,1)");
    const EvenEvent from_expanded = parse_even_event("A(1)D(2)+A(2)D(1)");
    CHECK(from_short == from_expanded);
    CHECK(from_short.short_string() == "X(1,2)+X(2,1)");
    CHECK(from_short.expanded_string() == "A(1)D(2)+A(2)D(1)");

    // order-insensitive and whitespace-tolerant, mixed forms allowed
    CHECK(parse_even_event("X(2,1) + X(1,2)") == from_short);
    CHECK(parse_even_event("D(2)A(1)+A(2)D(1)") == from_short);
    CHECK(parse_even_event(" X(1,2)+A(2)D(1) ") == from_short);

    for (const EvenEvent& e : enumerate_even_events()) {
        CHECK(parse_even_event(e.short_string()) == e);
        CHECK(parse_even_event(e.expanded_string()) == e);
    }
    for (const CombinedEvent& c : enumerate_combined_events()) {
        CHECK(parse_combined_event(c.short_string()) == c);
        CHECK(parse_combined_event(c.expanded_string()) == c);
    }
}

TEST_CASE("event literal error paths") {
    CHECK_THROWS_AS(parse_even_event("X(1,2)"), EventParseError);      // no '+'
    CHECK_THROWS_AS(parse_even_event("X(1,1)+Y(1,2)"), EventParseError);
    CHECK_THROWS_AS(parse_even_event("X(1,2)+N(1,2)"), EventParseError); // 3 attrs
    CHECK_THROWS_AS(parse_even_event("X(1,2)+X(1,2)"), EventParseError); // repeat
    CHECK_THROWS_AS(parse_even_event("Q(1,2)+X(1,2)"), EventParseError);
    CHECK_THROWS_AS(parse_even_event("A(3)D(2)+A(2)D(1)"), EventParseError);
    CHECK_THROWS_AS(parse_even_event("A(1)A(2)+B(1)C(2)"), EventParseError);
    CHECK_THROWS_AS(parse_even_event("X(1,2)+X(2,1)trailing"), EventParseError);
    CHECK_THROWS_AS(parse_even_event(""), EventParseError);
}

TEST_CASE("exhaustive stabilizer contains the signature and vacuous fixes") {
    const std::vector<std::string> stab = exhaustive_stabilizer(ls_event('X'));
    // (A,D), (B,C), (A,D)(B,C) each with and without the label swap, plus
    // the pure label swap: 7 non-identity elements
    CHECK(stab.size() == 7);
    CHECK(std::count(stab.begin(), stab.end(), "(A,D)") == 1);
    CHECK(std::count(stab.begin(), stab.end(), "(B,C)") == 1);
    CHECK(std::count(stab.begin(), stab.end(), "(A,D)(B,C)") == 1);
    CHECK(std::count(stab.begin(), stab.end(), "(1,2)") == 1);

    const std::vector<std::string> nls_stab =
        exhaustive_stabilizer(parse_even_event("X(1,2)+Y(1,2)"));
    CHECK(std::count(nls_stab.begin(), nls_stab.end(), "(A,B)(C,D)") == 1);
}

TEST_CASE("two-box arrangements: classical counts four, bose fuses to three") {
    const std::vector<Arrangement> classical = arrangements(ArrangementMode::Classical);
    REQUIRE(classical.size() == 4);
    std::set<std::string> classical_names;
    for (const Arrangement& a : classical) classical_names.insert(a.to_string());
    CHECK(classical_names == std::set<std::string>{"L(1)L(2)", "R(1)R(2)",
                                                   "L(1)R(2)", "L(2)R(1)"});

    const std::vector<Arrangement> bose = arrangements(ArrangementMode::Bose);
    REQUIRE(bose.size() == 3);
    std::set<std::string> bose_names;
    for (const Arrangement& a : bose) bose_names.insert(a.to_string());
    CHECK(bose_names == std::set<std::string>{"L(1)L(2)", "R(1)R(2)",
                                              "L(1)R(2)+L(2)R(1)"});

    // bose = classical with label-swap orbits fused
    int fused = 0;
    for (const Arrangement& a : bose) fused += a.fused() ? 1 : 0;
    CHECK(fused == 1);
    CHECK(arrangement_mode_from_name("bose") == ArrangementMode::Bose);
    CHECK_THROWS_AS(arrangement_mode_from_name("fermi"), std::invalid_argument);
}
