#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "unistrat/constraint.hpp"
#include "unistrat/fixtures.hpp"

using namespace unistrat;
using testutil::loop_arena;

namespace {

// Four-state relation automata used to exercise the structural checkers;
// the diagonal letters are the (m,m) pairs.
TwoTapeDfa skeleton(int na, int nb) {
    TwoTapeDfa d;
    d.num_a = na;
    d.num_b = nb;
    d.states = 4;
    d.accepting = {true, false, false, false};
    d.delta.assign(static_cast<std::size_t>(d.states) * d.nm() * d.nm(), 3);
    return d;
}

void set_all(TwoTapeDfa& d, int from, int to) {
    int nn = d.nm() * d.nm();
    for (int l = 0; l < nn; ++l) d.delta[static_cast<std::size_t>(from) * nn + l] = to;
}

void set_diag(TwoTapeDfa& d, int from, int to) {
    for (int m = 0; m < d.nm(); ++m)
        d.delta[static_cast<std::size_t>(from) * d.nm() * d.nm() + m * d.nm() + m] = to;
}

}  // namespace

TEST_CASE("two-tape automata run paired words") {
    const GameFile gf = load_fixture("first-one");
    const Constraint& c = gf.constraint("first-one");
    REQUIRE(c.dfa_backed());

    // Opponent words with the same first-1 position are related.
    History h00 = {{0, 0}, {0, 0}};
    History h01 = {{0, 0}, {0, 1}};
    History h10 = {{0, 1}, {0, 0}};
    History h11 = {{0, 1}, {0, 1}};
    CHECK(c.equiv(h00, h00));
    CHECK(c.equiv(h01, h01));
    CHECK(c.equiv(h10, h11));   // first 1 in round one either way
    CHECK(!c.equiv(h00, h01));  // all zeros vs a late 1
    CHECK(!c.equiv(h01, h10));
    CHECK(!c.equiv(h00, {{0, 0}}));  // length mismatch never relates

    // After the first 1 the tails are free.
    CHECK(c.equiv({{0, 1}, {0, 0}, {0, 1}}, {{0, 1}, {0, 1}, {0, 0}}));
}

TEST_CASE("structural checkers read the automaton exactly") {
    // Identity-style: everything accepting stays on the diagonal.
    Constraint eq = equality_constraint(2, 2);
    REQUIRE(eq.dfa.has_value());
    CHECK(check_suffix_closed(*eq.dfa));
    CHECK(check_perfect_recall(*eq.dfa));

    const GameFile fo_gf = load_fixture("first-one");
    const TwoTapeDfa& fo = *fo_gf.constraint("first-one").dfa;
    CHECK(check_suffix_closed(fo));
    CHECK(check_perfect_recall(fo));

    // Accepting only off the start: recall broken, closure broken.
    TwoTapeDfa d = skeleton(2, 1);
    d.accepting = {true, false, true, false};
    set_all(d, 0, 1);
    set_all(d, 1, 2);
    set_all(d, 2, 3);
    d.validate();
    CHECK(!check_suffix_closed(d));  // diagonal step leaves state 0
    CHECK(!check_perfect_recall(d)); // state 2 accepts behind rejecting state 1

    // Suffix-closed but forgetting: an accepting state sits behind a gap.
    TwoTapeDfa gap = skeleton(2, 1);
    gap.accepting = {true, false, true, false};
    set_all(gap, 0, 1);
    set_diag(gap, 0, 0);
    set_all(gap, 1, 2);
    set_all(gap, 2, 2);
    gap.validate();
    CHECK(check_suffix_closed(gap));
    CHECK(!check_perfect_recall(gap));

    // Recalling but not closed: acceptance dies on the diagonal and stays dead.
    TwoTapeDfa dies = skeleton(2, 1);
    dies.accepting = {true, false, false, false};
    set_all(dies, 0, 1);
    set_all(dies, 1, 1);
    dies.validate();
    CHECK(!check_suffix_closed(dies));
    CHECK(check_perfect_recall(dies));
}

TEST_CASE("bounded predicates agree with the exact ones on automata") {
    std::vector<TwoTapeDfa> gallery;
    gallery.push_back(*equality_constraint(2, 2).dfa);
    gallery.push_back(*load_fixture("first-one").constraint("first-one").dfa);
    {
        TwoTapeDfa d = skeleton(2, 1);
        d.accepting = {true, false, true, false};
        set_all(d, 0, 1);
        set_all(d, 1, 2);
        set_all(d, 2, 3);
        d.validate();
        gallery.push_back(d);
    }
    for (const TwoTapeDfa& d : gallery) {
        Constraint c;
        c.name = "probe";
        c.dfa = d;
        CHECK(bounded_check_suffix_closed(c, d.num_a, d.num_b, 3, 2).holds ==
              check_suffix_closed(d));
        CHECK(bounded_check_perfect_recall(c, d.num_a, d.num_b, 4).holds ==
              check_perfect_recall(d));
    }
}

TEST_CASE("time awareness is checked and can be imposed") {
    Arena g = loop_arena(2, 1, 1, {0, 0});
    Constraint blind = one_count_constraint(g, false);
    PredicateWitness w = bounded_check_time_aware(blind, g.na(), g.nb(), 3);
    CHECK(!w.holds);
    CHECK(w.x.size() != w.y.size());
    CHECK(blind.equiv(w.x, w.y));

    Constraint aware = time_aware_restriction(blind);
    CHECK(bounded_check_time_aware(aware, g.na(), g.nb(), 3).holds);
    CHECK(aware.equiv({{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}));
    CHECK(!aware.equiv({{1, 0}}, {{0, 0}, {1, 0}}));

    CHECK(bounded_check_time_aware(one_count_constraint(g, true), g.na(), g.nb(), 3).holds);
    CHECK(universal_time_aware_constraint(2, 2).time_aware_by_construction());
}

TEST_CASE("products and intersections accept the common pairs") {
    Arena g = loop_arena(2, 2, 1, {0, 0, 0, 0});
    Constraint parity = round_one_charge_constraint(g);
    Constraint imit = imitation_split_constraint(g);
    Constraint both = intersect({parity, imit});
    for (const History& x : all_histories(2, 2, 2))
        for (const History& y : all_histories(2, 2, 2))
            CHECK(both.equiv(x, y) == (parity.equiv(x, y) && imit.equiv(x, y)));

    const GameFile fo_gf = load_fixture("first-one");
    const TwoTapeDfa& fo = *fo_gf.constraint("first-one").dfa;
    TwoTapeDfa eq = *equality_constraint(fo.num_a, fo.num_b).dfa;
    TwoTapeDfa prod = product_dfa(fo, eq);
    for (const History& x : all_histories(fo.num_a, fo.num_b, 3))
        for (const History& y : all_histories(fo.num_a, fo.num_b, 3))
            CHECK(prod.accepts(x, y) == (fo.accepts(x, y) && eq.accepts(x, y)));
}

TEST_CASE("lifting a one-tape automaton tracks the shared state") {
    // Parity of Player 1's 1-actions.
    OneTapeDfa p;
    p.num_a = 2;
    p.num_b = 1;
    p.states = 2;
    p.delta = {0, 1, 1, 0};  // state*nm + move; move = a
    p.validate();
    TwoTapeDfa lifted = lift_one_tape(p);
    CHECK(lifted.accepts({{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}));
    CHECK(!lifted.accepts({{1, 0}}, {{0, 0}}));
    Constraint c;
    c.name = "parity";
    c.dfa = lifted;
    CHECK(count_classes(c, 2, 1, 0) == 1);
    CHECK(count_classes(c, 2, 1, 3) == 2);
}

TEST_CASE("class counting matches hand counts") {
    Constraint eq = equality_constraint(2, 1);
    CHECK(count_classes(eq, 2, 1, 2) == 4);
    Constraint uni = universal_time_aware_constraint(2, 2);
    CHECK(count_classes(uni, 2, 2, 3) == 1);

    const GameFile gf = load_fixture("first-one");
    const Constraint& fo = gf.constraint("first-one");
    for (int n = 0; n <= 4; ++n)
        CHECK(count_classes(fo, gf.arena.na(), gf.arena.nb(), n) == n + 1);
}

TEST_CASE("the counterexample relations classify histories as documented") {
    Arena g2 = loop_arena(2, 2, 1, {0, 0, 0, 0});

    Constraint charge = round_one_charge_constraint(g2);
    // Key is: opening opponent action plus later Player 1 actions.
    CHECK(charge.equiv({{0, 1}, {0, 0}}, {{1, 0}, {1, 1}}));
    CHECK(!charge.equiv({{0, 1}}, {{0, 0}}));
    CHECK(!charge.equiv({}, {{0, 0}}));

    Constraint imit = imitation_split_constraint(g2);
    CHECK(imit.equiv({{0, 0}}, {{1, 1}}));  // all openings alike
    CHECK(imit.equiv({{0, 1}, {1, 0}}, {{1, 0}, {0, 1}}));  // both echo
    CHECK(!imit.equiv({{0, 1}, {1, 0}}, {{0, 1}, {0, 0}}));
    PredicateWitness w = bounded_check_suffix_closed(imit, 2, 2, 2, 2);
    CHECK(!w.holds);
    CHECK(imit.equiv(w.x, w.y));
    History ex = w.x, ey = w.y;
    ex.insert(ex.end(), w.suffix.begin(), w.suffix.end());
    ey.insert(ey.end(), w.suffix.begin(), w.suffix.end());
    CHECK(!imit.equiv(ex, ey));

    Arena g1 = loop_arena(2, 1, 1, {0, 0});
    Constraint zr = zero_run_split_constraint(g1);
    CHECK(zr.equiv({{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}));
    CHECK(zr.equiv({{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}));
    CHECK(!zr.equiv({{0, 0}}, {{1, 0}}));

    Constraint s0 = single_b_class_constraint(loop_arena(3, 3, 1, std::vector<ColorId>(9, 0)), 0);
    CHECK(s0.equiv({{2, 0}}, {{1, 0}}));       // the picked singleton class
    CHECK(!s0.equiv({{2, 0}}, {{2, 1}}));
    CHECK(s0.equiv({{2, 1}}, {{0, 2}, {1, 1}}));  // everything else together
    CHECK(!s0.time_aware_by_construction());
}

TEST_CASE("generated constraints close their seeds under suffixes") {
    // Seed: the two length-1 histories (0,0) and (1,0) are declared related.
    History a = {{0, 0}};
    History b = {{1, 0}};
    Constraint c = generated_constraint("pair", 2, 1, {{a, b}}, 3);
    CHECK(c.equiv(a, b));
    // One common extension step keeps them related; unrelated pairs stay apart.
    CHECK(c.equiv({{0, 0}, {1, 0}}, {{1, 0}, {1, 0}}));
    CHECK(c.equiv({{0, 0}, {0, 0}, {1, 0}}, {{1, 0}, {0, 0}, {1, 0}}));
    CHECK(!c.equiv({{0, 0}, {0, 0}}, {{0, 0}, {1, 0}}));
    CHECK(!c.equiv(a, {{1, 0}, {1, 0}}));
    CHECK_THROWS_AS(c.equiv(all_histories(2, 1, 4)[0], all_histories(2, 1, 4)[1]), HorizonError);

    CHECK(bounded_check_equivalence(c, 2, 1, 3).holds);
}

TEST_CASE("arena-derived constraints compare traces") {
    const GameFile bat = load_fixture("battery");
    const Arena& g = bat.arena;

    Constraint seq = state_color_constraint(g, StateColorMode::FullSequence);
    Constraint cur = state_color_constraint(g, StateColorMode::CurrentState);
    // Same state path and colors: only the literal same history qualifies on
    // this arena once actions differ in effect.
    History x = {{0, 0}, {0, 1}};  // lo -charge-> mid -*1-> lo
    History y = {{0, 0}, {1, 1}};  // same states, same colors, different moves
    CHECK(seq.equiv(x, y));
    CHECK(cur.equiv(x, y));
    History z = {{1, 0}, {0, 1}};  // coasting flips the first color to minus
    CHECK(!seq.equiv(x, z));
    CHECK(!cur.equiv(x, z));

    Constraint ms = multiset_state_constraint(g);
    // Same colors in a different order, meeting in the same state.
    History p = {{0, 0}, {0, 0}, {0, 0}};  // lo->mid(plus) ->hi(minus) ->lo(plus)
    History q = {{1, 0}, {0, 0}, {0, 0}};  // lo->mid(minus)->hi(minus)->lo(plus)
    CHECK(!ms.equiv(p, q));
    History r = {{0, 1}, {0, 0}};
    CHECK(ms.equiv(r, r));

    // The proof-level energy key splits where the level-only key does not.
    Constraint proof = energy_constraint(g, EnergyKeyLevel::Proof);
    Constraint level = energy_constraint(g, EnergyKeyLevel::Statement);
    History hx = {{0, 0}, {0, 1}, {1, 0}};  // sums +1, +1, 0
    History hy = {{1, 0}, {0, 1}, {0, 0}};  // sums -1, -1, 0
    CHECK(level.equiv(hx, hy));
    CHECK(!proof.equiv(hx, hy));
    CHECK(proof.equiv(hx, hx));
}

TEST_CASE("builtin registry knows its names") {
    Arena g = loop_arena(2, 2, 1, {0, 0, 0, 0});
    std::vector<std::string> names = builtin_constraint_names();
    CHECK(std::find(names.begin(), names.end(), "p1-one-count") != names.end());
    CHECK(std::find(names.begin(), names.end(), "state-color-seq") != names.end());
    CHECK_THROWS_AS(build_builtin_constraint("no-such-relation", g), InputError);
    CHECK(build_builtin_constraint("equality", g).dfa_backed());
}

TEST_CASE("all_histories enumerates the move cube in order") {
    std::vector<History> h2 = all_histories(2, 1, 2);
    REQUIRE(h2.size() == 4);
    CHECK(h2[0] == History{{0, 0}, {0, 0}});
    CHECK(h2[3] == History{{1, 0}, {1, 0}});
    CHECK(all_histories(2, 2, 0).size() == 1);
    CHECK(all_histories(3, 2, 2).size() == 36);
}
