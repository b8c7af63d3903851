#include <optional>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "unistrat/fixtures.hpp"
#include "unistrat/wincond.hpp"

using namespace unistrat;
using testutil::loop_arena;
using testutil::mealy;
using testutil::table_arena;

TEST_CASE("lasso satisfaction per condition kind") {
    // One state, |A|=2, |B|=1; action a paints color a.
    Arena g = loop_arena(2, 1, 2, {0, 1});
    g.weights = std::vector<Rational>{Rational(1), Rational(-1)};
    Move zero{0, 0}, one{1, 0};

    WinCond safe = WinCond::safety({1});
    CHECK(lasso_satisfies(g, safe, {{}, {zero}}));
    CHECK(!lasso_satisfies(g, safe, {{one}, {zero}}));      // violated in the stem
    CHECK(!lasso_satisfies(g, safe, {{zero}, {zero, one}}));

    WinCond reach = WinCond::reach({1});
    CHECK(lasso_satisfies(g, reach, {{one}, {zero}}));      // reached in the stem
    CHECK(!lasso_satisfies(g, reach, {{}, {zero}}));

    WinCond buchi = WinCond::buchi({1});
    CHECK(lasso_satisfies(g, buchi, {{}, {zero, one}}));
    CHECK(!lasso_satisfies(g, buchi, {{one}, {zero}}));     // only finitely often

    WinCond sub = WinCond::submuller({{0, 1}});
    CHECK(lasso_satisfies(g, sub, {{}, {zero, one}}));      // both colors recur
    CHECK(!lasso_satisfies(g, sub, {{}, {zero}}));

    WinCond en = WinCond::energy();
    CHECK(lasso_satisfies(g, en, {{}, {zero}}));
    CHECK(lasso_satisfies(g, en, {{zero}, {one, zero}}));   // dips to 0, never below
    CHECK(!lasso_satisfies(g, en, {{one}, {zero}}));        // first prefix already -1
    CHECK(!lasso_satisfies(g, en, {{}, {zero, one, one}})); // cycle loses charge

    WinCond both = WinCond::conj({reach, en});
    CHECK(lasso_satisfies(g, both, {{zero}, {one, zero, zero}}));
    CHECK(!lasso_satisfies(g, both, {{}, {zero}}));         // reach part fails
}

TEST_CASE("winning verification returns a play to blame") {
    const GameFile gf = load_fixture("uni-mem");
    const Arena& g = gf.arena;
    const WinCond& w = gf.win();

    Verdict good = verify_winning(g, w, gf.strategy("left"));
    CHECK(good.holds);

    // Playing 1 forever owes the debt after 0 0 and loses.
    MealyStrategy ones = mealy(1, 2, {1}, {0, 0});
    Verdict bad = verify_winning(g, w, ones);
    CHECK(!bad.holds);
    REQUIRE(bad.play.has_value());
    MealyStrategy culprit = ones;
    CHECK(!play_satisfies(g, w, culprit, *bad.play));
}

TEST_CASE("constraint respect: exact product check and its witness") {
    const GameFile gf = load_fixture("uni-mem");
    const Arena& g = gf.arena;
    const Constraint& c = gf.constraint("unimem");

    CHECK(is_sim_strategy(g, c, gf.strategy("right")).holds);

    Verdict v = is_sim_strategy(g, c, gf.strategy("left"));
    CHECK(!v.holds);
    REQUIRE(v.histories.has_value());
    const auto& [bx, by] = *v.histories;
    // The witness inputs are really related and really answered apart.
    const MealyStrategy& left = gf.strategy("left");
    FunctionStrategy fs = left.as_function();
    CHECK(c.equiv(induced_history(fs, bx), induced_history(fs, by)));
    CHECK(left.eval(bx) != left.eval(by));

    // The bounded check agrees on both machines at a useful horizon.
    CHECK(is_sim_strategy_bounded(g, c, gf.strategy("right"), 5).holds);
    CHECK(!is_sim_strategy_bounded(g, c, gf.strategy("left"), 5).holds);
    CHECK(is_sim_strategy_auto(g, c, gf.strategy("right"), 5).holds);
}

TEST_CASE("bounded respect handles key-based relations") {
    const GameFile gf = load_fixture("echo");
    const Arena& g = gf.arena;
    CHECK(is_sim_strategy_auto(g, gf.constraint("single-b0"), gf.strategy("pick0"), 4).holds);
    CHECK(!is_sim_strategy_auto(g, gf.constraint("single-b0"), gf.strategy("pick1"), 4).holds);
}

TEST_CASE("run enumeration is canonical, deduplicated and ordered") {
    Arena g = loop_arena(2, 1, 1, {0, 0});
    std::vector<MoveLasso> runs = enumerate_runs(g, 1, 2);

    // stems: e, 0, 1; primitive cycles: 0, 1, 01, 10.  Of the 12 combos,
    // stem-into-cycle absorption removes four (e.g. 0(0)^w, 1(01)^w), which
    // leaves the two constants, both alternations, and four genuine stems.
    for (const MoveLasso& r : runs) CHECK(canonical_move_lasso(r) == r);
    for (std::size_t i = 0; i < runs.size(); ++i)
        for (std::size_t j = i + 1; j < runs.size(); ++j) CHECK(!(runs[i] == runs[j]));
    CHECK(runs.size() == 8);
    CHECK(runs[0] == MoveLasso{{}, {{0, 0}}});
    CHECK(runs[1] == MoveLasso{{}, {{1, 0}}});

    // Sizes never decrease along the listing.
    for (std::size_t i = 1; i < runs.size(); ++i)
        CHECK(runs[i - 1].stem.size() + runs[i - 1].cycle.size() <=
              runs[i].stem.size() + runs[i].cycle.size());

    CHECK_THROWS_AS(enumerate_runs(g, 3, 6, Budgets::scaled(4)), ResourceError);
}

TEST_CASE("single-pair closedness checks reproduce the textbook pairs") {
    const GameFile oc = load_fixture("one-count");
    const Constraint& c1 = oc.constraint("p1-one-count");
    // x alternates 01, y alternates the doubled block 0011.
    MoveLasso x{{}, {{0, 0}, {1, 0}}};
    MoveLasso y{{}, {{0, 0}, {0, 0}, {1, 0}, {1, 0}}};
    CHECK(closedness_pair_violates(oc.arena, c1, oc.win(), ClosednessFlavor::Plain, x, y, 3,
                                   nullptr));
    // The weak premise needs relatedness at every length, which fails here.
    CHECK(!closedness_pair_violates(oc.arena, c1, oc.win(), ClosednessFlavor::Weak, x, y, 3,
                                    nullptr));

    const GameFile zr = load_fixture("zero-run");
    const Constraint& c2 = zr.constraint("zero-run-split");
    MoveLasso zeros{{}, {{0, 0}}};
    MoveLasso ones{{}, {{1, 0}}};
    std::optional<History> gamma;
    CHECK(closedness_pair_violates(zr.arena, c2, zr.win(), ClosednessFlavor::Strong, zeros, ones,
                                   3, &gamma));
    REQUIRE(gamma.has_value());
    CHECK(*gamma == History{{1, 0}});
    // Plain closedness holds for this relation, so the same pair cannot
    // witness it: the zero run never relates to the mixed one at any length.
    CHECK(!closedness_pair_violates(zr.arena, c2, zr.win(), ClosednessFlavor::Plain, zeros, ones,
                                    3, nullptr));
}

TEST_CASE("the refuter finds the smallest violating pair in its order") {
    const GameFile oc = load_fixture("one-count");
    const Arena& g = oc.arena;
    const Constraint& c = oc.constraint("p1-one-count");
    const WinCond& w = oc.win();

    CHECK(refute_closedness(g, c, w, ClosednessFlavor::Weak, 3).holds);

    Verdict plain = refute_closedness(g, c, w, ClosednessFlavor::Plain, 3);
    CHECK(!plain.holds);
    REQUIRE(plain.runs.has_value());
    // Deterministic order: the pair of two-move alternations comes first,
    // related at every even length.
    CHECK(plain.runs->first == MoveLasso{{}, {{0, 0}, {1, 0}}});
    CHECK(plain.runs->second == MoveLasso{{}, {{1, 0}, {0, 0}}});

    const GameFile zr = load_fixture("zero-run");
    const Constraint& c2 = zr.constraint("zero-run-split");
    CHECK(refute_closedness(zr.arena, c2, zr.win(), ClosednessFlavor::Plain, 3).holds);
    Verdict strong = refute_closedness(zr.arena, c2, zr.win(), ClosednessFlavor::Strong, 3);
    CHECK(!strong.holds);
    REQUIRE(strong.runs.has_value());
    CHECK(strong.runs->first == MoveLasso{{}, {{0, 0}}});
    CHECK(strong.runs->second == MoveLasso{{}, {{1, 0}}});
    REQUIRE(strong.gamma.has_value());
    CHECK(*strong.gamma == History{{1, 0}});

    CHECK_THROWS_AS(
        refute_closedness(g, c, w, ClosednessFlavor::Plain, 3, Budgets::scaled(10)),
        ResourceError);
}

TEST_CASE("condition validation rejects malformed input") {
    Arena g = loop_arena(2, 1, 2, {0, 1});
    CHECK_THROWS_AS(WinCond::buchi({7}).validate(g), InputError);
    CHECK_THROWS_AS(WinCond::conj({}).validate(g), InputError);
    CHECK(WinCond::energy().needs_weights());
    CHECK_THROWS_AS(WinCond::energy().validate(g), InputError);  // no weights declared
    CHECK(wincond_name(WinCond::safety({1})) == "safety");
}
