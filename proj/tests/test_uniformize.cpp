#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "unistrat/fixtures.hpp"
#include "unistrat/uniformize.hpp"
#include "unistrat/wincond.hpp"

using namespace unistrat;
using testutil::loop_arena;
using testutil::mealy;

namespace {

// Replies only depend on the opponent word here; last action echoed.
FunctionStrategy echo_strategy(int num_b) {
    return FunctionStrategy(
        num_b, [](const OppHistory& beta) { return beta.empty() ? 0 : beta.back(); });
}

std::vector<OppHistory> opp_words(int num_b, int max_len) {
    std::vector<OppHistory> out{{}};
    std::vector<OppHistory> layer{{}};
    for (int n = 1; n <= max_len; ++n) {
        std::vector<OppHistory> next;
        for (const OppHistory& beta : layer)
            for (int b = 0; b < num_b; ++b) {
                OppHistory ext = beta;
                ext.push_back(b);
                next.push_back(ext);
                out.push_back(ext);
            }
        layer = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("virtual actions collapse indistinguishable extensions") {
    const GameFile gf = load_fixture("first-one");
    const Constraint& c = gf.constraint("first-one");
    FunctionStrategy steady = gf.strategy("steady").as_function();

    // From scratch the two openings are told apart.
    CHECK(virtual_action(c, steady, {}, 0) == 0);
    CHECK(virtual_action(c, steady, {}, 1) == 1);
    // Past the first 1 everything merges onto the least action.
    CHECK(virtual_action(c, steady, {1}, 1) == 0);
    CHECK(virtual_action(c, steady, {1}, 0) == 0);
    CHECK(virtual_action(c, steady, {0}, 1) == 1);
}

TEST_CASE("recall rewriting feeds the strategy a rewritten history") {
    const GameFile gf = load_fixture("first-one");
    const Arena& g = gf.arena;
    const Constraint& c = gf.constraint("first-one");
    FunctionStrategy s = echo_strategy(g.nb());

    RecallUniformizer ru(c, s);
    CHECK(ru.virtual_history({1, 1}) == OppHistory{1, 0});
    CHECK(ru.virtual_history({0, 1}) == OppHistory{0, 1});
    // One more input round extends the rewritten history by one round.
    for (const OppHistory& beta : opp_words(g.nb(), 3)) {
        OppHistory ext = beta;
        ext.push_back(1);
        OppHistory shorter = ru.virtual_history(beta);
        OppHistory longer = ru.virtual_history(ext);
        REQUIRE(longer.size() == ext.size());
        CHECK(OppHistory(longer.begin(), longer.begin() + beta.size()) == shorter);
    }

    FunctionStrategy u = uniformize_recall(g, c, s);
    CHECK(u({1, 1}) == 0);  // answered as if the tail were rewritten to 0
    CHECK(u({0, 1}) == 1);  // still distinguishable, stays put
    // The rewrite makes replies constant across each class.
    CHECK(is_sim_strategy_bounded(g, c, u, 4).holds);
    CHECK(!is_sim_strategy_bounded(g, c, s, 4).holds);
}

TEST_CASE("rewriting preconditions are checked on the automaton") {
    Arena g = loop_arena(2, 1, 2, {0, 1});

    // Acceptance that dies on the diagonal: not closed by adding a suffix.
    TwoTapeDfa dies;
    dies.num_a = 2;
    dies.num_b = 1;
    dies.states = 2;
    dies.accepting = {true, false};
    dies.delta.assign(2u * 2 * 2, 1);  // nm = 2, letters are move pairs
    dies.validate();
    Constraint cd;
    cd.name = "dies";
    cd.dfa = dies;
    CHECK_THROWS_AS(uniformize_recall(g, cd, echo_strategy(1)), PreconditionError);
    MealyStrategy one = mealy(1, 1, {0}, {0});
    CHECK_THROWS_AS(uniformize_recall_mealy(g, cd, one), PreconditionError);
    CHECK_THROWS_AS(uniformize_powerset(g, cd, one), PreconditionError);

    // The uni-mem relation forgets its middle rounds: closed by suffixes but
    // not perfectly recalling, so only the subset construction applies.
    const GameFile um = load_fixture("uni-mem");
    const Constraint& cu = um.constraint("unimem");
    CHECK(check_suffix_closed(*cu.dfa));
    CHECK(!check_perfect_recall(*cu.dfa));
    CHECK_THROWS_AS(uniformize_recall_mealy(um.arena, cu, um.strategy("left")),
                    PreconditionError);
}

TEST_CASE("finite-memory rewriting matches the pointwise one") {
    const GameFile gf = load_fixture("first-one");
    const Arena& g = gf.arena;
    const Constraint& c = gf.constraint("first-one");

    // A machine echoing the previous opponent action.
    MealyStrategy m = mealy(2, 2, {0, 1}, {0, 1, 0, 1});
    MealyStrategy um = uniformize_recall_mealy(g, c, m);
    um.validate();
    CHECK(static_cast<int>(reachable_memory(um).size()) <= m.memory * 2);  // two live classes

    FunctionStrategy uf = uniformize_recall(g, c, m.as_function());
    for (const OppHistory& beta : opp_words(g.nb(), 5)) CHECK(um.eval(beta) == uf(beta));
}

TEST_CASE("backtracking picks lexicographically least representatives") {
    const GameFile gf = load_fixture("first-one");
    const Arena& g = gf.arena;
    const Constraint& c = gf.constraint("first-one");
    FunctionStrategy s = echo_strategy(g.nb());

    BacktrackUniformizer bu(c, s, 3);
    CHECK(bu.representative(induced_history(s, {0, 0})) == OppHistory{0, 0});
    CHECK(bu.representative(induced_history(s, {1, 1})) == OppHistory{1, 0});
    CHECK(bu.representative(induced_history(s, {0, 1})) == OppHistory{0, 1});

    FunctionStrategy u = uniformize_backtrack(g, c, s, 3);
    CHECK(is_sim_strategy_bounded(g, c, u, 3).holds);
    // On this relation the incremental rewrite and the lex-least replay
    // produce the same strategy.
    FunctionStrategy r = uniformize_recall(g, c, s);
    for (const OppHistory& beta : opp_words(g.nb(), 3)) CHECK(u(beta) == r(beta));
    CHECK_THROWS_AS(u({0, 1, 0, 1}), HorizonError);

    CHECK_THROWS_AS(uniformize_backtrack(g, c, s, 3, Budgets::scaled(1))({1, 1, 1}),
                    ResourceError);
}

TEST_CASE("the subset construction on the four-state showcase") {
    const GameFile gf = load_fixture("uni-mem");
    const Arena& g = gf.arena;
    const Constraint& c = gf.constraint("unimem");
    const WinCond& w = gf.win();

    PowersetResult res = uniformize_powerset(g, c, gf.strategy("left"));
    res.machine.validate();
    CHECK(res.subsets.size() == static_cast<std::size_t>(res.machine.memory));
    CHECK(res.subsets[0].size() == 1);  // start: own memory with the relation's start

    CHECK(static_cast<int>(reachable_memory(res.machine).size()) >= 4);
    CHECK(verify_winning(g, w, res.machine).holds);
    CHECK(is_sim_strategy(g, c, res.machine).holds);

    CHECK_THROWS_AS(uniformize_powerset(g, c, gf.strategy("left"), Budgets::scaled(2)),
                    ResourceError);
}
