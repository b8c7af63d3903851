// Acceptance checks, one line per criterion:
//
//   criterion N (<name>): PASS|FAIL
//
// Exit code is the number of failed criteria.  Every randomized sweep is
// seeded, so a rerun reproduces the exact same instances; tolerances are
// the named constants below.

#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "helpers.hpp"
#include "unistrat/constraint.hpp"
#include "unistrat/errors.hpp"
#include "unistrat/fixtures.hpp"
#include "unistrat/game_format.hpp"
#include "unistrat/solve.hpp"
#include "unistrat/strategy.hpp"
#include "unistrat/uniformize.hpp"
#include "unistrat/wincond.hpp"

using namespace unistrat;
using testutil::table_arena;

namespace {

constexpr std::uint32_t kSeed = 20260816u;
constexpr int kSweepInstances = 200;   // winning games fed to criteria 1 and 2
constexpr int kSweepAttempts = 4000;   // generation cap before giving up
constexpr int kLipschitzPairs = 50;    // fuzzed strategy pairs, criterion 3
constexpr int kAgreementInstances = 20;  // fuzzed machines, criterion 4
constexpr int kAgreementLen = 6;       // compared input length, criterion 4
constexpr int kClassDepth = 6;         // largest counted length, criterion 5
constexpr int kCheckerSamples = 60;    // random automata, criterion 6
constexpr int kCheckerLen = 4;         // definitional window, criterion 6
constexpr int kBruteMemory = 3;        // harmfulness bound, criteria 2/7/10
constexpr int kBruteHorizon = 6;       // sim horizon for key-based respect

struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw check_failure(what);
}

int pick(std::mt19937& rng, int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); }

// ---- shared random-game sweep (criteria 1 and 2) ----

struct SweepStats {
    int instances = 0;
    int recall_sound = 0;    // recall-mealy outputs that win and respect
    int powerset_sound = 0;  // powerset outputs that win and respect
    int recall_bound_ok = 0;
    int powerset_bound_ok = 0;
    std::string first_problem;
};

Arena random_game(std::mt19937& rng) {
    const int nq = 1 + pick(rng, 4);
    const int na = 1 + pick(rng, 2);
    const int nb = 1 + pick(rng, 2);
    const int nc = 2 + pick(rng, 2);
    std::vector<StateId> delta;
    std::vector<ColorId> color;
    for (int i = 0; i < nq * na * nb; ++i) {
        delta.push_back(pick(rng, nq));
        color.push_back(pick(rng, nc));
    }
    return table_arena(nq, na, nb, nc, std::move(delta), std::move(color));
}

WinCond random_objective(std::mt19937& rng, int attempt, int nc) {
    std::vector<ColorId> set;
    for (int c = 0; c < nc; ++c)
        if (pick(rng, 3) == 0) set.push_back(c);
    switch (attempt % 3) {
        case 0:
            return WinCond::safety(set);
        case 1:
            if (set.empty()) set.push_back(pick(rng, nc));
            return WinCond::reach(set);
        default:
            if (set.empty()) set.push_back(pick(rng, nc));
            return WinCond::buchi(set);
    }
}

const SweepStats& shared_sweep() {
    static const SweepStats stats = [] {
        SweepStats st;
        std::mt19937 rng(kSeed);
        auto note = [&st](const std::string& what) {
            if (st.first_problem.empty()) st.first_problem = what;
        };
        for (int attempt = 0; attempt < kSweepAttempts && st.instances < kSweepInstances;
             ++attempt) {
            const Arena g = random_game(rng);
            const WinCond w = random_objective(rng, attempt, g.nc());
            const SolveResult sr = solve(g, w);
            if (!sr.p1_wins) continue;
            ++st.instances;
            const MealyStrategy& m = *sr.strategy;

            // Corollary-grade constraints: the full state/color trace is
            // suffix-closed and perfectly recalling, the current-state one
            // is only suffix-closed.
            const Constraint full = state_color_constraint(g, StateColorMode::FullSequence);
            const Constraint cur = state_color_constraint(g, StateColorMode::CurrentState);

            const MealyStrategy r = uniformize_recall_mealy(g, full, m);
            if (verify_winning(g, w, r).holds && is_sim_strategy(g, full, r).holds)
                ++st.recall_sound;
            else
                note("recall-mealy output unsound on instance " + std::to_string(st.instances));

            const PowersetResult p = uniformize_powerset(g, cur, m);
            if (verify_winning(g, w, p.machine).holds && is_sim_strategy(g, cur, p.machine).holds)
                ++st.powerset_sound;
            else
                note("powerset output unsound on instance " + std::to_string(st.instances));

            int accepting = 0;
            for (bool f : full.dfa->accepting) accepting += f ? 1 : 0;
            const std::size_t r_reach = reachable_memory(r).size();
            if (r_reach <= static_cast<std::size_t>(m.memory) * accepting)
                ++st.recall_bound_ok;
            else
                note("recall memory " + std::to_string(r_reach) + " exceeds |M|*|F|");

            const int exponent = m.memory * cur.dfa->states;
            const std::size_t p_reach = reachable_memory(p.machine).size();
            bool within = exponent >= 63 || p_reach <= (std::size_t{1} << exponent);
            if (within && p_reach == static_cast<std::size_t>(p.machine.memory) &&
                p.subsets.size() == static_cast<std::size_t>(p.machine.memory))
                ++st.powerset_bound_ok;
            else
                note("powerset memory bound violated on instance " +
                     std::to_string(st.instances));
        }
        return st;
    }();
    return stats;
}

// ---- random table strategies (criteria 3 and 4) ----

std::vector<OppHistory> words_up_to(int nb, int len) {
    std::vector<OppHistory> out{{}};
    std::size_t first = 0;
    for (int n = 1; n <= len; ++n) {
        const std::size_t last = out.size();
        for (std::size_t i = first; i < last; ++i)
            for (int b = 0; b < nb; ++b) {
                OppHistory w = out[i];
                w.push_back(b);
                out.push_back(std::move(w));
            }
        first = last;
    }
    return out;
}

FunctionStrategy table_strategy(std::map<OppHistory, ActionA> table, int nb, int horizon) {
    return FunctionStrategy(
        nb, [table = std::move(table)](const OppHistory& beta) { return table.at(beta); },
        horizon);
}

// ---- criterion bodies ----

void criterion_uniformization_soundness() {
    const SweepStats& st = shared_sweep();
    require(st.instances == kSweepInstances,
            "only " + std::to_string(st.instances) + " winning games generated");
    require(st.recall_sound == st.instances && st.powerset_sound == st.instances,
            st.first_problem.empty() ? std::string("unsound uniformization") : st.first_problem);
}

void criterion_memory_bounds() {
    const SweepStats& st = shared_sweep();
    require(st.instances == kSweepInstances,
            "only " + std::to_string(st.instances) + " winning games generated");
    require(st.recall_bound_ok == st.instances && st.powerset_bound_ok == st.instances,
            st.first_problem.empty() ? std::string("memory bound violated") : st.first_problem);

    // The bundled game where the constraint provably costs extra memory:
    // a 3-state machine wins, no machine with <= 3 states wins and respects
    // the relation, and the subset construction delivers a respecting
    // winner beyond that bound.
    const GameFile gf = load_fixture("uni-mem");
    const Constraint& c = gf.constraint("unimem");
    const WinCond& w = gf.win();
    const PowersetResult p = uniformize_powerset(gf.arena, c, gf.strategy("left"));
    require(verify_winning(gf.arena, w, p.machine).holds, "powerset rebuild does not win");
    require(is_sim_strategy(gf.arena, c, p.machine).holds, "powerset rebuild disrespects");
    require(reachable_memory(p.machine).size() >= 4, "powerset rebuild suspiciously small");
    require(!brute_force_strategy(gf.arena, w, &c, kBruteMemory, kBruteHorizon).has_value(),
            "a small respecting winner exists after all");
}

void criterion_lipschitz() {
    // Two strategies that agree on inputs shorter than n stay
    // indistinguishable below n after uniformization, for both rewriters.
    const Arena g = table_arena(2, 2, 2, 2, {0, 1, 1, 0, 1, 0, 0, 1}, {0, 1, 0, 1, 1, 0, 1, 0});
    const Constraint c = state_color_constraint(g, StateColorMode::FullSequence);
    const int horizon = 6;
    const std::vector<OppHistory> all = words_up_to(g.nb(), horizon);

    std::mt19937 rng(kSeed + 1);
    for (int i = 0; i < kLipschitzPairs; ++i) {
        const int n = 1 + (i % 5);
        std::map<OppHistory, ActionA> t1, t2;
        for (const OppHistory& w : all) {
            t1[w] = pick(rng, g.na());
            t2[w] = pick(rng, g.na());
            if (static_cast<int>(w.size()) < n) t2[w] = t1[w];
        }
        const FunctionStrategy s1 = table_strategy(t1, g.nb(), horizon);
        const FunctionStrategy s2 = table_strategy(t2, g.nb(), horizon);

        const FunctionStrategy r1 = uniformize_recall(g, c, s1);
        const FunctionStrategy r2 = uniformize_recall(g, c, s2);
        const FunctionStrategy b1 = uniformize_backtrack(g, c, s1, 5);
        const FunctionStrategy b2 = uniformize_backtrack(g, c, s2, 5);
        for (const OppHistory& w : all) {
            if (static_cast<int>(w.size()) >= n) continue;
            require(r1(w) == r2(w), "recall rewriting looked past round " + std::to_string(n));
            require(b1(w) == b2(w), "backtrack rewriting looked past round " + std::to_string(n));
        }
    }
}

void criterion_pointwise_memory_agreement() {
    std::mt19937 rng(kSeed + 2);
    for (int i = 0; i < kAgreementInstances; ++i) {
        const int nq = 1 + pick(rng, 3);
        const int na = 1 + pick(rng, 2);
        const int nb = 1 + pick(rng, 2);
        std::vector<StateId> delta;
        std::vector<ColorId> color;
        for (int j = 0; j < nq * na * nb; ++j) {
            delta.push_back(pick(rng, nq));
            color.push_back(pick(rng, 2));
        }
        const Arena g = table_arena(nq, na, nb, 2, std::move(delta), std::move(color));
        const Constraint c = state_color_constraint(g, StateColorMode::FullSequence);

        const int mem = 1 + pick(rng, 3);
        std::vector<ActionA> act;
        std::vector<int> upd;
        for (int m = 0; m < mem; ++m) act.push_back(pick(rng, na));
        for (int j = 0; j < mem * nb; ++j) upd.push_back(pick(rng, mem));
        const MealyStrategy m = testutil::mealy(mem, nb, std::move(act), std::move(upd));

        const FunctionStrategy plain = uniformize_recall(g, c, m.as_function());
        const MealyStrategy aware = uniformize_recall_mealy(g, c, m);
        for (const OppHistory& w : words_up_to(nb, kAgreementLen))
            require(plain(w) == aware.eval(w),
                    "pointwise and memory-aware uniformization disagree");
    }
}

void criterion_class_counting() {
    const GameFile gf = load_fixture("first-one");
    const Constraint& c = gf.constraint(gf.constraint_order.front());
    for (int n = 0; n <= kClassDepth; ++n) {
        const int k = count_classes(c, gf.arena.na(), gf.arena.nb(), n);
        require(k == n + 1, "length " + std::to_string(n) + " has " + std::to_string(k) +
                                " classes instead of " + std::to_string(n + 1));
    }
}

void criterion_predicate_checkers() {
    // The graph checkers against the definitions themselves, on random
    // 4-state relation automata over a 2-move alphabet.
    std::mt19937 rng(kSeed + 3);
    int closed_seen = 0, unclosed_seen = 0, recall_seen = 0, norecall_seen = 0;
    for (int i = 0; i < kCheckerSamples; ++i) {
        TwoTapeDfa d;
        d.num_a = 2;
        d.num_b = 1;
        d.states = 4;
        d.accepting = {true, false, false, false};
        for (int q = 1; q < 4; ++q) d.accepting[static_cast<std::size_t>(q)] = pick(rng, 2) == 0;
        for (int j = 0; j < 4 * 4; ++j) d.delta.push_back(pick(rng, 4));
        d.validate();

        // One-step prefix checks at every length cover all prefixes: a
        // deeper violation surfaces at the first length whose immediate
        // prefix is not accepted.
        std::vector<History> level{{}};
        bool def_closed = true, def_recall = true;
        for (int n = 0; n < kCheckerLen; ++n) {
            std::vector<History> next;
            for (const History& h : level)
                for (int a = 0; a < 2; ++a) {
                    History e = h;
                    e.push_back({a, 0});
                    next.push_back(std::move(e));
                }
            for (const History& x : next)
                for (const History& y : next) {
                    if (!d.accepts(x, y)) continue;
                    History px(x.begin(), x.end() - 1), py(y.begin(), y.end() - 1);
                    if (!d.accepts(px, py)) def_recall = false;
                }
            level = std::move(next);
        }
        level = {{}};
        for (int n = 0; n <= kCheckerLen; ++n) {
            for (const History& x : level)
                for (const History& y : level)
                    if (d.accepts(x, y))
                        for (int a = 0; a < 2 && def_closed; ++a) {
                            History ex = x, ey = y;
                            ex.push_back({a, 0});
                            ey.push_back({a, 0});
                            if (!d.accepts(ex, ey)) def_closed = false;
                        }
            if (n == kCheckerLen) break;
            std::vector<History> next;
            for (const History& h : level)
                for (int a = 0; a < 2; ++a) {
                    History e = h;
                    e.push_back({a, 0});
                    next.push_back(std::move(e));
                }
            level = std::move(next);
        }

        require(check_suffix_closed(d) == def_closed,
                "suffix-closure checker disagrees with the definition on sample " +
                    std::to_string(i));
        require(check_perfect_recall(d) == def_recall,
                "recall checker disagrees with the definition on sample " + std::to_string(i));
        (def_closed ? closed_seen : unclosed_seen)++;
        (def_recall ? recall_seen : norecall_seen)++;
    }
    require(closed_seen > 0 && unclosed_seen > 0 && recall_seen > 0 && norecall_seen > 0,
            "sample never exercised one side of a predicate");
}

void criterion_tightness_gallery() {
    // Charge: time-aware and suffix-closed and weakly closed, but not
    // strongly closed -- and harmful.
    {
        const GameFile gf = load_fixture("charge");
        const Arena& g = gf.arena;
        const Constraint& c = gf.constraint("round-one-charge");
        const WinCond& w = gf.win();
        require(c.time_aware_by_construction() &&
                    bounded_check_time_aware(c, g.na(), g.nb(), 4).holds,
                "charge relation is not time-aware");
        require(bounded_check_suffix_closed(c, g.na(), g.nb(), 3, 2).holds,
                "charge relation is not suffix-closed");
        require(refute_closedness(g, c, w, ClosednessFlavor::Weak, 2).holds,
                "charge weak closedness fell at bound 2");
        const Verdict strong = refute_closedness(g, c, w, ClosednessFlavor::Strong, 3);
        require(!strong.holds && strong.runs.has_value(),
                "charge strong closedness stands at bound 3");
        require(closedness_pair_violates(g, c, w, ClosednessFlavor::Strong, strong.runs->first,
                                         strong.runs->second, 3, nullptr),
                "charge refuter returned a bogus witness");
        require(solve(g, w).p1_wins, "charge game is not winnable");
        require(!brute_force_strategy(g, w, &c, kBruteMemory, kBruteHorizon).has_value(),
                "charge relation is harmless after all");
    }
    // Alternation: suffix-closed and strongly closed, but not time-aware --
    // and harmful.
    {
        const GameFile gf = load_fixture("alternation");
        const Arena& g = gf.arena;
        const Constraint& c = gf.constraint("p1-one-count-free");
        const WinCond& w = gf.win();
        require(bounded_check_suffix_closed(c, g.na(), g.nb(), 3, 2).holds,
                "alternation relation is not suffix-closed");
        require(refute_closedness(g, c, w, ClosednessFlavor::Strong, 3).holds,
                "alternation strong closedness fell at bound 3");
        const PredicateWitness ta = bounded_check_time_aware(c, g.na(), g.nb(), 4);
        require(!ta.holds && ta.x.size() != ta.y.size(), "alternation relation is time-aware");
        require(verify_winning(g, w, gf.strategy("alternator")).holds,
                "alternation game is not winnable");
        require(!verify_winning(g, w, gf.strategy("always0")).holds,
                "the constant strategy should lose the alternation game");
        require(!brute_force_strategy(g, w, &c, kBruteMemory, kBruteHorizon).has_value(),
                "alternation relation is harmless after all");
    }
    // Imitation: time-aware and strongly closed, but not suffix-closed --
    // and harmful.
    {
        const GameFile gf = load_fixture("imitation");
        const Arena& g = gf.arena;
        const Constraint& c = gf.constraint("imitation-split");
        const WinCond& w = gf.win();
        require(c.time_aware_by_construction() &&
                    bounded_check_time_aware(c, g.na(), g.nb(), 4).holds,
                "imitation relation is not time-aware");
        require(refute_closedness(g, c, w, ClosednessFlavor::Strong, 1).holds,
                "imitation strong closedness fell at bound 1");
        const PredicateWitness sc = bounded_check_suffix_closed(c, g.na(), g.nb(), 3, 2);
        require(!sc.holds && !sc.suffix.empty(), "imitation relation is suffix-closed");
        require(solve(g, w).p1_wins, "imitation game is not winnable");
        require(!brute_force_strategy(g, w, &c, kBruteMemory, kBruteHorizon).has_value(),
                "imitation relation is harmless after all");
    }
}

void criterion_closedness_hierarchy() {
    // The two separating examples, with the textbook run pairs.
    {
        const GameFile gf = load_fixture("one-count");
        const Arena& g = gf.arena;
        const Constraint& c = gf.constraint("p1-one-count");
        const WinCond& w = gf.win();
        require(refute_closedness(g, c, w, ClosednessFlavor::Weak, 3).holds,
                "one-count weak closedness fell at bound 3");
        const Verdict v = refute_closedness(g, c, w, ClosednessFlavor::Plain, 3);
        require(!v.holds && v.runs.has_value(), "one-count plain closedness stands at bound 3");
        require(closedness_pair_violates(g, c, w, ClosednessFlavor::Plain, v.runs->first,
                                         v.runs->second, 3, nullptr),
                "one-count refuter returned a bogus witness");
        const MoveLasso x{{}, {{0, 0}, {1, 0}}};
        const MoveLasso y{{}, {{0, 0}, {0, 0}, {1, 0}, {1, 0}}};
        require(closedness_pair_violates(g, c, w, ClosednessFlavor::Plain, x, y, 3, nullptr),
                "the textbook one-count pair is no violation");
    }
    {
        const GameFile gf = load_fixture("zero-run");
        const Arena& g = gf.arena;
        const Constraint& c = gf.constraint("zero-run-split");
        const WinCond& w = gf.win();
        require(refute_closedness(g, c, w, ClosednessFlavor::Plain, 3).holds,
                "zero-run plain closedness fell at bound 3");
        const Verdict v = refute_closedness(g, c, w, ClosednessFlavor::Strong, 3);
        require(!v.holds && v.runs.has_value(), "zero-run strong closedness stands at bound 3");
        require(v.runs->first == MoveLasso{{}, {{0, 0}}} &&
                    v.runs->second == MoveLasso{{}, {{1, 0}}},
                "zero-run refuter did not find the textbook pair");
        require(v.gamma.has_value() && *v.gamma == History{{1, 0}},
                "zero-run extension witness is off");
    }

    // Recall plus weak closedness must imply strong closedness on the whole
    // corpus.  Budget cuts count as "nothing refuted".
    const Budgets lean = Budgets::scaled(1'000'000);
    int swept = 0;
    for (const std::string& name : fixture_names()) {
        const GameFile gf = load_fixture(name);
        const Arena& g = gf.arena;
        const int moves = g.na() * g.nb();
        const int bound = moves <= 2 ? 3 : moves <= 4 ? 2 : 1;
        const int recall_len = moves <= 2 ? 4 : moves <= 4 ? 3 : 2;
        for (const std::string& cname : gf.constraint_order) {
            const Constraint& c = gf.constraint(cname);
            ++swept;
            if (!bounded_check_perfect_recall(c, g.na(), g.nb(), recall_len).holds) continue;
            auto unrefuted = [&](ClosednessFlavor f) {
                try {
                    return refute_closedness(g, c, gf.win(), f, bound, lean).holds;
                } catch (const ResourceError&) {
                    return true;
                }
            };
            if (!unrefuted(ClosednessFlavor::Weak)) continue;
            require(unrefuted(ClosednessFlavor::Strong),
                    "recall + weak closedness without strong closedness: " + name + "/" + cname);
        }
    }
    require(swept >= 10, "corpus sweep covered too few relations");
}

void criterion_maximal_harmless() {
    const GameFile gf = load_fixture("echo");
    const Arena& g = gf.arena;
    const WinCond& w = gf.win();
    const int horizon = 2;
    const MaximalHarmlessResult res = maximal_harmless(g, w, gf.strategy("exact"), horizon);
    require(res.complete, "merge exploration was cut short");
    require(res.maximals.size() >= 2, "fewer than two maximal harmless coarsenings");
    for (std::size_t i = 0; i < res.maximals.size(); ++i)
        for (std::size_t j = i + 1; j < res.maximals.size(); ++j)
            require(res.maximals[i].class_of != res.maximals[j].class_of,
                    "duplicate maximal partition");

    for (const HarmlessPartition& hp : res.maximals) {
        std::map<int, ActionA> assignment;
        require(partition_is_harmless(g, w, horizon, hp.class_of, Budgets{}, &assignment),
                "reported maximal partition is not harmless");

        // Extend the two decided rounds of the certificate into a machine:
        // a tree for rounds one and two, then one absorbing state.  Past
        // the horizon all same-length histories are identified, so the
        // constant tail is exactly what respecting them requires.
        const FunctionStrategy cert = hp.certificate_strategy();
        MealyStrategy ext;
        ext.memory = g.nb() + 2;
        ext.num_b = g.nb();
        ext.act.assign(static_cast<std::size_t>(ext.memory), 0);
        ext.upd.assign(static_cast<std::size_t>(ext.memory) * g.nb(), g.nb() + 1);
        ext.act[0] = cert({});
        for (int b = 0; b < g.nb(); ++b) {
            ext.upd[static_cast<std::size_t>(b)] = 1 + b;
            ext.act[static_cast<std::size_t>(1 + b)] = cert({b});
        }
        ext.act[static_cast<std::size_t>(g.nb() + 1)] = ext.act[0];
        ext.validate();

        require(verify_winning(g, w, ext).holds, "certificate extension does not win");
        require(is_sim_strategy_bounded(g, hp.as_constraint("coarse"), ext, 4).holds,
                "certificate extension disrespects its own partition");
    }

    const std::map<History, int> joined =
        join_partitions(res.maximals[0].class_of, res.maximals[1].class_of);
    require(!partition_is_harmless(g, w, horizon, joined, Budgets{}, nullptr),
            "the join of two maximal partitions stayed harmless");
}

void criterion_oracle_equivalence() {
    int compared = 0;
    for (const std::string& name : fixture_names()) {
        const GameFile gf = load_fixture(name);
        if (gf.arena.nq() > 4) continue;
        SolveResult sr;
        try {
            sr = solve(gf.arena, gf.win());
        } catch (const InputError&) {
            continue;  // condition outside the fixpoint solver's range
        }
        ++compared;
        const bool brute =
            brute_force_strategy(gf.arena, gf.win(), nullptr, kBruteMemory, kBruteHorizon)
                .has_value();
        require(sr.p1_wins == brute, "solver and enumeration disagree on " + name);
    }
    require(compared >= 5, "too few fixtures in solver range");
}

struct Criterion {
    int id;
    const char* name;
    std::function<void()> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "uniformization-soundness", criterion_uniformization_soundness},
        {2, "memory-bounds", criterion_memory_bounds},
        {3, "lipschitz", criterion_lipschitz},
        {4, "pointwise-memory-agreement", criterion_pointwise_memory_agreement},
        {5, "class-counting", criterion_class_counting},
        {6, "predicate-checkers", criterion_predicate_checkers},
        {7, "tightness-gallery", criterion_tightness_gallery},
        {8, "closedness-hierarchy", criterion_closedness_hierarchy},
        {9, "maximal-harmless", criterion_maximal_harmless},
        {10, "oracle-equivalence", criterion_oracle_equivalence},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string reason;
        try {
            c.body();
        } catch (const check_failure& e) {
            reason = e.what();
        } catch (const std::exception& e) {
            reason = std::string("unexpected error: ") + e.what();
        }
        std::cout << "criterion " << c.id << " (" << c.name << "): "
                  << (reason.empty() ? "PASS" : "FAIL") << "\n";
        if (!reason.empty()) {
            std::cout << "  " << reason << "\n";
            ++failures;
        }
    }
    std::cout << (criteria.size() - failures) << " of " << criteria.size()
              << " criteria passed\n";
    return failures;
}
