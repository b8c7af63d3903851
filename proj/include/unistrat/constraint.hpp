#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unistrat/arena.hpp"

namespace unistrat {

// Deterministic total automaton over single moves (used for lifting).
struct OneTapeDfa {
    int num_a = 1;
    int num_b = 1;
    int states = 1;
    int init = 0;
    std::vector<int> delta;  // q*(|A||B|) + move, move = a*|B|+b

    int nm() const { return num_a * num_b; }
    int step(int q, Move m) const {
        return delta[static_cast<std::size_t>(q) * nm() + m.a * num_b + m.b];
    }
    void validate() const;
};

// Deterministic total automaton over pairs of moves; recognizes a relation
// on equal-length histories: rho ~ rho' iff the paired word is accepted.
// The initial state is accepting (the empty history relates to itself).
struct TwoTapeDfa {
    int num_a = 1;
    int num_b = 1;
    int states = 1;
    int init = 0;
    std::vector<bool> accepting;
    std::vector<int> delta;  // q*(nm*nm) + m1*nm + m2
    std::vector<std::string> state_names;  // optional

    int nm() const { return num_a * num_b; }
    int letter(Move x, Move y) const { return (x.a * num_b + x.b) * nm() + y.a * num_b + y.b; }
    int step(int q, Move x, Move y) const {
        return delta[static_cast<std::size_t>(q) * nm() * nm() + letter(x, y)];
    }
    int run(const History& x, const History& y) const;  // equal lengths only
    bool accepts(const History& x, const History& y) const;
    void validate() const;
};

// Key-function part of a constraint: histories are equivalent iff their
// canonical keys match (and lengths match, when time_aware).  Keys are
// canonical strings so equality is bit-stable.
struct KeyPart {
    std::string name;
    bool time_aware = true;
    std::function<std::string(const History&)> key;
};

// A constraint is a conjunction of at most one two-tape automaton part and
// any number of key parts.  Intersections merge automata into a product.
struct Constraint {
    std::string name;
    std::optional<TwoTapeDfa> dfa;
    std::vector<KeyPart> keys;

    bool equiv(const History& x, const History& y) const;
    // True when the relation provably relates only equal-length histories.
    bool time_aware_by_construction() const;
    bool dfa_backed() const { return dfa.has_value() && keys.empty(); }
};

// ---- algebra ----

// Pairwise product on Q1 x Q2, accepting = both accepting; restricted to the
// part reachable from the initial pair.  Recognizes the intersection.
TwoTapeDfa product_dfa(const TwoTapeDfa& a, const TwoTapeDfa& b);

// u ~ v iff |u|=|v| and both tapes reach the same d-state (diagonal lift).
TwoTapeDfa lift_one_tape(const OneTapeDfa& d);

Constraint intersect(const std::vector<Constraint>& parts);

// rho ~' rho'  iff  rho ~ rho' and |rho| = |rho'|.
Constraint time_aware_restriction(const Constraint& c);

// ---- exact structural predicates on automaton-backed relations ----

// Closed by adding a suffix: from every reachable accepting state, every
// diagonal letter (m,m) stays accepting.  Sound and complete.
bool check_suffix_closed(const TwoTapeDfa& d);

// Perfect recall: prefixes of accepted pairings are accepted, i.e. no
// accepting state is reachable from a reachable non-accepting state.
bool check_perfect_recall(const TwoTapeDfa& d);

// ---- bounded definitional predicates on arbitrary constraints ----

struct PredicateWitness {
    bool holds = true;
    History x, y;        // offending pair
    History suffix;      // for suffix-closure violations
};

// Quantifies histories over the arena alphabets up to the given lengths.
PredicateWitness bounded_check_time_aware(const Constraint& c, int na, int nb, int len);
PredicateWitness bounded_check_suffix_closed(const Constraint& c, int na, int nb, int len,
                                             int suffix_len);
PredicateWitness bounded_check_perfect_recall(const Constraint& c, int na, int nb, int len);

// Equivalence-relation sanity to a bound (reflexive, symmetric, transitive).
PredicateWitness bounded_check_equivalence(const Constraint& c, int na, int nb, int len);

// Number of equivalence classes among histories of exactly length `depth`.
int count_classes(const Constraint& c, int na, int nb, int depth);

// All histories of exactly length n over the move alphabet, lexicographic.
std::vector<History> all_histories(int na, int nb, int n);

// ---- shipped constraints ----

enum class StateColorMode { FullSequence, CurrentState };

// FullSequence: equal state sequences and color sequences; an "alive" fiber
// tracking the common state (all accepting) plus a reject sink — |Q|+1
// states.  CurrentState: equal color sequences and equal current state;
// Q^2 plus a sink, accepting = diagonal.
Constraint state_color_constraint(const Arena& arena, StateColorMode mode);

// Same current state and same multiset of colors seen.
Constraint multiset_state_constraint(const Arena& arena);

// Same length, current state, prefix-sum of weights; the proof-level key
// also matches the per-prefix nonnegativity pattern.
enum class EnergyKeyLevel { Proof, Statement };
Constraint energy_constraint(const Arena& arena, EnergyKeyLevel level);

Constraint universal_time_aware_constraint(int na, int nb);
Constraint equality_constraint(int na, int nb);

// Smallest equivalence containing the seed pairs, closed under appending a
// common suffix; computed per length by union-find up to the horizon.
Constraint generated_constraint(std::string name, int na, int nb,
                                std::vector<std::pair<History, History>> seeds, int horizon);

// ---- counterexample-gallery relations (shipped as named builtins) ----

// equal count of Player-1 "1" actions; time-aware or length-blind
Constraint one_count_constraint(const Arena& arena, bool time_aware);
// both all-(0,0), or both contain a Player-1 "1"; time-aware
Constraint zero_run_split_constraint(const Arena& arena);
// nonempty, equal length, equal pi2(rho_0) + sum_{i>=1} pi1(rho_i)
Constraint round_one_charge_constraint(const Arena& arena);
// length 1 all alike; length >= 2 split by round-2 action == round-1 reply
Constraint imitation_split_constraint(const Arena& arena);
// two classes: the singleton histories (_, b), and everything else
Constraint single_b_class_constraint(const Arena& arena, ActionB b);

// Builtin lookup used by the parser/CLI; InputError for unknown names.
Constraint build_builtin_constraint(const std::string& name, const Arena& arena);
std::vector<std::string> builtin_constraint_names();

}  // namespace unistrat
