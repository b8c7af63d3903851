#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "unistrat/arena.hpp"
#include "unistrat/constraint.hpp"
#include "unistrat/errors.hpp"
#include "unistrat/strategy.hpp"

namespace unistrat {

// Least opponent action whose one-step extension of `virt` the relation
// cannot tell apart from extending by `b`, judging by the plays of s.
// Always at most b itself when the relation is reflexive.
ActionB virtual_action(const Constraint& c, const FunctionStrategy& s, const OppHistory& virt,
                       ActionB b);

// Rewrites opponent histories on the fly: each incoming action is replaced
// by the least one the relation cannot distinguish, and the wrapped
// strategy only ever sees the rewritten history.  The rewriting is
// 1-Lipschitz: one more round of input yields exactly one more round of
// output.
class RecallUniformizer {
  public:
    RecallUniformizer(const Constraint& c, FunctionStrategy s);

    // The rewritten history the wrapped strategy is consulted with.
    const OppHistory& virtual_history(const OppHistory& beta);
    ActionA action(const OppHistory& beta);
    int num_b() const { return s_.num_b(); }
    std::optional<int> horizon() const { return s_.horizon(); }

  private:
    Constraint c_;
    FunctionStrategy s_;
    std::map<OppHistory, OppHistory> memo_;
};

// The rewriting wrapper as a strategy.  For an automaton-backed relation
// the preconditions (closed by adding a suffix, perfectly recalling) are
// checked exactly and failure raises PreconditionError; key-based relations
// are taken on trust.
FunctionStrategy uniformize_recall(const Arena& g, const Constraint& c, const FunctionStrategy& s);

// Finite-memory version: memory pairs of the wrapped machine's memory with
// the relation state reached on the rewritten play.  Requires an
// automaton-only relation; the result has at most |M| * |accepting| states.
MealyStrategy uniformize_recall_mealy(const Arena& g, const Constraint& c,
                                      const MealyStrategy& s);

// Replays a given finite-memory-free strategy through representatives: each
// produced history is mapped to the least opponent word whose play the
// relation cannot distinguish from it, and the wrapped strategy answers for
// that word.  Exponential in the worst case, hence the node budget; the
// horizon caps the supported input length.
class BacktrackUniformizer {
  public:
    BacktrackUniformizer(const Constraint& c, FunctionStrategy s, int horizon,
                         const Budgets& budgets = {});

    // Lex-least beta with play(beta) related to rho; PreconditionError when
    // none exists.
    OppHistory representative(const History& rho);
    ActionA action(const OppHistory& beta);
    int num_b() const { return s_.num_b(); }
    int horizon() const { return horizon_; }

  private:
    History induced(const OppHistory& beta);

    Constraint c_;
    FunctionStrategy s_;
    int horizon_;
    Budgets budgets_;
    std::map<OppHistory, ActionA> actions_;
};

FunctionStrategy uniformize_backtrack(const Arena& g, const Constraint& c,
                                      const FunctionStrategy& s, int horizon,
                                      const Budgets& budgets = {});

// Subset construction over pairs of wrapped-machine memory and relation
// state.  Works for any automaton-only relation that is closed by adding a
// suffix (no recall needed); each result state is the set of pairs
// compatible with the observed history.
struct PowersetResult {
    MealyStrategy machine;
    std::vector<std::vector<std::pair<int, int>>> subsets;  // per machine state
};

PowersetResult uniformize_powerset(const Arena& g, const Constraint& c, const MealyStrategy& s,
                                   const Budgets& budgets = {});

}  // namespace unistrat
