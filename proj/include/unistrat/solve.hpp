#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "unistrat/arena.hpp"
#include "unistrat/constraint.hpp"
#include "unistrat/errors.hpp"
#include "unistrat/strategy.hpp"
#include "unistrat/wincond.hpp"

namespace unistrat {

struct SolveResult {
    bool p1_wins = false;
    std::optional<MealyStrategy> strategy;  // present iff p1_wins
};

// Exact fixpoint solver for safety, reach, buchi and energy conditions
// (InputError for the rest; use brute_force_strategy there).  The returned
// strategy is positional in the arena state and is re-verified before being
// handed out.
SolveResult solve(const Arena& g, const WinCond& w, const Budgets& budgets = {});

// First machine in canonical enumeration order within the memory bound that
// wins and (when a constraint is given) respects it; nullopt when the bound
// is exhausted.  Constraint respect is checked exactly for automaton-only
// relations and up to sim_horizon otherwise.
std::optional<MealyStrategy> brute_force_strategy(const Arena& g, const WinCond& w,
                                                  const Constraint* c, int memory_bound,
                                                  int sim_horizon, const Budgets& budgets = {});

// A partition of all histories shorter than the horizon, with histories of
// equal length beyond it identified.  Carries the winning assignment of one
// action per class that certifies harmlessness.
struct HarmlessPartition {
    int horizon = 0;
    int num_b = 1;
    std::map<History, int> class_of;
    std::map<int, ActionA> assignment;

    Constraint as_constraint(const std::string& name) const;
    // Plays assignment[class of the evolving history]; defined up to
    // horizon-1 rounds of input.
    FunctionStrategy certificate_strategy() const;
};

struct MaximalHarmlessResult {
    std::vector<HarmlessPartition> maximals;
    std::uint64_t partitions_explored = 0;
    bool complete = true;  // false when a budget cut the merge tree short
};

// Kernel of the strategy: histories of equal length whose opponent parts
// get the same action share a class.
std::map<History, int> seed_partition(const Arena& g, const MealyStrategy& s, int horizon);

// Decides whether some choice of one action per class wins outright by the
// horizon (every length-horizon play is decided in the player's favor).
// The horizon must decide the condition everywhere (clopen check),
// otherwise InputError.  Fills `assignment_out` on success when non-null.
bool partition_is_harmless(const Arena& g, const WinCond& w, int horizon,
                           const std::map<History, int>& class_of, const Budgets& budgets,
                           std::map<int, ActionA>* assignment_out);

// Finest partition coarser than both (classes connected through either).
std::map<History, int> join_partitions(const std::map<History, int>& p,
                                       const std::map<History, int>& q);

// All maximal harmless coarsenings reachable from the strategy's kernel by
// merging same-length classes, deduplicated.  Deterministic order.
MaximalHarmlessResult maximal_harmless(const Arena& g, const WinCond& w, const MealyStrategy& s,
                                       int horizon, const Budgets& budgets = {});

}  // namespace unistrat
