#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unistrat/arena.hpp"

namespace unistrat {

// Finite-memory strategy: memory set {0..size-1}, init 0 unless stated,
// output table act[m], update table upd[m*|B|+b].  Total by construction.
struct MealyStrategy {
    int memory = 1;
    int init = 0;
    int num_b = 1;
    std::vector<ActionA> act;            // memory entries
    std::vector<int> upd;                // memory*|B| entries
    std::vector<std::string> names;      // optional, per memory state

    int next(int m, ActionB b) const { return upd[static_cast<std::size_t>(m) * num_b + b]; }
    ActionA out(int m) const { return act[static_cast<std::size_t>(m)]; }

    void validate() const;

    // mu+(beta): memory after consuming beta.
    int run(const OppHistory& beta) const;
    // The strategy this machine denotes: sigma(mu+(beta)).
    ActionA eval(const OppHistory& beta) const;
    FunctionStrategy as_function() const;
};

// Memory states reachable from init, in BFS discovery order (b ascending).
std::vector<int> reachable_memory(const MealyStrategy& m);

// Streams every machine behavior realizable with at most `memory_bound`
// states, one canonical representative per reachable-part isomorphism class:
// a machine is emitted iff all its states are reachable and BFS discovery
// from state 0 (b ascending) enumerates them in id order.  Deterministic.
class MealyEnumerator {
  public:
    MealyEnumerator(int num_a, int num_b, int memory_bound, const Budgets& budgets = {});

    // Total raw table count across all sizes; checked against the budget
    // up front so callers fail fast rather than time out.
    std::uint64_t raw_count() const { return raw_count_; }

    std::optional<MealyStrategy> next();

  private:
    bool advance_tables();
    MealyStrategy current_machine() const;
    bool canonical() const;

    int num_a_;
    int num_b_;
    int bound_;
    int k_ = 1;                 // current memory size
    bool fresh_ = true;         // tables not yet emitted for this k
    std::vector<ActionA> act_;
    std::vector<int> upd_;
    std::uint64_t raw_count_ = 0;
};

// |A|^k * k^(k|B|) summed over k = 1..bound, saturating.
std::uint64_t mealy_raw_count(int num_a, int num_b, int memory_bound);

}  // namespace unistrat
