#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unistrat/arena.hpp"
#include "unistrat/constraint.hpp"
#include "unistrat/errors.hpp"
#include "unistrat/strategy.hpp"

namespace unistrat {

// Winning condition over the color alphabet of an arena.  A run satisfies
//   Safety:    no color from `colors` ever occurs
//   Reach:     some color from `colors` occurs at least once
//   Buchi:     some color from `colors` occurs infinitely often
//   SubMuller: the set of colors seen infinitely often contains some member
//              of `family`
//   Energy:    every prefix sum of the color weights is >= 0
//   Conj:      all of `parts` hold
struct WinCond {
    enum class Kind { Safety, Reach, Buchi, SubMuller, Energy, Conj };

    Kind kind = Kind::Safety;
    std::vector<ColorId> colors;               // Safety / Reach / Buchi
    std::vector<std::vector<ColorId>> family;  // SubMuller
    std::vector<WinCond> parts;                // Conj

    static WinCond safety(std::vector<ColorId> avoid);
    static WinCond reach(std::vector<ColorId> target);
    static WinCond buchi(std::vector<ColorId> target);
    static WinCond submuller(std::vector<std::vector<ColorId>> family);
    static WinCond energy();
    static WinCond conj(std::vector<WinCond> parts);

    bool needs_weights() const;
    // Color ids must be in range; Conj must be non-empty and flat.
    void validate(const Arena& g) const;
};

std::string wincond_name(const WinCond& w);

// Outcome of a check, with a counterexample when one exists.  Which witness
// field is filled depends on the check: a losing play for verify_winning, a
// pair of opponent histories for constraint-respect, a pair of runs for
// closedness refutation.
struct Verdict {
    bool holds = true;
    std::optional<Lasso> play;                              // losing play
    std::optional<std::pair<OppHistory, OppHistory>> histories;
    std::optional<std::pair<MoveLasso, MoveLasso>> runs;
    std::optional<History> gamma;  // sample extension used by a premise
    std::string note;

    explicit operator bool() const { return holds; }
};

// Does the ultimately periodic run stem.cycle^omega satisfy w on g?
// Decides exactly (no bound): the color trace of the run is itself
// ultimately periodic and all six condition kinds are decidable on it.
bool lasso_satisfies(const Arena& g, const WinCond& w, const MoveLasso& run);

// Same, for the play of a Mealy strategy against an opponent lasso.
bool play_satisfies(const Arena& g, const WinCond& w, const MealyStrategy& s,
                    const Lasso& opp);

// Exact check that s wins w from the initial state against every opponent
// behaviour, by analysis of the finite product of arena and memory.
// A failed verdict carries an opponent lasso whose play violates w.
Verdict verify_winning(const Arena& g, const WinCond& w,
                       const MealyStrategy& s);

// Exact check that the Mealy strategy plays equal actions on histories the
// constraint relates.  Requires a two-tape automaton; key-based constraints
// are handled by the bounded variant below.
Verdict is_sim_strategy(const Arena& g, const Constraint& c,
                        const MealyStrategy& s);

// Bounded check over all opponent histories up to the horizon.  Works for
// any constraint; for constraints that relate histories of different
// lengths the buckets span the whole horizon.
Verdict is_sim_strategy_bounded(const Arena& g, const Constraint& c,
                                const FunctionStrategy& s, int horizon);
Verdict is_sim_strategy_bounded(const Arena& g, const Constraint& c,
                                const MealyStrategy& s, int horizon);

// Dispatch: exact product check when the constraint carries an automaton
// and no keys, bounded check otherwise.
Verdict is_sim_strategy_auto(const Arena& g, const Constraint& c,
                             const MealyStrategy& s, int horizon);

enum class ClosednessFlavor { Weak, Plain, Strong };

std::string closedness_flavor_name(ClosednessFlavor f);

// Check one candidate pair of runs against the chosen closedness property.
// Returns true when the pair is a genuine violation: the premise holds (up
// to the sampling horizon derived from `bound`) and the conclusion fails.
// On success fills `gamma_out` (Strong only) with the extension found for
// the first position that needed a non-empty one.
bool closedness_pair_violates(const Arena& g, const Constraint& c,
                              const WinCond& w, ClosednessFlavor flavor,
                              const MoveLasso& r1, const MoveLasso& r2,
                              int bound, std::optional<History>* gamma_out);

// Search for a pair of ultimately periodic runs witnessing that the
// constraint is NOT closed in the given sense: stems up to `bound`, cycles
// up to 2*bound, candidates in a fixed deterministic order (total length,
// then stem length, then lexicographic).  holds=true means no violation was
// found within the bound — it is evidence, not proof, of closedness.
Verdict refute_closedness(const Arena& g, const Constraint& c,
                          const WinCond& w, ClosednessFlavor flavor,
                          int bound, const Budgets& budgets = {});

// All canonical ultimately periodic runs with |stem| <= stem_bound and
// primitive cycle length <= cycle_bound, deduplicated and sorted in the
// refuter's order.
std::vector<MoveLasso> enumerate_runs(const Arena& g, int stem_bound,
                                      int cycle_bound,
                                      const Budgets& budgets = {});

}  // namespace unistrat
