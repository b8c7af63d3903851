#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "unistrat/errors.hpp"
#include "unistrat/rational.hpp"

namespace unistrat {

// Indices into the corresponding name tables of an Arena.
using ActionA = int;  // Player 1 action
using ActionB = int;  // Player 2 action
using StateId = int;
using ColorId = int;

// One simultaneous round: both players' choices.
struct Move {
    ActionA a = 0;
    ActionB b = 0;
    friend bool operator==(const Move&, const Move&) = default;
    friend auto operator<=>(const Move&, const Move&) = default;
};

// A finite play prefix: what both players did, round by round.
using History = std::vector<Move>;

// What Player 2 did, round by round.  Strategies map these to actions.
using OppHistory = std::vector<ActionB>;

// Ultimately periodic infinite word over Player 2's actions.
struct Lasso {
    OppHistory stem;
    OppHistory cycle;  // never empty
};

// Ultimately periodic infinite run over full rounds.
struct MoveLasso {
    History stem;
    History cycle;  // never empty
    friend bool operator==(const MoveLasso&, const MoveLasso&) = default;
};

// Deterministic colored arena: states, total transition/color tables over
// Q x A x B, optional rational weight per color (needed for energy).
struct Arena {
    std::string name;
    std::vector<std::string> actions_a;
    std::vector<std::string> actions_b;
    std::vector<std::string> states;  // states[0] is initial
    std::vector<std::string> colors;
    StateId initial = 0;
    std::vector<StateId> delta_tab;  // q*|A|*|B| + a*|B| + b
    std::vector<ColorId> color_tab;  // same layout
    std::optional<std::vector<Rational>> weights;  // per color

    int na() const { return static_cast<int>(actions_a.size()); }
    int nb() const { return static_cast<int>(actions_b.size()); }
    int nq() const { return static_cast<int>(states.size()); }
    int nc() const { return static_cast<int>(colors.size()); }

    std::size_t idx(StateId q, ActionA a, ActionB b) const {
        return static_cast<std::size_t>((q * na() + a) * nb() + b);
    }
    StateId step(StateId q, ActionA a, ActionB b) const { return delta_tab[idx(q, a, b)]; }
    ColorId color(StateId q, ActionA a, ActionB b) const { return color_tab[idx(q, a, b)]; }

    Rational weight_of(ColorId c) const;  // InputError when weights are absent

    // Index tables must be fully populated and in range.
    void validate() const;
};

// A strategy as a function of the opponent history.  `horizon` caps the
// supported input length; queries past it raise HorizonError rather than
// silently defaulting.  Construction results carry internal memo tables, so
// evaluation is not thread-safe across one instance.
class FunctionStrategy {
  public:
    FunctionStrategy() = default;
    FunctionStrategy(int num_b, std::function<ActionA(const OppHistory&)> fn,
                     std::optional<int> horizon = std::nullopt)
        : num_b_(num_b), fn_(std::move(fn)), horizon_(horizon) {}

    ActionA operator()(const OppHistory& beta) const;
    int num_b() const { return num_b_; }
    std::optional<int> horizon() const { return horizon_; }

  private:
    int num_b_ = 1;
    std::function<ActionA(const OppHistory&)> fn_;
    std::optional<int> horizon_;
};

OppHistory opponent_projection(const History& rho);

// h(s, beta): the history produced when Player 1 follows s and Player 2
// plays beta.  Defined round by round; |result| == |beta|.
History induced_history(const FunctionStrategy& s, const OppHistory& beta);

// State/color traces of a history from the initial state.
// states has |rho|+1 entries (initial state first), colors has |rho|.
struct Traces {
    std::vector<StateId> states;
    std::vector<ColorId> colors;
};
Traces traces(const Arena& arena, const History& rho);

// First n rounds of the run of s against the lasso.
History run_history(const FunctionStrategy& s, const Lasso& l, int n);

OppHistory unroll_lasso(const Lasso& l, int n);
History unroll_move_lasso(const MoveLasso& l, int n);

// Normal form: cycle primitive (not a power), stem minimal (rotating the
// cycle backwards absorbs any stem tail that matches).  Two MoveLassos
// denote the same run iff their canonical forms are equal.
MoveLasso canonical_move_lasso(MoveLasso l);

}  // namespace unistrat
