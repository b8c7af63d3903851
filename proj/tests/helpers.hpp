#pragma once

// Hand-built games and machines shared by the test files.  Everything here
// is small enough to reason about on paper.

#include <string>
#include <vector>

#include "unistrat/arena.hpp"
#include "unistrat/strategy.hpp"

namespace testutil {

using namespace unistrat;

inline std::vector<std::string> numbered(const std::string& prefix, int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

// Arena from explicit tables in (q, a, b) order.
inline Arena table_arena(int nq, int na, int nb, int nc, std::vector<StateId> delta,
                         std::vector<ColorId> color) {
    Arena g;
    g.name = "test";
    g.actions_a = numbered("a", na);
    g.actions_b = numbered("b", nb);
    g.states = numbered("q", nq);
    g.colors = numbered("c", nc);
    g.delta_tab = std::move(delta);
    g.color_tab = std::move(color);
    g.validate();
    return g;
}

// One state, every move a self-loop; only the colors carry information.
inline Arena loop_arena(int na, int nb, int nc, std::vector<ColorId> color) {
    return table_arena(1, na, nb, nc, std::vector<StateId>(static_cast<std::size_t>(na) * nb, 0),
                       std::move(color));
}

inline MealyStrategy mealy(int memory, int num_b, std::vector<ActionA> act,
                           std::vector<int> upd) {
    MealyStrategy m;
    m.memory = memory;
    m.num_b = num_b;
    m.act = std::move(act);
    m.upd = std::move(upd);
    m.validate();
    return m;
}

}  // namespace testutil
