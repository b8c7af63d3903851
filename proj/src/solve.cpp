#include "unistrat/solve.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace unistrat {

namespace {

bool has_color(const std::vector<ColorId>& set, ColorId c) {
    return std::find(set.begin(), set.end(), c) != set.end();
}

// Positional strategy packaged as a machine over the arena states it
// actually visits.
MealyStrategy positional_machine(const Arena& g, const std::vector<ActionA>& choice) {
    std::vector<int> id(static_cast<std::size_t>(g.nq()), -1);
    std::vector<StateId> verts;
    auto intern = [&](StateId q) {
        if (id[static_cast<std::size_t>(q)] < 0) {
            id[static_cast<std::size_t>(q)] = static_cast<int>(verts.size());
            verts.push_back(q);
        }
        return id[static_cast<std::size_t>(q)];
    };
    intern(g.initial);
    MealyStrategy m;
    m.num_b = g.nb();
    for (int v = 0; v < static_cast<int>(verts.size()); ++v) {
        StateId q = verts[static_cast<std::size_t>(v)];
        ActionA a = choice[static_cast<std::size_t>(q)];
        m.act.push_back(a);
        m.names.push_back(g.states[static_cast<std::size_t>(q)]);
        for (ActionB b = 0; b < g.nb(); ++b) m.upd.push_back(intern(g.step(q, a, b)));
    }
    m.memory = static_cast<int>(verts.size());
    m.init = 0;
    m.validate();
    return m;
}

SolveResult solve_safety(const Arena& g, const std::vector<ColorId>& avoid) {
    // Greatest fixpoint: keep the states from which some action stays both
    // clean and inside the kept set, whatever the opponent does.
    std::vector<char> safe(static_cast<std::size_t>(g.nq()), 1);
    std::vector<ActionA> choice(static_cast<std::size_t>(g.nq()), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (StateId q = 0; q < g.nq(); ++q) {
            if (!safe[static_cast<std::size_t>(q)]) continue;
            bool ok = false;
            for (ActionA a = 0; a < g.na() && !ok; ++a) {
                bool all = true;
                for (ActionB b = 0; b < g.nb() && all; ++b)
                    all = !has_color(avoid, g.color(q, a, b)) &&
                          safe[static_cast<std::size_t>(g.step(q, a, b))];
                if (all) {
                    ok = true;
                    choice[static_cast<std::size_t>(q)] = a;
                }
            }
            if (!ok) {
                safe[static_cast<std::size_t>(q)] = 0;
                changed = true;
            }
        }
    }
    SolveResult r;
    r.p1_wins = safe[static_cast<std::size_t>(g.initial)];
    if (r.p1_wins) r.strategy = positional_machine(g, choice);
    return r;
}

SolveResult solve_reach(const Arena& g, const std::vector<ColorId>& target) {
    // Least fixpoint: a state joins once some action guarantees hitting the
    // target now or landing in the already-won region.
    std::vector<char> won(static_cast<std::size_t>(g.nq()), 0);
    std::vector<ActionA> choice(static_cast<std::size_t>(g.nq()), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (StateId q = 0; q < g.nq(); ++q) {
            if (won[static_cast<std::size_t>(q)]) continue;
            for (ActionA a = 0; a < g.na(); ++a) {
                bool all = true;
                for (ActionB b = 0; b < g.nb() && all; ++b)
                    all = has_color(target, g.color(q, a, b)) ||
                          won[static_cast<std::size_t>(g.step(q, a, b))];
                if (all) {
                    won[static_cast<std::size_t>(q)] = 1;
                    choice[static_cast<std::size_t>(q)] = a;
                    changed = true;
                    break;
                }
            }
        }
    }
    SolveResult r;
    r.p1_wins = won[static_cast<std::size_t>(g.initial)];
    if (r.p1_wins) r.strategy = positional_machine(g, choice);
    return r;
}

SolveResult solve_buchi(const Arena& g, const std::vector<ColorId>& target) {
    // Outer set Z shrinks until stable; inside, an attractor to "target edge
    // back into Z" is rebuilt from scratch.
    std::vector<char> z(static_cast<std::size_t>(g.nq()), 1);
    std::vector<ActionA> choice(static_cast<std::size_t>(g.nq()), 0);
    while (true) {
        std::vector<char> y(static_cast<std::size_t>(g.nq()), 0);
        bool grew = true;
        while (grew) {
            grew = false;
            for (StateId q = 0; q < g.nq(); ++q) {
                if (y[static_cast<std::size_t>(q)]) continue;
                for (ActionA a = 0; a < g.na(); ++a) {
                    bool all = true;
                    for (ActionB b = 0; b < g.nb() && all; ++b) {
                        bool good_edge = has_color(target, g.color(q, a, b)) &&
                                         z[static_cast<std::size_t>(g.step(q, a, b))];
                        all = good_edge || y[static_cast<std::size_t>(g.step(q, a, b))];
                    }
                    if (all) {
                        y[static_cast<std::size_t>(q)] = 1;
                        choice[static_cast<std::size_t>(q)] = a;
                        grew = true;
                        break;
                    }
                }
            }
        }
        if (y == z) break;
        z = std::move(y);
    }
    SolveResult r;
    r.p1_wins = z[static_cast<std::size_t>(g.initial)];
    if (r.p1_wins) r.strategy = positional_machine(g, choice);
    return r;
}

SolveResult solve_energy(const Arena& g) {
    // Least credit needed per state; values above the cap cannot stabilize
    // and mean the opponent can drain any finite credit.
    Rational wmax(0);
    for (ColorId c = 0; c < g.nc(); ++c) {
        Rational a = g.weight_of(c);
        if (a < Rational(0)) a = -a;
        if (a > wmax) wmax = a;
    }
    Rational cap = Rational(g.nq()) * wmax;
    std::vector<std::optional<Rational>> f(static_cast<std::size_t>(g.nq()), Rational(0));
    std::vector<ActionA> choice(static_cast<std::size_t>(g.nq()), 0);
    int guard = 1000000;
    bool changed = true;
    while (changed) {
        if (--guard < 0) throw ResourceError("energy iteration budget exceeded");
        changed = false;
        for (StateId q = 0; q < g.nq(); ++q) {
            std::optional<Rational> best;
            ActionA best_a = 0;
            for (ActionA a = 0; a < g.na(); ++a) {
                std::optional<Rational> worst = Rational(0);
                for (ActionB b = 0; b < g.nb(); ++b) {
                    const auto& nf = f[static_cast<std::size_t>(g.step(q, a, b))];
                    if (!nf) {
                        worst = std::nullopt;
                        break;
                    }
                    Rational need = *nf - g.weight_of(g.color(q, a, b));
                    if (need > *worst) worst = need;
                }
                if (!worst) continue;
                if (!best || *worst < *best) {
                    best = worst;
                    best_a = a;
                }
            }
            if (best && *best > cap) best = std::nullopt;
            const auto& cur = f[static_cast<std::size_t>(q)];
            bool same = (!cur && !best) || (cur && best && *cur == *best);
            if (!same) {
                f[static_cast<std::size_t>(q)] = best;
                choice[static_cast<std::size_t>(q)] = best_a;
                changed = true;
            } else if (cur) {
                choice[static_cast<std::size_t>(q)] = best_a;
            }
        }
    }
    SolveResult r;
    const auto& v0 = f[static_cast<std::size_t>(g.initial)];
    r.p1_wins = v0 && *v0 == Rational(0);
    if (r.p1_wins) r.strategy = positional_machine(g, choice);
    return r;
}

}  // namespace

SolveResult solve(const Arena& g, const WinCond& w, const Budgets&) {
    g.validate();
    w.validate(g);
    SolveResult r;
    switch (w.kind) {
        case WinCond::Kind::Safety: r = solve_safety(g, w.colors); break;
        case WinCond::Kind::Reach: r = solve_reach(g, w.colors); break;
        case WinCond::Kind::Buchi: r = solve_buchi(g, w.colors); break;
        case WinCond::Kind::Energy: r = solve_energy(g); break;
        default:
            throw InputError("the solver handles safety, reach, buchi and energy only");
    }
    if (r.p1_wins) {
        if (!verify_winning(g, w, *r.strategy).holds)
            throw std::logic_error("solver produced a non-winning strategy");
    }
    return r;
}

std::optional<MealyStrategy> brute_force_strategy(const Arena& g, const WinCond& w,
                                                  const Constraint* c, int memory_bound,
                                                  int sim_horizon, const Budgets& budgets) {
    g.validate();
    w.validate(g);
    if (c && c->dfa && (c->dfa->num_a != g.na() || c->dfa->num_b != g.nb()))
        throw InputError("constraint alphabet does not match the arena");
    MealyEnumerator en(g.na(), g.nb(), memory_bound, budgets);
    while (auto m = en.next()) {
        if (!verify_winning(g, w, *m).holds) continue;
        if (c && !is_sim_strategy_auto(g, *c, *m, sim_horizon).holds) continue;
        return m;
    }
    return std::nullopt;
}

// ---- harmless partitions ----

namespace {

// Per-state facts that make length-`horizon` histories decided.
struct DecideTables {
    bool reach = false;                 // otherwise safety
    std::vector<ColorId> colors;        // target / avoid set
    std::vector<char> can_touch;        // some path touches the color set
    std::vector<char> can_dodge;        // some infinite path avoids it
};

DecideTables make_tables(const Arena& g, const WinCond& w) {
    if (w.kind != WinCond::Kind::Safety && w.kind != WinCond::Kind::Reach)
        throw InputError("only safety and reach are decided at a finite horizon");
    DecideTables t;
    t.reach = w.kind == WinCond::Kind::Reach;
    t.colors = w.colors;
    t.can_touch.assign(static_cast<std::size_t>(g.nq()), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (StateId q = 0; q < g.nq(); ++q) {
            if (t.can_touch[static_cast<std::size_t>(q)]) continue;
            for (ActionA a = 0; a < g.na(); ++a)
                for (ActionB b = 0; b < g.nb(); ++b)
                    if (has_color(t.colors, g.color(q, a, b)) ||
                        t.can_touch[static_cast<std::size_t>(g.step(q, a, b))]) {
                        t.can_touch[static_cast<std::size_t>(q)] = 1;
                        changed = true;
                    }
        }
    }
    // States with an infinite path that never touches the set: strip states
    // with no clean edge into the surviving set until stable.
    t.can_dodge.assign(static_cast<std::size_t>(g.nq()), 1);
    changed = true;
    while (changed) {
        changed = false;
        for (StateId q = 0; q < g.nq(); ++q) {
            if (!t.can_dodge[static_cast<std::size_t>(q)]) continue;
            bool ok = false;
            for (ActionA a = 0; a < g.na() && !ok; ++a)
                for (ActionB b = 0; b < g.nb() && !ok; ++b)
                    ok = !has_color(t.colors, g.color(q, a, b)) &&
                         t.can_dodge[static_cast<std::size_t>(g.step(q, a, b))];
            if (!ok) {
                t.can_dodge[static_cast<std::size_t>(q)] = 0;
                changed = true;
            }
        }
    }
    return t;
}

// touched = the color set was seen along the history ending in state q.
bool decided_win(const DecideTables& t, bool touched, StateId q) {
    if (t.reach) return touched || !t.can_dodge[static_cast<std::size_t>(q)];
    return !touched && !t.can_touch[static_cast<std::size_t>(q)];
}

bool decided_lose(const DecideTables& t, bool touched, StateId q) {
    if (t.reach) return !touched && !t.can_touch[static_cast<std::size_t>(q)];
    return touched;
}

void check_clopen(const Arena& g, const DecideTables& t, int horizon) {
    // Every (touched, state) pair realizable in exactly `horizon` rounds
    // must be decided one way or the other.
    std::set<std::pair<char, StateId>> layer{{0, g.initial}};
    for (int step = 0; step < horizon; ++step) {
        std::set<std::pair<char, StateId>> next;
        for (auto [flag, q] : layer)
            for (ActionA a = 0; a < g.na(); ++a)
                for (ActionB b = 0; b < g.nb(); ++b)
                    next.emplace(
                        static_cast<char>(flag || has_color(t.colors, g.color(q, a, b))),
                        g.step(q, a, b));
        layer = std::move(next);
    }
    for (auto [flag, q] : layer)
        if (!decided_win(t, flag, q) && !decided_lose(t, flag, q))
            throw InputError("the horizon does not decide the winning condition");
}

void check_domain(const Arena& g, int horizon, const std::map<History, int>& class_of) {
    if (horizon < 1) throw InputError("horizon must be at least 1");
    std::size_t expect = 0;
    std::size_t pw = 1;
    for (int len = 0; len < horizon; ++len) {
        expect += pw;
        pw *= static_cast<std::size_t>(g.na()) * g.nb();
    }
    if (class_of.size() != expect)
        throw InputError("partition does not cover every history below the horizon");
}

}  // namespace

std::map<History, int> seed_partition(const Arena& g, const MealyStrategy& s, int horizon) {
    s.validate();
    if (s.num_b != g.nb()) throw InputError("strategy num_b does not match the arena");
    if (horizon < 1) throw InputError("horizon must be at least 1");
    std::map<History, int> out;
    std::map<std::pair<int, ActionA>, int> ids;
    for (int len = 0; len < horizon; ++len)
        for (const History& h : all_histories(g.na(), g.nb(), len)) {
            ActionA a = s.eval(opponent_projection(h));
            auto [it, fresh] = ids.try_emplace({len, a}, static_cast<int>(ids.size()));
            (void)fresh;
            out[h] = it->second;
        }
    return out;
}

bool partition_is_harmless(const Arena& g, const WinCond& w, int horizon,
                           const std::map<History, int>& class_of, const Budgets& budgets,
                           std::map<int, ActionA>* assignment_out) {
    g.validate();
    w.validate(g);
    check_domain(g, horizon, class_of);
    DecideTables tables = make_tables(g, w);
    check_clopen(g, tables, horizon);
    // One node per opponent history up to the horizon, in breadth-first
    // order, so a node's play prefix is fixed by earlier assignments.
    struct Node {
        int parent = -1;
        ActionB b = 0;
        int depth = 0;
        History h;  // recomputed per visit
    };
    std::vector<Node> nodes{{}};
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].depth < horizon)
            for (ActionB b = 0; b < g.nb(); ++b)
                nodes.push_back({static_cast<int>(i), b, nodes[i].depth + 1, {}});
    std::map<int, ActionA> assign;
    std::uint64_t steps = 0;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (++steps > budgets.assignment_search)
            throw ResourceError("assignment search budget exceeded");
        if (i == nodes.size()) return true;
        Node& n = nodes[i];
        if (n.parent >= 0) {
            const Node& p = nodes[static_cast<std::size_t>(n.parent)];
            n.h = p.h;
            n.h.push_back({assign.at(class_of.at(p.h)), n.b});
        }
        if (n.depth == horizon) {
            Traces tr = traces(g, n.h);
            bool touched = false;
            for (ColorId c : tr.colors) touched = touched || has_color(tables.colors, c);
            return decided_win(tables, touched, tr.states.back()) && rec(i + 1);
        }
        int cls = class_of.at(n.h);
        if (assign.count(cls)) return rec(i + 1);
        for (ActionA a = 0; a < g.na(); ++a) {
            assign[cls] = a;
            if (rec(i + 1)) return true;
            assign.erase(cls);
        }
        return false;
    };
    if (!rec(0)) return false;
    if (assignment_out) *assignment_out = assign;
    return true;
}

std::map<History, int> join_partitions(const std::map<History, int>& p,
                                       const std::map<History, int>& q) {
    if (p.size() != q.size()) throw InputError("partitions cover different domains");
    // Union-find over p's classes, glued through q's.
    std::map<int, int> up;
    std::function<int(int)> find = [&](int x) -> int {
        auto it = up.find(x);
        if (it == up.end() || it->second == x) {
            up[x] = x;
            return x;
        }
        return it->second = find(it->second);
    };
    std::map<int, int> rep_of_q;  // q-class -> representative p-class
    for (const auto& [h, pc] : p) {
        auto it = q.find(h);
        if (it == q.end()) throw InputError("partitions cover different domains");
        auto [rit, fresh] = rep_of_q.try_emplace(it->second, pc);
        if (!fresh) up[find(pc)] = find(rit->second);
    }
    std::map<History, int> out;
    std::map<int, int> renumber;
    for (const auto& [h, pc] : p) {
        int root = find(pc);
        auto [it, fresh] = renumber.try_emplace(root, static_cast<int>(renumber.size()));
        (void)fresh;
        out[h] = it->second;
    }
    return out;
}

MaximalHarmlessResult maximal_harmless(const Arena& g, const WinCond& w, const MealyStrategy& s,
                                       int horizon, const Budgets& budgets) {
    std::map<History, int> seed = seed_partition(g, s, horizon);
    std::map<int, ActionA> seed_cert;
    if (!partition_is_harmless(g, w, horizon, seed, budgets, &seed_cert))
        throw InputError("the strategy does not win decisively within the horizon");
    // The enumeration domain, fixed once: length first, then lexicographic.
    std::vector<History> domain;
    for (int len = 0; len < horizon; ++len)
        for (History& h : all_histories(g.na(), g.nb(), len)) domain.push_back(std::move(h));
    auto signature = [&](const std::map<History, int>& part) {
        std::vector<int> sig;
        std::map<int, int> renumber;
        for (const History& h : domain) {
            int cls = part.at(h);
            auto [it, fresh] = renumber.try_emplace(cls, static_cast<int>(renumber.size()));
            (void)fresh;
            sig.push_back(it->second);
        }
        return sig;
    };
    auto length_of_class = [&](const std::map<History, int>& part, int cls) {
        for (const auto& [h, c] : part)
            if (c == cls) return static_cast<int>(h.size());
        return -1;
    };
    std::set<std::vector<int>> seen_harmless, seen_harmful, maximal_sigs;
    MaximalHarmlessResult res;
    std::function<void(const std::map<History, int>&, const std::map<int, ActionA>&)> dfs =
        [&](const std::map<History, int>& part, const std::map<int, ActionA>& cert) {
            ++res.partitions_explored;
            // Candidate merges: same-length class pairs, in a fixed order.
            std::vector<int> classes;
            for (const auto& [h, c] : part)
                if (std::find(classes.begin(), classes.end(), c) == classes.end())
                    classes.push_back(c);
            std::sort(classes.begin(), classes.end());
            bool any_harmless_merge = false;
            for (std::size_t x = 0; x < classes.size(); ++x)
                for (std::size_t y = x + 1; y < classes.size(); ++y) {
                    if (length_of_class(part, classes[x]) != length_of_class(part, classes[y]))
                        continue;
                    std::map<History, int> merged = part;
                    for (auto& [h, c] : merged)
                        if (c == classes[y]) c = classes[x];
                    std::vector<int> sig = signature(merged);
                    if (seen_harmless.count(sig)) {
                        any_harmless_merge = true;
                        continue;
                    }
                    if (seen_harmful.count(sig)) continue;
                    std::map<int, ActionA> c2;
                    if (partition_is_harmless(g, w, horizon, merged, budgets, &c2)) {
                        any_harmless_merge = true;
                        seen_harmless.insert(sig);
                        dfs(merged, c2);
                    } else {
                        seen_harmful.insert(sig);
                    }
                }
            if (!any_harmless_merge) {
                std::vector<int> sig = signature(part);
                if (maximal_sigs.insert(sig).second) {
                    HarmlessPartition hp;
                    hp.horizon = horizon;
                    hp.num_b = g.nb();
                    hp.class_of = part;
                    hp.assignment = cert;
                    res.maximals.push_back(std::move(hp));
                }
            }
        };
    seen_harmless.insert(signature(seed));
    try {
        dfs(seed, seed_cert);
    } catch (const ResourceError&) {
        res.complete = false;  // partial results, flagged rather than lost
    }
    return res;
}

Constraint HarmlessPartition::as_constraint(const std::string& name) const {
    Constraint c;
    c.name = name;
    auto classes = std::make_shared<std::map<History, int>>(class_of);
    int hor = horizon;
    KeyPart k;
    k.name = "class";
    k.time_aware = true;
    k.key = [classes, hor](const History& h) {
        if (static_cast<int>(h.size()) < hor) {
            auto it = classes->find(h);
            if (it == classes->end()) throw InputError("history outside the partition domain");
            return "c" + std::to_string(it->second);
        }
        return "len" + std::to_string(h.size());
    };
    c.keys.push_back(std::move(k));
    return c;
}

FunctionStrategy HarmlessPartition::certificate_strategy() const {
    auto classes = std::make_shared<std::map<History, int>>(class_of);
    auto acts = std::make_shared<std::map<int, ActionA>>(assignment);
    return FunctionStrategy(
        num_b,
        [classes, acts](const OppHistory& beta) {
            History h;
            for (ActionB b : beta) h.push_back({acts->at(classes->at(h)), b});
            return acts->at(classes->at(h));
        },
        horizon - 1);
}

}  // namespace unistrat
