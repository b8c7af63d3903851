#include "unistrat/uniformize.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace unistrat {

namespace {

void check_alphabet(const Arena& g, const Constraint& c) {
    if (c.dfa && (c.dfa->num_a != g.na() || c.dfa->num_b != g.nb()))
        throw InputError("constraint alphabet does not match the arena");
}

std::string memory_name(const MealyStrategy& s, int m) {
    if (m < static_cast<int>(s.names.size())) return s.names[static_cast<std::size_t>(m)];
    return "m" + std::to_string(m);
}

std::string relation_state_name(const TwoTapeDfa& d, int q) {
    if (q < static_cast<int>(d.state_names.size()))
        return d.state_names[static_cast<std::size_t>(q)];
    return "q" + std::to_string(q);
}

}  // namespace

ActionB virtual_action(const Constraint& c, const FunctionStrategy& s, const OppHistory& virt,
                       ActionB b) {
    OppHistory ext = virt;
    ext.push_back(b);
    History play_b = induced_history(s, ext);
    for (ActionB cand = 0; cand < s.num_b(); ++cand) {
        ext.back() = cand;
        if (c.equiv(induced_history(s, ext), play_b)) return cand;
    }
    throw PreconditionError("relation does not relate a play to itself");
}

RecallUniformizer::RecallUniformizer(const Constraint& c, FunctionStrategy s)
    : c_(c), s_(std::move(s)) {
    memo_[{}] = {};
}

const OppHistory& RecallUniformizer::virtual_history(const OppHistory& beta) {
    auto it = memo_.find(beta);
    if (it != memo_.end()) return it->second;
    OppHistory prefix(beta.begin(), beta.end() - 1);
    // Map references stay valid across inserts, so recursing first is safe.
    const OppHistory& virt = virtual_history(prefix);
    OppHistory mine = virt;
    mine.push_back(virtual_action(c_, s_, virt, beta.back()));
    return memo_.emplace(beta, std::move(mine)).first->second;
}

ActionA RecallUniformizer::action(const OppHistory& beta) { return s_(virtual_history(beta)); }

FunctionStrategy uniformize_recall(const Arena& g, const Constraint& c,
                                   const FunctionStrategy& s) {
    if (s.num_b() != g.nb()) throw InputError("strategy num_b does not match the arena");
    check_alphabet(g, c);
    if (c.dfa) {
        if (!check_suffix_closed(*c.dfa))
            throw PreconditionError("relation is not closed by adding a suffix");
        if (!check_perfect_recall(*c.dfa))
            throw PreconditionError("relation is not perfectly recalling");
    }
    auto u = std::make_shared<RecallUniformizer>(c, s);
    return FunctionStrategy(
        g.nb(), [u](const OppHistory& beta) { return u->action(beta); }, s.horizon());
}

MealyStrategy uniformize_recall_mealy(const Arena& g, const Constraint& c,
                                      const MealyStrategy& s) {
    if (!c.dfa_backed())
        throw InputError("finite-memory rewriting needs an automaton-only relation");
    check_alphabet(g, c);
    const TwoTapeDfa& d = *c.dfa;
    s.validate();
    if (s.num_b != g.nb()) throw InputError("strategy num_b does not match the arena");
    for (ActionA a : s.act)
        if (a < 0 || a >= g.na()) throw InputError("strategy action out of range for the arena");
    if (!check_suffix_closed(d))
        throw PreconditionError("relation is not closed by adding a suffix");
    if (!check_perfect_recall(d))
        throw PreconditionError("relation is not perfectly recalling");
    // States pair the wrapped machine's memory with the relation state of
    // the rewritten play read against itself.
    std::map<std::pair<int, int>, int> ids;
    std::vector<std::pair<int, int>> verts;
    auto intern = [&](int m, int q) {
        auto [it, fresh] = ids.try_emplace({m, q}, static_cast<int>(verts.size()));
        if (fresh) verts.emplace_back(m, q);
        return it->second;
    };
    intern(s.init, d.init);
    MealyStrategy out;
    out.num_b = g.nb();
    for (int v = 0; v < static_cast<int>(verts.size()); ++v) {
        auto [m, q] = verts[static_cast<std::size_t>(v)];
        ActionA a = s.out(m);
        out.act.push_back(a);
        out.names.push_back(memory_name(s, m) + "|" + relation_state_name(d, q));
        for (ActionB b = 0; b < g.nb(); ++b) {
            int rewritten = -1;
            for (ActionB cand = 0; cand < g.nb(); ++cand)
                if (d.accepting[static_cast<std::size_t>(d.step(q, {a, b}, {a, cand}))]) {
                    rewritten = cand;
                    break;
                }
            if (rewritten < 0)
                throw PreconditionError("relation does not relate a play to itself");
            int q2 = d.step(q, {a, rewritten}, {a, rewritten});
            out.upd.push_back(intern(s.next(m, rewritten), q2));
        }
    }
    out.memory = static_cast<int>(verts.size());
    out.init = 0;
    out.validate();
    return out;
}

BacktrackUniformizer::BacktrackUniformizer(const Constraint& c, FunctionStrategy s, int horizon,
                                           const Budgets& budgets)
    : c_(c), s_(std::move(s)), horizon_(horizon), budgets_(budgets) {
    if (horizon < 0) throw InputError("horizon must be non-negative");
    if (c_.dfa && c_.dfa->num_b != s_.num_b())
        throw InputError("constraint alphabet does not match the strategy");
}

History BacktrackUniformizer::induced(const OppHistory& beta) {
    History h;
    OppHistory prefix;
    for (ActionB b : beta) {
        h.push_back({action(prefix), b});
        prefix.push_back(b);
    }
    return h;
}

OppHistory BacktrackUniformizer::representative(const History& rho) {
    int n = static_cast<int>(rho.size());
    const TwoTapeDfa* d = c_.dfa ? &*c_.dfa : nullptr;
    // Per remaining depth: relation states from which acceptance is still
    // reachable under some pair of letter sequences.  A cheap sound prune.
    std::vector<std::vector<char>> can;
    if (d) {
        can.assign(static_cast<std::size_t>(n) + 1,
                   std::vector<char>(static_cast<std::size_t>(d->states), 0));
        for (int q = 0; q < d->states; ++q)
            can[0][static_cast<std::size_t>(q)] = d->accepting[static_cast<std::size_t>(q)];
        for (int r = 1; r <= n; ++r)
            for (int q = 0; q < d->states; ++q) {
                bool ok = false;
                for (ActionA a1 = 0; a1 < d->num_a && !ok; ++a1)
                    for (ActionB b1 = 0; b1 < d->num_b && !ok; ++b1)
                        for (ActionA a2 = 0; a2 < d->num_a && !ok; ++a2)
                            for (ActionB b2 = 0; b2 < d->num_b && !ok; ++b2)
                                ok = can[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(
                                    d->step(q, {a1, b1}, {a2, b2}))];
                can[static_cast<std::size_t>(r)][static_cast<std::size_t>(q)] = ok;
            }
    }
    OppHistory cand;
    History play;
    std::uint64_t nodes = 0;
    std::function<bool(int)> dfs = [&](int qd) -> bool {
        int pos = static_cast<int>(cand.size());
        if (pos == n) return c_.equiv(play, rho);
        if (d && !can[static_cast<std::size_t>(n - pos)][static_cast<std::size_t>(qd)])
            return false;
        ActionA a = s_(cand);
        for (ActionB b = 0; b < s_.num_b(); ++b) {
            if (++nodes > budgets_.backtrack_nodes)
                throw ResourceError("backtracking budget exceeded");
            cand.push_back(b);
            play.push_back({a, b});
            int q2 = d ? d->step(qd, {a, b}, rho[static_cast<std::size_t>(pos)]) : 0;
            if (dfs(q2)) return true;
            cand.pop_back();
            play.pop_back();
        }
        return false;
    };
    if (dfs(d ? d->init : 0)) return cand;
    throw PreconditionError("history has no related play of the wrapped strategy");
}

ActionA BacktrackUniformizer::action(const OppHistory& beta) {
    if (static_cast<int>(beta.size()) > horizon_)
        throw HorizonError("query past the configured horizon");
    auto it = actions_.find(beta);
    if (it != actions_.end()) return it->second;
    ActionA a = s_(representative(induced(beta)));
    actions_.emplace(beta, a);
    return a;
}

FunctionStrategy uniformize_backtrack(const Arena& g, const Constraint& c,
                                      const FunctionStrategy& s, int horizon,
                                      const Budgets& budgets) {
    if (s.num_b() != g.nb()) throw InputError("strategy num_b does not match the arena");
    check_alphabet(g, c);
    auto u = std::make_shared<BacktrackUniformizer>(c, s, horizon, budgets);
    return FunctionStrategy(
        g.nb(), [u](const OppHistory& beta) { return u->action(beta); }, horizon);
}

PowersetResult uniformize_powerset(const Arena& g, const Constraint& c, const MealyStrategy& s,
                                   const Budgets& budgets) {
    if (!c.dfa_backed())
        throw InputError("the subset construction needs an automaton-only relation");
    check_alphabet(g, c);
    const TwoTapeDfa& d = *c.dfa;
    s.validate();
    if (s.num_b != g.nb()) throw InputError("strategy num_b does not match the arena");
    for (ActionA a : s.act)
        if (a < 0 || a >= g.na()) throw InputError("strategy action out of range for the arena");
    if (!check_suffix_closed(d))
        throw PreconditionError("relation is not closed by adding a suffix");
    using Subset = std::vector<std::pair<int, int>>;  // (memory, relation state), sorted
    std::map<Subset, int> ids;
    std::vector<Subset> verts;
    auto intern = [&](Subset set) {
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        bool live = false;
        for (const auto& [m, q] : set)
            live = live || d.accepting[static_cast<std::size_t>(q)];
        if (!live) throw InputError("relation broke the subset invariant");
        auto [it, fresh] = ids.try_emplace(std::move(set), static_cast<int>(verts.size()));
        if (fresh) {
            verts.push_back(it->first);
            if (verts.size() > budgets.powerset_states)
                throw ResourceError("subset construction budget exceeded");
        }
        return it->second;
    };
    intern({{s.init, d.init}});
    MealyStrategy out;
    out.num_b = g.nb();
    for (int v = 0; v < static_cast<int>(verts.size()); ++v) {
        Subset set = verts[static_cast<std::size_t>(v)];
        // Answer for the least memory whose tracked play the relation
        // currently accepts against the observed one.
        ActionA a = -1;
        for (const auto& [m, q] : set)
            if (d.accepting[static_cast<std::size_t>(q)]) {
                a = s.out(m);
                break;
            }
        out.act.push_back(a);
        std::string name;
        for (const auto& [m, q] : set) {
            if (!name.empty()) name += "+";
            name += memory_name(s, m) + "|" + relation_state_name(d, q);
        }
        out.names.push_back(name);
        for (ActionB b = 0; b < g.nb(); ++b) {
            Subset next;
            for (const auto& [m, q] : set)
                for (ActionB b2 = 0; b2 < g.nb(); ++b2)
                    next.emplace_back(s.next(m, b2),
                                      d.step(q, {a, b}, {s.out(m), b2}));
            out.upd.push_back(intern(std::move(next)));
        }
    }
    out.memory = static_cast<int>(verts.size());
    out.init = 0;
    out.validate();
    PowersetResult res;
    res.machine = std::move(out);
    res.subsets = std::move(verts);
    return res;
}

}  // namespace unistrat
