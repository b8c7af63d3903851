#include "unistrat/wincond.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace unistrat {

namespace {

bool has_color(const std::vector<ColorId>& set, ColorId c) {
    return std::find(set.begin(), set.end(), c) != set.end();
}

}  // namespace

WinCond WinCond::safety(std::vector<ColorId> avoid) {
    WinCond w;
    w.kind = Kind::Safety;
    w.colors = std::move(avoid);
    return w;
}

WinCond WinCond::reach(std::vector<ColorId> target) {
    WinCond w;
    w.kind = Kind::Reach;
    w.colors = std::move(target);
    return w;
}

WinCond WinCond::buchi(std::vector<ColorId> target) {
    WinCond w;
    w.kind = Kind::Buchi;
    w.colors = std::move(target);
    return w;
}

WinCond WinCond::submuller(std::vector<std::vector<ColorId>> family) {
    WinCond w;
    w.kind = Kind::SubMuller;
    w.family = std::move(family);
    return w;
}

WinCond WinCond::energy() {
    WinCond w;
    w.kind = Kind::Energy;
    return w;
}

WinCond WinCond::conj(std::vector<WinCond> parts) {
    WinCond w;
    w.kind = Kind::Conj;
    w.parts = std::move(parts);
    return w;
}

bool WinCond::needs_weights() const {
    if (kind == Kind::Energy) return true;
    if (kind == Kind::Conj)
        for (const WinCond& p : parts)
            if (p.needs_weights()) return true;
    return false;
}

void WinCond::validate(const Arena& g) const {
    auto check_colors = [&](const std::vector<ColorId>& cs) {
        for (ColorId c : cs)
            if (c < 0 || c >= g.nc()) throw InputError("winning condition names an unknown color");
    };
    switch (kind) {
        case Kind::Safety:
        case Kind::Reach:
        case Kind::Buchi:
            check_colors(colors);
            break;
        case Kind::SubMuller:
            for (const auto& set : family) check_colors(set);
            break;
        case Kind::Energy:
            if (!g.weights) throw InputError("energy condition needs color weights");
            break;
        case Kind::Conj:
            if (parts.empty()) throw InputError("empty conjunction");
            for (const WinCond& p : parts) {
                if (p.kind == Kind::Conj) throw InputError("nested conjunction");
                p.validate(g);
            }
            break;
    }
}

std::string wincond_name(const WinCond& w) {
    switch (w.kind) {
        case WinCond::Kind::Safety: return "safety";
        case WinCond::Kind::Reach: return "reach";
        case WinCond::Kind::Buchi: return "buchi";
        case WinCond::Kind::SubMuller: return "submuller";
        case WinCond::Kind::Energy: return "energy";
        case WinCond::Kind::Conj: {
            std::string s = "conj(";
            for (std::size_t i = 0; i < w.parts.size(); ++i) {
                if (i) s += ",";
                s += wincond_name(w.parts[i]);
            }
            return s + ")";
        }
    }
    return "?";
}

// ---- membership of ultimately periodic runs ----

namespace {

// The color sequence of a run is ultimately periodic as well: the arena
// state at the start of each cycle pass repeats after at most |Q| passes.
struct ColorLasso {
    std::vector<ColorId> stem;
    std::vector<ColorId> cycle;
};

ColorLasso color_trace(const Arena& g, const MoveLasso& run) {
    if (run.cycle.empty()) throw InputError("lasso cycle must be non-empty");
    ColorLasso out;
    StateId q = g.initial;
    for (const Move& m : run.stem) {
        out.stem.push_back(g.color(q, m.a, m.b));
        q = g.step(q, m.a, m.b);
    }
    std::vector<int> pass_of(static_cast<std::size_t>(g.nq()), -1);
    std::vector<ColorId> pass_colors;
    int pass = 0;
    while (pass_of[static_cast<std::size_t>(q)] < 0) {
        pass_of[static_cast<std::size_t>(q)] = pass++;
        for (const Move& m : run.cycle) {
            pass_colors.push_back(g.color(q, m.a, m.b));
            q = g.step(q, m.a, m.b);
        }
    }
    std::size_t cut = static_cast<std::size_t>(pass_of[static_cast<std::size_t>(q)]) * run.cycle.size();
    out.stem.insert(out.stem.end(), pass_colors.begin(), pass_colors.begin() + cut);
    out.cycle.assign(pass_colors.begin() + cut, pass_colors.end());
    return out;
}

bool trace_satisfies(const Arena& g, const WinCond& w, const ColorLasso& t) {
    switch (w.kind) {
        case WinCond::Kind::Safety:
            for (ColorId c : t.stem)
                if (has_color(w.colors, c)) return false;
            for (ColorId c : t.cycle)
                if (has_color(w.colors, c)) return false;
            return true;
        case WinCond::Kind::Reach:
            for (ColorId c : t.stem)
                if (has_color(w.colors, c)) return true;
            for (ColorId c : t.cycle)
                if (has_color(w.colors, c)) return true;
            return false;
        case WinCond::Kind::Buchi:
            for (ColorId c : t.cycle)
                if (has_color(w.colors, c)) return true;
            return false;
        case WinCond::Kind::SubMuller: {
            std::set<ColorId> inf(t.cycle.begin(), t.cycle.end());
            for (const auto& req : w.family) {
                bool all = true;
                for (ColorId c : req)
                    if (!inf.count(c)) {
                        all = false;
                        break;
                    }
                if (all) return true;
            }
            return false;
        }
        case WinCond::Kind::Energy: {
            // All prefix sums stay non-negative iff the stem prefixes do, one
            // cycle pass on top of the stem does, and the cycle sums to >= 0
            // (later passes only raise the base).
            Rational sum(0);
            for (ColorId c : t.stem) {
                sum += g.weight_of(c);
                if (sum < Rational(0)) return false;
            }
            Rational base = sum;
            Rational cyc(0);
            for (ColorId c : t.cycle) {
                cyc += g.weight_of(c);
                if (base + cyc < Rational(0)) return false;
            }
            return cyc >= Rational(0);
        }
        case WinCond::Kind::Conj:
            for (const WinCond& p : w.parts)
                if (!trace_satisfies(g, p, t)) return false;
            return true;
    }
    return false;
}

}  // namespace

bool lasso_satisfies(const Arena& g, const WinCond& w, const MoveLasso& run) {
    w.validate(g);
    return trace_satisfies(g, w, color_trace(g, run));
}

bool play_satisfies(const Arena& g, const WinCond& w, const MealyStrategy& s, const Lasso& opp) {
    if (opp.cycle.empty()) throw InputError("lasso cycle must be non-empty");
    if (s.num_b != g.nb()) throw InputError("strategy num_b does not match the arena");
    // The memory state at the start of each cycle pass repeats, so the play
    // is itself an ultimately periodic run.
    MoveLasso run;
    int m = s.init;
    for (ActionB b : opp.stem) {
        run.stem.push_back({s.out(m), b});
        m = s.next(m, b);
    }
    std::vector<int> pass_of(static_cast<std::size_t>(s.memory), -1);
    History pass_moves;
    int pass = 0;
    while (pass_of[static_cast<std::size_t>(m)] < 0) {
        pass_of[static_cast<std::size_t>(m)] = pass++;
        for (ActionB b : opp.cycle) {
            pass_moves.push_back({s.out(m), b});
            m = s.next(m, b);
        }
    }
    std::size_t cut = static_cast<std::size_t>(pass_of[static_cast<std::size_t>(m)]) * opp.cycle.size();
    run.stem.insert(run.stem.end(), pass_moves.begin(), pass_moves.begin() + cut);
    run.cycle.assign(pass_moves.begin() + cut, pass_moves.end());
    return lasso_satisfies(g, w, run);
}

// ---- verify_winning ----

namespace {

// Finite product of arena state and strategy memory.  Player 1's action is
// determined per vertex, so the only branching left is Player 2's.
struct Product {
    const Arena* g = nullptr;
    int nb = 1;
    std::vector<std::pair<StateId, int>> verts;  // id -> (q, m)
    std::vector<int> parent;                     // BFS tree into vertex 0
    std::vector<ActionB> parent_b;
    std::vector<int> succ;       // id*nb + b
    std::vector<ColorId> ecol;   // id*nb + b
};

Product build_product(const Arena& g, const MealyStrategy& s) {
    for (ActionA a : s.act)
        if (a < 0 || a >= g.na()) throw InputError("strategy action out of range for the arena");
    Product p;
    p.g = &g;
    p.nb = g.nb();
    std::vector<int> id_of(static_cast<std::size_t>(g.nq()) * s.memory, -1);
    auto intern = [&](StateId q, int m) {
        std::size_t key = static_cast<std::size_t>(q) * s.memory + m;
        if (id_of[key] < 0) {
            id_of[key] = static_cast<int>(p.verts.size());
            p.verts.emplace_back(q, m);
            p.parent.push_back(-1);
            p.parent_b.push_back(0);
        }
        return id_of[key];
    };
    intern(g.initial, s.init);
    for (int v = 0; v < static_cast<int>(p.verts.size()); ++v) {
        auto [q, m] = p.verts[static_cast<std::size_t>(v)];
        ActionA a = s.out(m);
        for (ActionB b = 0; b < p.nb; ++b) {
            int before = static_cast<int>(p.verts.size());
            int t = intern(g.step(q, a, b), s.next(m, b));
            if (t == before) {  // newly discovered
                p.parent[static_cast<std::size_t>(t)] = v;
                p.parent_b[static_cast<std::size_t>(t)] = b;
            }
            p.succ.push_back(t);
            p.ecol.push_back(g.color(q, a, b));
        }
    }
    return p;
}

OppHistory path_to(const Product& p, int v) {
    OppHistory rev;
    while (v != 0) {
        rev.push_back(p.parent_b[static_cast<std::size_t>(v)]);
        v = p.parent[static_cast<std::size_t>(v)];
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

// Continue from v by always playing 0 until a vertex repeats; the result is
// a full opponent lasso whose stem starts with `stem`.
Lasso walk_lasso(const Product& p, int v, OppHistory stem) {
    std::vector<int> pos(p.verts.size(), -1);
    int steps = 0;
    int cur = v;
    while (pos[static_cast<std::size_t>(cur)] < 0) {
        pos[static_cast<std::size_t>(cur)] = steps++;
        cur = p.succ[static_cast<std::size_t>(cur) * p.nb];
    }
    int at = pos[static_cast<std::size_t>(cur)];
    Lasso l;
    l.stem = std::move(stem);
    l.stem.insert(l.stem.end(), static_cast<std::size_t>(at), 0);
    l.cycle.assign(static_cast<std::size_t>(steps - at), 0);
    return l;
}

struct FoundCycle {
    int entry = 0;
    std::vector<ActionB> actions;
};

// First cycle (in DFS order) using only allowed edges between allowed
// vertices.  Deterministic: vertices ascending, actions ascending.
std::optional<FoundCycle> find_cycle(const Product& p, const std::vector<char>& vertex_ok,
                                     const std::vector<char>& edge_ok) {
    std::vector<int> state(p.verts.size(), 0);  // 0 new, 1 on path, 2 done
    for (int start = 0; start < static_cast<int>(p.verts.size()); ++start) {
        if (!vertex_ok[static_cast<std::size_t>(start)] || state[static_cast<std::size_t>(start)]) continue;
        std::vector<std::pair<int, int>> frames{{start, 0}};
        std::vector<int> path_v{start};
        std::vector<ActionB> path_b;
        state[static_cast<std::size_t>(start)] = 1;
        while (!frames.empty()) {
            auto& [v, next_b] = frames.back();
            if (next_b == p.nb) {
                state[static_cast<std::size_t>(v)] = 2;
                frames.pop_back();
                path_v.pop_back();
                if (!path_b.empty()) path_b.pop_back();
                continue;
            }
            ActionB b = next_b++;
            std::size_t e = static_cast<std::size_t>(v) * p.nb + b;
            if (!edge_ok[e]) continue;
            int t = p.succ[e];
            if (!vertex_ok[static_cast<std::size_t>(t)]) continue;
            if (state[static_cast<std::size_t>(t)] == 1) {
                auto it = std::find(path_v.begin(), path_v.end(), t);
                std::size_t at = static_cast<std::size_t>(it - path_v.begin());
                FoundCycle c;
                c.entry = t;
                c.actions.assign(path_b.begin() + static_cast<std::ptrdiff_t>(at), path_b.end());
                c.actions.push_back(b);
                return c;
            }
            if (state[static_cast<std::size_t>(t)] == 0) {
                state[static_cast<std::size_t>(t)] = 1;
                frames.emplace_back(t, 0);
                path_v.push_back(t);
                path_b.push_back(b);
            }
        }
    }
    return std::nullopt;
}

Verdict lose(Lasso play, std::string note) {
    Verdict v;
    v.holds = false;
    v.play = std::move(play);
    v.note = std::move(note);
    return v;
}

Verdict check_safety(const Product& p, const std::vector<ColorId>& avoid) {
    for (int v = 0; v < static_cast<int>(p.verts.size()); ++v)
        for (ActionB b = 0; b < p.nb; ++b) {
            std::size_t e = static_cast<std::size_t>(v) * p.nb + b;
            if (!has_color(avoid, p.ecol[e])) continue;
            OppHistory stem = path_to(p, v);
            stem.push_back(b);
            return lose(walk_lasso(p, p.succ[e], std::move(stem)), "an avoided color is reachable");
        }
    return {};
}

Verdict check_reach(const Product& p, const std::vector<ColorId>& target) {
    // A play misses the target iff it stays forever inside the target-free
    // part, i.e. iff that part has a cycle reachable through it.
    std::vector<char> ok(p.verts.size(), 0);
    std::vector<char> eok(p.succ.size(), 0);
    for (std::size_t e = 0; e < p.succ.size(); ++e) eok[e] = !has_color(target, p.ecol[e]);
    std::vector<int> par(p.verts.size(), -1);
    std::vector<ActionB> par_b(p.verts.size(), 0);
    std::queue<int> q;
    ok[0] = 1;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (ActionB b = 0; b < p.nb; ++b) {
            std::size_t e = static_cast<std::size_t>(v) * p.nb + b;
            int t = p.succ[e];
            if (!eok[e] || ok[static_cast<std::size_t>(t)]) continue;
            ok[static_cast<std::size_t>(t)] = 1;
            par[static_cast<std::size_t>(t)] = v;
            par_b[static_cast<std::size_t>(t)] = b;
            q.push(t);
        }
    }
    auto cyc = find_cycle(p, ok, eok);
    if (!cyc) return {};
    OppHistory stem;
    for (int v = cyc->entry; v != 0; v = par[static_cast<std::size_t>(v)])
        stem.push_back(par_b[static_cast<std::size_t>(v)]);
    std::reverse(stem.begin(), stem.end());
    return lose({std::move(stem), cyc->actions}, "the target can be avoided forever");
}

Verdict check_buchi(const Product& p, const std::vector<ColorId>& target) {
    // Losing plays are exactly those with a tail inside the target-free
    // subgraph; any stem may lead there.
    std::vector<char> ok(p.verts.size(), 1);
    std::vector<char> eok(p.succ.size(), 0);
    for (std::size_t e = 0; e < p.succ.size(); ++e) eok[e] = !has_color(target, p.ecol[e]);
    auto cyc = find_cycle(p, ok, eok);
    if (!cyc) return {};
    return lose({path_to(p, cyc->entry), cyc->actions},
                "the target can be hit only finitely often");
}

Verdict check_submuller(const Product& p, const std::vector<std::vector<ColorId>>& family) {
    int nc = p.g->nc();
    if (nc > 12) throw ResourceError("too many colors for a subset sweep");
    std::vector<unsigned> req;
    for (const auto& set : family) {
        unsigned m = 0;
        for (ColorId c : set) m |= 1u << c;
        req.push_back(m);
    }
    std::vector<char> ok(p.verts.size(), 1);
    // A play loses iff the set of colors it sees infinitely often contains
    // no required set; equivalently iff some "bad" color set S admits a
    // reachable cycle using colors from S only.
    for (unsigned s = 0; s < (1u << nc); ++s) {
        bool bad = true;
        for (unsigned m : req)
            if ((m & s) == m) {
                bad = false;
                break;
            }
        if (!bad) continue;
        std::vector<char> eok(p.succ.size(), 0);
        for (std::size_t e = 0; e < p.succ.size(); ++e) eok[e] = (s >> p.ecol[e]) & 1u;
        auto cyc = find_cycle(p, ok, eok);
        if (!cyc) continue;
        return lose({path_to(p, cyc->entry), cyc->actions},
                    "the colors seen infinitely often contain no required set");
    }
    return {};
}

Verdict check_energy(const Product& p) {
    const Arena& g = *p.g;
    int n = static_cast<int>(p.verts.size());
    // Exact shortest-path table D[k][v] = least credit sum over plays of at
    // most k rounds ending at v, with enough bookkeeping to rebuild a play.
    struct Choice {
        bool carry = true;  // value inherited from k-1 at the same vertex
        int from = -1;
        ActionB b = 0;
    };
    std::vector<std::vector<std::optional<Rational>>> d(
        static_cast<std::size_t>(n) + 1,
        std::vector<std::optional<Rational>>(static_cast<std::size_t>(n)));
    std::vector<std::vector<Choice>> ch(static_cast<std::size_t>(n) + 1,
                                        std::vector<Choice>(static_cast<std::size_t>(n)));
    d[0][0] = Rational(0);
    for (int k = 1; k <= n; ++k) {
        d[static_cast<std::size_t>(k)] = d[static_cast<std::size_t>(k) - 1];
        for (int v = 0; v < n; ++v) {
            if (!d[static_cast<std::size_t>(k) - 1][static_cast<std::size_t>(v)]) continue;
            Rational base = *d[static_cast<std::size_t>(k) - 1][static_cast<std::size_t>(v)];
            for (ActionB b = 0; b < p.nb; ++b) {
                std::size_t e = static_cast<std::size_t>(v) * p.nb + b;
                int t = p.succ[e];
                Rational nd = base + g.weight_of(p.ecol[e]);
                auto& slot = d[static_cast<std::size_t>(k)][static_cast<std::size_t>(t)];
                if (!slot || nd < *slot) {
                    slot = nd;
                    ch[static_cast<std::size_t>(k)][static_cast<std::size_t>(t)] = {false, v, b};
                }
            }
        }
    }
    auto rebuild = [&](int k, int v) {
        OppHistory rev;
        while (k > 0) {
            const Choice& c = ch[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)];
            if (c.carry) {
                --k;
                continue;
            }
            rev.push_back(c.b);
            v = c.from;
            --k;
        }
        std::reverse(rev.begin(), rev.end());
        return rev;
    };
    // Some prefix dips below zero: that prefix already loses.
    for (int k = 1; k <= n; ++k)
        for (int v = 0; v < n; ++v)
            if (d[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)] &&
                *d[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)] < Rational(0))
                return lose(walk_lasso(p, v, rebuild(k, v)), "the credit can be driven negative");
    // No dip within n rounds: Player 2 can still win via a negative cycle,
    // detected by a strict improvement at round n.
    for (int v = 0; v < n; ++v) {
        auto& dn = d[static_cast<std::size_t>(n)][static_cast<std::size_t>(v)];
        auto& dp = d[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(v)];
        if (!dn || (dp && !(*dn < *dp))) continue;
        // The improving play revisits a vertex, and every closed portion of
        // it sums negative (a non-negative one could be cut out, beating the
        // round-(n-1) value).  Take the first revisit.
        OppHistory beta = rebuild(n, v);
        std::vector<int> seen(static_cast<std::size_t>(n), -1);
        int cur = 0;
        int step = 0;
        seen[0] = 0;
        for (ActionB b : beta) {
            cur = p.succ[static_cast<std::size_t>(cur) * p.nb + b];
            ++step;
            if (seen[static_cast<std::size_t>(cur)] >= 0) {
                int at = seen[static_cast<std::size_t>(cur)];
                Lasso play;
                play.stem.assign(beta.begin(), beta.begin() + at);
                play.cycle.assign(beta.begin() + at, beta.begin() + step);
                return lose(std::move(play), "a negative credit cycle is reachable");
            }
            seen[static_cast<std::size_t>(cur)] = step;
        }
    }
    return {};
}

Verdict check_one(const Product& p, const WinCond& w) {
    switch (w.kind) {
        case WinCond::Kind::Safety: return check_safety(p, w.colors);
        case WinCond::Kind::Reach: return check_reach(p, w.colors);
        case WinCond::Kind::Buchi: return check_buchi(p, w.colors);
        case WinCond::Kind::SubMuller: return check_submuller(p, w.family);
        case WinCond::Kind::Energy: return check_energy(p);
        case WinCond::Kind::Conj: break;
    }
    throw InputError("unsupported winning condition");
}

}  // namespace

Verdict verify_winning(const Arena& g, const WinCond& w, const MealyStrategy& s) {
    g.validate();
    s.validate();
    w.validate(g);
    if (s.num_b != g.nb()) throw InputError("strategy num_b does not match the arena");
    Product p = build_product(g, s);
    if (w.kind == WinCond::Kind::Conj) {
        for (const WinCond& part : w.parts) {
            Verdict v = check_one(p, part);
            if (!v.holds) {
                v.note = wincond_name(part) + " conjunct: " + v.note;
                return v;
            }
        }
        return {};
    }
    return check_one(p, w);
}

// ---- constraint respect ----

Verdict is_sim_strategy(const Arena& g, const Constraint& c, const MealyStrategy& s) {
    if (!c.dfa || !c.keys.empty())
        throw InputError("exact constraint check needs an automaton-only constraint");
    const TwoTapeDfa& d = *c.dfa;
    if (d.num_a != g.na() || d.num_b != g.nb())
        throw InputError("constraint alphabet does not match the arena");
    s.validate();
    if (s.num_b != g.nb()) throw InputError("strategy num_b does not match the arena");
    for (ActionA a : s.act)
        if (a < 0 || a >= g.na()) throw InputError("strategy action out of range for the arena");
    // BFS over pairs of memory states joined with the relation state read on
    // the pair of induced histories; the first related pair with differing
    // actions is the shortest witness.
    struct Vert {
        int m1, m2, qd;
    };
    std::vector<Vert> verts;
    std::vector<int> parent;
    std::vector<std::pair<ActionB, ActionB>> parent_b;
    std::vector<int> id_of(static_cast<std::size_t>(s.memory) * s.memory * d.states, -1);
    auto intern = [&](int m1, int m2, int qd) {
        std::size_t key = (static_cast<std::size_t>(m1) * s.memory + m2) * d.states + qd;
        if (id_of[key] < 0) {
            id_of[key] = static_cast<int>(verts.size());
            verts.push_back({m1, m2, qd});
            parent.push_back(-1);
            parent_b.emplace_back(0, 0);
        }
        return id_of[key];
    };
    intern(s.init, s.init, d.init);
    for (int v = 0; v < static_cast<int>(verts.size()); ++v) {
        auto [m1, m2, qd] = verts[static_cast<std::size_t>(v)];
        ActionA a1 = s.out(m1);
        ActionA a2 = s.out(m2);
        if (d.accepting[static_cast<std::size_t>(qd)] && a1 != a2) {
            OppHistory b1, b2;
            for (int x = v; x != 0; x = parent[static_cast<std::size_t>(x)]) {
                b1.push_back(parent_b[static_cast<std::size_t>(x)].first);
                b2.push_back(parent_b[static_cast<std::size_t>(x)].second);
            }
            std::reverse(b1.begin(), b1.end());
            std::reverse(b2.begin(), b2.end());
            Verdict out;
            out.holds = false;
            out.histories = {std::move(b1), std::move(b2)};
            out.note = "related opponent histories get different actions";
            return out;
        }
        for (ActionB b1 = 0; b1 < g.nb(); ++b1)
            for (ActionB b2 = 0; b2 < g.nb(); ++b2) {
                int qd2 = d.step(qd, {a1, b1}, {a2, b2});
                int before = static_cast<int>(verts.size());
                int t = intern(s.next(m1, b1), s.next(m2, b2), qd2);
                if (t == before) {
                    parent[static_cast<std::size_t>(t)] = v;
                    parent_b[static_cast<std::size_t>(t)] = {b1, b2};
                }
            }
    }
    return {};
}

Verdict is_sim_strategy_bounded(const Arena& g, const Constraint& c, const FunctionStrategy& s,
                                int horizon) {
    if (horizon < 0) throw InputError("horizon must be non-negative");
    if (c.dfa && (c.dfa->num_a != g.na() || c.dfa->num_b != g.nb()))
        throw InputError("constraint alphabet does not match the arena");
    if (s.num_b() != g.nb()) throw InputError("strategy num_b does not match the arena");
    bool has_ta_key = false;
    for (const KeyPart& k : c.keys) has_ta_key = has_ta_key || k.time_aware;
    struct Entry {
        OppHistory beta;
        History h;
        ActionA action;
    };
    std::vector<Entry> entries;
    // Breadth-first over opponent histories keeps the enumeration ordered by
    // length, so the reported witness is the earliest conflicting pair.
    std::vector<OppHistory> layer{{}};
    for (int len = 0; len <= horizon; ++len) {
        std::vector<OppHistory> next;
        for (OppHistory& beta : layer) {
            Entry e;
            e.h = induced_history(s, beta);
            e.action = s(beta);
            e.beta = std::move(beta);
            entries.push_back(std::move(e));
            if (len < horizon)
                for (ActionB b = 0; b < g.nb(); ++b) {
                    next.push_back(entries.back().beta);
                    next.back().push_back(b);
                }
        }
        layer = std::move(next);
    }
    // Equivalent histories agree on every key string, so bucketing by the
    // combined string loses nothing; the full relation is re-checked per
    // pair.  Constraints relating histories of different lengths make the
    // buckets span the whole horizon.
    auto bucket_key = [&](const Entry& e) {
        std::string sig;
        if (c.time_aware_by_construction()) sig += std::to_string(e.h.size()) + '\x1e';
        for (const KeyPart& k : c.keys) sig += k.key(e.h) + '\x1f';
        return sig;
    };
    std::map<std::string, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const Entry& ei = entries[i];
        auto& bucket = buckets[bucket_key(ei)];
        for (std::size_t j : bucket) {
            const Entry& ej = entries[j];
            if ((c.dfa || has_ta_key) && ei.h.size() != ej.h.size()) continue;
            if (c.dfa && !c.dfa->accepts(ej.h, ei.h)) continue;
            if (ei.action == ej.action) continue;
            Verdict out;
            out.holds = false;
            out.histories = {ej.beta, ei.beta};
            out.note = "related opponent histories get different actions";
            return out;
        }
        bucket.push_back(i);
    }
    return {};
}

Verdict is_sim_strategy_bounded(const Arena& g, const Constraint& c, const MealyStrategy& s,
                                int horizon) {
    return is_sim_strategy_bounded(g, c, s.as_function(), horizon);
}

Verdict is_sim_strategy_auto(const Arena& g, const Constraint& c, const MealyStrategy& s,
                             int horizon) {
    if (c.dfa_backed()) return is_sim_strategy(g, c, s);
    return is_sim_strategy_bounded(g, c, s, horizon);
}

// ---- closedness refutation ----

std::string closedness_flavor_name(ClosednessFlavor f) {
    switch (f) {
        case ClosednessFlavor::Weak: return "weak";
        case ClosednessFlavor::Plain: return "plain";
        case ClosednessFlavor::Strong: return "strong";
    }
    return "?";
}

namespace {

// Premise sampling depth; pairs whose cycles align later than this are
// treated as satisfying the premise (documented bounded semantics).
constexpr int kPremiseCap = 64;
constexpr int kSyncCap = 16;

struct RunInfo {
    MoveLasso run;
    History pre;  // unrolled prefix
    bool in_w = false;
    bool sig_ready = false;
    std::vector<std::string> sig;  // combined key strings per prefix length
};

RunInfo make_run_info(const Arena& g, const WinCond& w, const MoveLasso& run, int len) {
    RunInfo r;
    r.run = run;
    r.pre = unroll_move_lasso(run, len);
    r.in_w = lasso_satisfies(g, w, run);
    return r;
}

void ensure_sig(const Constraint& c, RunInfo& r) {
    if (r.sig_ready || c.keys.empty()) return;
    r.sig.resize(r.pre.size() + 1);
    History h;
    for (std::size_t n = 0; n <= r.pre.size(); ++n) {
        std::string s;
        for (const KeyPart& k : c.keys) s += k.key(h) + '\x1f';
        r.sig[n] = std::move(s);
        if (n < r.pre.size()) h.push_back(r.pre[n]);
    }
    r.sig_ready = true;
}

std::string key_sig_of(const Constraint& c, const History& h) {
    std::string s;
    for (const KeyPart& k : c.keys) s += k.key(h) + '\x1f';
    return s;
}

// Evaluates the premise of the chosen closedness flavor on one ordered pair
// of runs, sampling positions 1..H.
bool premise_holds(const Constraint& c, RunInfo& r1, RunInfo& r2, ClosednessFlavor flavor,
                   int bound, const std::vector<Move>& moves, std::uint64_t& probes,
                   const Budgets& budgets, std::optional<History>* gamma_out) {
    int s1 = static_cast<int>(r1.run.stem.size());
    int s2 = static_cast<int>(r2.run.stem.size());
    int c1 = static_cast<int>(r1.run.cycle.size());
    int c2 = static_cast<int>(r2.run.cycle.size());
    int align = std::lcm(c1, c2);
    int smax = std::max(s1, s2);
    int gmax = bound + 1;
    // Two aligned periods decide the premise for automaton states, which
    // evolve periodically along the pair.  Key values may drift (counts,
    // sums), so for those the premise has to be watched until any drift has
    // outgrown what an extension of length gmax could repair — a handful of
    // aligned periods past the stems.  Stopping earlier lets slow-drift
    // pairs through as false violations.
    int h = c.keys.empty()
                ? std::min(kPremiseCap, smax + 2 * align)
                : std::min(kPremiseCap, smax + (gmax + smax + 2) * align);
    int k = std::min(kSyncCap, align + smax + 2);
    int need = h + std::max(k, gmax);
    if (need > static_cast<int>(std::min(r1.pre.size(), r2.pre.size())))
        need = static_cast<int>(std::min(r1.pre.size(), r2.pre.size()));
    ensure_sig(c, r1);
    ensure_sig(c, r2);
    // One synchronous pass gives the relation's verdict at every sampled
    // length at once.
    std::vector<int> js;
    if (c.dfa) {
        js.resize(static_cast<std::size_t>(need) + 1);
        js[0] = c.dfa->init;
        for (int n = 0; n < need; ++n)
            js[static_cast<std::size_t>(n) + 1] = c.dfa->step(
                js[static_cast<std::size_t>(n)], r1.pre[static_cast<std::size_t>(n)],
                r2.pre[static_cast<std::size_t>(n)]);
    }
    auto accept_at = [&](int n) {
        if (++probes > budgets.refute_pairs)
            throw ResourceError("closedness search budget exceeded");
        if (c.dfa && !c.dfa->accepting[static_cast<std::size_t>(js[static_cast<std::size_t>(n)])])
            return false;
        if (!c.keys.empty() &&
            r1.sig[static_cast<std::size_t>(n)] != r2.sig[static_cast<std::size_t>(n)])
            return false;
        return true;
    };
    switch (flavor) {
        case ClosednessFlavor::Weak:
            for (int n = 1; n <= h; ++n)
                if (!accept_at(n)) return false;
            return true;
        case ClosednessFlavor::Plain:
            for (int n = 1; n <= h; ++n) {
                bool found = false;
                for (int m = n; m <= std::min(n + k, need); ++m)
                    if (accept_at(m)) {
                        found = true;
                        break;
                    }
                if (!found) return false;
            }
            return true;
        case ClosednessFlavor::Strong: {
            bool gamma_recorded = false;
            for (int n = 1; n <= h; ++n) {
                if (accept_at(n)) continue;
                // Search an extension gamma with r1<=n . gamma related to
                // r2 at the matching length, shortest first.
                bool found = false;
                History gamma;
                for (int glen = 1; glen <= gmax && !found; ++glen) {
                    if (n + glen > need) break;
                    std::vector<int> odo(static_cast<std::size_t>(glen), 0);
                    while (true) {
                        if (++probes > budgets.refute_pairs)
                            throw ResourceError("closedness search budget exceeded");
                        bool ok = true;
                        if (c.dfa) {
                            int st = js[static_cast<std::size_t>(n)];
                            for (int j = 0; j < glen; ++j)
                                st = c.dfa->step(st, moves[static_cast<std::size_t>(odo[static_cast<std::size_t>(j)])],
                                                 r2.pre[static_cast<std::size_t>(n + j)]);
                            ok = c.dfa->accepting[static_cast<std::size_t>(st)];
                        }
                        if (ok && !c.keys.empty()) {
                            History h1(r1.pre.begin(), r1.pre.begin() + n);
                            for (int j = 0; j < glen; ++j)
                                h1.push_back(moves[static_cast<std::size_t>(odo[static_cast<std::size_t>(j)])]);
                            ok = key_sig_of(c, h1) == r2.sig[static_cast<std::size_t>(n + glen)];
                        }
                        if (ok) {
                            found = true;
                            gamma.clear();
                            for (int j = 0; j < glen; ++j)
                                gamma.push_back(moves[static_cast<std::size_t>(odo[static_cast<std::size_t>(j)])]);
                            break;
                        }
                        int pos = glen - 1;
                        while (pos >= 0 && odo[static_cast<std::size_t>(pos)] + 1 ==
                                               static_cast<int>(moves.size())) {
                            odo[static_cast<std::size_t>(pos)] = 0;
                            --pos;
                        }
                        if (pos < 0) break;
                        ++odo[static_cast<std::size_t>(pos)];
                    }
                }
                if (!found) return false;
                if (!gamma_recorded && gamma_out) {
                    *gamma_out = gamma;
                    gamma_recorded = true;
                }
            }
            return true;
        }
    }
    return false;
}

std::vector<Move> move_alphabet(const Arena& g) {
    std::vector<Move> moves;
    for (ActionA a = 0; a < g.na(); ++a)
        for (ActionB b = 0; b < g.nb(); ++b) moves.push_back({a, b});
    return moves;
}

}  // namespace

bool closedness_pair_violates(const Arena& g, const Constraint& c, const WinCond& w,
                              ClosednessFlavor flavor, const MoveLasso& r1, const MoveLasso& r2,
                              int bound, std::optional<History>* gamma_out) {
    if (bound < 1) throw InputError("bound must be at least 1");
    if (c.dfa && (c.dfa->num_a != g.na() || c.dfa->num_b != g.nb()))
        throw InputError("constraint alphabet does not match the arena");
    w.validate(g);
    int len = kPremiseCap + kSyncCap + bound + 3;
    RunInfo a = make_run_info(g, w, canonical_move_lasso(r1), len);
    RunInfo b = make_run_info(g, w, canonical_move_lasso(r2), len);
    bool bad_conclusion = flavor == ClosednessFlavor::Strong ? (a.in_w && !b.in_w)
                                                             : (a.in_w != b.in_w);
    if (!bad_conclusion) return false;
    Budgets budgets;
    std::uint64_t probes = 0;
    return premise_holds(c, a, b, flavor, bound, move_alphabet(g), probes, budgets, gamma_out);
}

std::vector<MoveLasso> enumerate_runs(const Arena& g, int stem_bound, int cycle_bound,
                                      const Budgets& budgets) {
    if (stem_bound < 0 || cycle_bound < 1) throw InputError("run bounds must allow a cycle");
    std::vector<Move> moves = move_alphabet(g);
    auto words_up_to = [&](int lo, int hi) {
        std::uint64_t total = 0;
        std::uint64_t pw = 1;
        for (int len = 0; len <= hi; ++len) {
            if (len >= lo) {
                if (total > budgets.refute_pairs) return budgets.refute_pairs + 1;
                total += pw;
            }
            if (pw > budgets.refute_pairs) pw = budgets.refute_pairs + 1;
            pw *= static_cast<std::uint64_t>(moves.size());
        }
        return total;
    };
    std::uint64_t stems = words_up_to(0, stem_bound);
    std::uint64_t cycles = words_up_to(1, cycle_bound);
    if (stems > budgets.refute_pairs / std::max<std::uint64_t>(cycles, 1) || stems * cycles > budgets.refute_pairs)
        throw ResourceError("run enumeration budget exceeded");
    std::set<std::pair<History, History>> canon;
    auto each_word = [&](int len, auto&& fn) {
        // Own odometer per call: stem and cycle enumeration nest.
        std::vector<int> odo(static_cast<std::size_t>(len), 0);
        while (true) {
            History word;
            word.reserve(static_cast<std::size_t>(len));
            for (int i = 0; i < len; ++i) word.push_back(moves[static_cast<std::size_t>(odo[static_cast<std::size_t>(i)])]);
            fn(word);
            int pos = len - 1;
            while (pos >= 0 && odo[static_cast<std::size_t>(pos)] + 1 == static_cast<int>(moves.size())) {
                odo[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++odo[static_cast<std::size_t>(pos)];
        }
    };
    for (int slen = 0; slen <= stem_bound; ++slen)
        each_word(slen, [&](const History& stem) {
            for (int clen = 1; clen <= cycle_bound; ++clen)
                each_word(clen, [&](const History& cycle) {
                    MoveLasso c = canonical_move_lasso({stem, cycle});
                    canon.emplace(std::move(c.stem), std::move(c.cycle));
                });
        });
    std::vector<MoveLasso> out;
    out.reserve(canon.size());
    for (const auto& [stem, cycle] : canon) out.push_back({stem, cycle});
    std::sort(out.begin(), out.end(), [](const MoveLasso& x, const MoveLasso& y) {
        std::size_t tx = x.stem.size() + x.cycle.size();
        std::size_t ty = y.stem.size() + y.cycle.size();
        if (tx != ty) return tx < ty;
        if (x.stem.size() != y.stem.size()) return x.stem.size() < y.stem.size();
        if (x.stem != y.stem) return x.stem < y.stem;
        return x.cycle < y.cycle;
    });
    return out;
}

Verdict refute_closedness(const Arena& g, const Constraint& c, const WinCond& w,
                          ClosednessFlavor flavor, int bound, const Budgets& budgets) {
    if (bound < 1) throw InputError("bound must be at least 1");
    if (c.dfa && (c.dfa->num_a != g.na() || c.dfa->num_b != g.nb()))
        throw InputError("constraint alphabet does not match the arena");
    g.validate();
    w.validate(g);
    std::vector<MoveLasso> all = enumerate_runs(g, bound, 2 * bound, budgets);
    int len = kPremiseCap + kSyncCap + bound + 3;
    std::vector<RunInfo> runs;
    runs.reserve(all.size());
    for (const MoveLasso& r : all) runs.push_back(make_run_info(g, w, r, len));
    std::vector<Move> moves = move_alphabet(g);
    std::uint64_t probes = 0;
    auto violation = [&](std::size_t i, std::size_t j, std::optional<History> gamma) {
        Verdict v;
        v.holds = false;
        v.runs = {runs[i].run, runs[j].run};
        v.gamma = std::move(gamma);
        v.note = "run x satisfies the objective, run y does not";
        return v;
    };
    // Only pairs on opposite sides of W can witness a violation; walking
    // winners x losers keeps the loop shell proportional to useful work.
    std::vector<std::size_t> winners;
    std::vector<std::size_t> losers;
    for (std::size_t i = 0; i < runs.size(); ++i) (runs[i].in_w ? winners : losers).push_back(i);
    for (std::size_t i : winners)
        for (std::size_t j : losers) {
            if (++probes > budgets.refute_pairs)
                throw ResourceError("closedness search budget exceeded");
            if (flavor == ClosednessFlavor::Strong) {
                std::optional<History> gamma;
                if (premise_holds(c, runs[i], runs[j], flavor, bound, moves, probes, budgets,
                                  &gamma))
                    return violation(i, j, std::move(gamma));
            } else {
                if (premise_holds(c, runs[i], runs[j], flavor, bound, moves, probes, budgets,
                                  nullptr))
                    return violation(i, j, std::nullopt);
            }
        }
    Verdict v;
    v.note = "no violating pair within the bound";
    return v;
}

}  // namespace unistrat
