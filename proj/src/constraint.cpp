#include "unistrat/constraint.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace unistrat {

void OneTapeDfa::validate() const {
    if (states <= 0 || num_a <= 0 || num_b <= 0) throw InputError("bad one-tape automaton");
    if (init < 0 || init >= states) throw InputError("one-tape init out of range");
    if (delta.size() != static_cast<std::size_t>(states) * nm())
        throw InputError("one-tape transition table incomplete");
    for (int q : delta)
        if (q < 0 || q >= states) throw InputError("one-tape transition out of range");
}

int TwoTapeDfa::run(const History& x, const History& y) const {
    if (x.size() != y.size()) throw InputError("two-tape run needs equal lengths");
    int q = init;
    for (std::size_t i = 0; i < x.size(); ++i) q = step(q, x[i], y[i]);
    return q;
}

bool TwoTapeDfa::accepts(const History& x, const History& y) const {
    return accepting[static_cast<std::size_t>(run(x, y))];
}

void TwoTapeDfa::validate() const {
    if (states <= 0 || num_a <= 0 || num_b <= 0) throw InputError("bad two-tape automaton");
    if (init < 0 || init >= states) throw InputError("two-tape init out of range");
    if (accepting.size() != static_cast<std::size_t>(states))
        throw InputError("two-tape accepting set incomplete");
    if (!accepting[static_cast<std::size_t>(init)])
        throw InputError("two-tape initial state must accept (empty histories relate)");
    if (delta.size() != static_cast<std::size_t>(states) * nm() * nm())
        throw InputError("two-tape transition table incomplete");
    for (int q : delta)
        if (q < 0 || q >= states) throw InputError("two-tape transition out of range");
    if (!state_names.empty() && state_names.size() != static_cast<std::size_t>(states))
        throw InputError("two-tape state name table incomplete");
}

bool Constraint::equiv(const History& x, const History& y) const {
    if (dfa) {
        if (x.size() != y.size()) return false;
        if (!dfa->accepts(x, y)) return false;
    }
    for (const KeyPart& k : keys) {
        if (k.time_aware && x.size() != y.size()) return false;
        if (k.key(x) != k.key(y)) return false;
    }
    return true;
}

bool Constraint::time_aware_by_construction() const {
    if (dfa) return true;
    for (const KeyPart& k : keys)
        if (k.time_aware) return true;
    return false;
}

static std::vector<bool> reachable_states(const TwoTapeDfa& d) {
    std::vector<bool> seen(static_cast<std::size_t>(d.states), false);
    std::vector<int> work{d.init};
    seen[static_cast<std::size_t>(d.init)] = true;
    while (!work.empty()) {
        int q = work.back();
        work.pop_back();
        for (int l = 0; l < d.nm() * d.nm(); ++l) {
            int n = d.delta[static_cast<std::size_t>(q) * d.nm() * d.nm() + l];
            if (!seen[static_cast<std::size_t>(n)]) {
                seen[static_cast<std::size_t>(n)] = true;
                work.push_back(n);
            }
        }
    }
    return seen;
}

TwoTapeDfa product_dfa(const TwoTapeDfa& a, const TwoTapeDfa& b) {
    if (a.num_a != b.num_a || a.num_b != b.num_b)
        throw InputError("two-tape product over mismatched alphabets");
    TwoTapeDfa p;
    p.num_a = a.num_a;
    p.num_b = a.num_b;
    // Reachable product states only, discovered in BFS order.
    std::map<std::pair<int, int>, int> id;
    std::vector<std::pair<int, int>> order;
    auto intern = [&](int qa, int qb) {
        auto [it, fresh] = id.try_emplace({qa, qb}, static_cast<int>(order.size()));
        if (fresh) order.emplace_back(qa, qb);
        return it->second;
    };
    intern(a.init, b.init);
    int nm = p.nm();
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto [qa, qb] = order[i];
        for (int l = 0; l < nm * nm; ++l) {
            int na = a.delta[static_cast<std::size_t>(qa) * nm * nm + l];
            int nb = b.delta[static_cast<std::size_t>(qb) * nm * nm + l];
            intern(na, nb);
        }
    }
    p.states = static_cast<int>(order.size());
    p.init = 0;
    p.accepting.resize(order.size());
    p.delta.resize(order.size() * static_cast<std::size_t>(nm) * nm);
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto [qa, qb] = order[i];
        p.accepting[i] = a.accepting[static_cast<std::size_t>(qa)] &&
                         b.accepting[static_cast<std::size_t>(qb)];
        for (int l = 0; l < nm * nm; ++l) {
            int na = a.delta[static_cast<std::size_t>(qa) * nm * nm + l];
            int nb = b.delta[static_cast<std::size_t>(qb) * nm * nm + l];
            p.delta[i * static_cast<std::size_t>(nm) * nm + l] = id.at({na, nb});
        }
    }
    p.validate();
    return p;
}

TwoTapeDfa lift_one_tape(const OneTapeDfa& d) {
    d.validate();
    TwoTapeDfa t;
    t.num_a = d.num_a;
    t.num_b = d.num_b;
    t.states = d.states * d.states;
    t.init = d.init * d.states + d.init;
    t.accepting.assign(static_cast<std::size_t>(t.states), false);
    for (int q = 0; q < d.states; ++q) t.accepting[static_cast<std::size_t>(q) * d.states + q] = true;
    int nm = t.nm();
    t.delta.resize(static_cast<std::size_t>(t.states) * nm * nm);
    for (int p = 0; p < d.states; ++p)
        for (int q = 0; q < d.states; ++q)
            for (int m1 = 0; m1 < nm; ++m1)
                for (int m2 = 0; m2 < nm; ++m2) {
                    Move x{m1 / d.num_b, m1 % d.num_b};
                    Move y{m2 / d.num_b, m2 % d.num_b};
                    int np = d.step(p, x);
                    int nq = d.step(q, y);
                    t.delta[(static_cast<std::size_t>(p) * d.states + q) * nm * nm +
                            m1 * nm + m2] = np * d.states + nq;
                }
    t.validate();
    return t;
}

Constraint intersect(const std::vector<Constraint>& parts) {
    if (parts.empty()) throw InputError("intersection of zero constraints");
    Constraint out;
    std::string name;
    for (const Constraint& c : parts) {
        if (!name.empty()) name += "&";
        name += c.name;
        if (c.dfa) {
            out.dfa = out.dfa ? product_dfa(*out.dfa, *c.dfa) : *c.dfa;
        }
        for (const KeyPart& k : c.keys) out.keys.push_back(k);
    }
    out.name = name;
    return out;
}

Constraint time_aware_restriction(const Constraint& c) {
    Constraint out = c;
    if (out.time_aware_by_construction()) return out;
    for (KeyPart& k : out.keys) k.time_aware = true;
    out.name = c.name + "@ta";
    return out;
}

bool check_suffix_closed(const TwoTapeDfa& d) {
    std::vector<bool> reach = reachable_states(d);
    for (int q = 0; q < d.states; ++q) {
        if (!reach[static_cast<std::size_t>(q)] || !d.accepting[static_cast<std::size_t>(q)])
            continue;
        for (int m = 0; m < d.nm(); ++m) {
            Move mv{m / d.num_b, m % d.num_b};
            if (!d.accepting[static_cast<std::size_t>(d.step(q, mv, mv))]) return false;
        }
    }
    return true;
}

bool check_perfect_recall(const TwoTapeDfa& d) {
    std::vector<bool> reach = reachable_states(d);
    // From any reachable rejecting state, no accepting state may be reachable.
    std::vector<bool> tainted(static_cast<std::size_t>(d.states), false);
    std::vector<int> work;
    for (int q = 0; q < d.states; ++q)
        if (reach[static_cast<std::size_t>(q)] && !d.accepting[static_cast<std::size_t>(q)]) {
            tainted[static_cast<std::size_t>(q)] = true;
            work.push_back(q);
        }
    while (!work.empty()) {
        int q = work.back();
        work.pop_back();
        for (int l = 0; l < d.nm() * d.nm(); ++l) {
            int n = d.delta[static_cast<std::size_t>(q) * d.nm() * d.nm() + l];
            if (d.accepting[static_cast<std::size_t>(n)]) return false;
            if (!tainted[static_cast<std::size_t>(n)]) {
                tainted[static_cast<std::size_t>(n)] = true;
                work.push_back(n);
            }
        }
    }
    return true;
}

std::vector<History> all_histories(int na, int nb, int n) {
    std::vector<History> out;
    int nm = na * nb;
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(nm);
    out.reserve(total);
    History h(static_cast<std::size_t>(n));
    std::function<void(int)> rec = [&](int depth) {
        if (depth == n) {
            out.push_back(h);
            return;
        }
        for (int a = 0; a < na; ++a)
            for (int b = 0; b < nb; ++b) {
                h[static_cast<std::size_t>(depth)] = Move{a, b};
                rec(depth + 1);
            }
    };
    rec(0);
    return out;
}

PredicateWitness bounded_check_time_aware(const Constraint& c, int na, int nb, int len) {
    std::vector<std::vector<History>> by_len;
    for (int n = 0; n <= len; ++n) by_len.push_back(all_histories(na, nb, n));
    for (int n1 = 0; n1 <= len; ++n1)
        for (int n2 = n1 + 1; n2 <= len; ++n2)
            for (const History& x : by_len[static_cast<std::size_t>(n1)])
                for (const History& y : by_len[static_cast<std::size_t>(n2)])
                    if (c.equiv(x, y)) return {false, x, y, {}};
    return {};
}

PredicateWitness bounded_check_suffix_closed(const Constraint& c, int na, int nb, int len,
                                             int suffix_len) {
    for (int n = 0; n <= len; ++n) {
        std::vector<History> base = all_histories(na, nb, n);
        for (std::size_t i = 0; i < base.size(); ++i)
            for (std::size_t j = i; j < base.size(); ++j) {
                if (!c.equiv(base[i], base[j])) continue;
                for (int sl = 1; sl <= suffix_len; ++sl)
                    for (const History& suf : all_histories(na, nb, sl)) {
                        History x = base[i];
                        History y = base[j];
                        x.insert(x.end(), suf.begin(), suf.end());
                        y.insert(y.end(), suf.begin(), suf.end());
                        if (!c.equiv(x, y)) return {false, base[i], base[j], suf};
                    }
            }
    }
    return {};
}

PredicateWitness bounded_check_perfect_recall(const Constraint& c, int na, int nb, int len) {
    for (int n = 1; n <= len; ++n) {
        std::vector<History> hs = all_histories(na, nb, n);
        for (std::size_t i = 0; i < hs.size(); ++i)
            for (std::size_t j = i + 1; j < hs.size(); ++j) {
                if (!c.equiv(hs[i], hs[j])) continue;
                History px(hs[i].begin(), hs[i].end() - 1);
                History py(hs[j].begin(), hs[j].end() - 1);
                if (!c.equiv(px, py)) return {false, hs[i], hs[j], {}};
            }
    }
    return {};
}

PredicateWitness bounded_check_equivalence(const Constraint& c, int na, int nb, int len) {
    for (int n = 0; n <= len; ++n) {
        std::vector<History> hs = all_histories(na, nb, n);
        for (const History& x : hs)
            if (!c.equiv(x, x)) return {false, x, x, {}};
        for (std::size_t i = 0; i < hs.size(); ++i)
            for (std::size_t j = i + 1; j < hs.size(); ++j) {
                bool ij = c.equiv(hs[i], hs[j]);
                bool ji = c.equiv(hs[j], hs[i]);
                if (ij != ji) return {false, hs[i], hs[j], {}};
            }
        // Transitivity within the same length via class representatives.
        for (std::size_t i = 0; i < hs.size(); ++i)
            for (std::size_t j = i + 1; j < hs.size(); ++j) {
                if (!c.equiv(hs[i], hs[j])) continue;
                for (std::size_t k = j + 1; k < hs.size(); ++k) {
                    bool jk = c.equiv(hs[j], hs[k]);
                    bool ik = c.equiv(hs[i], hs[k]);
                    if (jk && !ik) return {false, hs[i], hs[k], {}};
                }
            }
    }
    return {};
}

int count_classes(const Constraint& c, int na, int nb, int depth) {
    std::vector<History> reps;
    for (const History& h : all_histories(na, nb, depth)) {
        bool found = false;
        for (const History& r : reps)
            if (c.equiv(r, h)) {
                found = true;
                break;
            }
        if (!found) reps.push_back(h);
    }
    return static_cast<int>(reps.size());
}

// ---- shipped constraints ----

Constraint state_color_constraint(const Arena& arena, StateColorMode mode) {
    TwoTapeDfa d;
    d.num_a = arena.na();
    d.num_b = arena.nb();
    int nm = d.nm();
    if (mode == StateColorMode::FullSequence) {
        // States: one "alive" copy per arena state (the common current state)
        // plus a reject sink at index |Q|.
        int sink = arena.nq();
        d.states = arena.nq() + 1;
        d.init = arena.initial;
        d.accepting.assign(static_cast<std::size_t>(d.states), true);
        d.accepting[static_cast<std::size_t>(sink)] = false;
        d.delta.assign(static_cast<std::size_t>(d.states) * nm * nm, sink);
        for (int q = 0; q < arena.nq(); ++q)
            for (int m1 = 0; m1 < nm; ++m1)
                for (int m2 = 0; m2 < nm; ++m2) {
                    Move x{m1 / d.num_b, m1 % d.num_b};
                    Move y{m2 / d.num_b, m2 % d.num_b};
                    bool same = arena.step(q, x.a, x.b) == arena.step(q, y.a, y.b) &&
                                arena.color(q, x.a, x.b) == arena.color(q, y.a, y.b);
                    d.delta[static_cast<std::size_t>(q) * nm * nm + m1 * nm + m2] =
                        same ? arena.step(q, x.a, x.b) : sink;
                }
    } else {
        // States: pairs of arena states plus a sink; accept on the diagonal.
        int nq = arena.nq();
        int sink = nq * nq;
        d.states = nq * nq + 1;
        d.init = arena.initial * nq + arena.initial;
        d.accepting.assign(static_cast<std::size_t>(d.states), false);
        for (int q = 0; q < nq; ++q) d.accepting[static_cast<std::size_t>(q) * nq + q] = true;
        d.delta.assign(static_cast<std::size_t>(d.states) * nm * nm, sink);
        for (int p = 0; p < nq; ++p)
            for (int q = 0; q < nq; ++q)
                for (int m1 = 0; m1 < nm; ++m1)
                    for (int m2 = 0; m2 < nm; ++m2) {
                        Move x{m1 / d.num_b, m1 % d.num_b};
                        Move y{m2 / d.num_b, m2 % d.num_b};
                        bool same_col = arena.color(p, x.a, x.b) == arena.color(q, y.a, y.b);
                        d.delta[(static_cast<std::size_t>(p) * nq + q) * nm * nm + m1 * nm + m2] =
                            same_col ? arena.step(p, x.a, x.b) * nq + arena.step(q, y.a, y.b)
                                     : sink;
                    }
    }
    d.validate();
    Constraint c;
    c.name = mode == StateColorMode::FullSequence ? "state-color-seq" : "state-color-current";
    c.dfa = std::move(d);
    return c;
}

Constraint multiset_state_constraint(const Arena& arena) {
    Arena copy = arena;
    KeyPart k;
    k.name = "multiset-state";
    k.time_aware = true;
    k.key = [copy](const History& rho) {
        Traces t = traces(copy, rho);
        std::vector<int> counts(static_cast<std::size_t>(copy.nc()), 0);
        for (ColorId c : t.colors) ++counts[static_cast<std::size_t>(c)];
        std::ostringstream os;
        os << "q" << t.states.back() << "|";
        for (std::size_t i = 0; i < counts.size(); ++i) os << counts[i] << ",";
        return os.str();
    };
    Constraint c;
    c.name = "multiset-state";
    c.keys.push_back(std::move(k));
    return c;
}

Constraint energy_constraint(const Arena& arena, EnergyKeyLevel level) {
    if (!arena.weights) throw InputError("energy constraint needs arena weights");
    Arena copy = arena;
    KeyPart k;
    k.name = level == EnergyKeyLevel::Proof ? "energy" : "energy-level";
    k.time_aware = true;
    bool proof = level == EnergyKeyLevel::Proof;
    k.key = [copy, proof](const History& rho) {
        Traces t = traces(copy, rho);
        Rational sum(0);
        std::string signs;
        for (ColorId c : t.colors) {
            sum += copy.weight_of(c);
            if (proof) signs += sum >= Rational(0) ? '+' : '-';
        }
        std::ostringstream os;
        os << "q" << t.states.back() << "|" << format_rational(sum);
        if (proof) os << "|" << signs;
        return os.str();
    };
    Constraint c;
    c.name = k.name;
    c.keys.push_back(std::move(k));
    return c;
}

Constraint universal_time_aware_constraint(int na, int nb) {
    TwoTapeDfa d;
    d.num_a = na;
    d.num_b = nb;
    d.states = 1;
    d.init = 0;
    d.accepting = {true};
    d.delta.assign(static_cast<std::size_t>(d.nm()) * d.nm(), 0);
    d.validate();
    Constraint c;
    c.name = "universal-time-aware";
    c.dfa = std::move(d);
    return c;
}

Constraint equality_constraint(int na, int nb) {
    TwoTapeDfa d;
    d.num_a = na;
    d.num_b = nb;
    d.states = 2;
    d.init = 0;
    d.accepting = {true, false};
    int nm = d.nm();
    d.delta.assign(static_cast<std::size_t>(2) * nm * nm, 1);
    for (int m = 0; m < nm; ++m) d.delta[static_cast<std::size_t>(m) * nm + m] = 0;
    d.validate();
    Constraint c;
    c.name = "equality";
    c.dfa = std::move(d);
    return c;
}

namespace {

// Class tables of the generated equivalence, one table per history length.
struct GeneratedTable {
    int na = 1, nb = 1, horizon = 0;
    // per length: class id for each history index (mixed-radix over moves)
    std::vector<std::vector<int>> classes;

    std::size_t index_of(const History& h) const {
        std::size_t idx = 0;
        std::size_t nm = static_cast<std::size_t>(na) * nb;
        for (const Move& m : h) idx = idx * nm + static_cast<std::size_t>(m.a) * nb + m.b;
        return idx;
    }
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

Constraint generated_constraint(std::string name, int na, int nb,
                                std::vector<std::pair<History, History>> seeds, int horizon) {
    auto table = std::make_shared<GeneratedTable>();
    table->na = na;
    table->nb = nb;
    table->horizon = horizon;
    std::size_t nm = static_cast<std::size_t>(na) * nb;
    std::size_t size = 1;
    for (int n = 0; n <= horizon; ++n) {
        UnionFind uf(size);
        for (const auto& [x, y] : seeds)
            if (static_cast<int>(x.size()) == n && static_cast<int>(y.size()) == n)
                uf.unite(static_cast<int>(table->index_of(x)),
                         static_cast<int>(table->index_of(y)));
        // Suffix closure: classes of length n-1 propagate to each extension.
        if (n > 0) {
            const std::vector<int>& prev = table->classes.back();
            for (std::size_t i = 0; i < prev.size(); ++i) {
                std::size_t rep = static_cast<std::size_t>(prev[i]);
                if (rep == i) continue;
                for (std::size_t m = 0; m < nm; ++m)
                    uf.unite(static_cast<int>(i * nm + m), static_cast<int>(rep * nm + m));
            }
        }
        std::vector<int> cls(size);
        for (std::size_t i = 0; i < size; ++i) cls[i] = uf.find(static_cast<int>(i));
        table->classes.push_back(std::move(cls));
        size *= nm;
    }
    KeyPart k;
    k.name = name;
    k.time_aware = true;
    k.key = [table](const History& rho) {
        int n = static_cast<int>(rho.size());
        if (n > table->horizon)
            throw HorizonError("generated constraint queried at length " + std::to_string(n) +
                               " beyond horizon " + std::to_string(table->horizon));
        std::size_t idx = table->index_of(rho);
        std::ostringstream os;
        os << "L" << n << "#" << table->classes[static_cast<std::size_t>(n)][idx];
        return os.str();
    };
    Constraint c;
    c.name = std::move(name);
    c.keys.push_back(std::move(k));
    return c;
}

Constraint one_count_constraint(const Arena& arena, bool time_aware) {
    if (arena.na() < 2) throw InputError("one-count constraint needs a '1' action");
    KeyPart k;
    k.name = time_aware ? "p1-one-count" : "p1-one-count-free";
    k.time_aware = time_aware;
    k.key = [](const History& rho) {
        int ones = 0;
        for (const Move& m : rho) ones += m.a == 1 ? 1 : 0;
        return std::to_string(ones);
    };
    Constraint c;
    c.name = k.name;
    c.keys.push_back(std::move(k));
    return c;
}

Constraint zero_run_split_constraint(const Arena& arena) {
    if (arena.na() < 2) throw InputError("zero-run constraint needs a '1' action");
    KeyPart k;
    k.name = "zero-run-split";
    k.time_aware = true;
    k.key = [](const History& rho) {
        for (const Move& m : rho)
            if (m.a == 1) return std::string("mixed");
        return std::string("zeros");
    };
    Constraint c;
    c.name = k.name;
    c.keys.push_back(std::move(k));
    return c;
}

Constraint round_one_charge_constraint(const Arena& arena) {
    if (arena.na() < 2 || arena.nb() < 2)
        throw InputError("round-one charge constraint needs binary alphabets");
    KeyPart k;
    k.name = "round-one-charge";
    k.time_aware = true;
    k.key = [](const History& rho) {
        if (rho.empty()) return std::string("eps");
        int charge = rho[0].b;
        for (std::size_t i = 1; i < rho.size(); ++i) charge += rho[i].a;
        return std::to_string(charge);
    };
    Constraint c;
    c.name = k.name;
    c.keys.push_back(std::move(k));
    return c;
}

Constraint imitation_split_constraint(const Arena& arena) {
    if (arena.na() < 2 || arena.nb() < 2)
        throw InputError("imitation constraint needs binary alphabets");
    KeyPart k;
    k.name = "imitation-split";
    k.time_aware = true;
    k.key = [](const History& rho) {
        if (rho.empty()) return std::string("eps");
        if (rho.size() == 1) return std::string("one");
        return rho[1].a == rho[0].b ? std::string("match") : std::string("miss");
    };
    Constraint c;
    c.name = k.name;
    c.keys.push_back(std::move(k));
    return c;
}

Constraint single_b_class_constraint(const Arena& arena, ActionB b) {
    if (b < 0 || b >= arena.nb()) throw InputError("single-b constraint action out of range");
    KeyPart k;
    k.name = "single-b" + std::to_string(b);
    k.time_aware = false;
    k.key = [b](const History& rho) {
        if (rho.size() == 1 && rho[0].b == b) return std::string("picked");
        return std::string("rest");
    };
    Constraint c;
    c.name = k.name;
    c.keys.push_back(std::move(k));
    return c;
}

Constraint build_builtin_constraint(const std::string& name, const Arena& arena) {
    if (name == "state-color-seq")
        return state_color_constraint(arena, StateColorMode::FullSequence);
    if (name == "state-color-current")
        return state_color_constraint(arena, StateColorMode::CurrentState);
    if (name == "multiset-state") return multiset_state_constraint(arena);
    if (name == "energy") return energy_constraint(arena, EnergyKeyLevel::Proof);
    if (name == "energy-level") return energy_constraint(arena, EnergyKeyLevel::Statement);
    if (name == "universal-time-aware")
        return universal_time_aware_constraint(arena.na(), arena.nb());
    if (name == "equality") return equality_constraint(arena.na(), arena.nb());
    if (name == "p1-one-count") return one_count_constraint(arena, true);
    if (name == "p1-one-count-free") return one_count_constraint(arena, false);
    if (name == "zero-run-split") return zero_run_split_constraint(arena);
    if (name == "round-one-charge") return round_one_charge_constraint(arena);
    if (name == "imitation-split") return imitation_split_constraint(arena);
    if (name == "single-b0") return single_b_class_constraint(arena, 0);
    if (name == "single-b1") return single_b_class_constraint(arena, 1);
    throw InputError("unknown builtin constraint '" + name + "'");
}

std::vector<std::string> builtin_constraint_names() {
    return {"state-color-seq", "state-color-current", "multiset-state", "energy",
            "energy-level",    "universal-time-aware", "equality",      "p1-one-count",
            "p1-one-count-free", "zero-run-split",     "round-one-charge",
            "imitation-split", "single-b0",            "single-b1"};
}

}  // namespace unistrat
