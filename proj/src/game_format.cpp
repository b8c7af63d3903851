#include "unistrat/game_format.hpp"

#include <algorithm>
#include <cstring>
#include <istream>
#include <sstream>

namespace unistrat {

const WinCond& GameFile::win() const {
    if (wins.empty()) throw InputError("no winning condition declared");
    return wins.back();
}

const Constraint& GameFile::constraint(const std::string& name) const {
    auto it = constraints.find(name);
    if (it == constraints.end()) throw InputError("unknown constraint '" + name + "'");
    return it->second;
}

const MealyStrategy& GameFile::strategy(const std::string& name) const {
    auto it = strategies.find(name);
    if (it == strategies.end()) throw InputError("unknown strategy '" + name + "'");
    return it->second;
}

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw InputError("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_tokens(std::string line) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int lookup(const std::vector<std::string>& names, const std::string& tok, const char* what,
           int line) {
    auto it = std::find(names.begin(), names.end(), tok);
    if (it == names.end()) fail(line, std::string("unknown ") + what + " '" + tok + "'");
    return static_cast<int>(it - names.begin());
}

// -1 encodes the * wildcard.
int lookup_wild(const std::vector<std::string>& names, const std::string& tok, const char* what,
                int line) {
    if (tok == "*") return -1;
    return lookup(names, tok, what, line);
}

std::vector<ColorId> parse_color_list(const std::string& value, const Arena& g, int line) {
    std::vector<ColorId> out;
    std::string item;
    std::istringstream in(value);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(lookup(g.colors, item, "color", line));
    return out;
}

Rational parse_rational(const std::string& tok, int line) {
    long long num = 0, den = 1;
    try {
        auto slash = tok.find('/');
        if (slash == std::string::npos) {
            num = std::stoll(tok);
        } else {
            num = std::stoll(tok.substr(0, slash));
            den = std::stoll(tok.substr(slash + 1));
        }
    } catch (const std::exception&) {
        fail(line, "malformed rational '" + tok + "'");
    }
    if (den == 0) fail(line, "zero denominator in '" + tok + "'");
    return Rational(num, den);
}

void expect_names(const std::vector<std::string>& toks, int line) {
    if (toks.size() < 2) fail(line, "'" + toks[0] + "' needs at least one name");
    for (std::size_t i = 1; i < toks.size(); ++i)
        for (std::size_t j = i + 1; j < toks.size(); ++j)
            if (toks[i] == toks[j]) fail(line, "duplicate name '" + toks[i] + "'");
}

struct TwoTapeBuild {
    std::string name;
    int opened_at = 0;
    std::vector<std::string> states;
    std::vector<bool> accepting;
    std::vector<int> delta;  // -1 = unset
    bool have_states = false;
    bool have_accepting = false;
};

struct StrategyBuild {
    std::string name;
    int opened_at = 0;
    std::vector<std::string> memory;
    std::vector<int> act;  // -1 = unset
    std::vector<int> upd;
    bool have_memory = false;
};

struct Parser {
    GameFile f;
    bool have_game = false, have_a = false, have_b = false, have_q = false, have_c = false;
    std::vector<char> weight_set;
    std::optional<TwoTapeBuild> tt;
    std::optional<StrategyBuild> sb;

    bool arena_tables_complete() const {
        if (!have_a || !have_b || !have_q || !have_c) return false;
        return std::find(f.arena.delta_tab.begin(), f.arena.delta_tab.end(), -1) ==
               f.arena.delta_tab.end();
    }

    void register_constraint(const std::string& name, Constraint c, int line) {
        if (f.constraints.count(name)) fail(line, "duplicate constraint '" + name + "'");
        f.constraint_order.push_back(name);
        f.constraints.emplace(name, std::move(c));
    }

    void close_two_tape() {
        if (!tt) return;
        const Arena& g = f.arena;
        int nm = g.na() * g.nb();
        for (std::size_t i = 0; i < tt->delta.size(); ++i)
            if (tt->delta[i] == -1) {
                int q = static_cast<int>(i) / (nm * nm);
                int letter = static_cast<int>(i) % (nm * nm);
                int m1 = letter / nm, m2 = letter % nm;
                fail(tt->opened_at,
                     "two-tape '" + tt->name + "': no transition from " +
                         tt->states[static_cast<std::size_t>(q)] + " on " +
                         g.actions_a[static_cast<std::size_t>(m1 / g.nb())] + " " +
                         g.actions_b[static_cast<std::size_t>(m1 % g.nb())] + " " +
                         g.actions_a[static_cast<std::size_t>(m2 / g.nb())] + " " +
                         g.actions_b[static_cast<std::size_t>(m2 % g.nb())]);
            }
        TwoTapeDfa d;
        d.num_a = g.na();
        d.num_b = g.nb();
        d.states = static_cast<int>(tt->states.size());
        d.init = 0;
        d.accepting = tt->accepting;
        d.delta = tt->delta;
        d.state_names = tt->states;
        d.validate();
        Constraint c;
        c.name = tt->name;
        c.dfa = std::move(d);
        register_constraint(tt->name, std::move(c), tt->opened_at);
        tt.reset();
    }

    void close_strategy() {
        if (!sb) return;
        for (std::size_t m = 0; m < sb->memory.size(); ++m) {
            if (sb->act[m] == -1)
                fail(sb->opened_at, "strategy '" + sb->name + "': no action for " + sb->memory[m]);
            for (int b = 0; b < f.arena.nb(); ++b)
                if (sb->upd[m * static_cast<std::size_t>(f.arena.nb()) +
                            static_cast<std::size_t>(b)] == -1)
                    fail(sb->opened_at, "strategy '" + sb->name + "': no update for " +
                                            sb->memory[m] + " on " +
                                            f.arena.actions_b[static_cast<std::size_t>(b)]);
        }
        MealyStrategy s;
        s.memory = static_cast<int>(sb->memory.size());
        s.init = 0;
        s.num_b = f.arena.nb();
        s.act = sb->act;
        s.upd = sb->upd;
        s.names = sb->memory;
        s.validate();
        if (f.strategies.count(sb->name))
            fail(sb->opened_at, "duplicate strategy '" + sb->name + "'");
        f.strategy_order.push_back(sb->name);
        f.strategies.emplace(sb->name, std::move(s));
        sb.reset();
    }

    void close_sections() {
        close_two_tape();
        close_strategy();
    }

    void handle(const std::vector<std::string>& t, int line);
    GameFile finish();
};

void Parser::handle(const std::vector<std::string>& t, int line) {
    Arena& g = f.arena;
    const std::string& head = t[0];

    // Section-local directives first.
    if (head == "ct-states:" || head == "ct-accepting:" || head == "ct-edge" ||
        head == "ct-default") {
        if (!tt) fail(line, "'" + head + "' outside a two-tape block");
        if (head == "ct-states:") {
            expect_names(t, line);
            if (tt->have_states) fail(line, "second ct-states: in '" + tt->name + "'");
            tt->states.assign(t.begin() + 1, t.end());
            int nm = g.na() * g.nb();
            tt->accepting.assign(tt->states.size(), false);
            tt->delta.assign(tt->states.size() * static_cast<std::size_t>(nm) *
                                 static_cast<std::size_t>(nm),
                             -1);
            tt->have_states = true;
            return;
        }
        if (!tt->have_states) fail(line, "'" + head + "' before ct-states:");
        if (head == "ct-accepting:") {
            tt->have_accepting = true;
            for (std::size_t i = 1; i < t.size(); ++i)
                tt->accepting[static_cast<std::size_t>(
                    lookup(tt->states, t[i], "two-tape state", line))] = true;
            return;
        }
        if (head == "ct-default") {
            if (t.size() != 4 || t[2] != "->") fail(line, "malformed ct-default");
            int s = lookup(tt->states, t[1], "two-tape state", line);
            int s2 = lookup(tt->states, t[3], "two-tape state", line);
            int nm2 = g.na() * g.nb() * g.na() * g.nb();
            for (int l = 0; l < nm2; ++l) {
                auto& cell = tt->delta[static_cast<std::size_t>(s) * nm2 + l];
                if (cell == -1) cell = s2;
            }
            return;
        }
        // ct-edge s a b a' b' -> s'
        if (t.size() != 8 || t[6] != "->") fail(line, "malformed ct-edge");
        int s = lookup(tt->states, t[1], "two-tape state", line);
        int a1 = lookup_wild(g.actions_a, t[2], "Player-1 action", line);
        int b1 = lookup_wild(g.actions_b, t[3], "Player-2 action", line);
        int a2 = lookup_wild(g.actions_a, t[4], "Player-1 action", line);
        int b2 = lookup_wild(g.actions_b, t[5], "Player-2 action", line);
        int s2 = lookup(tt->states, t[7], "two-tape state", line);
        bool wild = a1 < 0 || b1 < 0 || a2 < 0 || b2 < 0;
        int nm = g.na() * g.nb();
        for (int x1 = 0; x1 < g.na(); ++x1)
            for (int y1 = 0; y1 < g.nb(); ++y1)
                for (int x2 = 0; x2 < g.na(); ++x2)
                    for (int y2 = 0; y2 < g.nb(); ++y2) {
                        if ((a1 >= 0 && x1 != a1) || (b1 >= 0 && y1 != b1) ||
                            (a2 >= 0 && x2 != a2) || (b2 >= 0 && y2 != b2))
                            continue;
                        std::size_t i = static_cast<std::size_t>(s) * nm * nm +
                                        static_cast<std::size_t>((x1 * g.nb() + y1) * nm +
                                                                 x2 * g.nb() + y2);
                        if (tt->delta[i] != -1) {
                            if (wild) continue;
                            fail(line, "duplicate ct-edge");
                        }
                        tt->delta[i] = s2;
                    }
        return;
    }

    if (head == "memory:" || head == "act" || head == "update") {
        if (!sb) fail(line, "'" + head + "' outside a strategy block");
        if (head == "memory:") {
            expect_names(t, line);
            if (sb->have_memory) fail(line, "second memory: in '" + sb->name + "'");
            sb->memory.assign(t.begin() + 1, t.end());
            sb->act.assign(sb->memory.size(), -1);
            sb->upd.assign(sb->memory.size() * static_cast<std::size_t>(g.nb()), -1);
            sb->have_memory = true;
            return;
        }
        if (!sb->have_memory) fail(line, "'" + head + "' before memory:");
        if (head == "act") {
            if (t.size() != 3) fail(line, "malformed act");
            int m = lookup(sb->memory, t[1], "memory state", line);
            int a = lookup(g.actions_a, t[2], "Player-1 action", line);
            if (sb->act[static_cast<std::size_t>(m)] != -1) fail(line, "duplicate act");
            sb->act[static_cast<std::size_t>(m)] = a;
            return;
        }
        // update m b -> m'
        if (t.size() != 5 || t[3] != "->") fail(line, "malformed update");
        int m = lookup(sb->memory, t[1], "memory state", line);
        int b = lookup(g.actions_b, t[2], "Player-2 action", line);
        int m2 = lookup(sb->memory, t[4], "memory state", line);
        auto& cell = sb->upd[static_cast<std::size_t>(m) * g.nb() + static_cast<std::size_t>(b)];
        if (cell != -1) fail(line, "duplicate update");
        cell = m2;
        return;
    }

    // Top-level directives close any open block.
    close_sections();

    if (head == "game") {
        if (t.size() != 2) fail(line, "malformed game header");
        if (have_game) fail(line, "second game header");
        g.name = t[1];
        have_game = true;
        return;
    }
    if (head == "actionsA:" || head == "actionsB:" || head == "states:" || head == "colors:") {
        expect_names(t, line);
        std::vector<std::string> names(t.begin() + 1, t.end());
        if (head == "actionsA:") {
            if (have_a) fail(line, "second actionsA: block");
            g.actions_a = names;
            have_a = true;
        } else if (head == "actionsB:") {
            if (have_b) fail(line, "second actionsB: block");
            g.actions_b = names;
            have_b = true;
        } else if (head == "states:") {
            if (have_q) fail(line, "second states: block");
            g.states = names;
            have_q = true;
        } else {
            if (have_c) fail(line, "second colors: block");
            g.colors = names;
            have_c = true;
        }
        if (have_a && have_b && have_q) {
            std::size_t cells = static_cast<std::size_t>(g.nq()) *
                                static_cast<std::size_t>(g.na()) *
                                static_cast<std::size_t>(g.nb());
            if (g.delta_tab.empty()) {
                g.delta_tab.assign(cells, -1);
                g.color_tab.assign(cells, -1);
            }
        }
        return;
    }
    if (head == "edge") {
        if (!have_a || !have_b || !have_q || !have_c)
            fail(line, "edge before actionsA/actionsB/states/colors blocks");
        // edge q a b -> q' : color
        if (t.size() != 8 || t[4] != "->" || t[6] != ":") fail(line, "malformed edge");
        int q = lookup(g.states, t[1], "state", line);
        int a = lookup_wild(g.actions_a, t[2], "Player-1 action", line);
        int b = lookup_wild(g.actions_b, t[3], "Player-2 action", line);
        int q2 = lookup(g.states, t[5], "state", line);
        int c = lookup(g.colors, t[7], "color", line);
        bool wild = a < 0 || b < 0;
        for (int x = 0; x < g.na(); ++x)
            for (int y = 0; y < g.nb(); ++y) {
                if ((a >= 0 && x != a) || (b >= 0 && y != b)) continue;
                std::size_t i = g.idx(q, x, y);
                if (g.delta_tab[i] != -1) {
                    if (wild) continue;
                    fail(line, "duplicate edge");
                }
                g.delta_tab[i] = q2;
                g.color_tab[i] = c;
            }
        return;
    }
    if (head == "weight") {
        if (!have_c) fail(line, "weight before colors: block");
        if (t.size() != 3) fail(line, "malformed weight");
        int c = lookup(g.colors, t[1], "color", line);
        if (!g.weights) {
            g.weights.emplace(static_cast<std::size_t>(g.nc()), Rational(0));
            weight_set.assign(static_cast<std::size_t>(g.nc()), 0);
        }
        if (weight_set[static_cast<std::size_t>(c)]) fail(line, "duplicate weight");
        (*g.weights)[static_cast<std::size_t>(c)] = parse_rational(t[2], line);
        weight_set[static_cast<std::size_t>(c)] = 1;
        return;
    }
    if (head == "win") {
        if (t.size() < 2) fail(line, "malformed win");
        const std::string& kind = t[1];
        if (kind == "energy") {
            if (t.size() != 2) fail(line, "malformed win energy");
            f.wins.push_back(WinCond::energy());
            return;
        }
        if (!have_c) fail(line, "win before colors: block");
        if (kind == "safety" || kind == "reach" || kind == "buchi") {
            const char* key = kind == "safety" ? "avoid=" : "target=";
            if (t.size() != 3 || t[2].rfind(key, 0) != 0)
                fail(line, "expected '" + std::string(key) + "<colors>'");
            std::vector<ColorId> cs = parse_color_list(t[2].substr(std::strlen(key)), g, line);
            if (kind == "safety") f.wins.push_back(WinCond::safety(std::move(cs)));
            else if (kind == "reach") f.wins.push_back(WinCond::reach(std::move(cs)));
            else f.wins.push_back(WinCond::buchi(std::move(cs)));
            return;
        }
        if (kind == "submuller") {
            std::string spec;
            for (std::size_t i = 2; i < t.size(); ++i) spec += t[i];
            std::vector<std::vector<ColorId>> family;
            std::istringstream in(spec);
            std::string part;
            while (std::getline(in, part, ';')) {
                if (part.size() < 2 || part.front() != '{' || part.back() != '}')
                    fail(line, "submuller sets must be {color,...}");
                family.push_back(parse_color_list(part.substr(1, part.size() - 2), g, line));
            }
            if (family.empty()) fail(line, "submuller needs at least one set");
            f.wins.push_back(WinCond::submuller(std::move(family)));
            return;
        }
        if (kind == "conj") {
            if (t.size() < 4) fail(line, "win conj needs at least two indices");
            std::vector<WinCond> parts;
            for (std::size_t i = 2; i < t.size(); ++i) {
                std::size_t idx = 0;
                try {
                    idx = static_cast<std::size_t>(std::stoul(t[i]));
                } catch (const std::exception&) {
                    fail(line, "malformed win index '" + t[i] + "'");
                }
                if (idx >= f.wins.size()) fail(line, "win index " + t[i] + " out of range");
                if (f.wins[idx].kind == WinCond::Kind::Conj)
                    fail(line, "win conj cannot nest another conj");
                parts.push_back(f.wins[idx]);
            }
            f.wins.push_back(WinCond::conj(std::move(parts)));
            return;
        }
        fail(line, "unknown win kind '" + kind + "'");
    }
    if (head == "constraint") {
        if (t.size() < 3) fail(line, "malformed constraint");
        if (t[1] == "key") {
            if (t.size() > 4) fail(line, "malformed constraint key");
            if (!arena_tables_complete())
                fail(line, "constraint blocks must come after the arena's edges");
            std::string builtin = t[2];
            std::string name = t.size() == 4 ? t[3] : builtin;
            Constraint c;
            try {
                c = build_builtin_constraint(builtin, g);
            } catch (const InputError& e) {
                fail(line, e.what());
            }
            register_constraint(name, std::move(c), line);
            f.builtin_of[name] = builtin;
            return;
        }
        if (t[1] == "two-tape") {
            if (t.size() != 3) fail(line, "malformed constraint two-tape");
            if (!have_a || !have_b) fail(line, "two-tape before actionsA/actionsB blocks");
            tt.emplace();
            tt->name = t[2];
            tt->opened_at = line;
            return;
        }
        fail(line, "unknown constraint form '" + t[1] + "'");
    }
    if (head == "strategy") {
        if (t.size() != 3 || t[1] != "mealy") fail(line, "malformed strategy header");
        if (!have_b) fail(line, "strategy before actionsB: block");
        sb.emplace();
        sb->name = t[2];
        sb->opened_at = line;
        return;
    }
    fail(line, "unknown directive '" + head + "'");
}

GameFile Parser::finish() {
    close_sections();
    if (!have_game) throw InputError("missing game header");
    if (!have_a) throw InputError("missing actionsA: block");
    if (!have_b) throw InputError("missing actionsB: block");
    if (!have_q) throw InputError("missing states: block");
    if (!have_c) throw InputError("missing colors: block");
    Arena& g = f.arena;
    for (StateId q = 0; q < g.nq(); ++q)
        for (ActionA a = 0; a < g.na(); ++a)
            for (ActionB b = 0; b < g.nb(); ++b)
                if (g.delta_tab[g.idx(q, a, b)] == -1)
                    throw InputError("missing edge " + g.states[static_cast<std::size_t>(q)] +
                                     " " + g.actions_a[static_cast<std::size_t>(a)] + " " +
                                     g.actions_b[static_cast<std::size_t>(b)]);
    if (g.weights)
        for (ColorId c = 0; c < g.nc(); ++c)
            if (!weight_set[static_cast<std::size_t>(c)])
                throw InputError("color " + g.colors[static_cast<std::size_t>(c)] +
                                 " has no weight");
    g.validate();
    for (const WinCond& w : f.wins) w.validate(g);
    return std::move(f);
}

bool same_cond(const WinCond& x, const WinCond& y) {
    if (x.kind != y.kind || x.colors != y.colors || x.family != y.family) return false;
    if (x.parts.size() != y.parts.size()) return false;
    for (std::size_t i = 0; i < x.parts.size(); ++i)
        if (!same_cond(x.parts[i], y.parts[i])) return false;
    return true;
}

std::string color_list(const Arena& g, const std::vector<ColorId>& cs) {
    std::string out;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) out += ',';
        out += g.colors[static_cast<std::size_t>(cs[i])];
    }
    return out;
}

std::string rational_text(const Rational& r) {
    std::string out = std::to_string(r.numerator());
    if (r.denominator() != 1) out += "/" + std::to_string(r.denominator());
    return out;
}

void write_win(std::ostream& o, const Arena& g, const WinCond& w,
               std::vector<WinCond>& emitted) {
    if (w.kind == WinCond::Kind::Conj) {
        std::vector<std::size_t> idx;
        for (const WinCond& part : w.parts) {
            std::size_t at = emitted.size();
            for (std::size_t i = 0; i < emitted.size(); ++i)
                if (same_cond(emitted[i], part)) {
                    at = i;
                    break;
                }
            if (at == emitted.size()) write_win(o, g, part, emitted);
            idx.push_back(at);
        }
        o << "win conj";
        for (std::size_t i : idx) o << ' ' << i;
        o << '\n';
        emitted.push_back(w);
        return;
    }
    switch (w.kind) {
        case WinCond::Kind::Safety: o << "win safety avoid=" << color_list(g, w.colors); break;
        case WinCond::Kind::Reach: o << "win reach target=" << color_list(g, w.colors); break;
        case WinCond::Kind::Buchi: o << "win buchi target=" << color_list(g, w.colors); break;
        case WinCond::Kind::SubMuller: {
            o << "win submuller ";
            for (std::size_t i = 0; i < w.family.size(); ++i) {
                if (i) o << ';';
                o << '{' << color_list(g, w.family[i]) << '}';
            }
            break;
        }
        case WinCond::Kind::Energy: o << "win energy"; break;
        case WinCond::Kind::Conj: break;  // handled above
    }
    o << '\n';
    emitted.push_back(w);
}

std::vector<std::string> tape_state_names(const TwoTapeDfa& d) {
    if (static_cast<int>(d.state_names.size()) == d.states) return d.state_names;
    std::vector<std::string> names;
    for (int i = 0; i < d.states; ++i) names.push_back("s" + std::to_string(i));
    return names;
}

}  // namespace

GameFile parse_game(std::istream& in) {
    Parser p;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> toks = split_tokens(line);
        if (!toks.empty()) p.handle(toks, lineno);
    }
    return p.finish();
}

GameFile parse_game(const std::string& text) {
    std::istringstream in(text);
    return parse_game(in);
}

std::string serialize_game(const GameFile& f) {
    const Arena& g = f.arena;
    std::ostringstream o;
    o << "game " << g.name << "\n\n";
    o << "actionsA:";
    for (const auto& n : g.actions_a) o << ' ' << n;
    o << "\nactionsB:";
    for (const auto& n : g.actions_b) o << ' ' << n;
    o << "\nstates:";
    for (const auto& n : g.states) o << ' ' << n;
    o << "\ncolors:";
    for (const auto& n : g.colors) o << ' ' << n;
    o << "\n\n";
    for (StateId q = 0; q < g.nq(); ++q)
        for (ActionA a = 0; a < g.na(); ++a)
            for (ActionB b = 0; b < g.nb(); ++b)
                o << "edge " << g.states[static_cast<std::size_t>(q)] << ' '
                  << g.actions_a[static_cast<std::size_t>(a)] << ' '
                  << g.actions_b[static_cast<std::size_t>(b)] << " -> "
                  << g.states[static_cast<std::size_t>(g.step(q, a, b))] << " : "
                  << g.colors[static_cast<std::size_t>(g.color(q, a, b))] << '\n';
    if (g.weights) {
        o << '\n';
        for (ColorId c = 0; c < g.nc(); ++c)
            o << "weight " << g.colors[static_cast<std::size_t>(c)] << ' '
              << rational_text(g.weight_of(c)) << '\n';
    }
    if (!f.wins.empty()) {
        o << '\n';
        std::vector<WinCond> emitted;
        for (const WinCond& w : f.wins) {
            // Skip conditions already written as conj parts.
            bool done = false;
            for (const WinCond& e : emitted)
                if (same_cond(e, w)) {
                    done = true;
                    break;
                }
            if (!done) write_win(o, g, w, emitted);
        }
    }
    for (const std::string& name : f.constraint_order) {
        o << '\n';
        auto bi = f.builtin_of.find(name);
        if (bi != f.builtin_of.end()) {
            o << "constraint key " << bi->second;
            if (name != bi->second) o << ' ' << name;
            o << '\n';
            continue;
        }
        const Constraint& c = f.constraints.at(name);
        if (!c.dfa) throw InputError("constraint '" + name + "' is not serializable");
        const TwoTapeDfa& d = *c.dfa;
        std::vector<std::string> names = tape_state_names(d);
        o << "constraint two-tape " << name << "\nct-states:";
        for (const auto& n : names) o << ' ' << n;
        o << "\nct-accepting:";
        for (int s = 0; s < d.states; ++s)
            if (d.accepting[static_cast<std::size_t>(s)]) o << ' ' << names[static_cast<std::size_t>(s)];
        o << '\n';
        for (int s = 0; s < d.states; ++s)
            for (ActionA a1 = 0; a1 < d.num_a; ++a1)
                for (ActionB b1 = 0; b1 < d.num_b; ++b1)
                    for (ActionA a2 = 0; a2 < d.num_a; ++a2)
                        for (ActionB b2 = 0; b2 < d.num_b; ++b2)
                            o << "ct-edge " << names[static_cast<std::size_t>(s)] << ' '
                              << g.actions_a[static_cast<std::size_t>(a1)] << ' '
                              << g.actions_b[static_cast<std::size_t>(b1)] << ' '
                              << g.actions_a[static_cast<std::size_t>(a2)] << ' '
                              << g.actions_b[static_cast<std::size_t>(b2)] << " -> "
                              << names[static_cast<std::size_t>(
                                     d.step(s, {a1, b1}, {a2, b2}))]
                              << '\n';
    }
    for (const std::string& name : f.strategy_order) {
        const MealyStrategy& s = f.strategies.at(name);
        std::vector<std::string> names = s.names;
        if (static_cast<int>(names.size()) != s.memory) {
            names.clear();
            for (int i = 0; i < s.memory; ++i) names.push_back("m" + std::to_string(i));
        }
        o << "\nstrategy mealy " << name << "\nmemory:";
        for (const auto& n : names) o << ' ' << n;
        o << '\n';
        for (int m = 0; m < s.memory; ++m)
            o << "act " << names[static_cast<std::size_t>(m)] << ' '
              << g.actions_a[static_cast<std::size_t>(s.out(m))] << '\n';
        for (int m = 0; m < s.memory; ++m)
            for (ActionB b = 0; b < s.num_b; ++b)
                o << "update " << names[static_cast<std::size_t>(m)] << ' '
                  << g.actions_b[static_cast<std::size_t>(b)] << " -> "
                  << names[static_cast<std::size_t>(s.next(m, b))] << '\n';
    }
    return std::move(o).str();
}

}  // namespace unistrat
