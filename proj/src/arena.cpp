#include "unistrat/arena.hpp"

#include <algorithm>
#include <charconv>

namespace unistrat {

Rational parse_rational(const std::string& text) {
    auto parse_int = [](const std::string& part) -> std::int64_t {
        std::int64_t v = 0;
        const char* first = part.data();
        const char* last = part.data() + part.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last)
            throw InputError("bad rational component '" + part + "'");
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    std::int64_t num = parse_int(text.substr(0, slash));
    std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + text + "'");
    return Rational(num, den);
}

std::string format_rational(const Rational& r) {
    std::string out = std::to_string(r.numerator());
    if (r.denominator() != 1) out += "/" + std::to_string(r.denominator());
    return out;
}

Rational Arena::weight_of(ColorId c) const {
    if (!weights) throw InputError("arena '" + name + "' has no weights");
    return (*weights)[static_cast<std::size_t>(c)];
}

void Arena::validate() const {
    if (actions_a.empty() || actions_b.empty() || states.empty())
        throw InputError("arena '" + name + "' needs actions and states");
    std::size_t want = static_cast<std::size_t>(nq()) * na() * nb();
    if (delta_tab.size() != want || color_tab.size() != want)
        throw InputError("arena '" + name + "' has incomplete tables");
    for (StateId q : delta_tab)
        if (q < 0 || q >= nq()) throw InputError("arena transition out of range");
    for (ColorId c : color_tab)
        if (c < 0 || c >= nc()) throw InputError("arena color out of range");
    if (weights && weights->size() != colors.size())
        throw InputError("arena '" + name + "' weight table incomplete");
    if (initial != 0) throw InputError("initial state must be listed first");
}

ActionA FunctionStrategy::operator()(const OppHistory& beta) const {
    if (!fn_) throw InputError("empty strategy");
    if (horizon_ && static_cast<int>(beta.size()) > *horizon_)
        throw HorizonError("strategy queried at length " + std::to_string(beta.size()) +
                           " beyond horizon " + std::to_string(*horizon_));
    for (ActionB b : beta)
        if (b < 0 || b >= num_b_)
            throw InputError("opponent action " + std::to_string(b) + " outside alphabet");
    return fn_(beta);
}

OppHistory opponent_projection(const History& rho) {
    OppHistory beta;
    beta.reserve(rho.size());
    for (const Move& m : rho) beta.push_back(m.b);
    return beta;
}

History induced_history(const FunctionStrategy& s, const OppHistory& beta) {
    History h;
    h.reserve(beta.size());
    OppHistory prefix;
    prefix.reserve(beta.size());
    for (ActionB b : beta) {
        h.push_back(Move{s(prefix), b});
        prefix.push_back(b);
    }
    return h;
}

Traces traces(const Arena& arena, const History& rho) {
    Traces t;
    t.states.reserve(rho.size() + 1);
    t.colors.reserve(rho.size());
    StateId q = arena.initial;
    t.states.push_back(q);
    for (const Move& m : rho) {
        if (m.a < 0 || m.a >= arena.na() || m.b < 0 || m.b >= arena.nb())
            throw InputError("history move outside arena alphabets");
        t.colors.push_back(arena.color(q, m.a, m.b));
        q = arena.step(q, m.a, m.b);
        t.states.push_back(q);
    }
    return t;
}

OppHistory unroll_lasso(const Lasso& l, int n) {
    if (l.cycle.empty()) throw InputError("lasso cycle must be non-empty");
    OppHistory beta;
    beta.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::size_t k = static_cast<std::size_t>(i);
        beta.push_back(k < l.stem.size() ? l.stem[k]
                                         : l.cycle[(k - l.stem.size()) % l.cycle.size()]);
    }
    return beta;
}

History unroll_move_lasso(const MoveLasso& l, int n) {
    if (l.cycle.empty()) throw InputError("lasso cycle must be non-empty");
    History rho;
    rho.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::size_t k = static_cast<std::size_t>(i);
        rho.push_back(k < l.stem.size() ? l.stem[k]
                                        : l.cycle[(k - l.stem.size()) % l.cycle.size()]);
    }
    return rho;
}

History run_history(const FunctionStrategy& s, const Lasso& l, int n) {
    return induced_history(s, unroll_lasso(l, n));
}

MoveLasso canonical_move_lasso(MoveLasso l) {
    if (l.cycle.empty()) throw InputError("lasso cycle must be non-empty");
    // Shrink the cycle to its primitive root.
    for (std::size_t p = 1; p <= l.cycle.size() / 2; ++p) {
        if (l.cycle.size() % p != 0) continue;
        bool periodic = true;
        for (std::size_t i = p; i < l.cycle.size() && periodic; ++i)
            periodic = l.cycle[i] == l.cycle[i % p];
        if (periodic) {
            l.cycle.resize(p);
            break;
        }
    }
    // Fold a stem tail equal to the cycle's last element into the cycle.
    // No further rotation: with the stem minimal and the cycle primitive the
    // representation of the run is unique (rotating a stemless cycle would
    // change the run, not normalize it).
    while (!l.stem.empty() && l.stem.back() == l.cycle.back()) {
        l.stem.pop_back();
        l.cycle.insert(l.cycle.begin(), l.cycle.back());
        l.cycle.pop_back();
    }
    return l;
}

}  // namespace unistrat
