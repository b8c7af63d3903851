#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace unistrat {

// Malformed inputs: bad indices, unparseable files, missing table entries,
// unsupported winning-condition/operation combinations.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A construction precondition that is mechanically checkable failed
// (e.g. a relation automaton that is not closed by adding a suffix).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// A query went past the declared horizon of a finite-horizon strategy.
struct HorizonError : std::runtime_error {
    explicit HorizonError(const std::string& what) : std::runtime_error(what) {}
};

// A search/enumeration exceeded its configured budget.  Deliberately
// distinct from a negative verdict: the caller learns nothing either way.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Knobs for everything that enumerates.  Defaults are sized for the shipped
// fixtures; the CLI can scale them with --budget / UNISTRAT_BUDGET.
struct Budgets {
    std::uint64_t machine_enumeration = 5'000'000;  // Mealy machines per search
    std::uint64_t backtrack_nodes = 1'000'000;      // partial words per lex-min search
    std::uint64_t powerset_states = 200'000;        // reachable subsets
    std::uint64_t refute_pairs = 50'000'000;        // run-pair premise probes
    std::uint64_t assignment_search = 10'000'000;   // class->action assignments

    static Budgets scaled(std::uint64_t n) {
        Budgets b;
        b.machine_enumeration = n;
        b.backtrack_nodes = n;
        b.powerset_states = n;
        b.refute_pairs = n;
        b.assignment_search = n;
        return b;
    }
};

}  // namespace unistrat
