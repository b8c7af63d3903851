#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "unistrat/arena.hpp"
#include "unistrat/constraint.hpp"
#include "unistrat/strategy.hpp"
#include "unistrat/wincond.hpp"

namespace unistrat {

// In-memory form of a .game file: one arena, any number of winning
// conditions (the last declared one is the effective one), and named
// constraints and strategies.
//
// Line-oriented grammar, `#` starts a comment:
//
//   game <name>
//   actionsA: <name>...          actionsB: <name>...
//   states: <name>...            (first is initial)
//   colors: <name>...
//   edge <q> <a> <b> -> <q'> : <color>      (* wildcards fill unset cells)
//   weight <color> <p[/q]>
//   win safety avoid=<colors> | win reach target=<colors>
//   win buchi target=<colors>  | win submuller {<colors>};{<colors>}...
//   win energy                 | win conj <idx> <idx>...
//   constraint key <builtin> [<name>]
//   constraint two-tape <name>
//     ct-states: <name>...       (first is initial)
//     ct-accepting: <name>...
//     ct-edge <s> <a> <b> <a'> <b'> -> <s'>  (* wildcards as above)
//     ct-default <s> -> <s'>     (fills every unset letter of s)
//   strategy mealy <name>
//     memory: <name>...          (first is initial)
//     act <m> <a>
//     update <m> <b> -> <m'>
//
// Color lists are comma-separated without spaces; `avoid=` alone means the
// empty set.  `win conj` refers to previously declared win lines by index.
struct GameFile {
    Arena arena;
    std::vector<WinCond> wins;
    std::vector<std::string> constraint_order;
    std::map<std::string, Constraint> constraints;
    std::map<std::string, std::string> builtin_of;  // constraint name -> builtin id
    std::vector<std::string> strategy_order;
    std::map<std::string, MealyStrategy> strategies;

    const WinCond& win() const;  // last declared; InputError when none
    const Constraint& constraint(const std::string& name) const;
    const MealyStrategy& strategy(const std::string& name) const;
};

GameFile parse_game(std::istream& in);
GameFile parse_game(const std::string& text);

// Canonical text: fixed block order, every table cell written explicitly.
// parse_game(serialize_game(f)) reproduces f up to that normal form.
std::string serialize_game(const GameFile& f);

}  // namespace unistrat
