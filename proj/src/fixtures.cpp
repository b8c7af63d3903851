// Generated by tools/embed_fixtures.py from fixtures/*.game -- edit those.
#include "unistrat/fixtures.hpp"

#include <array>
#include <utility>

#include "unistrat/errors.hpp"

namespace unistrat {

namespace {

constexpr const char* k_uni_mem = R"fixture(game uni-mem

actionsA: 0 1
actionsB: 0 1
states: start seen0 seen1 owe0 owe1 free
colors: ok bad

# Round one: remember Player 2's action.  Round two: repeating it creates a
# permanent debt — from round three on Player 1 must echo that first action
# forever — while changing it frees Player 1 for the rest of the play.
edge start * 0 -> seen0 : ok
edge start * 1 -> seen1 : ok
edge seen0 * 0 -> owe0 : ok
edge seen0 * 1 -> free : ok
edge seen1 * 1 -> owe1 : ok
edge seen1 * 0 -> free : ok
edge owe0 0 * -> owe0 : ok
edge owe0 1 * -> owe0 : bad
edge owe1 1 * -> owe1 : ok
edge owe1 0 * -> owe1 : bad
edge free * * -> free : ok

win safety avoid=bad

# Histories are related when they are equal, or when both opponent prefixes
# of length two are 01 or 10 and they agree move for move from round three.
constraint two-tape unimem
ct-states: S E0 E1 D00 D01 D10 D11 ACC REJ
ct-accepting: S E0 E1 ACC
ct-edge S 0 0 0 0 -> E0
ct-edge S 1 0 1 0 -> E0
ct-edge S 0 1 0 1 -> E1
ct-edge S 1 1 1 1 -> E1
ct-edge S * 0 * 0 -> D00
ct-edge S * 0 * 1 -> D01
ct-edge S * 1 * 0 -> D10
ct-edge S * 1 * 1 -> D11
ct-edge E0 0 0 0 0 -> ACC
ct-edge E0 1 0 1 0 -> ACC
ct-edge E0 0 1 0 1 -> ACC
ct-edge E0 1 1 1 1 -> ACC
ct-edge E0 * 1 * 1 -> ACC
ct-default E0 -> REJ
ct-edge E1 0 0 0 0 -> ACC
ct-edge E1 1 0 1 0 -> ACC
ct-edge E1 0 1 0 1 -> ACC
ct-edge E1 1 1 1 1 -> ACC
ct-edge E1 * 0 * 0 -> ACC
ct-default E1 -> REJ
ct-edge D00 * 1 * 1 -> ACC
ct-default D00 -> REJ
ct-edge D01 * 1 * 0 -> ACC
ct-default D01 -> REJ
ct-edge D10 * 0 * 1 -> ACC
ct-default D10 -> REJ
ct-edge D11 * 0 * 0 -> ACC
ct-default D11 -> REJ
ct-edge ACC 0 0 0 0 -> ACC
ct-edge ACC 1 0 1 0 -> ACC
ct-edge ACC 0 1 0 1 -> ACC
ct-edge ACC 1 1 1 1 -> ACC
ct-default ACC -> REJ
ct-default REJ -> REJ

# Winning with three memory states, but not respecting the relation.
strategy mealy left
memory: m0 m1 m2
act m0 0
act m1 0
act m2 1
update m0 0 -> m1
update m0 1 -> m2
update m1 0 -> m1
update m1 1 -> m1
update m2 0 -> m2
update m2 1 -> m2

# Winning and respecting the relation, at the price of a fourth state: the
# 01 and 10 prefixes funnel into the same lock, so their replies agree.
strategy mealy right
memory: r0 r1 r2 r3
act r0 0
act r1 0
act r2 1
act r3 1
update r0 0 -> r1
update r0 1 -> r2
update r1 0 -> r1
update r1 1 -> r1
update r2 0 -> r1
update r2 1 -> r3
update r3 0 -> r3
update r3 1 -> r3
)fixture";

constexpr const char* k_first_one = R"fixture(game first-one

actionsA: a
actionsB: 0 1
states: q
colors: ok

edge q * * -> q : ok

win safety avoid=

# One class for the all-zero opponent word of each length, one class per
# position of the first 1: n+1 classes at length n.
constraint two-tape first-one
ct-states: z0 z1 z2
ct-accepting: z0 z1
ct-edge z0 a 0 a 0 -> z0
ct-edge z0 a 1 a 1 -> z1
ct-default z0 -> z2
ct-default z1 -> z1
ct-default z2 -> z2

strategy mealy steady
memory: m
act m a
update m 0 -> m
update m 1 -> m
)fixture";

constexpr const char* k_one_count = R"fixture(game one-count

actionsA: 0 1
actionsB: 0
states: even odd dead
colors: ok bad

# The only safe run alternates Player 1's actions, starting with 0.
edge even 0 0 -> odd : ok
edge even 1 0 -> dead : bad
edge odd 1 0 -> even : ok
edge odd 0 0 -> dead : bad
edge dead * * -> dead : bad

win safety avoid=bad

constraint key p1-one-count
)fixture";

constexpr const char* k_zero_run = R"fixture(game zero-run

actionsA: 0 1
actionsB: 0
states: q
colors: ok bad

edge q 0 0 -> q : ok
edge q 1 0 -> q : bad

win safety avoid=bad

constraint key zero-run-split
)fixture";

constexpr const char* k_charge = R"fixture(game charge

actionsA: 0 1
actionsB: 0 1
states: start got0 got1 half0 half1 free
colors: ok bad

# Player 2's first action sets the charge; Player 1 must answer with its
# complement in rounds two and three.
edge start * 0 -> got0 : ok
edge start * 1 -> got1 : ok
edge got0 1 * -> half0 : ok
edge got0 0 * -> half0 : bad
edge got1 0 * -> half1 : ok
edge got1 1 * -> half1 : bad
edge half0 1 * -> free : ok
edge half0 0 * -> free : bad
edge half1 0 * -> free : ok
edge half1 1 * -> free : bad
edge free * * -> free : ok

win safety avoid=bad

constraint key round-one-charge
)fixture";

constexpr const char* k_alternation = R"fixture(game alternation

actionsA: 0 1
actionsB: 0
states: q
colors: c0 c1

edge q 0 0 -> q : c0
edge q 1 0 -> q : c1

# Player 1 must play both actions infinitely often.
win submuller {c0,c1}

constraint key p1-one-count-free

strategy mealy alternator
memory: a0 a1
act a0 0
act a1 1
update a0 0 -> a1
update a1 0 -> a0

strategy mealy always0
memory: z
act z 0
update z 0 -> z
)fixture";

constexpr const char* k_imitation = R"fixture(game imitation

actionsA: 0 1
actionsB: 0 1
states: start mem0 mem1 done
colors: ok win miss

# Player 1 wins by repeating in round two what Player 2 played first.
edge start * 0 -> mem0 : ok
edge start * 1 -> mem1 : ok
edge mem0 0 * -> done : win
edge mem0 1 * -> done : miss
edge mem1 1 * -> done : win
edge mem1 0 * -> done : miss
edge done * * -> done : ok

win reach target=win

constraint key imitation-split
)fixture";

constexpr const char* k_echo = R"fixture(game echo

actionsA: 0 1 2
actionsB: 0 1 2
states: start ans0 ans1 done
colors: ok bad

# If Player 2 opens with 0 or 1, Player 1 must echo it in round two;
# opening with 2 frees Player 1 right away.
edge start * 0 -> ans0 : ok
edge start * 1 -> ans1 : ok
edge start * 2 -> done : ok
edge ans0 0 * -> done : ok
edge ans0 * * -> done : bad
edge ans1 1 * -> done : ok
edge ans1 * * -> done : bad
edge done * * -> done : ok

win safety avoid=bad

constraint key single-b0
constraint key single-b1

# Echoes the first opponent action; seeds the merge search with the finest
# answer-aware kernel.
strategy mealy exact
memory: m0 m1 m2 mf
act m0 0
act m1 0
act m2 1
act mf 2
update m0 0 -> m1
update m0 1 -> m2
update m0 2 -> mf
update m1 0 -> m1
update m1 1 -> m1
update m1 2 -> m1
update m2 0 -> m2
update m2 1 -> m2
update m2 2 -> m2
update mf 0 -> mf
update mf 1 -> mf
update mf 2 -> mf

# Winning strategy that respects single-b0: special-cases opponent word 0.
strategy mealy pick0
memory: fresh hit other
act fresh 1
act hit 0
act other 1
update fresh 0 -> hit
update fresh 1 -> other
update fresh 2 -> other
update hit 0 -> other
update hit 1 -> other
update hit 2 -> other
update other 0 -> other
update other 1 -> other
update other 2 -> other

# Winning strategy that respects single-b1: special-cases opponent word 1.
strategy mealy pick1
memory: fresh hit other
act fresh 0
act hit 1
act other 0
update fresh 1 -> hit
update fresh 0 -> other
update fresh 2 -> other
update hit 0 -> other
update hit 1 -> other
update hit 2 -> other
update other 0 -> other
update other 1 -> other
update other 2 -> other
)fixture";

constexpr const char* k_shuttle = R"fixture(game shuttle

actionsA: left right
actionsB: z
states: mid inL inR
colors: red green none

# One-player shuttle: both sides must be visited infinitely often, and
# every visit returns through the middle.
edge mid left z -> inL : red
edge mid right z -> inR : green
edge inL * z -> mid : none
edge inR * z -> mid : none

win submuller {red,green}

constraint key multiset-state

strategy mealy alternator
memory: goL backL goR backR
act goL left
act backL left
act goR right
act backR right
update goL z -> backL
update backL z -> goR
update goR z -> backR
update backR z -> goL
)fixture";

constexpr const char* k_battery = R"fixture(game battery

actionsA: charge coast
actionsB: 0 1
states: lo mid hi
colors: plus minus flat

# Charging at lo is the only way to survive the drain at mid.
edge lo charge * -> mid : plus
edge lo coast * -> mid : minus
edge mid * 0 -> hi : minus
edge mid * 1 -> lo : flat
edge hi * * -> lo : plus

weight plus 1
weight minus -1
weight flat 0

win energy

constraint key energy
constraint key energy-level
)fixture";

constexpr const char* k_shuttle_energy = R"fixture(game shuttle-energy

actionsA: left right
actionsB: z
states: mid inL inR
colors: red green none

# The shuttle game again, now with a battery: visiting the left side pays
# for the right side, and both sides are still due infinitely often.
edge mid left z -> inL : red
edge mid right z -> inR : green
edge inL * z -> mid : none
edge inR * z -> mid : none

weight red 1
weight green -1
weight none 0

win submuller {red,green}
win energy
win conj 0 1

constraint key multiset-state
constraint key energy

strategy mealy alternator
memory: goL backL goR backR
act goL left
act backL left
act goR right
act backR right
update goL z -> backL
update backL z -> goR
update goR z -> backR
update backR z -> goL
)fixture";

constexpr std::array kFixtures = {
    std::pair<const char*, const char*>{"uni-mem", k_uni_mem},
    std::pair<const char*, const char*>{"first-one", k_first_one},
    std::pair<const char*, const char*>{"one-count", k_one_count},
    std::pair<const char*, const char*>{"zero-run", k_zero_run},
    std::pair<const char*, const char*>{"charge", k_charge},
    std::pair<const char*, const char*>{"alternation", k_alternation},
    std::pair<const char*, const char*>{"imitation", k_imitation},
    std::pair<const char*, const char*>{"echo", k_echo},
    std::pair<const char*, const char*>{"shuttle", k_shuttle},
    std::pair<const char*, const char*>{"battery", k_battery},
    std::pair<const char*, const char*>{"shuttle-energy", k_shuttle_energy},
};

}  // namespace

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& [name, text] : kFixtures) out.emplace_back(name);
    return out;
}

const std::string& fixture_text(const std::string& name) {
    static const std::array<std::string, kFixtures.size()> texts = [] {
        std::array<std::string, kFixtures.size()> t;
        for (std::size_t i = 0; i < kFixtures.size(); ++i) t[i] = kFixtures[i].second;
        return t;
    }();
    for (std::size_t i = 0; i < kFixtures.size(); ++i)
        if (name == kFixtures[i].first) return texts[i];
    throw InputError("unknown fixture '" + name + "'");
}

GameFile load_fixture(const std::string& name) { return parse_game(fixture_text(name)); }

}  // namespace unistrat
