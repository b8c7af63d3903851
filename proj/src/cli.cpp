// Command-line front end: argument parsing, report rendering, and the
// fixture walkthroughs behind `demo`.  Everything prints to the stream the
// caller hands in, so tests can capture reports byte for byte.

#include "unistrat/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "unistrat/arena.hpp"
#include "unistrat/constraint.hpp"
#include "unistrat/errors.hpp"
#include "unistrat/fixtures.hpp"
#include "unistrat/game_format.hpp"
#include "unistrat/solve.hpp"
#include "unistrat/strategy.hpp"
#include "unistrat/uniformize.hpp"
#include "unistrat/wincond.hpp"

namespace unistrat {
namespace {

// ---- rendering ----

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string move_text(const Arena& g, Move x) {
    return "(" + g.actions_a[static_cast<std::size_t>(x.a)] + "," +
           g.actions_b[static_cast<std::size_t>(x.b)] + ")";
}

std::string history_text(const Arena& g, const History& h) {
    if (h.empty()) return "e";
    std::string s;
    for (Move x : h) s += move_text(g, x);
    return s;
}

std::string opp_text(const Arena& g, const OppHistory& beta) {
    if (beta.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (i) s += ".";
        s += g.actions_b[static_cast<std::size_t>(beta[i])];
    }
    return s;
}

std::string opp_lasso_text(const Arena& g, const Lasso& l) {
    std::string s;
    if (!l.stem.empty()) s += opp_text(g, l.stem) + " ";
    return s + "(" + opp_text(g, l.cycle) + ")^w";
}

std::string run_text(const Arena& g, const MoveLasso& run) {
    std::string s;
    if (!run.stem.empty()) s += history_text(g, run.stem) + " ";
    return s + "(" + history_text(g, run.cycle) + ")^w";
}

std::string memory_name(const MealyStrategy& s, int m) {
    if (m < static_cast<int>(s.names.size()) && !s.names[static_cast<std::size_t>(m)].empty())
        return s.names[static_cast<std::size_t>(m)];
    return "m" + std::to_string(m);
}

void print_machine(std::ostream& out, const Arena& g, const MealyStrategy& s,
                   const std::string& label, const std::string& indent = "") {
    const std::vector<int> reach = reachable_memory(s);
    out << indent << label << ": " << reach.size() << " reachable memory state"
        << (reach.size() == 1 ? "" : "s");
    if (static_cast<int>(reach.size()) != s.memory) out << " (of " << s.memory << ")";
    out << "\n";
    for (int m : reach) {
        out << indent << "  " << memory_name(s, m) << ": play "
            << g.actions_a[static_cast<std::size_t>(s.out(m))] << ";";
        for (ActionB b = 0; b < s.num_b; ++b)
            out << (b ? ", " : " ") << "on " << g.actions_b[static_cast<std::size_t>(b)]
                << " -> " << memory_name(s, s.next(m, b));
        out << "\n";
    }
}

std::vector<OppHistory> opp_words(int nb, int len) {
    std::vector<OppHistory> words{{}};
    for (int i = 0; i < len; ++i) {
        std::vector<OppHistory> next;
        for (const OppHistory& w : words)
            for (ActionB b = 0; b < nb; ++b) {
                next.push_back(w);
                next.back().push_back(b);
            }
        words = std::move(next);
    }
    return words;
}

void print_action_table(std::ostream& out, const Arena& g, const FunctionStrategy& s, int depth) {
    for (int len = 0; len <= depth; ++len)
        for (const OppHistory& beta : opp_words(g.nb(), len))
            out << "  " << opp_text(g, beta) << " -> "
                << g.actions_a[static_cast<std::size_t>(s(beta))] << "\n";
}

void print_partition(std::ostream& out, const Arena& g, const HarmlessPartition& p,
                     const std::string& indent) {
    std::map<int, std::vector<History>> groups;
    for (const auto& [h, cid] : p.class_of) groups[cid].push_back(h);
    for (const auto& [cid, members] : groups) {
        out << indent << "play " << g.actions_a[static_cast<std::size_t>(p.assignment.at(cid))]
            << " on";
        for (const History& h : members) out << " " << history_text(g, h);
        out << "\n";
    }
}

// ---- input plumbing ----

std::string joined_names(const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < names.size(); ++i) s += (i ? ", " : "") + names[i];
    return s;
}

GameFile load_game(const std::string& spec) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) {
        std::ifstream in(spec);
        if (!in) throw InputError("cannot open '" + spec + "'");
        return parse_game(in);
    }
    const std::vector<std::string> names = fixture_names();
    if (std::find(names.begin(), names.end(), spec) == names.end())
        throw InputError("'" + spec + "' is neither a game file nor a fixture (fixtures: " +
                         joined_names(names) + ")");
    return load_fixture(spec);
}

std::string pick_constraint(const GameFile& gf, const std::string& given) {
    if (!given.empty()) return given;
    if (gf.constraint_order.empty())
        throw InputError("the game declares no constraint; pass --constraint");
    return gf.constraint_order.front();
}

std::string pick_strategy(const GameFile& gf, const std::string& given) {
    if (!given.empty()) return given;
    if (gf.strategy_order.empty())
        throw InputError("the game declares no strategy; pass --strategy");
    return gf.strategy_order.front();
}

Budgets resolve_budgets(std::uint64_t flag, bool flag_given) {
    if (flag_given) return Budgets::scaled(flag);
    if (const char* env = std::getenv("UNISTRAT_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0') throw InputError("UNISTRAT_BUDGET must be a plain number");
        return Budgets::scaled(v);
    }
    return Budgets{};
}

// ---- fixture walkthroughs ----

struct DemoLog {
    std::ostream& out;
    bool ok = true;

    void check(bool good, const std::string& text) {
        out << "  [" << (good ? "ok" : "FAIL") << "] " << text << "\n";
        ok = ok && good;
    }
};

bool demo_uni_mem(std::ostream& out, const Budgets& budgets) {
    const GameFile gf = load_fixture("uni-mem");
    const Arena& g = gf.arena;
    const WinCond& w = gf.win();
    const Constraint& c = gf.constraint("unimem");
    DemoLog d{out};

    const SolveResult sol = solve(g, w, budgets);
    d.check(sol.p1_wins, "solver: player 1 wins");
    if (sol.strategy) print_machine(out, g, *sol.strategy, "solver strategy", "  ");

    const MealyStrategy& left = gf.strategy("left");
    const MealyStrategy& right = gf.strategy("right");
    d.check(verify_winning(g, w, left).holds, "'left' wins with 3 memory states");
    const Verdict ls = is_sim_strategy(g, c, left);
    std::string witness;
    if (ls.histories)
        witness = " (" + opp_text(g, ls.histories->first) + " vs " +
                  opp_text(g, ls.histories->second) + ")";
    d.check(!ls.holds, "'left' answers related inputs differently" + witness);
    d.check(verify_winning(g, w, right).holds && is_sim_strategy(g, c, right).holds,
            "'right' wins and respects 'unimem'");

    const PowersetResult pw = uniformize_powerset(g, c, left, budgets);
    print_machine(out, g, pw.machine, "powerset rebuild of 'left'", "  ");
    d.check(static_cast<int>(reachable_memory(pw.machine).size()) >= 4,
            "the rebuild has at least 4 reachable memory states");
    d.check(verify_winning(g, w, pw.machine).holds && is_sim_strategy(g, c, pw.machine).holds,
            "the rebuild wins and respects 'unimem'");

    d.check(!brute_force_strategy(g, w, &c, 3, 6, budgets).has_value(),
            "no machine with at most 3 states wins while respecting 'unimem'");
    return d.ok;
}

bool demo_first_one(std::ostream& out, const Budgets& budgets) {
    (void)budgets;
    const GameFile gf = load_fixture("first-one");
    const Arena& g = gf.arena;
    const Constraint& c = gf.constraint("first-one");
    DemoLog d{out};

    bool counts_ok = true;
    std::ostringstream counts;
    for (int n = 0; n <= 4; ++n) {
        const int k = count_classes(c, g.na(), g.nb(), n);
        counts << (n ? ", " : "") << k;
        counts_ok = counts_ok && k == n + 1;
    }
    d.check(counts_ok, "class counts at depths 0..4: " + counts.str());
    d.check(check_suffix_closed(*c.dfa) && check_perfect_recall(*c.dfa),
            "closed by adding a suffix and perfectly recalling");

    const MealyStrategy rebuilt = uniformize_recall_mealy(g, c, gf.strategy("steady"));
    d.check(verify_winning(g, gf.win(), rebuilt).holds && is_sim_strategy(g, c, rebuilt).holds,
            "recall rebuild of 'steady' wins and respects 'first-one'");
    return d.ok;
}

bool demo_one_count(std::ostream& out, const Budgets& budgets) {
    const GameFile gf = load_fixture("one-count");
    const Arena& g = gf.arena;
    const WinCond& w = gf.win();
    const Constraint& c = gf.constraint("p1-one-count");
    DemoLog d{out};

    d.check(bounded_check_time_aware(c, g.na(), g.nb(), 4).holds, "time aware (to length 4)");
    d.check(bounded_check_suffix_closed(c, g.na(), g.nb(), 3, 2).holds,
            "closed by adding a suffix (to length 3+2)");
    d.check(refute_closedness(g, c, w, ClosednessFlavor::Weak, 3, budgets).holds,
            "weak closedness stands at bound 3");

    const Verdict plain = refute_closedness(g, c, w, ClosednessFlavor::Plain, 3, budgets);
    d.check(!plain.holds, "plain closedness fails at bound 3");
    if (plain.runs) {
        out << "    run x: " << run_text(g, plain.runs->first) << "\n";
        out << "    run y: " << run_text(g, plain.runs->second) << "\n";
    }
    return d.ok;
}

bool demo_zero_run(std::ostream& out, const Budgets& budgets) {
    const GameFile gf = load_fixture("zero-run");
    const Arena& g = gf.arena;
    const WinCond& w = gf.win();
    const Constraint& c = gf.constraint("zero-run-split");
    DemoLog d{out};

    d.check(refute_closedness(g, c, w, ClosednessFlavor::Plain, 3, budgets).holds,
            "plain closedness stands at bound 3");
    const Verdict strong = refute_closedness(g, c, w, ClosednessFlavor::Strong, 3, budgets);
    d.check(!strong.holds, "strong closedness fails at bound 3");
    if (strong.runs) {
        out << "    run x: " << run_text(g, strong.runs->first) << "\n";
        out << "    run y: " << run_text(g, strong.runs->second) << "\n";
    }
    if (strong.gamma) out << "    extension gamma: " << history_text(g, *strong.gamma) << "\n";
    return d.ok;
}

bool demo_charge(std::ostream& out, const Budgets& budgets) {
    const GameFile gf = load_fixture("charge");
    const Arena& g = gf.arena;
    const WinCond& w = gf.win();
    const Constraint& c = gf.constraint("round-one-charge");
    DemoLog d{out};

    d.check(solve(g, w, budgets).p1_wins, "solver: player 1 wins");
    const Verdict strong = refute_closedness(g, c, w, ClosednessFlavor::Strong, 3, budgets);
    d.check(!strong.holds, "strong closedness fails at bound 3");
    if (strong.runs) {
        out << "    run x: " << run_text(g, strong.runs->first) << "\n";
        out << "    run y: " << run_text(g, strong.runs->second) << "\n";
    }
    if (strong.gamma) out << "    extension gamma: " << history_text(g, *strong.gamma) << "\n";
    d.check(!brute_force_strategy(g, w, &c, 3, 6, budgets).has_value(),
            "harmful: no machine with at most 3 states wins while respecting it");
    return d.ok;
}

bool demo_alternation(std::ostream& out, const Budgets& budgets) {
    const GameFile gf = load_fixture("alternation");
    const Arena& g = gf.arena;
    const WinCond& w = gf.win();
    const Constraint& c = gf.constraint("p1-one-count-free");
    DemoLog d{out};

    d.check(verify_winning(g, w, gf.strategy("alternator")).holds, "'alternator' wins");
    d.check(!verify_winning(g, w, gf.strategy("always0")).holds, "'always0' loses");
    const PredicateWitness ta = bounded_check_time_aware(c, g.na(), g.nb(), 3);
    std::string witness;
    if (!ta.holds)
        witness = " (" + history_text(g, ta.x) + " ~ " + history_text(g, ta.y) + ")";
    d.check(!ta.holds, "not time aware" + witness);
    d.check(!brute_force_strategy(g, w, &c, 3, 6, budgets).has_value(),
            "harmful: no machine with at most 3 states wins while respecting it");
    return d.ok;
}

bool demo_imitation(std::ostream& out, const Budgets& budgets) {
    const GameFile gf = load_fixture("imitation");
    const Arena& g = gf.arena;
    const WinCond& w = gf.win();
    const Constraint& c = gf.constraint("imitation-split");
    DemoLog d{out};

    d.check(solve(g, w, budgets).p1_wins, "solver: player 1 wins");
    const PredicateWitness sc = bounded_check_suffix_closed(c, g.na(), g.nb(), 2, 2);
    std::string witness;
    if (!sc.holds)
        witness = " (" + history_text(g, sc.x) + " ~ " + history_text(g, sc.y) + ", add " +
                  history_text(g, sc.suffix) + ")";
    d.check(!sc.holds, "not closed by adding a suffix" + witness);
    d.check(refute_closedness(g, c, w, ClosednessFlavor::Strong, 1, budgets).holds,
            "strong closedness stands at bound 1");
    d.check(!brute_force_strategy(g, w, &c, 3, 6, budgets).has_value(),
            "harmful: no machine with at most 3 states wins while respecting it");
    return d.ok;
}

bool demo_echo(std::ostream& out, const Budgets& budgets) {
    const GameFile gf = load_fixture("echo");
    const Arena& g = gf.arena;
    const WinCond& w = gf.win();
    DemoLog d{out};

    const MaximalHarmlessResult res = maximal_harmless(g, w, gf.strategy("exact"), 2, budgets);
    d.check(res.complete, "the merge search ran to completion (" +
                              std::to_string(res.partitions_explored) + " partitions explored)");
    d.check(res.maximals.size() == 2,
            "the kernel of 'exact' has exactly 2 maximal harmless coarsenings");
    for (std::size_t i = 0; i < res.maximals.size(); ++i) {
        out << "    maximal #" << (i + 1) << ":\n";
        print_partition(out, g, res.maximals[i], "      ");
    }
    if (res.maximals.size() == 2) {
        const std::map<History, int> both =
            join_partitions(res.maximals[0].class_of, res.maximals[1].class_of);
        d.check(!partition_is_harmless(g, w, 2, both, budgets, nullptr),
                "merging the two coarsenings is harmful");
    }
    d.check(verify_winning(g, w, gf.strategy("pick0")).holds &&
                is_sim_strategy_auto(g, gf.constraint("single-b0"), gf.strategy("pick0"), 4).holds,
            "'pick0' wins and respects 'single-b0'");
    d.check(verify_winning(g, w, gf.strategy("pick1")).holds &&
                is_sim_strategy_auto(g, gf.constraint("single-b1"), gf.strategy("pick1"), 4).holds,
            "'pick1' wins and respects 'single-b1'");
    return d.ok;
}

bool demo_shuttle(std::ostream& out, const Budgets& budgets) {
    const GameFile gf = load_fixture("shuttle");
    const Arena& g = gf.arena;
    const WinCond& w = gf.win();
    DemoLog d{out};

    const std::optional<MealyStrategy> three = brute_force_strategy(g, w, nullptr, 3, 6, budgets);
    d.check(three.has_value(), "a winning machine with 3 states exists");
    if (three) print_machine(out, g, *three, "found machine", "  ");
    d.check(!brute_force_strategy(g, w, nullptr, 2, 6, budgets).has_value(),
            "no machine with at most 2 states wins");
    d.check(verify_winning(g, w, gf.strategy("alternator")).holds, "'alternator' wins");
    d.check(is_sim_strategy_auto(g, gf.constraint("multiset-state"), gf.strategy("alternator"), 6)
                .holds,
            "'alternator' respects 'multiset-state' (to horizon 6)");
    return d.ok;
}

bool demo_battery(std::ostream& out, const Budgets& budgets) {
    const GameFile gf = load_fixture("battery");
    const Arena& g = gf.arena;
    const WinCond& w = gf.win();
    const Constraint& c = gf.constraint("energy");
    DemoLog d{out};

    const SolveResult sol = solve(g, w, budgets);
    d.check(sol.p1_wins, "solver: player 1 can keep the credit nonnegative");
    if (sol.strategy) print_machine(out, g, *sol.strategy, "solver strategy", "  ");
    d.check(bounded_check_suffix_closed(c, g.na(), g.nb(), 3, 2).holds,
            "the credit key is closed by adding a suffix (to length 3+2)");
    d.check(bounded_check_perfect_recall(c, g.na(), g.nb(), 4).holds,
            "the credit key shows no recall violation (to length 4)");
    const Constraint& lvl = gf.constraint("energy-level");
    const PredicateWitness pr = bounded_check_perfect_recall(lvl, g.na(), g.nb(), 4);
    std::string witness;
    if (!pr.holds)
        witness = " (" + history_text(g, pr.x) + " ~ " + history_text(g, pr.y) + ")";
    d.check(!pr.holds, "the level-only key is not perfectly recalling" + witness);
    return d.ok;
}

bool demo_shuttle_energy(std::ostream& out, const Budgets& budgets) {
    (void)budgets;
    const GameFile gf = load_fixture("shuttle-energy");
    const Arena& g = gf.arena;
    const WinCond& w = gf.win();  // the conjunction is declared last
    const MealyStrategy& alt = gf.strategy("alternator");
    DemoLog d{out};

    d.check(verify_winning(g, w, alt).holds, "'alternator' wins recurrence and credit together");
    int go_right = -1;
    for (int m = 0; m < alt.memory; ++m)
        if (memory_name(alt, m) == "goR") go_right = m;
    if (go_right >= 0) {
        MealyStrategy mirrored = alt;
        mirrored.init = go_right;
        d.check(!verify_winning(g, w, mirrored).holds,
                "starting toward the right instead loses (the credit dips)");
    } else {
        d.check(false, "fixture names a 'goR' state");
    }
    d.check(is_sim_strategy_auto(g, gf.constraint("multiset-state"), alt, 6).holds &&
                is_sim_strategy_auto(g, gf.constraint("energy"), alt, 6).holds,
            "'alternator' respects both declared constraints (to horizon 6)");
    return d.ok;
}

struct DemoEntry {
    const char* name;
    const char* blurb;
    bool (*run)(std::ostream&, const Budgets&);
};

// Same order as the bundled fixture registry.
const DemoEntry kDemos[] = {
    {"uni-mem", "a 3-state winner exists but respecting winners need 4 states", demo_uni_mem},
    {"first-one", "relation with n+1 classes at every history length n", demo_first_one},
    {"one-count", "weakly but not plainly closed counting relation", demo_one_count},
    {"zero-run", "plainly but not strongly closed split relation", demo_zero_run},
    {"charge", "harmful relation whose strong closedness also fails", demo_charge},
    {"alternation", "length-blind count relation, harmful in a one-player game", demo_alternation},
    {"imitation", "harmful relation, strongly closed but not suffix closed", demo_imitation},
    {"echo", "one strategy kernel, two incomparable maximal harmless coarsenings", demo_echo},
    {"shuttle", "recurrence goal whose winners need three memory states", demo_shuttle},
    {"battery", "energy game with credit-tracking relations", demo_battery},
    {"shuttle-energy", "conjunction of recurrence and credit conditions", demo_shuttle_energy},
};

int cmd_demo(const std::string& name, std::ostream& out, const Budgets& budgets) {
    if (name == "list") {
        for (const DemoEntry& e : kDemos) out << e.name << " - " << e.blurb << "\n";
        return 0;
    }
    bool all_ok = true;
    bool matched = false;
    for (const DemoEntry& e : kDemos) {
        if (name != "all" && name != e.name) continue;
        matched = true;
        out << "== " << e.name << ": " << e.blurb << " ==\n";
        all_ok = e.run(out, budgets) && all_ok;
    }
    if (!matched) throw InputError("unknown fixture '" + name + "'; try `demo list`");
    return all_ok ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"workbench for uniformizing strategies in concurrent two-player games"};
    app.name("unistrat");
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t budget_value = 0;
    CLI::Option* budget_opt =
        app.add_option("--budget", budget_value, "cap every internal search at this many steps");

    std::string a_game, a_constraint, a_strategy, a_mode, a_flavor, a_name;
    int a_horizon = 6;
    int a_depth = 3;
    int a_bound = 3;
    int a_memory = 3;

    CLI::App* sc_solve =
        app.add_subcommand("solve", "decide the game and print a winning strategy");
    sc_solve->add_option("game", a_game, "game file or bundled fixture")->required();

    CLI::App* sc_uni =
        app.add_subcommand("uniformize", "rebuild a strategy so it respects a constraint");
    sc_uni->add_option("game", a_game, "game file or bundled fixture")->required();
    sc_uni->add_option("--mode", a_mode, "recall, recall-mealy, backtrack or powerset")
        ->required()
        ->check(CLI::IsMember({"recall", "recall-mealy", "backtrack", "powerset"}));
    sc_uni->add_option("--constraint", a_constraint, "constraint name (default: first declared)");
    sc_uni->add_option("--strategy", a_strategy, "strategy name (default: first declared)");
    sc_uni->add_option("--horizon", a_horizon, "input length limit for backtrack mode");
    sc_uni->add_option("--depth", a_depth, "input length shown in reply tables");

    CLI::App* sc_vw =
        app.add_subcommand("verify-winning", "check that a declared strategy wins");
    sc_vw->add_option("game", a_game, "game file or bundled fixture")->required();
    sc_vw->add_option("--strategy", a_strategy, "strategy name (default: first declared)");

    CLI::App* sc_vs =
        app.add_subcommand("verify-sim", "check that a strategy respects a constraint");
    sc_vs->add_option("game", a_game, "game file or bundled fixture")->required();
    sc_vs->add_option("--strategy", a_strategy, "strategy name (default: first declared)");
    sc_vs->add_option("--constraint", a_constraint, "constraint name (default: first declared)");
    sc_vs->add_option("--horizon", a_horizon, "bounded-check depth for key-based constraints");

    CLI::App* sc_brute =
        app.add_subcommand("brute-force", "scan all small machines for a winner");
    sc_brute->add_option("game", a_game, "game file or bundled fixture")->required();
    sc_brute->add_option("--memory-bound", a_memory, "largest machine size scanned");
    sc_brute->add_option("--constraint", a_constraint, "also require respecting this constraint");
    sc_brute->add_option("--horizon", a_horizon, "bounded-check depth for key-based constraints");

    CLI::App* sc_max = app.add_subcommand(
        "maximal", "list maximal harmless coarsenings of a strategy's kernel");
    sc_max->add_option("game", a_game, "game file or bundled fixture")->required();
    sc_max->add_option("--strategy", a_strategy, "strategy name (default: first declared)");
    sc_max->add_option("--horizon", a_horizon, "decision horizon")->required();

    CLI::App* sc_classes =
        app.add_subcommand("classes", "count equivalence classes per history length");
    sc_classes->add_option("game", a_game, "game file or bundled fixture")->required();
    sc_classes->add_option("--constraint", a_constraint, "constraint name (default: first declared)");
    sc_classes->add_option("--depth", a_depth, "largest history length counted")->required();

    CLI::App* sc_refute =
        app.add_subcommand("refute", "search bounded runs for a closedness violation");
    sc_refute->add_option("game", a_game, "game file or bundled fixture")->required();
    sc_refute->add_option("--flavor", a_flavor, "weak, plain or strong")
        ->required()
        ->check(CLI::IsMember({"weak", "plain", "strong"}));
    sc_refute->add_option("--bound", a_bound, "stem/cycle length bound");
    sc_refute->add_option("--constraint", a_constraint, "constraint name (default: first declared)");

    CLI::App* sc_demo = app.add_subcommand("demo", "walk a bundled fixture through its claims");
    sc_demo->add_option("name", a_name, "fixture name, 'list' or 'all'")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, out) == 0 ? 0 : 2;
    }

    try {
        const Budgets budgets = resolve_budgets(budget_value, budget_opt->count() > 0);

        if (app.got_subcommand(sc_demo)) return cmd_demo(a_name, out, budgets);

        if (app.got_subcommand(sc_solve)) {
            const GameFile gf = load_game(a_game);
            const SolveResult r = solve(gf.arena, gf.win(), budgets);
            out << "player 1 wins: " << yn(r.p1_wins) << "\n";
            if (!r.p1_wins) return 1;
            if (r.strategy) print_machine(out, gf.arena, *r.strategy, "strategy");
            return 0;
        }

        if (app.got_subcommand(sc_uni)) {
            const GameFile gf = load_game(a_game);
            const Arena& g = gf.arena;
            const std::string cname = pick_constraint(gf, a_constraint);
            const std::string sname = pick_strategy(gf, a_strategy);
            const Constraint& c = gf.constraint(cname);
            const MealyStrategy& s = gf.strategy(sname);
            bool ok = true;
            if (a_mode == "recall-mealy" || a_mode == "powerset") {
                const MealyStrategy rebuilt =
                    a_mode == "recall-mealy" ? uniformize_recall_mealy(g, c, s)
                                             : uniformize_powerset(g, c, s, budgets).machine;
                print_machine(out, g, rebuilt,
                              a_mode + " uniformization of '" + sname + "'");
                if (!gf.wins.empty()) {
                    const Verdict vw = verify_winning(g, gf.win(), rebuilt);
                    out << "wins: " << yn(vw.holds) << "\n";
                    ok = ok && vw.holds;
                }
                const Verdict vs = is_sim_strategy_auto(g, c, rebuilt, a_horizon);
                out << "respects '" << cname << "': " << yn(vs.holds) << "\n";
                ok = ok && vs.holds;
            } else {
                const FunctionStrategy base = s.as_function();
                int depth = a_depth;
                if (a_mode == "backtrack") depth = std::min(depth, a_horizon);
                const FunctionStrategy rebuilt =
                    a_mode == "recall" ? uniformize_recall(g, c, base)
                                       : uniformize_backtrack(g, c, base, a_horizon, budgets);
                out << a_mode << " uniformization of '" << sname << "', replies to depth "
                    << depth << ":\n";
                print_action_table(out, g, rebuilt, depth);
                const Verdict vs = is_sim_strategy_bounded(g, c, rebuilt, depth);
                out << "respects '" << cname << "' to depth " << depth << ": " << yn(vs.holds)
                    << "\n";
                ok = ok && vs.holds;
            }
            return ok ? 0 : 1;
        }

        if (app.got_subcommand(sc_vw)) {
            const GameFile gf = load_game(a_game);
            const std::string sname = pick_strategy(gf, a_strategy);
            const Verdict v = verify_winning(gf.arena, gf.win(), gf.strategy(sname));
            out << "strategy '" << sname << "' wins: " << yn(v.holds) << "\n";
            if (v.holds) return 0;
            if (v.play)
                out << "  losing opponent behaviour: " << opp_lasso_text(gf.arena, *v.play)
                    << "\n";
            if (!v.note.empty()) out << "  " << v.note << "\n";
            return 1;
        }

        if (app.got_subcommand(sc_vs)) {
            const GameFile gf = load_game(a_game);
            const std::string sname = pick_strategy(gf, a_strategy);
            const std::string cname = pick_constraint(gf, a_constraint);
            const Constraint& c = gf.constraint(cname);
            const Verdict v = is_sim_strategy_auto(gf.arena, c, gf.strategy(sname), a_horizon);
            out << "strategy '" << sname << "' respects '" << cname << "'";
            if (!c.dfa_backed()) out << " (checked to horizon " << a_horizon << ")";
            out << ": " << yn(v.holds) << "\n";
            if (v.holds) return 0;
            if (v.histories)
                out << "  related inputs with distinct replies: "
                    << opp_text(gf.arena, v.histories->first) << " vs "
                    << opp_text(gf.arena, v.histories->second) << "\n";
            if (!v.note.empty()) out << "  " << v.note << "\n";
            return 1;
        }

        if (app.got_subcommand(sc_brute)) {
            const GameFile gf = load_game(a_game);
            const Constraint* cp = nullptr;
            std::string suffix;
            if (!a_constraint.empty()) {
                cp = &gf.constraint(a_constraint);
                suffix = " respecting '" + a_constraint + "'";
            }
            const std::optional<MealyStrategy> found =
                brute_force_strategy(gf.arena, gf.win(), cp, a_memory, a_horizon, budgets);
            if (!found) {
                out << "no winning machine with at most " << a_memory << " states" << suffix
                    << "\n";
                return 1;
            }
            print_machine(out, gf.arena, *found, "winning machine" + suffix);
            return 0;
        }

        if (app.got_subcommand(sc_max)) {
            const GameFile gf = load_game(a_game);
            const std::string sname = pick_strategy(gf, a_strategy);
            const MaximalHarmlessResult res =
                maximal_harmless(gf.arena, gf.win(), gf.strategy(sname), a_horizon, budgets);
            out << "maximal harmless coarsenings of '" << sname << "' at horizon " << a_horizon
                << ": " << res.maximals.size() << " (" << res.partitions_explored
                << " partitions explored)\n";
            for (std::size_t i = 0; i < res.maximals.size(); ++i) {
                out << "maximal #" << (i + 1) << ":\n";
                print_partition(out, gf.arena, res.maximals[i], "  ");
            }
            if (!res.complete) {
                out << "warning: the merge search hit its budget; the list may be incomplete\n";
                return 3;
            }
            return 0;
        }

        if (app.got_subcommand(sc_classes)) {
            const GameFile gf = load_game(a_game);
            const std::string cname = pick_constraint(gf, a_constraint);
            const Constraint& c = gf.constraint(cname);
            for (int n = 0; n <= a_depth; ++n) {
                const int k = count_classes(c, gf.arena.na(), gf.arena.nb(), n);
                out << "depth " << n << ": " << k << (k == 1 ? " class" : " classes") << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(sc_refute)) {
            const GameFile gf = load_game(a_game);
            const std::string cname = pick_constraint(gf, a_constraint);
            const ClosednessFlavor flavor = a_flavor == "weak"    ? ClosednessFlavor::Weak
                                            : a_flavor == "plain" ? ClosednessFlavor::Plain
                                                                  : ClosednessFlavor::Strong;
            const Verdict v = refute_closedness(gf.arena, gf.constraint(cname), gf.win(), flavor,
                                                a_bound, budgets);
            if (v.holds) {
                out << "no " << a_flavor << " closedness violation within bound " << a_bound
                    << "\n";
                return 0;
            }
            out << a_flavor << " closedness violated:\n";
            if (v.runs) {
                out << "  run x: " << run_text(gf.arena, v.runs->first) << "\n";
                out << "  run y: " << run_text(gf.arena, v.runs->second) << "\n";
            }
            if (v.gamma) out << "  extension gamma: " << history_text(gf.arena, *v.gamma) << "\n";
            if (!v.note.empty()) out << "  " << v.note << "\n";
            return 1;
        }

        return 2;  // unreachable: a subcommand is required
    } catch (const ResourceError& e) {
        out << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace unistrat
