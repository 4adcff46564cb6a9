#include <orderaut/cli.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include <orderaut/automaton.hpp>
#include <orderaut/deciders.hpp>
#include <orderaut/order.hpp>
#include <orderaut/reductions.hpp>

namespace orderaut {

namespace {

// Input or output failure, reported with exit code 2.
class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Options
{
    std::string input;
    std::string output;
    std::string order;
    std::string method = "auto";
    std::size_t limit = 0;
    std::size_t states = 0;
    std::size_t letters = 0;
    std::uint64_t seed = 0;
};

Automaton load_automaton(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    return parse_automaton(in);
}

NaeInstance load_nae(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    return parse_nae(in);
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body)
{
    std::ofstream file(path);
    if (!file) {
        throw IoError("cannot write '" + path + "'");
    }
    body(file);
    file.flush();
    if (!file) {
        throw IoError("write to '" + path + "' failed");
    }
}

// .aut to stdout, or to the path plus a "<path>.names" sidecar when given.
void emit_automaton(const Options& opt, std::ostream& out, const Automaton& a,
                    const std::vector<std::string>& names)
{
    if (opt.output.empty()) {
        write_automaton(out, a);
        return;
    }
    write_file(opt.output, [&](std::ostream& f) { write_automaton(f, a); });
    write_file(opt.output + ".names", [&](std::ostream& f) { write_state_names(f, names); });
}

int report(std::ostream& out, Verdict v, const std::string& certificate)
{
    out << to_string(v) << '\n';
    if (v == Verdict::yes) {
        out << certificate << '\n';
        return exit_holds;
    }
    return v == Verdict::no ? exit_fails : exit_undecided;
}

int check_monotonic(const Options& opt, std::ostream& out, std::ostream& err)
{
    const Automaton a = load_automaton(opt.input);
    LinearWitness w;
    if (opt.method == "bruteforce") {
        const std::size_t limit = opt.limit ? opt.limit : default_linear_limit;
        if (a.n_states() > limit) {
            err << "undecided at this scale: " << a.n_states()
                << " states exceed the brute-force limit of " << limit << '\n';
            out << to_string(Verdict::undecided) << '\n';
            return exit_undecided;
        }
        w = decide_monotonic_bruteforce(a, limit);
    } else if (opt.method == "backtracking") {
        w = decide_monotonic_backtracking(a);
    } else {
        w = decide_monotonic(a);
    }
    return report(out, w.verdict, w.yes() ? format_order(*w.certificate) : "");
}

int check_oriented(const Options& opt, std::ostream& out, std::ostream& err)
{
    const Automaton a = load_automaton(opt.input);
    const CyclicWitness w = decide_oriented(a, opt.limit ? opt.limit : default_cyclic_limit);
    if (w.verdict == Verdict::undecided) {
        err << w.note << '\n';
    }
    return report(out, w.verdict, w.yes() ? format_order(*w.certificate) : "");
}

int check_partial(const Options& opt, std::ostream& out, std::ostream& err)
{
    const Automaton a = load_automaton(opt.input);
    const PartialWitness w = find_nontrivial_partial_order(a);
    if (!w.yes() && !w.note.empty()) {
        err << w.note << '\n';
    }
    return report(out, w.verdict, w.yes() ? format_relation(*w.certificate) : "");
}

int verify(const Options& opt, std::ostream& out, bool cyclic)
{
    const Automaton a = load_automaton(opt.input);
    std::vector<State> states = parse_state_list(opt.order);
    bool holds = false;
    if (cyclic) {
        holds = verify_cyclic_order(a, CyclicOrder(std::move(states)));
    } else {
        holds = verify_linear_order(a, LinearOrder(std::move(states)));
    }
    out << (holds ? "yes" : "no") << '\n';
    return holds ? exit_holds : exit_fails;
}

int solve_nae(const Options& opt, std::ostream& out)
{
    const NaeInstance inst = load_nae(opt.input);
    if (auto sigma = nae_bruteforce(inst)) {
        out << format_assignment(*sigma) << '\n';
        return exit_holds;
    }
    out << "unsat\n";
    return exit_fails;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Decide monotonic, oriented and partially ordered automata; build hardness gadgets.",
                 "orderaut"};
    app.require_subcommand(1);
    Options opt;

    auto* check = app.add_subcommand("check", "Decide an order property of an automaton");
    check->require_subcommand(1);
    auto* check_mono = check->add_subcommand("monotonic", "Is there a preserved linear order?");
    check_mono->add_option("file", opt.input, ".aut file")->required();
    check_mono->add_option("--method", opt.method, "auto, backtracking or bruteforce")
        ->check(CLI::IsMember({"auto", "backtracking", "bruteforce"}));
    check_mono->add_option("--limit", opt.limit, "state limit for --method bruteforce")
        ->check(CLI::PositiveNumber);
    auto* check_orient = check->add_subcommand("oriented", "Is there a preserved cyclic order?");
    check_orient->add_option("file", opt.input, ".aut file")->required();
    check_orient->add_option("--limit", opt.limit, "state limit for cyclic brute force")
        ->check(CLI::PositiveNumber);
    auto* check_po = check->add_subcommand("partial-order", "Is there a preserved nontrivial partial order?");
    check_po->add_option("file", opt.input, ".aut file")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Check a proposed order");
    verify_cmd->require_subcommand(1);
    auto* verify_lin = verify_cmd->add_subcommand("linear", "States least first");
    auto* verify_cyc = verify_cmd->add_subcommand("cyclic", "States in circular order");
    for (auto* sub : {verify_lin, verify_cyc}) {
        sub->add_option("file", opt.input, ".aut file")->required();
        sub->add_option("--order", opt.order, "space-separated state indices")->required();
    }

    auto* reduce = app.add_subcommand("reduce", "Build a reduction instance");
    reduce->require_subcommand(1);
    auto* reduce_nae = reduce->add_subcommand("nae3sat", "NAE-3SAT instance to gadget automaton");
    reduce_nae->add_option("file", opt.input, ".nae file")->required();
    auto* reduce_bin = reduce->add_subcommand("binary", "Automaton with >= 3 letters to two letters");
    reduce_bin->add_option("file", opt.input, ".aut file")->required();
    auto* reduce_sink = reduce->add_subcommand("add-sink", "Add a state fixed by every letter");
    reduce_sink->add_option("file", opt.input, ".aut file")->required();
    for (auto* sub : {reduce_nae, reduce_bin, reduce_sink}) {
        sub->add_option("-o,--output", opt.output, "output .aut (a .names sidecar is written next to it)");
    }

    auto* solve = app.add_subcommand("solve", "Solve a satisfiability instance");
    solve->require_subcommand(1);
    auto* solve_nae_cmd = solve->add_subcommand("nae", "Least NAE-satisfying assignment by enumeration");
    solve_nae_cmd->add_option("file", opt.input, ".nae file")->required();

    auto* gen = app.add_subcommand("gen", "Generate automata");
    gen->require_subcommand(1);
    auto* gen_random = gen->add_subcommand("random", "Uniformly random transition table");
    gen_random->add_option("--states", opt.states, "number of states")->required()->check(CLI::PositiveNumber);
    gen_random->add_option("--letters", opt.letters, "number of letters")->required()->check(CLI::PositiveNumber);
    gen_random->add_option("--seed", opt.seed, "PRNG seed")->required();
    gen_random->add_option("-o,--output", opt.output, "output .aut (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "orderaut: " << e.what() << '\n';
        return exit_error;
    }

    try {
        if (check_mono->parsed()) {
            return check_monotonic(opt, out, err);
        }
        if (check_orient->parsed()) {
            return check_oriented(opt, out, err);
        }
        if (check_po->parsed()) {
            return check_partial(opt, out, err);
        }
        if (verify_lin->parsed() || verify_cyc->parsed()) {
            return verify(opt, out, verify_cyc->parsed());
        }
        if (reduce_nae->parsed()) {
            const NaeInstance inst = load_nae(opt.input);
            emit_automaton(opt, out, reduce_nae_to_automaton(inst), GadgetLayout(inst).state_names());
            return exit_holds;
        }
        if (reduce_bin->parsed()) {
            const Automaton a = load_automaton(opt.input);
            emit_automaton(opt, out, reduce_to_binary(a), binary_state_names(a.n_states(), a.n_letters()));
            return exit_holds;
        }
        if (reduce_sink->parsed()) {
            const Automaton a = load_automaton(opt.input);
            emit_automaton(opt, out, add_sink(a), sink_state_names(a.n_states()));
            return exit_holds;
        }
        if (solve_nae_cmd->parsed()) {
            return solve_nae(opt, out);
        }
        if (gen_random->parsed()) {
            const Automaton a = random_automaton(opt.states, opt.letters, opt.seed);
            if (opt.output.empty()) {
                write_automaton(out, a);
            } else {
                write_file(opt.output, [&](std::ostream& f) { write_automaton(f, a); });
            }
            return exit_holds;
        }
    } catch (const std::exception& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        err << "orderaut: " << (opt.input.empty() ? "" : opt.input + ": ") << msg << '\n';
        return exit_error;
    }
    err << "orderaut: no command given\n";
    return exit_error;
}

} // namespace orderaut
