#include "sudoku/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "sudoku/errors.hpp"
#include "sudoku/formats.hpp"
#include "sudoku/propagator.hpp"
#include "sudoku/search.hpp"

namespace sudoku::cli {

namespace {

constexpr std::uint64_t kDefaultCap = 1'000'000;

struct Invocation {
    std::string command;
    std::string input;
    std::string fig;
    std::uint64_t cap = kDefaultCap;
    TrialPolicy policy = TrialPolicy::FirstZero;
    bool stats = false;
    bool all = false;
    bool explain = false;
    int parallel = 1;
    std::string format = "pretty";
};

PuzzleDocument load(const Invocation& inv, std::istream& in) {
    if (!inv.fig.empty()) {
        const CatalogEntry& entry = catalog_entry(inv.fig);
        return {entry.grid, entry.name};
    }
    if (inv.input.empty()) throw InputError("no input given (pass a path, '-' for standard input, or --fig <name>)");

    std::stringstream buffer;
    if (inv.input == "-") {
        buffer << in.rdbuf();
    } else {
        std::ifstream file(inv.input, std::ios::binary);
        if (!file) throw InputError("cannot read '" + inv.input + "'");
        buffer << file.rdbuf();
    }
    PuzzleDocument doc = parse_puzzle(buffer.str());
    if (doc.source.empty()) doc.source = inv.input;
    return doc;
}

void print_grid(const Grid& grid, const std::string& format, std::ostream& out) {
    if (format == "compact") {
        out << serialize_compact(grid) << '\n';
    } else {
        out << serialize_puzzle({grid, {}});
    }
}

void print_stats(const SolveStats& stats, std::ostream& out) {
    out << "solutions=" << stats.solutions_found;
    if (stats.trials_to_first) out << " trials_to_first=" << *stats.trials_to_first;
    out << " total_trials=" << stats.total_trials << '\n';
}

int run_solve(const Invocation& inv, const PuzzleDocument& doc, std::ostream& out) {
    if (inv.explain) {
        SolveState state = SolveState::init(doc.grid);
        const PropagationOutcome outcome = propagate(state);
        out << "propagation: " << to_string(outcome.kind) << " assignments_made=" << outcome.assignments_made;
        if (outcome.witness) out << " witness=(" << outcome.witness->row << "," << outcome.witness->col << ")";
        out << '\n';
    }
    SearchOptions options;
    options.policy = inv.policy;
    options.cap = 1;
    options.retention = Retention::First;
    const EnumerationResult result = count_solutions(doc.grid, options);
    if (result.solutions.empty()) {
        out << "no solution\n";
    } else {
        print_grid(result.solutions.front(), inv.format, out);
    }
    if (inv.stats) print_stats(result.stats, out);
    return result.solutions.empty() ? kNoSolution : kOk;
}

int run_count(const Invocation& inv, const PuzzleDocument& doc, std::ostream& out) {
    const bool print_all = inv.all || inv.command == "enumerate";
    if (print_all && inv.format == "compact") serialize_compact(doc.grid);  // reject before any output

    SearchOptions options;
    options.policy = inv.policy;
    options.cap = inv.cap;

    bool first = true;
    auto emit = [&](const Grid& grid) {
        if (inv.format == "pretty" && !first) out << '\n';
        first = false;
        print_grid(grid, inv.format, out);
    };

    EnumerationResult result;
    if (inv.parallel > 1) {
        options.retention = print_all ? Retention::All : Retention::None;
        result = count_solutions_parallel(doc.grid, options, inv.parallel);
        for (const Grid& grid : result.solutions) emit(grid);
    } else {
        if (print_all) options.on_solution = emit;
        result = count_solutions(doc.grid, options);
    }
    if (print_all && result.count > 0 && inv.format == "pretty") out << '\n';

    out << result.count << '\n';
    if (inv.stats) print_stats(result.stats, out);
    if (result.stats.limit_hit) return kCapReached;
    return result.count > 0 ? kOk : kNoSolution;
}

int run_verify(const PuzzleDocument& doc, std::ostream& out) {
    const ValidationReport report = validate_givens(doc.grid);
    for (const Duplicate& d : report.duplicates) {
        out << "duplicate: " << to_string(d.unit) << ' ' << d.index << " symbol " << d.symbol << '\n';
    }
    out << "givens: " << (report.ok() ? "consistent" : "inconsistent") << '\n';
    out << "sudoku matrix: " << (is_sudoku_matrix(doc.grid) ? "yes" : "no") << '\n';
    return report.ok() ? kOk : kNoSolution;
}

int run_catalog(const Invocation& inv, std::ostream& out) {
    if (!inv.fig.empty()) {
        const CatalogEntry& entry = catalog_entry(inv.fig);
        out << serialize_puzzle({entry.grid, entry.name});
        return kOk;
    }
    for (const CatalogEntry& entry : catalog()) {
        const int cells = entry.grid.side() * entry.grid.side();
        out << entry.name << ' ' << (entry.kind == EntryKind::Puzzle ? "puzzle" : "pattern")
            << " givens=" << cells - entry.grid.zero_count() << " expected=" << entry.expected << '\n';
    }
    return kOk;
}

void add_input_options(CLI::App& sub, Invocation& inv) {
    auto* path = sub.add_option("input", inv.input, "Puzzle file, or '-' for standard input");
    auto* fig = sub.add_option("--fig", inv.fig, "Use a catalog grid (fig2..fig11)");
    path->excludes(fig);
    fig->excludes(path);
}

void add_search_options(CLI::App& sub, Invocation& inv) {
    const std::map<std::string, TrialPolicy> policies{{"first-zero", TrialPolicy::FirstZero},
                                                      {"min-candidates", TrialPolicy::MinCandidates}};
    sub.add_option("--policy", inv.policy, "Trial cell selection")
        ->transform(CLI::CheckedTransformer(policies, CLI::ignore_case));
    sub.add_flag("--stats", inv.stats, "Print solutions and trial counters");
    sub.add_option("--format", inv.format, "Grid output format")->check(CLI::IsMember({"pretty", "compact"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Invocation inv;
    CLI::App app{"Sudoku propagation and exhaustive search engine", "sudoku"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "Print one solution or \"no solution\"");
    add_input_options(*solve, inv);
    add_search_options(*solve, inv);
    solve->add_flag("--explain", inv.explain, "Report the outcome of propagation before searching");

    for (const char* name : {"count", "enumerate"}) {
        auto* sub = app.add_subcommand(name, std::string(name) == "count" ? "Count all solutions"
                                                                            : "Print all solutions, then their count");
        add_input_options(*sub, inv);
        add_search_options(*sub, inv);
        sub->add_option("--cap", inv.cap, "Stop after this many solutions")->capture_default_str();
        sub->add_flag("--all", inv.all, "Print every solution found");
        sub->add_option("--parallel", inv.parallel, "Worker threads")->check(CLI::PositiveNumber);
    }

    auto* cat = app.add_subcommand("catalog", "List the reference grids, or print one with --fig");
    cat->add_option("--fig", inv.fig, "Print this entry's grid");

    auto* verify = app.add_subcommand("verify", "Check givens for repeats and whether the grid is complete");
    add_input_options(*verify, inv);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }
    inv.command = app.get_subcommands().front()->get_name();

    try {
        if (inv.command == "catalog") return run_catalog(inv, out);
        const PuzzleDocument doc = load(inv, in);
        if (inv.command == "verify") return run_verify(doc, out);
        if (inv.command == "solve") return run_solve(inv, doc, out);
        return run_count(inv, doc, out);
    } catch (const ParseError& e) {
        err << "sudoku: parse error: " << e.what() << '\n';
    } catch (const Error& e) {
        err << "sudoku: " << e.what() << '\n';
    }
    return kInputError;
}

}  // namespace sudoku::cli
