#include "sudoku/search.hpp"

#include <limits>
#include <thread>

#include "sudoku/errors.hpp"
#include "sudoku/propagator.hpp"

namespace sudoku {

Cell select_trial_cell(const SolveState& state, TrialPolicy policy) {
    const int m = state.order().m();
    int best = -1;
    int best_size = std::numeric_limits<int>::max();
    for (int cell = 0; cell < m * m; ++cell) {
        if (state.grid().raw(cell) != 0) continue;
        if (policy == TrialPolicy::FirstZero) {
            best = cell;
            break;
        }
        const int size = state.candidates_at(cell).size();
        if (size < best_size) {
            best = cell;
            best_size = size;
        }
    }
    if (best < 0) throw UsageError("no empty cell to branch on");
    return {best / m + 1, best % m + 1};
}

namespace {

void checked_increment(std::uint64_t& counter, const char* what) {
    if (counter == std::numeric_limits<std::uint64_t>::max()) throw Error(std::string(what) + " overflowed 64 bits");
    ++counter;
}

class Searcher {
public:
    explicit Searcher(const SearchOptions& options) : options_(options) {}

    void run(SolveState& state) {
        switch (propagate(state).kind) {
            case Outcome::Contradiction: return;
            case Outcome::Complete: record(state.grid()); return;
            case Outcome::Stalled: break;
        }
        const Cell cell = select_trial_cell(state, options_.policy);
        const int index = (cell.row - 1) * state.order().m() + (cell.col - 1);
        for_each_value(state.candidates_at(index), [&](int d) {
            try_value(state, index, d);
            return !stopped_;
        });
    }

    /// One trial: assume `d` at `cell`, search the subtree, put the state back.
    void try_value(SolveState& state, int cell, int d) {
        checked_increment(stats_.total_trials, "trial counter");
        const Snapshot snap = state.snapshot();
        state.place(cell, d);
        run(state);
        state.restore(snap);
    }

    template <class Visit>
    void for_each_value(CandidateSet p, Visit visit) const {
        while (!p.empty()) {
            const int d = options_.value_order == ValueOrder::Ascending ? p.min() : p.max();
            p.erase(d);
            if (!visit(d)) return;
        }
    }

    bool stopped() const noexcept { return stopped_; }

    EnumerationResult take_result() {
        EnumerationResult result;
        result.count = stats_.solutions_found;
        result.stats = stats_;
        result.solutions = std::move(solutions_);
        return result;
    }

private:
    void record(const Grid& solution) {
        checked_increment(stats_.solutions_found, "solution counter");
        if (stats_.solutions_found == 1) stats_.trials_to_first = stats_.total_trials;
        if (options_.retention == Retention::All ||
            (options_.retention == Retention::First && stats_.solutions_found == 1)) {
            solutions_.push_back(solution);
        }
        if (options_.on_solution) options_.on_solution(solution);
        if (options_.cap && stats_.solutions_found >= *options_.cap) {
            stats_.limit_hit = true;
            stopped_ = true;
        }
    }

    const SearchOptions& options_;
    SolveStats stats_;
    std::vector<Grid> solutions_;
    bool stopped_ = false;
};

bool cap_is_zero(const SearchOptions& options) { return options.cap && *options.cap == 0; }

}  // namespace

EnumerationResult count_solutions(const Grid& grid, const SearchOptions& options) {
    SolveState state = SolveState::init(grid);
    if (cap_is_zero(options)) {
        EnumerationResult result;
        result.stats.limit_hit = true;
        return result;
    }
    Searcher searcher(options);
    searcher.run(state);
    return searcher.take_result();
}

EnumerationResult count_solutions_parallel(const Grid& grid, const SearchOptions& options, int workers) {
    if (workers < 1) throw UsageError("worker count must be at least 1");
    SearchOptions local = options;
    local.on_solution = nullptr;
    if (workers == 1) {
        EnumerationResult result = count_solutions(grid, local);
        result.stats.trials_to_first.reset();
        return result;
    }

    SolveState root = SolveState::init(grid);
    if (cap_is_zero(local)) {
        EnumerationResult result;
        result.stats.limit_hit = true;
        result.stats.trials_to_first.reset();
        return result;
    }

    // Everything up to the first branching is shared and deterministic.
    if (propagate(root).kind != Outcome::Stalled) {
        EnumerationResult result = count_solutions(root.grid(), local);
        result.stats.trials_to_first.reset();
        return result;
    }
    const Cell cell = select_trial_cell(root, local.policy);
    const int index = (cell.row - 1) * root.order().m() + (cell.col - 1);

    std::vector<int> values;
    Searcher(local).for_each_value(root.candidates_at(index), [&](int d) {
        values.push_back(d);
        return true;
    });

    // One result slot per candidate value so that merging follows value order.
    std::vector<EnumerationResult> partial(values.size());
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));
    {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t v = static_cast<std::size_t>(w); v < values.size();
                         v += static_cast<std::size_t>(workers)) {
                        SolveState state = root;
                        Searcher searcher(local);
                        searcher.try_value(state, index, values[v]);
                        partial[v] = searcher.take_result();
                    }
                } catch (...) {
                    failures[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        }
    }
    for (const auto& failure : failures) {
        if (failure) std::rethrow_exception(failure);
    }

    EnumerationResult merged;
    merged.stats.trials_to_first.reset();
    for (auto& part : partial) {
        if (merged.stats.limit_hit) break;
        std::uint64_t take = part.count;
        if (local.cap) {
            const std::uint64_t room = *local.cap - merged.count;
            if (take >= room) {
                take = room;
                merged.stats.limit_hit = true;
            }
        }
        merged.count += take;
        merged.stats.total_trials += part.stats.total_trials;
        const std::size_t keep = local.retention == Retention::First ? (merged.solutions.empty() ? 1 : 0)
                                                                     : static_cast<std::size_t>(take);
        for (std::size_t s = 0; s < part.solutions.size() && s < keep; ++s) {
            merged.solutions.push_back(std::move(part.solutions[s]));
        }
    }
    merged.stats.solutions_found = merged.count;
    return merged;
}

std::optional<Grid> solve_first(const Grid& grid) {
    SearchOptions options;
    options.cap = 1;
    options.retention = Retention::First;
    EnumerationResult result = count_solutions(grid, options);
    if (result.solutions.empty()) return std::nullopt;
    return std::move(result.solutions.front());
}

}  // namespace sudoku
