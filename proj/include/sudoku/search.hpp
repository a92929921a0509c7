#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sudoku/candidate_set.hpp"
#include "sudoku/grid.hpp"

namespace sudoku {

/// How the search picks the empty cell to branch on once propagation stalls.
enum class TrialPolicy {
    FirstZero,      ///< row-major first empty cell
    MinCandidates,  ///< fewest candidates, row-major tie-break
};

/// Order in which the candidates of a trial cell are assumed.
enum class ValueOrder { Ascending, Descending };

enum class Retention {
    None,
    First,
    All,  ///< every solution found, bounded by the cap when one is set
};

/// Counters of one enumeration. A "trial" is one assumed value at a trial cell;
/// forced propagation assignments are never counted.
struct SolveStats {
    /// Trials made up to and including the path to the first solution. 0 when
    /// nothing was found. Not defined (nullopt) for parallel runs.
    std::optional<std::uint64_t> trials_to_first = 0;
    std::uint64_t total_trials = 0;
    std::uint64_t solutions_found = 0;
    bool limit_hit = false;
};

struct EnumerationResult {
    std::uint64_t count = 0;
    SolveStats stats;
    std::vector<Grid> solutions;
};

struct SearchOptions {
    TrialPolicy policy = TrialPolicy::FirstZero;
    ValueOrder value_order = ValueOrder::Ascending;
    /// Stop once this many solutions are found.
    std::optional<std::uint64_t> cap;
    Retention retention = Retention::None;
    /// Called for every solution in discovery order (sequential search only).
    std::function<void(const Grid&)> on_solution;
};

/// Counts the Sudoku matrices extending `grid` by propagation plus recursive trials.
/// Throws InputError if the givens repeat a symbol in some unit.
EnumerationResult count_solutions(const Grid& grid, const SearchOptions& options = {});

/// Same count computed by `workers` threads, each owning the candidate values
/// of the first trial cell with index ≡ worker (mod workers). Counts and the
/// order of retained solutions match the sequential search exactly;
/// total_trials is the summed total and trials_to_first is left undefined.
/// `on_solution` is ignored.
EnumerationResult count_solutions_parallel(const Grid& grid, const SearchOptions& options, int workers);

/// First solution in search order, if any.
std::optional<Grid> solve_first(const Grid& grid);

/// Cell to branch on. Throws UsageError if the state has no empty cell.
Cell select_trial_cell(const SolveState& state, TrialPolicy policy);

}  // namespace sudoku
