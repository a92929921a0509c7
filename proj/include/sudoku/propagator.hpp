#pragma once

#include <optional>
#include <string>

#include "sudoku/candidate_set.hpp"

namespace sudoku {

enum class Outcome {
    Contradiction,  ///< some empty cell has no candidate left
    Complete,       ///< no empty cell remains
    Stalled,        ///< every empty cell has at least two candidates
};

std::string to_string(Outcome outcome);

struct PropagationOutcome {
    Outcome kind = Outcome::Stalled;
    int assignments_made = 0;
    /// The empty cell whose candidate set was empty; set only for Contradiction.
    std::optional<Cell> witness;
};

enum class SweepOrder { RowMajor, ColumnMajor };

/// Naked-single propagation on the live state.
///
/// Sweeps the empty cells repeatedly. A cell with exactly one candidate is
/// assigned at once, so later cells of the same sweep see the update. Stops on
/// the first empty candidate set, when the grid is full, or after a sweep that
/// assigned nothing.
PropagationOutcome propagate(SolveState& state, SweepOrder order = SweepOrder::RowMajor);

}  // namespace sudoku
