#include "sudoku/propagator.hpp"

namespace sudoku {

std::string to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::Contradiction: return "contradiction";
        case Outcome::Complete: return "complete";
        case Outcome::Stalled: return "stalled";
    }
    return "?";
}

PropagationOutcome propagate(SolveState& state, SweepOrder order) {
    const int m = state.order().m();
    const int cells = m * m;
    PropagationOutcome result;

    while (state.zero_count() > 0) {
        int assigned_this_sweep = 0;
        for (int t = 0; t < cells; ++t) {
            const int cell = order == SweepOrder::RowMajor ? t : (t % m) * m + t / m;
            if (state.grid().raw(cell) != 0) continue;

            const CandidateSet p = state.candidates_at(cell);
            if (p.empty()) {
                result.kind = Outcome::Contradiction;
                result.witness = Cell{cell / m + 1, cell % m + 1};
                return result;
            }
            if (p.size() == 1) {
                state.place(cell, p.min());
                ++assigned_this_sweep;
                ++result.assignments_made;
            }
        }
        if (assigned_this_sweep == 0) {
            result.kind = Outcome::Stalled;
            return result;
        }
    }
    result.kind = Outcome::Complete;
    return result;
}

}  // namespace sudoku
