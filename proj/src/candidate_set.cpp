#include "sudoku/candidate_set.hpp"

#include <string>

#include "sudoku/errors.hpp"

namespace sudoku {

std::vector<int> CandidateSet::values() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Bits rest = bits_; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest) + 1);
    return out;
}

ConstraintSets ConstraintSets::from_grid(const Grid& grid) {
    const GridOrder order = grid.order();
    const int m = order.m();
    ConstraintSets sets{order};
    for (int u = 0; u < m; ++u) {
        sets.rows[static_cast<std::size_t>(u)] = CandidateSet::full(order);
        sets.cols[static_cast<std::size_t>(u)] = CandidateSet::full(order);
        sets.blocks[static_cast<std::size_t>(u)] = CandidateSet::full(order);
    }
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            const int v = grid.at(i, j);
            if (v == 0) continue;
            sets.rows[static_cast<std::size_t>(i - 1)].erase(v);
            sets.cols[static_cast<std::size_t>(j - 1)].erase(v);
            sets.blocks[static_cast<std::size_t>(block_slot(block_of(i, j, order), order))].erase(v);
        }
    }
    return sets;
}

SolveState::SolveState(const Grid& grid)
    : grid_(grid), sets_(ConstraintSets::from_grid(grid)), zeros_(grid.zero_count()), side_(grid.side()) {
    const GridOrder order = grid.order();
    for (int c = 0; c < side_ * side_; ++c) {
        block_of_cell_[static_cast<std::size_t>(c)] =
            static_cast<std::uint8_t>(block_slot(block_of(c / side_ + 1, c % side_ + 1, order), order));
    }
}

SolveState SolveState::init(const Grid& grid) {
    const ValidationReport report = validate_givens(grid);
    if (!report.ok()) {
        const Duplicate& d = report.duplicates.front();
        throw InputError("inconsistent givens: symbol " + std::to_string(d.symbol) + " repeats in " +
                         to_string(d.unit) + " " + std::to_string(d.index));
    }
    return SolveState(grid);
}

CandidateSet SolveState::candidates_for(int i, int j) const {
    if (grid_.at(i, j) != 0) {
        throw UsageError("cell (" + std::to_string(i) + "," + std::to_string(j) + ") already holds " +
                         std::to_string(grid_.at(i, j)));
    }
    return candidates_at((i - 1) * side_ + (j - 1));
}

void SolveState::assign(int i, int j, int d) {
    if (!candidates_for(i, j).contains(d)) {
        throw ContractViolation("symbol " + std::to_string(d) + " is not a candidate of cell (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
    }
    place((i - 1) * side_ + (j - 1), d);
}

void SolveState::place(int cell, int d) noexcept {
    grid_.set_raw(cell, static_cast<Grid::Value>(d));
    sets_.rows[static_cast<std::size_t>(cell / side_)].erase(d);
    sets_.cols[static_cast<std::size_t>(cell % side_)].erase(d);
    sets_.blocks[block_of_cell_[static_cast<std::size_t>(cell)]].erase(d);
    --zeros_;
}

void SolveState::restore(const Snapshot& snap) {
    if (snap.grid_.order() != grid_.order()) throw UsageError("snapshot belongs to a grid of another order");
    grid_ = snap.grid_;
    sets_ = snap.sets_;
    zeros_ = snap.zeros_;
}

}  // namespace sudoku
