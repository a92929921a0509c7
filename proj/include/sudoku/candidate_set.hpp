#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "sudoku/grid.hpp"

namespace sudoku {

/// Subset of {1..m} stored as an m-bit word; symbol d lives in bit d-1.
class CandidateSet {
public:
    using Bits = std::uint32_t;

    constexpr CandidateSet() = default;
    CandidateSet(GridOrder order, Bits bits) noexcept
        : bits_(bits & full_mask(order.m())), side_(static_cast<std::uint8_t>(order.m())) {}

    static CandidateSet full(GridOrder order) noexcept { return {order, full_mask(order.m())}; }
    static CandidateSet none(GridOrder order) noexcept { return {order, 0}; }

    constexpr Bits bits() const noexcept { return bits_; }
    constexpr int side() const noexcept { return side_; }

    constexpr bool contains(int d) const noexcept { return d >= 1 && d <= side_ && (bits_ >> (d - 1)) & 1U; }
    constexpr void insert(int d) noexcept {
        if (d >= 1 && d <= side_) bits_ |= Bits{1} << (d - 1);
    }
    constexpr void erase(int d) noexcept {
        if (d >= 1 && d <= side_) bits_ &= ~(Bits{1} << (d - 1));
    }

    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr bool empty() const noexcept { return bits_ == 0; }

    /// Smallest member; 0 when empty.
    constexpr int min() const noexcept { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
    /// Largest member; 0 when empty.
    constexpr int max() const noexcept { return bits_ == 0 ? 0 : std::bit_width(bits_); }

    /// Members in ascending order.
    std::vector<int> values() const;

    friend constexpr CandidateSet operator&(CandidateSet a, CandidateSet b) noexcept {
        CandidateSet out = a;
        out.bits_ &= b.bits_;
        return out;
    }

    friend constexpr bool operator==(CandidateSet, CandidateSet) = default;

private:
    static constexpr Bits full_mask(int m) noexcept { return m >= 32 ? ~Bits{0} : (Bits{1} << m) - 1; }

    Bits bits_ = 0;
    std::uint8_t side_ = 0;
};

/// Missing-symbol sets of one grid: R_1..R_m, C_1..C_m and the m blocks in row-major block order.
struct ConstraintSets {
    GridOrder order;
    std::array<CandidateSet, GridOrder::kMaxSide> rows{};
    std::array<CandidateSet, GridOrder::kMaxSide> cols{};
    std::array<CandidateSet, GridOrder::kMaxSide> blocks{};

    /// Recomputes every set from scratch. Duplicated givens are not detected here.
    static ConstraintSets from_grid(const Grid& grid);

    const CandidateSet& row(int i) const { return rows[static_cast<std::size_t>(i - 1)]; }
    const CandidateSet& col(int j) const { return cols[static_cast<std::size_t>(j - 1)]; }
    const CandidateSet& block(BlockIndex b) const { return blocks[static_cast<std::size_t>(block_slot(b, order))]; }

    friend bool operator==(const ConstraintSets&, const ConstraintSets&) = default;
};

class SolveState;

/// Opaque copy of a SolveState, taken before a trial and restored after it.
class Snapshot {
public:
    friend class SolveState;

private:
    Snapshot(const Grid& grid, const ConstraintSets& sets, int zeros) : grid_(grid), sets_(sets), zeros_(zeros) {}

    Grid grid_;
    ConstraintSets sets_;
    int zeros_;
};

/// Working grid plus its incrementally maintained missing-symbol sets.
///
/// Invariants: zero_count() equals the number of zero cells in grid(), and
/// sets() == ConstraintSets::from_grid(grid()).
class SolveState {
public:
    /// Builds the sets for `grid`. Throws InputError naming the first duplicate if the givens are inconsistent.
    static SolveState init(const Grid& grid);

    const Grid& grid() const noexcept { return grid_; }
    const ConstraintSets& sets() const noexcept { return sets_; }
    int zero_count() const noexcept { return zeros_; }
    GridOrder order() const noexcept { return grid_.order(); }

    /// R_i ∩ C_j ∩ B_kl for an empty cell. Throws UsageError when (i, j) already holds a value.
    CandidateSet candidates_for(int i, int j) const;

    /// Places d at empty cell (i, j) and removes it from the three sets.
    /// Throws ContractViolation unless d is a candidate of the cell.
    void assign(int i, int j, int d);

    Snapshot snapshot() const { return Snapshot(grid_, sets_, zeros_); }
    void restore(const Snapshot& snap);

    // Unchecked 0-based forms used by the hot search loop. `cell` is row * m + col.
    CandidateSet candidates_at(int cell) const noexcept {
        return sets_.rows[static_cast<std::size_t>(cell / side_)] & sets_.cols[static_cast<std::size_t>(cell % side_)] &
               sets_.blocks[block_of_cell_[static_cast<std::size_t>(cell)]];
    }
    void place(int cell, int d) noexcept;

    friend bool operator==(const SolveState& a, const SolveState& b) {
        return a.grid_ == b.grid_ && a.sets_ == b.sets_ && a.zeros_ == b.zeros_;
    }

private:
    explicit SolveState(const Grid& grid);

    Grid grid_;
    ConstraintSets sets_;
    int zeros_ = 0;
    int side_ = 0;
    std::array<std::uint8_t, GridOrder::kMaxSide * GridOrder::kMaxSide> block_of_cell_{};
};

}  // namespace sudoku
