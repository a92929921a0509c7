#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sudoku {

/// Block order n of a grid; the side length is m = n * n.
///
/// Supported orders are 2..5, so every candidate set fits in 25 bits.
class GridOrder {
public:
    static constexpr int kMinOrder = 2;
    static constexpr int kMaxOrder = 5;
    static constexpr int kMaxSide = kMaxOrder * kMaxOrder;

    explicit GridOrder(int n);

    /// Order whose side length is `m`; throws InputError unless m is n*n for a supported n.
    static GridOrder from_side(int m);

    constexpr int n() const noexcept { return n_; }
    constexpr int m() const noexcept { return n_ * n_; }

    friend constexpr bool operator==(GridOrder, GridOrder) = default;

private:
    int n_;
};

/// 1-based block coordinates (k, l).
struct BlockIndex {
    int k = 1;
    int l = 1;

    friend constexpr bool operator==(BlockIndex, BlockIndex) = default;
};

/// 1-based cell coordinates.
struct Cell {
    int row = 1;
    int col = 1;

    friend constexpr bool operator==(Cell, Cell) = default;
};

/// Block containing cell (i, j), both 1-based. Throws IndexError when out of range.
BlockIndex block_of(int i, int j, GridOrder order);

/// Row-major position of block (k, l) in 0..m-1.
inline int block_slot(BlockIndex b, GridOrder order) noexcept { return (b.k - 1) * order.n() + (b.l - 1); }

/// m x m matrix of values in 0..m, 0 meaning "missing". Indices are 1-based.
class Grid {
public:
    using Value = std::uint8_t;

    /// All-missing grid of the given order.
    explicit Grid(GridOrder order);

    /// Grid from row-major rows; every row must have m entries in 0..m.
    Grid(GridOrder order, const std::vector<std::vector<int>>& rows);

    GridOrder order() const noexcept { return order_; }
    int side() const noexcept { return order_.m(); }

    int at(int i, int j) const;
    void set(int i, int j, int value);

    /// Unchecked 0-based access; `index` is row * m + col.
    Value raw(int index) const noexcept { return cells_[static_cast<std::size_t>(index)]; }
    void set_raw(int index, Value v) noexcept { cells_[static_cast<std::size_t>(index)] = v; }

    int zero_count() const noexcept;

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    void check_index(int i, int j) const;

    GridOrder order_;
    std::array<Value, GridOrder::kMaxSide * GridOrder::kMaxSide> cells_{};
};

enum class Unit { Row, Column, Block };

std::string to_string(Unit unit);

/// A symbol that occurs more than once in one row, column or block.
struct Duplicate {
    Unit unit;
    int index;  ///< 1-based row/column number, or row-major block number 1..m.
    int symbol;

    friend bool operator==(const Duplicate&, const Duplicate&) = default;
};

struct ValidationReport {
    std::vector<Duplicate> duplicates;

    bool ok() const noexcept { return duplicates.empty(); }
};

/// Lists every (unit, symbol) pair that repeats among the nonzero cells.
///
/// Rows come first, then columns, then blocks; within a unit kind entries are
/// ordered by unit index and then by symbol.
ValidationReport validate_givens(const Grid& grid);

/// True iff the grid is full and every row, column and block is a permutation of 1..m.
bool is_sudoku_matrix(const Grid& grid);

/// True iff every nonzero cell of `givens` holds the same value in `grid`.
bool extends(const Grid& grid, const Grid& givens);

Grid transpose(const Grid& grid);

/// Applies `perm` to every nonzero cell: value v becomes perm[v - 1]. `perm` must be a permutation of 1..m.
Grid relabel(const Grid& grid, const std::vector<int>& perm);

}  // namespace sudoku
