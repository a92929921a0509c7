#include "sudoku/grid.hpp"

#include <algorithm>

#include "sudoku/errors.hpp"

namespace sudoku {

GridOrder::GridOrder(int n) : n_(n) {
    if (n < kMinOrder || n > kMaxOrder) {
        throw InputError("block order " + std::to_string(n) + " is not supported (expected " +
                         std::to_string(kMinOrder) + ".." + std::to_string(kMaxOrder) + ")");
    }
}

GridOrder GridOrder::from_side(int m) {
    for (int n = kMinOrder; n <= kMaxOrder; ++n) {
        if (n * n == m) return GridOrder(n);
    }
    throw InputError("side length " + std::to_string(m) + " is not the square of a supported block order");
}

BlockIndex block_of(int i, int j, GridOrder order) {
    const int m = order.m();
    if (i < 1 || i > m || j < 1 || j > m) {
        throw IndexError("cell (" + std::to_string(i) + "," + std::to_string(j) + ") is outside a " +
                         std::to_string(m) + "x" + std::to_string(m) + " grid");
    }
    return {(i - 1) / order.n() + 1, (j - 1) / order.n() + 1};
}

Grid::Grid(GridOrder order) : order_(order) {}

Grid::Grid(GridOrder order, const std::vector<std::vector<int>>& rows) : order_(order) {
    const int m = order.m();
    if (static_cast<int>(rows.size()) != m) {
        throw InputError("expected " + std::to_string(m) + " rows, got " + std::to_string(rows.size()));
    }
    for (int i = 1; i <= m; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i - 1)];
        if (static_cast<int>(row.size()) != m) {
            throw InputError("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                             " entries, expected " + std::to_string(m));
        }
        for (int j = 1; j <= m; ++j) set(i, j, row[static_cast<std::size_t>(j - 1)]);
    }
}

void Grid::check_index(int i, int j) const {
    const int m = side();
    if (i < 1 || i > m || j < 1 || j > m) {
        throw IndexError("cell (" + std::to_string(i) + "," + std::to_string(j) + ") is outside a " +
                         std::to_string(m) + "x" + std::to_string(m) + " grid");
    }
}

int Grid::at(int i, int j) const {
    check_index(i, j);
    return raw((i - 1) * side() + (j - 1));
}

void Grid::set(int i, int j, int value) {
    check_index(i, j);
    if (value < 0 || value > side()) {
        throw InputError("value " + std::to_string(value) + " at (" + std::to_string(i) + "," +
                         std::to_string(j) + ") is outside 0.." + std::to_string(side()));
    }
    set_raw((i - 1) * side() + (j - 1), static_cast<Value>(value));
}

int Grid::zero_count() const noexcept {
    const int cells = side() * side();
    return static_cast<int>(std::count(cells_.begin(), cells_.begin() + cells, Value{0}));
}

std::string to_string(Unit unit) {
    switch (unit) {
        case Unit::Row: return "row";
        case Unit::Column: return "column";
        case Unit::Block: return "block";
    }
    return "?";
}

namespace {

// Row-major index of the t-th cell of the u-th unit of the given kind, all 0-based.
int unit_cell(Unit unit, int u, int t, GridOrder order) {
    const int n = order.n();
    const int m = order.m();
    switch (unit) {
        case Unit::Row: return u * m + t;
        case Unit::Column: return t * m + u;
        case Unit::Block: {
            const int row = (u / n) * n + t / n;
            const int col = (u % n) * n + t % n;
            return row * m + col;
        }
    }
    return 0;
}

}  // namespace

ValidationReport validate_givens(const Grid& grid) {
    ValidationReport report;
    const GridOrder order = grid.order();
    const int m = order.m();
    for (Unit unit : {Unit::Row, Unit::Column, Unit::Block}) {
        for (int u = 0; u < m; ++u) {
            std::array<int, GridOrder::kMaxSide + 1> seen{};
            for (int t = 0; t < m; ++t) ++seen[grid.raw(unit_cell(unit, u, t, order))];
            for (int symbol = 1; symbol <= m; ++symbol) {
                if (seen[static_cast<std::size_t>(symbol)] > 1) report.duplicates.push_back({unit, u + 1, symbol});
            }
        }
    }
    return report;
}

bool is_sudoku_matrix(const Grid& grid) {
    return grid.zero_count() == 0 && validate_givens(grid).ok();
}

bool extends(const Grid& grid, const Grid& givens) {
    if (grid.order() != givens.order()) return false;
    const int cells = grid.side() * grid.side();
    for (int c = 0; c < cells; ++c) {
        if (givens.raw(c) != 0 && givens.raw(c) != grid.raw(c)) return false;
    }
    return true;
}

Grid transpose(const Grid& grid) {
    Grid out(grid.order());
    const int m = grid.side();
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) out.set_raw(c * m + r, grid.raw(r * m + c));
    }
    return out;
}

Grid relabel(const Grid& grid, const std::vector<int>& perm) {
    const int m = grid.side();
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    bool is_perm = static_cast<int>(sorted.size()) == m;
    for (int v = 1; is_perm && v <= m; ++v) is_perm = sorted[static_cast<std::size_t>(v - 1)] == v;
    if (!is_perm) throw InputError("relabeling is not a permutation of 1.." + std::to_string(m));

    Grid out(grid.order());
    for (int c = 0; c < m * m; ++c) {
        const int v = grid.raw(c);
        out.set_raw(c, static_cast<Grid::Value>(v == 0 ? 0 : perm[static_cast<std::size_t>(v - 1)]));
    }
    return out;
}

}  // namespace sudoku
