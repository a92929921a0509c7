#pragma once

// Test-only helpers. The oracles here deliberately avoid the engine's
// candidate sets and propagation: they only use the definition of a Sudoku
// matrix, checked cell by cell.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "sudoku/grid.hpp"

namespace sudoku::testing {

using Rows = std::vector<std::vector<int>>;

inline Grid make_grid(int n, const Rows& rows) { return Grid(GridOrder(n), rows); }

/// True when placing `v` at 0-based (r, c) repeats nothing in its row, column or block.
inline bool fits(const Grid& g, int r, int c, int v) {
    const int m = g.side();
    const int n = g.order().n();
    for (int t = 0; t < m; ++t) {
        if (t != c && g.raw(r * m + t) == v) return false;
        if (t != r && g.raw(t * m + c) == v) return false;
    }
    const int r0 = (r / n) * n;
    const int c0 = (c / n) * n;
    for (int dr = 0; dr < n; ++dr) {
        for (int dc = 0; dc < n; ++dc) {
            const int rr = r0 + dr;
            const int cc = c0 + dc;
            if ((rr != r || cc != c) && g.raw(rr * m + cc) == v) return false;
        }
    }
    return true;
}

/// Givens are consistent iff every nonzero cell fits against the others.
inline bool givens_consistent(const Grid& g) {
    const int m = g.side();
    for (int cell = 0; cell < m * m; ++cell) {
        const int v = g.raw(cell);
        if (v != 0 && !fits(g, cell / m, cell % m, v)) return false;
    }
    return true;
}

/// Brute-force completion: every value for every empty cell in row-major
/// order, keeping only placements that satisfy the definition. No candidate
/// sets, no propagation.
inline void brute_force(Grid& g, int cell, std::vector<Grid>& out) {
    const int m = g.side();
    while (cell < m * m && g.raw(cell) != 0) ++cell;
    if (cell == m * m) {
        out.push_back(g);
        return;
    }
    for (int v = 1; v <= m; ++v) {
        if (!fits(g, cell / m, cell % m, v)) continue;
        g.set_raw(cell, static_cast<Grid::Value>(v));
        brute_force(g, cell + 1, out);
        g.set_raw(cell, 0);
    }
}

inline std::vector<Grid> brute_force_solutions(const Grid& givens) {
    std::vector<Grid> out;
    if (!givens_consistent(givens)) return out;
    Grid g = givens;
    brute_force(g, 0, out);
    return out;
}

struct LatinCounts {
    std::uint64_t latin_squares = 0;
    std::uint64_t with_blocks = 0;
};

/// Builds all 4x4 Latin squares from row permutations, then keeps those whose
/// four 2x2 blocks also hold 1..4.
inline LatinCounts latin_square_oracle() {
    std::vector<std::array<int, 4>> perms;
    std::array<int, 4> p{1, 2, 3, 4};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    LatinCounts counts;
    for (const auto& a : perms) {
        for (const auto& b : perms) {
            for (const auto& c : perms) {
                for (const auto& d : perms) {
                    const std::array<std::array<int, 4>, 4> sq{a, b, c, d};
                    bool latin = true;
                    for (int col = 0; col < 4 && latin; ++col) {
                        int mask = 0;
                        for (int row = 0; row < 4; ++row) mask |= 1 << sq[row][col];
                        latin = mask == 0b11110;
                    }
                    if (!latin) continue;
                    ++counts.latin_squares;
                    bool blocks = true;
                    for (int br = 0; br < 4 && blocks; br += 2) {
                        for (int bc = 0; bc < 4 && blocks; bc += 2) {
                            const int mask = (1 << sq[br][bc]) | (1 << sq[br][bc + 1]) | (1 << sq[br + 1][bc]) |
                                             (1 << sq[br + 1][bc + 1]);
                            blocks = mask == 0b11110;
                        }
                    }
                    if (blocks) ++counts.with_blocks;
                }
            }
        }
    }
    return counts;
}

inline std::vector<int> random_permutation(int m, std::mt19937& rng) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

/// A full Sudoku matrix of order n from the shifted-rows construction, relabeled at random.
inline Grid random_full_grid(int n, std::mt19937& rng) {
    const GridOrder order(n);
    const int m = order.m();
    Grid g(order);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) g.set_raw(r * m + c, static_cast<Grid::Value>((r * n + r / n + c) % m + 1));
    }
    g = relabel(g, random_permutation(m, rng));
    return std::bernoulli_distribution(0.5)(rng) ? transpose(g) : g;
}

/// Clears each cell of `g` independently with probability `p`.
inline Grid erase_cells(Grid g, double p, std::mt19937& rng) {
    std::bernoulli_distribution erase(p);
    for (int cell = 0; cell < g.side() * g.side(); ++cell) {
        if (erase(rng)) g.set_raw(cell, 0);
    }
    return g;
}

/// Random consistent n=2 givens: a random number of random values at random
/// cells, redrawn until no unit repeats a symbol. May have zero solutions.
inline Grid random_n2_puzzle(std::mt19937& rng) {
    std::uniform_int_distribution<int> how_many(0, 9);
    std::uniform_int_distribution<int> cell_dist(0, 15);
    std::uniform_int_distribution<int> value_dist(1, 4);
    for (;;) {
        Grid g(GridOrder(2));
        const int k = how_many(rng);
        for (int t = 0; t < k; ++t) g.set_raw(cell_dist(rng), static_cast<Grid::Value>(value_dist(rng)));
        if (givens_consistent(g)) return g;
    }
}

}  // namespace sudoku::testing
