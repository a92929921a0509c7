#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sudoku/grid.hpp"

namespace sudoku {

/// A grid together with a free-text provenance tag.
struct PuzzleDocument {
    Grid grid;
    std::string source;

    GridOrder order() const noexcept { return grid.order(); }

    friend bool operator==(const PuzzleDocument&, const PuzzleDocument&) = default;
};

/// Parses the text puzzle format.
///
///     # source: fig4        optional; any other '#' line is a comment
///     n=3                   optional header
///     . . 4 9 . 3 8 . .     m lines of m whitespace-separated tokens
///
/// A token is a value in 1..m or one of "0", ".", "*" for a missing cell.
/// Without a header m is the number of data lines and must be n*n for n in
/// 2..5. For n = 3 a single 81-character line over {1-9, 0, '.', '*'} is also
/// accepted. Blank lines are ignored; LF and CRLF line endings both work.
///
/// Throws ParseError with the 1-based line and column of the offending input.
PuzzleDocument parse_puzzle(std::string_view text);

/// Canonical form: optional "# source:" line, "n=<n>" header, then one line
/// per row with '.' for missing cells. parse_puzzle(serialize_puzzle(d)) == d.
std::string serialize_puzzle(const PuzzleDocument& doc);

/// The 81-character single-line form; throws InputError unless n = 3.
std::string serialize_compact(const Grid& grid);

enum class EntryKind { Puzzle, Pattern };

struct CatalogEntry {
    std::string name;
    EntryKind kind;
    Grid grid;
    std::uint64_t expected;  ///< number of Sudoku matrices extending the grid
};

/// The ten reference grids fig2..fig11 with their known solution counts.
const std::vector<CatalogEntry>& catalog();

/// Entry by name; throws InputError for an unknown name.
const CatalogEntry& catalog_entry(std::string_view name);

}  // namespace sudoku
