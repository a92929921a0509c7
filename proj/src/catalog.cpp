#include <string>

#include "sudoku/errors.hpp"
#include "sudoku/formats.hpp"

namespace sudoku {

namespace {

struct RawEntry {
    const char* name;
    EntryKind kind;
    int givens;  // nonzero cells in the printed figure
    std::uint64_t expected;
    const char* text;
};

// Transcribed cell by cell from the printed figures. Puzzles use '.' for an
// empty cell, patterns keep the '*' of the figure.
constexpr RawEntry kEntries[] = {
    {"fig2", EntryKind::Puzzle, 38, 1,
     ". . . . . . . . 3\n"
     "5 . 3 . 8 2 . 4 1\n"
     "6 2 4 5 . . . 7 .\n"
     "7 8 5 . 9 . 1 6 .\n"
     "4 . 6 2 . . 3 . .\n"
     ". 3 . 1 7 6 . . .\n"
     "1 . . . . . . . 4\n"
     ". . 7 8 . . 2 . .\n"
     "3 4 8 6 . . 7 1 5\n"},
    {"fig3", EntryKind::Puzzle, 25, 1,
     "7 . . 3 . . . . 4\n"
     ". 9 . . . 1 . . .\n"
     ". 1 2 . . 4 . . .\n"
     ". . . 9 . 7 4 . .\n"
     ". 5 . . 3 . . . .\n"
     ". 8 . . 2 . 1 . 7\n"
     ". . 6 . . . . . 3\n"
     ". . . 7 . . 5 . .\n"
     "8 4 . . . . . 2 9\n"},
    {"fig4", EntryKind::Puzzle, 36, 4,
     ". . 4 9 . 3 8 . .\n"
     ". 2 . 8 . . 9 . 3\n"
     "3 . 8 . 4 . . 1 .\n"
     "7 . . . 9 4 1 . .\n"
     "2 4 . 7 . . . . 8\n"
     ". 3 . 2 . . . 7 5\n"
     "8 . 7 . 2 . . 3 .\n"
     ". 5 . . . 7 2 . 9\n"
     ". . 2 . 3 8 . 5 .\n"},
    {"fig5", EntryKind::Puzzle, 36, 0,
     ". 5 . 9 . 2 . 4 .\n"
     "2 . 7 . . . 9 . 8\n"
     ". 4 . 8 7 . 3 . .\n"
     ". 1 . . 2 . 8 . 9\n"
     "5 . 8 . 9 . . . 3\n"
     "7 . . 5 . 3 . 1 .\n"
     "3 . 4 . 5 . . . 2\n"
     ". . . 2 . 7 4 8 .\n"
     ". 7 2 . . 8 . 3 .\n"},
    {"fig6", EntryKind::Pattern, 27, 283576,
     "1 2 3 * * * * * *\n"
     "4 5 6 * * * * * *\n"
     "7 8 9 * * * * * *\n"
     "* * * 1 2 3 * * *\n"
     "* * * 4 5 6 * * *\n"
     "* * * 7 8 9 * * *\n"
     "* * * * * * 1 2 3\n"
     "* * * * * * 4 5 6\n"
     "* * * * * * 7 8 9\n"},
    {"fig7", EntryKind::Pattern, 45, 6280,
     "1 2 3 4 5 6 7 8 9\n"
     "4 5 6 7 8 9 1 2 3\n"
     "7 8 9 1 2 3 4 5 6\n"
     "2 3 1 * * * * * *\n"
     "5 6 4 * * * * * *\n"
     "8 9 7 * * * * * *\n"
     "3 1 2 * * * * * *\n"
     "6 4 5 * * * * * *\n"
     "9 7 8 * * * * * *\n"},
    {"fig8", EntryKind::Pattern, 40, 680,
     "1 2 3 4 * 6 7 8 9\n"
     "4 5 6 * * * 1 2 3\n"
     "7 8 * * * * * 5 6\n"
     "2 * * * * * * * 1\n"
     "* * * * * * * * *\n"
     "8 * * * * * * * 7\n"
     "3 4 * * * * * 1 2\n"
     "6 7 8 * * * 3 4 5\n"
     "9 1 2 3 * 5 6 7 8\n"},
    {"fig9", EntryKind::Pattern, 54, 1728,
     "1 2 3 4 5 6 7 8 9\n"
     "4 5 6 7 8 9 1 2 3\n"
     "7 8 9 1 2 3 4 5 6\n"
     "2 3 4 5 6 7 8 9 1\n"
     "5 6 7 8 9 1 2 3 4\n"
     "8 9 1 2 3 4 5 6 7\n"
     "* * * * * * * * *\n"
     "* * * * * * * * *\n"
     "* * * * * * * * *\n"},
    {"fig10", EntryKind::Pattern, 54, 22,
     "1 2 3 4 5 6 7 8 9\n"
     "4 5 6 7 8 9 1 2 3\n"
     "7 8 9 1 2 3 4 5 6\n"
     "2 3 4 5 6 7 * * *\n"
     "5 6 7 8 9 1 * * *\n"
     "8 9 1 2 3 4 * * *\n"
     "3 4 5 * * * * * *\n"
     "6 7 8 * * * * * *\n"
     "9 1 2 * * * * * *\n"},
    {"fig11", EntryKind::Pattern, 27, 8,
     "1 * * 7 * * 4 * *\n"
     "* 2 * * 8 * * 5 *\n"
     "* * 3 * * 9 * * 6\n"
     "7 * * 4 * * 1 * *\n"
     "* 8 * * 5 * * 2 *\n"
     "* * 9 * * 6 * * 3\n"
     "4 * * 1 * * 7 * *\n"
     "* 5 * * 2 * * 8 *\n"
     "* * 6 * * 3 * * 9\n"},
};

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;
    for (const RawEntry& raw : kEntries) {
        PuzzleDocument doc = parse_puzzle(raw.text);
        if (doc.grid.side() * doc.grid.side() - doc.grid.zero_count() != raw.givens) {
            throw Error(std::string("catalog entry ") + raw.name + " lost givens in transcription");
        }
        entries.push_back({raw.name, raw.kind, doc.grid, raw.expected});
    }
    return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
    for (const CatalogEntry& entry : catalog()) {
        if (entry.name == name) return entry;
    }
    throw InputError("unknown catalog entry '" + std::string(name) + "'");
}

}  // namespace sudoku
