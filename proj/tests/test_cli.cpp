#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sudoku/cli.hpp"
#include "sudoku/formats.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = {}) {
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    const int code = sudoku::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

class TempFile {
public:
    explicit TempFile(const std::string& contents)
        : path_(std::filesystem::temp_directory_path() /
                ("sudoku_cli_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".txt")) {
        std::ofstream(path_) << contents;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST_CASE("count prints the exact count") {
    const Run r = run({"count", "--fig", "fig4"});
    CHECK(r.code == sudoku::cli::kOk);
    CHECK(r.out == "4\n");
    CHECK(r.err.empty());
}

TEST_CASE("solve reports an unsolvable puzzle") {
    const Run r = run({"solve", "--fig", "fig5"});
    CHECK(r.code == sudoku::cli::kNoSolution);
    CHECK(r.out == "no solution\n");
}

TEST_CASE("solve prints a parseable solution") {
    const Run r = run({"solve", "--fig", "fig2"});
    CHECK(r.code == sudoku::cli::kOk);
    const sudoku::Grid solution = sudoku::parse_puzzle(r.out).grid;
    CHECK(sudoku::is_sudoku_matrix(solution));
    CHECK(sudoku::extends(solution, sudoku::catalog_entry("fig2").grid));

    const Run compact = run({"solve", "--fig", "fig2", "--format", "compact"});
    CHECK(compact.out.size() == 82);
    CHECK(sudoku::parse_puzzle(compact.out).grid == solution);
}

TEST_CASE("solve --explain reports the propagation outcome") {
    const Run r = run({"solve", "--fig", "fig2", "--explain"});
    CHECK(r.out.rfind("propagation: complete assignments_made=43\n", 0) == 0);
    const Run stalled = run({"solve", "--fig", "fig3", "--explain"});
    CHECK(stalled.out.rfind("propagation: stalled assignments_made=", 0) == 0);
}

TEST_CASE("stats line") {
    const Run r = run({"count", "--fig", "fig2", "--stats"});
    CHECK(r.out == "1\nsolutions=1 trials_to_first=0 total_trials=0\n");

    const Run fig4 = run({"count", "--fig", "fig4", "--stats"});
    CHECK(fig4.out.rfind("4\nsolutions=4 trials_to_first=", 0) == 0);

    const Run par = run({"count", "--fig", "fig4", "--stats", "--parallel", "3"});
    CHECK(par.out.rfind("4\nsolutions=4 total_trials=", 0) == 0);
    CHECK(par.out.find("trials_to_first") == std::string::npos);
}

TEST_CASE("count with --parallel matches sequential") {
    const Run seq = run({"count", "--fig", "fig7"});
    const Run par = run({"count", "--fig", "fig7", "--parallel", "4"});
    CHECK(seq.out == "6280\n");
    CHECK(par.out == seq.out);
    CHECK(par.code == sudoku::cli::kOk);
}

TEST_CASE("cap reached") {
    const Run r = run({"count", "--fig", "fig7", "--cap", "100"});
    CHECK(r.code == sudoku::cli::kCapReached);
    CHECK(r.out == "100\n");

    const Run empty9 = run({"count", "-"}, std::string(81, '.'));
    CHECK(empty9.code == sudoku::cli::kCapReached);
    CHECK(empty9.out == "1000000\n");
}

TEST_CASE("enumerate prints every solution then the count") {
    const Run r = run({"enumerate", "--fig", "fig11", "--format", "compact"});
    CHECK(r.code == sudoku::cli::kOk);
    std::istringstream lines(r.out);
    std::vector<std::string> rows;
    for (std::string line; std::getline(lines, line);) rows.push_back(line);
    REQUIRE(rows.size() == 9);
    CHECK(rows.back() == "8");
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        const sudoku::Grid g = sudoku::parse_puzzle(rows[i]).grid;
        CHECK(sudoku::is_sudoku_matrix(g));
        CHECK(sudoku::extends(g, sudoku::catalog_entry("fig11").grid));
    }

    const Run same = run({"count", "--all", "--fig", "fig11", "--format", "compact"});
    CHECK(same.out == r.out);
    const Run par = run({"enumerate", "--fig", "fig11", "--format", "compact", "--parallel", "3"});
    CHECK(par.out == r.out);

    const Run pretty = run({"enumerate", "--fig", "fig10"});
    CHECK(pretty.out.substr(pretty.out.size() - 5) == "\n\n22\n");
}

TEST_CASE("output is deterministic") {
    const Run a = run({"enumerate", "--fig", "fig10", "--stats", "--policy", "min-candidates"});
    const Run b = run({"enumerate", "--fig", "fig10", "--stats", "--policy", "min-candidates"});
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
}

TEST_CASE("input from file and standard input") {
    const std::string text = sudoku::serialize_puzzle({sudoku::catalog_entry("fig4").grid, {}});
    TempFile file(text);
    CHECK(run({"count", file.path()}).out == "4\n");
    CHECK(run({"count", "-"}, text).out == "4\n");
    CHECK(run({"count", "-"}, text).code == sudoku::cli::kOk);
}

TEST_CASE("input errors exit with code 2") {
    SUBCASE("missing file") {
        const Run r = run({"count", "/nonexistent/puzzle.txt"});
        CHECK(r.code == sudoku::cli::kInputError);
        CHECK(r.err.find("cannot read") != std::string::npos);
    }
    SUBCASE("parse error") {
        const Run r = run({"solve", "-"}, "n=2\n1 2\n");
        CHECK(r.code == sudoku::cli::kInputError);
        CHECK(r.err.find("parse error: line") != std::string::npos);
        CHECK(r.out.empty());
    }
    SUBCASE("inconsistent givens") {
        const Run r = run({"count", "-"}, "n=2\n1 1 . .\n. . . .\n. . . .\n. . . .\n");
        CHECK(r.code == sudoku::cli::kInputError);
        CHECK(r.err.find("inconsistent givens") != std::string::npos);
    }
    SUBCASE("no input") { CHECK(run({"count"}).code == sudoku::cli::kInputError); }
    SUBCASE("path and --fig together") {
        CHECK(run({"count", "--fig", "fig4", "some.txt"}).code == sudoku::cli::kInputError);
    }
    SUBCASE("unknown figure") { CHECK(run({"count", "--fig", "fig1"}).code == sudoku::cli::kInputError); }
    SUBCASE("bad flags") {
        CHECK(run({"count", "--fig", "fig4", "--policy", "random"}).code == sudoku::cli::kInputError);
        CHECK(run({"count", "--fig", "fig4", "--parallel", "0"}).code == sudoku::cli::kInputError);
        CHECK(run({"count", "--fig", "fig4", "--format", "xml"}).code == sudoku::cli::kInputError);
        CHECK(run({"frobnicate"}).code == sudoku::cli::kInputError);
        CHECK(run({}).code == sudoku::cli::kInputError);
    }
    SUBCASE("compact output of a 4x4 grid") {
        CHECK(run({"solve", "-", "--format", "compact"}, "n=2\n. . . .\n. . . .\n. . . .\n. . . .\n").code ==
              sudoku::cli::kInputError);
    }
}

TEST_CASE("zero solutions from count") {
    const Run r = run({"count", "--fig", "fig5"});
    CHECK(r.code == sudoku::cli::kNoSolution);
    CHECK(r.out == "0\n");
}

TEST_CASE("verify") {
    const Run ok = run({"verify", "--fig", "fig4"});
    CHECK(ok.code == sudoku::cli::kOk);
    CHECK(ok.out == "givens: consistent\nsudoku matrix: no\n");

    const Run full = run({"verify", "-"}, "n=2\n1 2 3 4\n3 4 1 2\n2 1 4 3\n4 3 2 1\n");
    CHECK(full.code == sudoku::cli::kOk);
    CHECK(full.out == "givens: consistent\nsudoku matrix: yes\n");

    const Run bad = run({"verify", "-"}, "n=2\n1 . . 1\n. . . .\n. . . .\n. . . .\n");
    CHECK(bad.code == sudoku::cli::kNoSolution);
    CHECK(bad.out == "duplicate: row 1 symbol 1\ngivens: inconsistent\nsudoku matrix: no\n");
}

TEST_CASE("catalog") {
    const Run list = run({"catalog"});
    CHECK(list.code == sudoku::cli::kOk);
    CHECK(list.out.rfind("fig2 puzzle givens=38 expected=1\n", 0) == 0);
    CHECK(list.out.find("fig6 pattern givens=27 expected=283576\n") != std::string::npos);
    CHECK(std::count(list.out.begin(), list.out.end(), '\n') == 10);

    const Run one = run({"catalog", "--fig", "fig9"});
    CHECK(one.code == sudoku::cli::kOk);
    const sudoku::PuzzleDocument doc = sudoku::parse_puzzle(one.out);
    CHECK(doc.source == "fig9");
    CHECK(doc.grid == sudoku::catalog_entry("fig9").grid);
}

TEST_CASE("help exits cleanly") {
    const Run r = run({"--help"});
    CHECK(r.code == sudoku::cli::kOk);
    CHECK(r.out.find("count") != std::string::npos);
}
