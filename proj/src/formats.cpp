#include "sudoku/formats.hpp"

#include <charconv>
#include <optional>

#include "sudoku/errors.hpp"

namespace sudoku {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

struct DataLine {
    std::size_t number;
    std::vector<Token> tokens;
    std::size_t end_column;
};

std::vector<Token> split_tokens(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && is_space(line[pos])) ++pos;
        const std::size_t start = pos;
        while (pos < line.size() && !is_space(line[pos])) ++pos;
        if (pos > start) tokens.push_back({line.substr(start, pos - start), start + 1});
    }
    return tokens;
}

bool is_missing(std::string_view token) { return token == "0" || token == "." || token == "*"; }

int parse_value(const Token& token, std::size_t line, int m) {
    if (is_missing(token.text)) return 0;
    int value = 0;
    const char* first = token.text.data();
    const char* last = first + token.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(line, token.column, "unexpected token '" + std::string(token.text) + "'");
    }
    if (value < 1 || value > m) {
        throw ParseError(line, token.column,
                         "value " + std::string(token.text) + " is outside 1.." + std::to_string(m));
    }
    return value;
}

std::optional<int> parse_header(std::string_view line) {
    if (line.size() < 2 || line.substr(0, 2) != "n=") return std::nullopt;
    int n = 0;
    const std::string_view digits = line.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) return -1;
    return n;
}

Grid parse_compact(const DataLine& line) {
    const Token& token = line.tokens.front();
    if (token.text.size() != 81) {
        throw ParseError(line.number, token.column,
                         "single-line form needs exactly 81 characters, got " + std::to_string(token.text.size()));
    }
    Grid grid(GridOrder(3));
    for (std::size_t c = 0; c < 81; ++c) {
        const char ch = token.text[c];
        int value = 0;
        if (ch >= '1' && ch <= '9') {
            value = ch - '0';
        } else if (ch != '0' && ch != '.' && ch != '*') {
            throw ParseError(line.number, token.column + c, std::string("unexpected character '") + ch + "'");
        }
        grid.set_raw(static_cast<int>(c), static_cast<Grid::Value>(value));
    }
    return grid;
}

}  // namespace

PuzzleDocument parse_puzzle(std::string_view text) {
    std::string source;
    std::optional<GridOrder> header;
    std::size_t header_line = 0;
    std::vector<DataLine> data;

    std::size_t number = 0;
    while (!text.empty() || number == 0) {
        ++number;
        const std::size_t eol = text.find('\n');
        const std::string_view raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        const std::string_view line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '#') {
            const std::string_view body = trim(line.substr(1));
            if (data.empty() && body.substr(0, 7) == "source:") source = std::string(trim(body.substr(7)));
            continue;
        }
        if (data.empty() && !header) {
            if (auto n = parse_header(line)) {
                const std::size_t column = raw.find('n') + 1;
                if (*n < GridOrder::kMinOrder || *n > GridOrder::kMaxOrder) {
                    throw ParseError(number, column,
                                     "header must be n=<" + std::to_string(GridOrder::kMinOrder) + ".." +
                                         std::to_string(GridOrder::kMaxOrder) + ">, got '" + std::string(line) + "'");
                }
                header = GridOrder(*n);
                header_line = number;
                continue;
            }
        }
        data.push_back({number, split_tokens(raw), raw.size() + 1});
    }

    if (data.empty()) throw ParseError(number, 1, "no grid rows found");

    if (data.size() == 1 && data.front().tokens.size() == 1) {
        if (header && header->n() != 3) {
            throw ParseError(header_line, 1, "single-line form is only defined for n=3");
        }
        return {parse_compact(data.front()), std::move(source)};
    }

    GridOrder order = header.value_or(GridOrder(GridOrder::kMinOrder));
    if (!header) {
        try {
            order = GridOrder::from_side(static_cast<int>(data.size()));
        } catch (const InputError&) {
            throw ParseError(data.back().number, 1,
                             std::to_string(data.size()) + " rows is not a square of n in " +
                                 std::to_string(GridOrder::kMinOrder) + ".." + std::to_string(GridOrder::kMaxOrder));
        }
    }
    const auto m = static_cast<std::size_t>(order.m());
    if (data.size() > m) throw ParseError(data[m].number, 1, "expected " + std::to_string(m) + " rows, found more");
    if (data.size() < m) {
        throw ParseError(data.back().number + 1, 1,
                         "expected " + std::to_string(m) + " rows, found " + std::to_string(data.size()));
    }

    Grid grid(order);
    for (std::size_t r = 0; r < m; ++r) {
        const DataLine& line = data[r];
        if (line.tokens.size() > m) {
            throw ParseError(line.number, line.tokens[m].column, "row has more than " + std::to_string(m) + " tokens");
        }
        if (line.tokens.size() < m) {
            throw ParseError(line.number, line.end_column,
                             "row has " + std::to_string(line.tokens.size()) + " tokens, expected " +
                                 std::to_string(m));
        }
        for (std::size_t c = 0; c < m; ++c) {
            grid.set_raw(static_cast<int>(r * m + c),
                         static_cast<Grid::Value>(parse_value(line.tokens[c], line.number, order.m())));
        }
    }
    return {grid, std::move(source)};
}

std::string serialize_puzzle(const PuzzleDocument& doc) {
    std::string out;
    if (!doc.source.empty()) {
        std::string tag = doc.source;
        for (char& c : tag) {
            if (c == '\n' || c == '\r') c = ' ';
        }
        out += "# source: " + tag + "\n";
    }
    const int m = doc.grid.side();
    out += "n=" + std::to_string(doc.grid.order().n()) + "\n";
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            if (c > 0) out += ' ';
            const int v = doc.grid.raw(r * m + c);
            out += v == 0 ? std::string(".") : std::to_string(v);
        }
        out += '\n';
    }
    return out;
}

std::string serialize_compact(const Grid& grid) {
    if (grid.order().n() != 3) throw InputError("single-line form is only defined for n=3");
    std::string out(81, '.');
    for (int c = 0; c < 81; ++c) {
        if (grid.raw(c) != 0) out[static_cast<std::size_t>(c)] = static_cast<char>('0' + grid.raw(c));
    }
    return out;
}

}  // namespace sudoku
