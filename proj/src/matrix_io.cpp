#include "bsh/matrix_io.hpp"

#include "bsh/error.hpp"

#include <fstream>
#include <sstream>

namespace bsh {

namespace {

[[noreturn]] void parse_error(std::size_t line, std::size_t col, const std::string& what) {
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

struct Token {
    std::string text;
    std::size_t col;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

bool is_decimal(const std::string& s) {
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

IntMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::size_t rows = 0, cols = 0;
    bool header = false;
    std::vector<Integer> entries;
    std::size_t seen_rows = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (!header) {
            if (toks.size() != 2 || !is_decimal(toks[0].text) || !is_decimal(toks[1].text) || toks[0].text[0] == '-' ||
                toks[1].text[0] == '-')
                parse_error(lineno, 1, "expected header '<rows> <cols>'");
            rows = std::stoul(toks[0].text);
            cols = std::stoul(toks[1].text);
            header = true;
            entries.reserve(rows * cols);
            continue;
        }
        if (seen_rows == rows) parse_error(lineno, 1, "more rows than declared");
        bool shorthand = toks.size() == 1 && toks[0].text.find_first_not_of("+-") == std::string::npos;
        if (shorthand) {
            const std::string& s = toks[0].text;
            if (s.size() != cols) parse_error(lineno, 1, "row has " + std::to_string(s.size()) + " entries, expected " + std::to_string(cols));
            for (char c : s) entries.emplace_back(c == '+' ? 1 : -1);
        } else {
            if (toks.size() != cols)
                parse_error(lineno, toks.size() > cols ? toks[cols].col : line.size() + 1,
                            "row has " + std::to_string(toks.size()) + " entries, expected " + std::to_string(cols));
            for (const auto& t : toks) {
                if (!is_decimal(t.text)) parse_error(lineno, t.col, "not an integer: '" + t.text + "'");
                entries.emplace_back(t.text[0] == '+' ? t.text.substr(1) : t.text, 10);
            }
        }
        ++seen_rows;
    }
    if (!header) parse_error(lineno + 1, 1, "missing header");
    if (seen_rows != rows) parse_error(lineno + 1, 1, "expected " + std::to_string(rows) + " rows, got " + std::to_string(seen_rows));
    return IntMatrix(rows, cols, std::move(entries));
}

std::string format_matrix(const IntMatrix& m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += m(i, j).get_str();
        }
        out += '\n';
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::ParseError, "cannot write " + path);
    out << contents;
}

IntMatrix load_matrix(const std::string& path) { return parse_matrix(read_file(path)); }

void save_matrix(const IntMatrix& m, const std::string& path) { write_file(path, format_matrix(m)); }

}  // namespace bsh
