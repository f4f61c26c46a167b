#include "bsh/latin.hpp"

#include "bsh/error.hpp"
#include "bsh/finite_field.hpp"
#include "bsh/matrix_io.hpp"

#include <sstream>

namespace bsh {

namespace {

bool is_permutation_of_symbols(const LatinSquare& sq, int start, int stride) {
    std::vector<char> seen(sq.order, 0);
    for (int t = 0; t < sq.order; ++t) {
        int s = sq.cells[static_cast<size_t>(start) + static_cast<size_t>(t) * stride] - sq.min_symbol;
        if (s < 0 || s >= sq.order || seen[s]) return false;
        seen[s] = 1;
    }
    return true;
}

int agreements(const LatinSquare& l1, int r, const LatinSquare& l2, int s, int* column) {
    int count = 0;
    for (int j = 0; j < l1.order; ++j)
        if (l1(r, j) == l2(s, j)) {
            ++count;
            if (column) *column = j;
        }
    return count;
}

bool same_shape(const LatinSquare& l1, const LatinSquare& l2) {
    return l1.order == l2.order && l1.min_symbol == l2.min_symbol;
}

}  // namespace

bool is_latin(const LatinSquare& sq) {
    if (sq.order <= 0 || sq.cells.size() != static_cast<size_t>(sq.order) * sq.order) return false;
    for (int i = 0; i < sq.order; ++i)
        if (!is_permutation_of_symbols(sq, i * sq.order, 1) || !is_permutation_of_symbols(sq, i, sq.order))
            return false;
    return true;
}

bool is_symmetric(const LatinSquare& sq) {
    for (int i = 0; i < sq.order; ++i)
        for (int j = i + 1; j < sq.order; ++j)
            if (sq(i, j) != sq(j, i)) return false;
    return true;
}

bool has_constant_diagonal(const LatinSquare& sq, int symbol) {
    for (int i = 0; i < sq.order; ++i)
        if (sq(i, i) != symbol) return false;
    return true;
}

bool is_ufs(const LatinSquare& l1, const LatinSquare& l2) {
    require(same_shape(l1, l2), "UFS check needs squares of equal order on the same symbols");
    for (int r = 0; r < l1.order; ++r)
        for (int s = 0; s < l2.order; ++s)
            if (agreements(l1, r, l2, s, nullptr) != 1) return false;
    return true;
}

bool is_mutually_ufs(const UfsFamily& family) {
    for (size_t x = 0; x < family.size(); ++x)
        for (size_t y = x + 1; y < family.size(); ++y)
            if (!is_ufs(family[x], family[y])) return false;
    return true;
}

LatinSquare circle_symmetric(int v) {
    if (v < 2 || v % 2 != 0) fail(ErrorCode::OddOrder, "circle method needs an even order, got " + std::to_string(v));
    LatinSquare sq(v, 0);
    int m = v - 1;
    for (int r = 0; r < m; ++r) {
        sq(r, v - 1) = sq(v - 1, r) = r + 1;
        for (int k = 1; k < v / 2; ++k) {
            int x = ((r - k) % m + m) % m, y = (r + k) % m;
            sq(x, y) = sq(y, x) = r + 1;
        }
    }
    return sq;
}

UfsFamily affine_ufs_family(int q) {
    FiniteField f(q);
    require(q >= 3, "affine UFS family needs q >= 3");
    UfsFamily family;
    for (int a = 1; a < q; ++a) {
        LatinSquare sq(q, 0);
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) sq(i, j) = f.mul(a, f.add(i, j));
        family.push_back(std::move(sq));
    }
    if (!is_mutually_ufs(family)) fail(ErrorCode::NotUfs, "affine family over GF(" + std::to_string(q) + ")");
    return family;
}

UfsFamily force_constant_diagonal(const UfsFamily& family, int symbol) {
    UfsFamily out;
    for (const LatinSquare& sq : family) {
        require(symbol >= sq.min_symbol && symbol < sq.min_symbol + sq.order, "diagonal symbol outside the symbol set");
        if (!is_latin(sq)) fail(ErrorCode::PreconditionViolation, "not a Latin square");
        LatinSquare moved(sq.order, sq.min_symbol);
        for (int r = 0; r < sq.order; ++r) {
            int c = 0;
            while (sq(r, c) != symbol) ++c;
            for (int j = 0; j < sq.order; ++j) moved(c, j) = sq(r, j);
        }
        out.push_back(std::move(moved));
    }
    for (const LatinSquare& sq : out)
        if (!is_latin(sq) || !has_constant_diagonal(sq, symbol))
            fail(ErrorCode::PreconditionViolation, "diagonal normalization failed");
    if (is_mutually_ufs(family) && !is_mutually_ufs(out)) fail(ErrorCode::NotUfs, "normalization broke UFS");
    return out;
}

LatinSquare compose_ufs(const LatinSquare& l1, const LatinSquare& l2) {
    if (!same_shape(l1, l2) || !is_ufs(l1, l2)) fail(ErrorCode::NotUfs, "composition needs a UFS pair");
    LatinSquare out(l1.order, l1.min_symbol);
    for (int i = 0; i < l1.order; ++i)
        for (int j = 0; j < l1.order; ++j) {
            int a = -1;
            agreements(l1, i, l2, j, &a);
            out(i, j) = l1(i, a);
        }
    if (!is_latin(out)) fail(ErrorCode::NotUfs, "composed array is not Latin");
    return out;
}

LatinSquare relabel(const LatinSquare& sq, int new_min) {
    LatinSquare out = sq;
    for (int& c : out.cells) c += new_min - sq.min_symbol;
    out.min_symbol = new_min;
    return out;
}

LatinSquare parse_latin(const std::string& text) {
    std::istringstream in(text);
    int v = 0, min_sym = 0;
    if (!(in >> v >> min_sym) || v <= 0) fail(ErrorCode::ParseError, "expected header '<order> <min-symbol>'");
    if (min_sym != 0 && min_sym != 1) fail(ErrorCode::ParseError, "min symbol must be 0 or 1");
    LatinSquare sq(v, min_sym);
    for (int& c : sq.cells)
        if (!(in >> c)) fail(ErrorCode::ParseError, "expected " + std::to_string(v * v) + " symbols");
    std::string extra;
    if (in >> extra) fail(ErrorCode::ParseError, "trailing data '" + extra + "'");
    return sq;
}

std::string format_latin(const LatinSquare& sq) {
    std::ostringstream out;
    out << sq.order << ' ' << sq.min_symbol << '\n';
    for (int i = 0; i < sq.order; ++i) {
        for (int j = 0; j < sq.order; ++j) out << (j ? " " : "") << sq(i, j);
        out << '\n';
    }
    return out.str();
}

LatinSquare load_latin(const std::string& path) { return parse_latin(read_file(path)); }
void save_latin(const LatinSquare& sq, const std::string& path) { write_file(path, format_latin(sq)); }

}  // namespace bsh
