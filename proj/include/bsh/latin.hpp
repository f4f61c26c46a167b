#pragma once

#include <string>
#include <vector>

namespace bsh {

// v×v array on the symbols {min_symbol, …, min_symbol + v − 1}; min_symbol is 0 or 1.
struct LatinSquare {
    int order = 0;
    int min_symbol = 0;
    std::vector<int> cells;

    LatinSquare() = default;
    LatinSquare(int v, int min_sym) : order(v), min_symbol(min_sym), cells(static_cast<size_t>(v) * v, min_sym) {}

    int operator()(int i, int j) const { return cells[static_cast<size_t>(i) * order + j]; }
    int& operator()(int i, int j) { return cells[static_cast<size_t>(i) * order + j]; }
    friend bool operator==(const LatinSquare&, const LatinSquare&) = default;
};

using UfsFamily = std::vector<LatinSquare>;

bool is_latin(const LatinSquare& sq);
bool is_symmetric(const LatinSquare& sq);
bool has_constant_diagonal(const LatinSquare& sq, int symbol);

// Every row of l1 against every row of l2 agrees in exactly one column.
bool is_ufs(const LatinSquare& l1, const LatinSquare& l2);
bool is_mutually_ufs(const UfsFamily& family);

LatinSquare circle_symmetric(int v);
UfsFamily affine_ufs_family(int q);
UfsFamily force_constant_diagonal(const UfsFamily& family, int symbol = 0);
LatinSquare compose_ufs(const LatinSquare& l1, const LatinSquare& l2);

// Shift all symbols so the smallest becomes new_min.
LatinSquare relabel(const LatinSquare& sq, int new_min);

LatinSquare parse_latin(const std::string& text);
std::string format_latin(const LatinSquare& sq);
LatinSquare load_latin(const std::string& path);
void save_latin(const LatinSquare& sq, const std::string& path);

}  // namespace bsh
