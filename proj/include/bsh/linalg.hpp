#pragma once

#include "bsh/arith.hpp"
#include "bsh/error.hpp"

#include <optional>
#include <vector>

namespace bsh {

inline bool field_zero(const Rational& x) { return x == 0; }
inline bool field_zero(const GaussRational& x) { return x.is_zero(); }

template <class F>
using FieldMatrix = std::vector<std::vector<F>>;

// Reduced row echelon form in place; returns the pivot column of each nonzero row.
template <class F>
std::vector<std::size_t> rref(FieldMatrix<F>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && field_zero(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        F inv = F(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || field_zero(m[i][c])) continue;
            F f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Inverse of a square matrix, or nullopt when singular.
template <class F>
std::optional<FieldMatrix<F>> inverse(const FieldMatrix<F>& a) {
    const std::size_t n = a.size();
    FieldMatrix<F> aug(n, std::vector<F>(2 * n, F(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = F(1);
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    FieldMatrix<F> out(n, std::vector<F>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
    return out;
}

// Unique solution of a·x = b, or nullopt.
template <class F>
std::optional<std::vector<F>> solve(const FieldMatrix<F>& a, const std::vector<F>& b) {
    auto inv = inverse(a);
    if (!inv) return std::nullopt;
    std::vector<F> x(a.size(), F(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) x[i] += (*inv)[i][j] * b[j];
    return x;
}

}  // namespace bsh
