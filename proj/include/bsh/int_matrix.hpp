#pragma once

#include "bsh/arith.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <vector>

namespace bsh {

using RowSet = std::vector<std::size_t>;

// Dense exact-integer matrix. Values are immutable; every operation returns a new matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);  // zero matrix
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix ones(std::size_t rows, std::size_t cols);
    static IntMatrix ones(std::size_t n) { return ones(n, n); }
    static IntMatrix generate(std::size_t rows, std::size_t cols,
                              const std::function<Integer(std::size_t, std::size_t)>& f);
    static IntMatrix from_i64(std::size_t rows, std::size_t cols, const std::vector<std::int64_t>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<Integer>& entries() const { return data_; }

    IntMatrix transpose() const;
    IntMatrix kronecker(const IntMatrix& other) const;
    IntMatrix select_rows(const RowSet& rows) const;
    IntMatrix select_cols(const RowSet& cols) const;
    IntMatrix scale(const Integer& s) const;
    IntMatrix exact_div(const Integer& d) const;  // throws if some entry is not divisible
    IntMatrix map(const std::function<Integer(const Integer&)>& f) const;
    IntMatrix vstack(const IntMatrix& below) const;

    // Entries as int64 if all of them fit.
    std::optional<std::vector<std::int64_t>> to_i64() const;
    Integer max_abs() const;
    bool is_zero() const;
    bool is_diagonal() const;
    bool is_symmetric() const;
    bool is_zero_one() const;
    Integer trace() const;
    std::vector<Integer> row_sums() const;
    std::vector<Integer> col_sums() const;

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a);
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const Integer& s, const IntMatrix& a) { return a.scale(s); }
    friend IntMatrix operator*(long s, const IntMatrix& a) { return a.scale(Integer(s)); }
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

// Gram matrix MᵀM.
IntMatrix gram(const IntMatrix& m);

}  // namespace bsh
