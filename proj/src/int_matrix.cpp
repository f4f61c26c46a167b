#include "bsh/int_matrix.hpp"

#include "bsh/error.hpp"

#include <algorithm>
#include <sstream>

namespace bsh {

std::string to_string(const GaussRational& z) {
    if (z.im == 0) return to_string(z.re);
    std::string s;
    if (z.re != 0) s = to_string(z.re) + (z.im > 0 ? "+" : "-");
    else if (z.im < 0) s = "-";
    Rational a = abs(z.im);
    if (a != 1) s += to_string(a) + "*";
    return s + "i";
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    require(data_.size() == rows_ * cols_, "entry count does not match shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        require(r.size() == cols_, "ragged initializer");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

IntMatrix IntMatrix::ones(std::size_t rows, std::size_t cols) {
    return IntMatrix(rows, cols, std::vector<Integer>(rows * cols, Integer(1)));
}

IntMatrix IntMatrix::generate(std::size_t rows, std::size_t cols,
                              const std::function<Integer(std::size_t, std::size_t)>& f) {
    std::vector<Integer> v;
    v.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) v.push_back(f(i, j));
    return IntMatrix(rows, cols, std::move(v));
}

IntMatrix IntMatrix::from_i64(std::size_t rows, std::size_t cols, const std::vector<std::int64_t>& v) {
    require(v.size() == rows * cols, "entry count does not match shape");
    std::vector<Integer> e;
    e.reserve(v.size());
    for (auto x : v) e.emplace_back(static_cast<long>(x));
    return IntMatrix(rows, cols, std::move(e));
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
    return t;
}

IntMatrix IntMatrix::kronecker(const IntMatrix& b) const {
    IntMatrix k(rows_ * b.rows_, cols_ * b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Integer& x = data_[i * cols_ + j];
            for (std::size_t p = 0; p < b.rows_; ++p)
                for (std::size_t q = 0; q < b.cols_; ++q)
                    k.data_[(i * b.rows_ + p) * k.cols_ + j * b.cols_ + q] = x * b.data_[p * b.cols_ + q];
        }
    return k;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) { return a.kronecker(b); }

IntMatrix IntMatrix::select_rows(const RowSet& rows) const {
    IntMatrix s(rows.size(), cols_);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r] < rows_, "row index out of range");
        std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(rows[r] * cols_), cols_,
                    s.data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
    }
    return s;
}

IntMatrix IntMatrix::select_cols(const RowSet& cols) const { return transpose().select_rows(cols).transpose(); }

IntMatrix IntMatrix::scale(const Integer& s) const {
    IntMatrix m = *this;
    for (auto& x : m.data_) x *= s;
    return m;
}

IntMatrix IntMatrix::exact_div(const Integer& d) const {
    IntMatrix m = *this;
    for (auto& x : m.data_) {
        if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) fail(ErrorCode::NonIntegral, "matrix entry not divisible");
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    }
    return m;
}

IntMatrix IntMatrix::map(const std::function<Integer(const Integer&)>& f) const {
    IntMatrix m = *this;
    for (auto& x : m.data_) x = f(x);
    return m;
}

IntMatrix IntMatrix::vstack(const IntMatrix& below) const {
    if (rows_ == 0) return below;
    require(below.cols_ == cols_, "vstack column mismatch");
    std::vector<Integer> v = data_;
    v.insert(v.end(), below.data_.begin(), below.data_.end());
    return IntMatrix(rows_ + below.rows_, cols_, std::move(v));
}

std::optional<std::vector<std::int64_t>> IntMatrix::to_i64() const {
    std::vector<std::int64_t> out;
    out.reserve(data_.size());
    for (const auto& x : data_) {
        auto v = bsh::to_i64(x);
        if (!v) return std::nullopt;
        out.push_back(*v);
    }
    return out;
}

Integer IntMatrix::max_abs() const {
    Integer m = 0;
    for (const auto& x : data_)
        if (abs(x) > m) m = abs(x);
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && data_[i * cols_ + j] != 0) return false;
    return true;
}

bool IntMatrix::is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (data_[i * cols_ + j] != data_[j * cols_ + i]) return false;
    return true;
}

bool IntMatrix::is_zero_one() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0 || x == 1; });
}

Integer IntMatrix::trace() const {
    Integer t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += data_[i * cols_ + i];
    return t;
}

std::vector<Integer> IntMatrix::row_sums() const {
    std::vector<Integer> s(rows_, Integer(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) s[i] += data_[i * cols_ + j];
    return s;
}

std::vector<Integer> IntMatrix::col_sums() const {
    std::vector<Integer> s(cols_, Integer(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) s[j] += data_[i * cols_ + j];
    return s;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "shape mismatch in +");
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "shape mismatch in -");
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
}

IntMatrix operator-(const IntMatrix& a) {
    IntMatrix c = a;
    for (auto& x : c.data_) x = -x;
    return c;
}

namespace {

// Bit length of |x|, 0 for zero.
std::size_t bits(const Integer& x) { return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2); }

std::size_t bits_of(std::size_t k) {
    std::size_t b = 0;
    while (k) {
        ++b;
        k >>= 1;
    }
    return b;
}

}  // namespace

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    require(a.cols_ == b.rows_, "shape mismatch in *");
    const std::size_t n = a.rows_, k = a.cols_, m = b.cols_;
    // |sum| <= k * max|a| * max|b|; take the int64 path only when that bound is below 2^62.
    std::size_t bound = bits(a.max_abs()) + bits(b.max_abs()) + bits_of(k);
    if (bound <= 62) {
        auto av = *a.to_i64();
        auto bv = *b.transpose().to_i64();
        std::vector<std::int64_t> c(n * m, 0);
        for (std::size_t i = 0; i < n; ++i) {
            const std::int64_t* ar = av.data() + i * k;
            for (std::size_t j = 0; j < m; ++j) {
                const std::int64_t* br = bv.data() + j * k;
                std::int64_t s = 0;
                for (std::size_t t = 0; t < k; ++t) s += ar[t] * br[t];
                c[i * m + j] = s;
            }
        }
        return IntMatrix::from_i64(n, m, c);
    }
    IntMatrix c(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            const Integer& x = a.data_[i * k + t];
            if (x == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c.data_[i * m + j] += x * b.data_[t * m + j];
        }
    return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix gram(const IntMatrix& m) { return m.transpose() * m; }

}  // namespace bsh
