#pragma once

#include "bsh/int_matrix.hpp"

namespace bsh {

bool is_hadamard(const IntMatrix& m);

// Square ±1 matrix with H·Hᵀ = n·I, checked on construction.
class HadamardMatrix {
public:
    explicit HadamardMatrix(IntMatrix m);
    std::size_t order() const { return m_.rows(); }
    const IntMatrix& matrix() const { return m_; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    // Index of the first all-ones row, or order() if there is none.
    std::size_t all_ones_row() const;
    friend bool operator==(const HadamardMatrix& a, const HadamardMatrix& b) { return a.m_ == b.m_; }

private:
    IntMatrix m_;
};

// Skew-symmetric core: Qᵀ = −Q, zero diagonal, JQ = QJ = O, QQᵀ = qI − J.
class SkewCore {
public:
    explicit SkewCore(IntMatrix q);
    std::size_t order() const { return q_.rows(); }
    const IntMatrix& matrix() const { return q_; }

private:
    IntMatrix q_;
};

HadamardMatrix sylvester(unsigned m_exponent);

enum class RowPlacement { First, Last };

// Flips column signs so the designated row is all-ones, then row signs so the first column is.
HadamardMatrix normalize(const HadamardMatrix& h, RowPlacement placement = RowPlacement::First);

// Flips column signs so that row r becomes all-ones (a switching; row order unchanged).
HadamardMatrix switch_to_row(const HadamardMatrix& h, std::size_t r);

HadamardMatrix permute_rows(const HadamardMatrix& h, const RowSet& order);

SkewCore paley_skew_core(unsigned q);

// [[1, 1ᵀ], [−1, I+Q]].
HadamardMatrix skew_hadamard_from_core(const SkewCore& q);

// C = H − I for the bordered skew Hadamard H above; C·Cᵀ = q·I.
IntMatrix conference_from_core(const SkewCore& q);

// Some Hadamard matrix of order n built from Sylvester, Paley (bordered skew cores) and
// Kronecker products, or throws WrongParameters when none of these reach n.
HadamardMatrix hadamard_of_order(unsigned n);
// Whether hadamard_of_order(n) succeeds, without building the matrix.
bool hadamard_order_known(unsigned n);

}  // namespace bsh
