#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace bsh {

// (p, e) with q = p^e, or nullopt.
std::optional<std::pair<int, int>> prime_power(int q);

// GF(p^e) with elements encoded as integers 0..q-1 (base-p digits = polynomial coefficients,
// constant term least significant). Reduction uses the lowest monic irreducible of degree e.
class FiniteField {
public:
    explicit FiniteField(int q);

    int order() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return e_; }
    const std::vector<int>& modulus() const { return modulus_; }  // coefficients c0..c_{e-1}, monic

    int add(int x, int y) const { return add_[x * q_ + y]; }
    int sub(int x, int y) const { return add_[x * q_ + neg_[y]]; }
    int mul(int x, int y) const { return mul_[x * q_ + y]; }
    int neg(int x) const { return neg_[x]; }
    int inv(int x) const;
    // Quadratic character: 0, 1 (nonzero square) or -1.
    int chi(int x) const { return chi_[x]; }

private:
    int q_, p_, e_;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_, neg_, chi_;
};

}  // namespace bsh
