#pragma once

#include "bsh/constructions.hpp"
#include "bsh/latin.hpp"
#include "bsh/linalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bsh {

// C_i = r_iᵀ r_i for the rows r_i of H.
struct AuxiliarySet {
    std::size_t order = 0;
    std::vector<IntMatrix> c;  // c[i] belongs to row i
};

// Checks ∑C_i = nI, C_i² = nC_i and C_iC_j = O; PreconditionViolation if one fails.
AuxiliarySet auxiliary_matrices(const HadamardMatrix& h);

struct SplitAuxiliaryChecks {
    bool sum_matches = false;      // ∑_{split} C_i = ℓI + aA + b(J−A−I)
    bool annihilates_j = false;    // C_i J = O for every split row
    bool adjacency_commutes = false;  // A C_i = C_i A = ((n−ℓ+b)/(a−b)) C_i
};
SplitAuxiliaryChecks check_split_auxiliary(const AuxiliarySet& aux, const SplitReport& split);

// Block matrix (C_{L(i,j)}); symbol s ≥ 1 is split row s−1, symbol 0 is the zero matrix.
IntMatrix lift_latin(const AuxiliarySet& aux, const LatinSquare& l, const RowSet& split);
// L̃L̃ᵀ = n·I ⊗ (ℓI + aA + b(J−A−I)).
bool lifted_gram_holds(const IntMatrix& lifted, const SplitReport& split, int order);

// Relation matrix of a commutative association scheme with verified intersection numbers.
class Scheme {
public:
    std::size_t vertices() const { return v_; }
    int classes() const { return d_; }
    bool symmetric() const { return symmetric_; }
    int relation(std::size_t x, std::size_t y) const { return labels_[x * v_ + y]; }
    int transpose_class(int i) const { return transpose_[i]; }
    long long p(int i, int j, int k) const { return p_[(static_cast<std::size_t>(i) * (d_ + 1) + j) * (d_ + 1) + k]; }
    long long valency(int i) const { return p(i, transpose_[i], 0); }
    IntMatrix matrix(int i) const;

    // Checks the axioms on a relation-index matrix; AxiomFailure names the condition and a witness.
    static Scheme from_relations(std::size_t v, int d, std::vector<std::uint8_t> labels);

private:
    std::size_t v_ = 0;
    int d_ = 0;
    bool symmetric_ = true;
    std::vector<std::uint8_t> labels_;
    std::vector<int> transpose_;
    std::vector<long long> p_;
};

Scheme verify_scheme(const std::vector<IntMatrix>& matrices);

Scheme build_4class_symmetric(const BshInstance& bsh, const LatinSquare& l);
Scheme build_4class_nonsymmetric(const BshInstance& bsh, const LatinSquare& l);
Scheme build_5class(const BshInstance& bsh, const UfsFamily& family);
Scheme build_6class(const BshInstance& bsh, const UfsFamily& family);

// (A₃−A₄)² = n(f−1)(ℓA₀+aA₁+bA₂) + n(f−2)(A₃−A₄), computed on the matrices.
bool five_class_identity_holds(const Scheme& s, const SplitParams& p, int f);

// Row j of P holds the eigenvalues of A_0..A_d on the j-th primitive idempotent; Q = |X|·P⁻¹.
// Row 0 is the trivial eigenspace, the remaining rows are sorted lexicographically.
struct Eigenmatrices {
    FieldMatrix<GaussRational> p, q;
    bool real() const;
};

Eigenmatrices eigenmatrices(const Scheme& s);

Eigenmatrices closed_form_4class(long long n, long long ell, long long a, bool nonsymmetric = false);
Eigenmatrices closed_form_5class(long long n, long long ell, long long a, long long f);
Eigenmatrices closed_form_6class(long long n, long long ell, long long a, long long f);

// Permutation perm with computed.p[j] == closed.p[perm[j]] and matching Q columns, if any.
std::optional<std::vector<std::size_t>> match_eigenmatrices(const Eigenmatrices& computed, const Eigenmatrices& closed);
bool pq_identity_holds(const Eigenmatrices& e, std::size_t vertices);

// Binary Hamming scheme H(n,2); also checks that sylvester(n) diagonalizes every class.
Scheme hamming_scheme(int n);

enum class FusionVariant { V01, V03 };
struct Fusion {
    Scheme scheme;        // {I, A_Λ₁, A_Λ₂}
    SrgParams srg1, srg2;  // parameters of A_Λ₁ and A_Λ₂
    int m = 0;
    bool in_family = false;  // one of the two graphs is (4^m, 2^{m−1}(2^m±1), 2^{m−1}(2^{m−1}±1), same)
};
Fusion muzychuk_fusion(int n, FusionVariant variant);

}  // namespace bsh
