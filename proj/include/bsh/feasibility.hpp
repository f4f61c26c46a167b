#pragma once

#include "bsh/constructions.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace bsh {

enum class FeasibleStatus { ExistsByConstruction, ExcludedMod4Sum, ExcludedMod4Diff, ExcludedEigsearch, Open };
const char* status_name(FeasibleStatus s);

enum class WitnessKind {
    Twin,                    // twin_sylvester b = −a block
    TwinComplement,          // its complement
    TwinDeleted,             // all-ones deletion applied to the twin block
    TwinComplementDeleted,   // all-ones deletion applied to the complement
    KronLarge,
    KronSmall,
    Gram,
    CoreTensor,
    TwoRow,
    SkewCore,
};

struct Witness {
    WitnessKind kind;
    long long m = 0;   // construction size parameter (exponent, order or q)
    long long m2 = 0;  // second factor order for core_tensor
    std::string describe() const;
};

// First registry construction realizing p, in the order of the WitnessKind enumeration.
std::optional<Witness> find_witness(const SplitParams& p);
BshInstance build_witness(const Witness& w);

// Order-36 non-existence certificates: the SRG the eigenvector search runs on.
struct EigCertificate {
    std::string srg_source;  // bundled dataset name, or a catalog description
    bool recomputable = false;
    SplitParams searched;    // split whose eigenvector search certifies the row
};

struct FeasibleRow {
    SplitParams params;
    SrgParams srg;
    FeasibleStatus status = FeasibleStatus::Open;
    std::string condition;  // violated condition or witness description
    std::optional<Witness> witness;
    std::optional<EigCertificate> certificate;
    std::string annotation() const;  // "E", "NE" or ""
};

std::vector<FeasibleRow> enumerate_seidel(long long max_n, unsigned workers = 1);
std::vector<FeasibleRow> enumerate_case_a(long long max_n, unsigned workers = 1);

struct FilterVerdict {
    bool excluded;
    std::string condition;
};

FilterVerdict filter_mod4_sum(long long n, long long ell, long long a);
FilterVerdict filter_mod4_diff(long long n, long long ell, long long a);

enum class SignPatternKind { Sum, Diff };

struct SignPattern {
    std::array<Rational, 4> xyzw;
    bool feasible;  // all four are nonnegative integers
};

SignPattern solve_sign_pattern(SignPatternKind kind, long long ell, long long a);

struct EigSearchResult {
    std::size_t multiplicity = 0;  // dimension of the eigenvalue-n eigenspace
    std::size_t candidates = 0;    // ±1 eigenvectors up to sign
    std::size_t max_set = 0;       // largest mutually orthogonal family
    std::vector<std::vector<int>> witness;  // one maximum family
    bool witness_gram_matches = false;      // witness rows have Gram equal to B (only when max_set = ℓ)
};

// B = ℓI + (a−b)A + b(J−I); searches the ±1 vectors of the eigenvalue-n eigenspace.
// Fails with BudgetExceeded once more than `budget` candidate vectors turn up.
constexpr std::size_t kDefaultEigBudget = 50'000;
EigSearchResult eigvec_search(const IntMatrix& srg_adjacency, long long ell, long long a, long long b,
                              std::size_t budget = kDefaultEigBudget);

IntMatrix complement_graph(const IntMatrix& a);

}  // namespace bsh
