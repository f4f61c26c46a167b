#pragma once

#include "bsh/graph.hpp"
#include "bsh/hadamard.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bsh {

struct SplitParams {
    long long n = 0, ell = 0, a = 0, b = 0;
    std::string str() const;
    friend bool operator==(const SplitParams&, const SplitParams&) = default;
    friend auto operator<=>(const SplitParams&, const SplitParams&) = default;
};

enum class Branch { SingleValue, Seidel, CaseA, CaseB };
const char* branch_name(Branch b);

struct SplitChecks {
    bool gram_ok = false;      // ℓI + aA + b(J−A−I) equals H₁ᵀH₁
    bool rowsum_zero = false;  // H₁·1 = 0
    std::optional<bool> seidel_ok;  // only for the seidel branch
    std::optional<bool> srg_ok;     // adjacency is an SRG with the derived parameters
};

struct SplitReport {
    SplitParams params;
    RowSet rows;
    IntMatrix adjacency;
    Branch branch = Branch::SingleValue;
    bool other_case_also = false;  // the complementary case formula matches too
    std::optional<SrgParams> srg;
    SplitChecks checks;
};

SplitReport check_split(const HadamardMatrix& h, const RowSet& rows);

struct CaseDerivation {
    long long b;
    SrgParams srg;
};

// Closed forms of the two b ≠ −a branches; NonIntegral if a value is not an integer.
CaseDerivation derive_srg_case_a(long long n, long long ell, long long a);
CaseDerivation derive_srg_case_b(long long n, long long ell, long long a);

struct SeidelDerivation {
    SrgParams srg;
    long long valency;  // (an−ℓ−a)/(2a)
};

// Requires n(ℓ−a²) = ℓ²−a²; InfeasibleSeidel otherwise or when a value is not a nonnegative integer.
SeidelDerivation derive_seidel(long long n, long long ell, long long a);

// a²S² = a(n−2ℓ)S + ℓ(n−ℓ)I for S = J−I−2A.
bool seidel_identity_holds(const IntMatrix& s, long long n, long long ell, long long a);
bool verify_seidel_matrix(const SplitReport& report);

SplitParams complement_split(const SplitParams& p);
inline SplitParams complement_split(const SplitReport& r) { return complement_split(r.params); }

SplitReport delete_allones_transform(const HadamardMatrix& h, const SplitReport& report);

struct EquiangularReport {
    long long m;
    Rational alpha_sq;
    Rational bound;
    bool attained;
};

EquiangularReport equiangular_report(const SplitParams& p);

HadamardMatrix unbiased_partner(const HadamardMatrix& h, const SplitReport& report);

HadamardMatrix regular_hadamard_normalize(const HadamardMatrix& h, const SplitReport& report);

struct Diagonalization {
    std::vector<Integer> eigenvalues;       // eigenvalue of each row of H
    std::map<Integer, std::size_t> layout;  // eigenvalue -> multiplicity
};

Diagonalization diagonalize_by_hadamard(const IntMatrix& a, const HadamardMatrix& h);

SplitReport split_from_diagonalizable_srg(const IntMatrix& a, const HadamardMatrix& h);

constexpr unsigned long long kDefaultSearchBudget = 10'000'000ULL;

std::vector<SplitReport> search_splits(const HadamardMatrix& h, std::size_t ell,
                                       unsigned long long budget = kDefaultSearchBudget, unsigned workers = 1);

enum class Srg16Class { Lattice, Shrikhande };
Srg16Class classify_srg16(const IntMatrix& a);

}  // namespace bsh
