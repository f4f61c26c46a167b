#include "bsh/splittability.hpp"

#include "bsh/error.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <thread>

namespace bsh {

std::string SplitParams::str() const {
    return "(" + std::to_string(n) + "," + std::to_string(ell) + "," + std::to_string(a) + "," + std::to_string(b) + ")";
}

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::SingleValue: return "single-value";
        case Branch::Seidel: return "seidel";
        case Branch::CaseA: return "case-a";
        case Branch::CaseB: return "case-b";
    }
    return "?";
}

namespace {

Integer I(long long v) { return Integer(static_cast<long>(v)); }

long long int_or_throw(const Rational& q, ErrorCode code, const char* what) {
    if (!is_integer(q)) fail(code, std::string(what) + " = " + to_string(q) + " is not an integer");
    return q.get_num().get_si();
}

Rational ratio(const Integer& num, const Integer& den, ErrorCode code, const char* what) {
    if (den == 0) fail(code, std::string(what) + " has a zero denominator");
    return make_rational(num, den);
}

IntMatrix gram_form(std::size_t n, const Integer& ell, const Integer& a, const Integer& b, const IntMatrix& adj) {
    return IntMatrix::generate(n, n, [&](std::size_t i, std::size_t j) -> Integer {
        if (i == j) return ell;
        return adj(i, j) == 1 ? a : b;
    });
}

std::optional<long long> case_a_b(long long n, long long ell, long long a) {
    Integer den = I(a) * I(n - 1) + I(ell);
    if (den == 0) return std::nullopt;
    Rational b = make_rational(I(ell) * I(-a + ell - n), den);
    if (!is_integer(b)) return std::nullopt;
    return b.get_num().get_si();
}

std::optional<long long> case_b_b(long long n, long long ell, long long a) {
    Integer den = I(a) * I(n - 1) + I(ell) - I(n);
    if (den == 0) return std::nullopt;
    Rational b = make_rational(I(a - ell) * I(n - ell), den);
    if (!is_integer(b)) return std::nullopt;
    return b.get_num().get_si();
}

}  // namespace

CaseDerivation derive_srg_case_a(long long n, long long ell, long long a) {
    const ErrorCode E = ErrorCode::NonIntegral;
    Integer N = I(n), L = I(ell), A = I(a);
    long long b = int_or_throw(ratio(L * (-A + L - N), A * (N - 1) + L, E, "b"), E, "b");
    Integer D = N * (A * A + L) - (A - L) * (A - L);
    Integer D2 = ((A - L) * (A - L) - N * (A * A + L));
    D2 *= D2;
    long long k = int_or_throw(ratio(L * N * (N - L - 1), D, E, "k"), E, "k");
    Integer lam_num = N * (N * N * (A * A * A + L * L) - 2 * (L + 1) * N * (A * A * A + L * L) +
                           (2 * A * L + A + L * (L + 2)) * (A - L) * (A - L));
    long long lambda = int_or_throw(ratio(lam_num, D2, E, "lambda"), E, "lambda");
    long long mu = int_or_throw(ratio(L * N * (A - L) * (L - N + 1) * (A - L + N), D2, E, "mu"), E, "mu");
    SrgParams s{n, k, lambda, mu};
    if (!s.counting_identity()) fail(E, "derived parameters violate k(k−λ−1) = (v−k−1)μ");
    return {b, s};
}

CaseDerivation derive_srg_case_b(long long n, long long ell, long long a) {
    const ErrorCode E = ErrorCode::NonIntegral;
    Integer N = I(n), L = I(ell), A = I(a);
    long long b = int_or_throw(ratio((A - L) * (N - L), A * (N - 1) + L - N, E, "b"), E, "b");
    Integer D = (A - L) * (A - L) - N * ((A - 2) * A + L);
    Integer D2 = D * D;
    long long k = int_or_throw(ratio((L - 1) * N * (L - N), D, E, "k"), E, "k");
    Integer LN2 = (L - N) * (L - N);
    Integer lam_num =
        N * (A * A * A * (-2 * L * (N - 1) + N * N - 1) - 3 * A * A * LN2 + 3 * A * LN2 + (L - 2) * L * LN2);
    long long lambda = int_or_throw(ratio(lam_num, D2, E, "lambda"), E, "lambda");
    long long mu = int_or_throw(ratio((L - 1) * N * (A - L) * (L - N) * (A - L + N), D2, E, "mu"), E, "mu");
    SrgParams s{n, k, lambda, mu};
    if (!s.counting_identity()) fail(E, "derived parameters violate k(k−λ−1) = (v−k−1)μ");
    return {b, s};
}

SeidelDerivation derive_seidel(long long n, long long ell, long long a) {
    const ErrorCode E = ErrorCode::InfeasibleSeidel;
    require(a != 0 && ell != a * a, "derive_seidel needs a ≠ 0 and ℓ ≠ a²");
    Integer N = I(n), L = I(ell), A = I(a);
    if (N * (L - A * A) != L * L - A * A) fail(E, "n(ℓ−a²) ≠ ℓ²−a² for " + SplitParams{n, ell, a, -a}.str());
    long long valency = int_or_throw(ratio(A * N - L - A, 2 * A, E, "valency"), E, "valency");
    Integer den = 4 * A * (L - A * A);
    long long k = int_or_throw(ratio((A - 1) * L * (A + L), 2 * A * (L - A * A), E, "k"), E, "k");
    long long lambda = int_or_throw(ratio((A + L) * (3 * A * A + A * L - A - 3 * L), den, E, "lambda"), E, "lambda");
    long long mu = int_or_throw(ratio((A - 1) * (L * L - A * A), den, E, "mu"), E, "mu");
    if (valency < 0 || k < 0 || lambda < 0 || mu < 0) fail(E, "negative parameter");
    return {SrgParams{n, k, lambda, mu}, valency};
}

bool seidel_identity_holds(const IntMatrix& s, long long n, long long ell, long long a) {
    if (!s.square() || s.rows() != static_cast<std::size_t>(n)) return false;
    IntMatrix lhs = (s * s).scale(I(a) * I(a));
    IntMatrix rhs = s.scale(I(a) * I(n - 2 * ell)) + IntMatrix::identity(s.rows()).scale(I(ell) * I(n - ell));
    return lhs == rhs;
}

bool verify_seidel_matrix(const SplitReport& r) {
    require(r.branch == Branch::Seidel, "verify_seidel_matrix needs a seidel-branch report");
    const std::size_t n = r.adjacency.rows();
    // S with H₁ᵀH₁ = ℓI + aS, i.e. J − I − 2Ā for Ā the positions of b = −a.
    IntMatrix s = r.adjacency.scale(2) - IntMatrix::ones(n) + IntMatrix::identity(n);
    return seidel_identity_holds(s, r.params.n, r.params.ell, r.params.a);
}

SplitReport check_split(const HadamardMatrix& h, const RowSet& rows) {
    const std::size_t n = h.order();
    require(!rows.empty(), "row subset must be nonempty");
    std::set<std::size_t> uniq(rows.begin(), rows.end());
    require(uniq.size() == rows.size(), "row subset has duplicates");
    require(*uniq.rbegin() < n, "row index out of range");

    IntMatrix h1 = h.matrix().select_rows(rows);
    IntMatrix g = gram(h1);
    const long long ell = static_cast<long long>(rows.size());
    const long long nn = static_cast<long long>(n);

    std::vector<Integer> values;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Integer& x = g(i, j);
            if (std::find(values.begin(), values.end(), x) == values.end()) {
                values.push_back(x);
                if (values.size() > 2)
                    fail(ErrorCode::NotSplittable, "off-diagonal values " + values[0].get_str() + ", " +
                                                       values[1].get_str() + ", " + values[2].get_str());
            }
        }

    SplitReport r;
    r.rows = rows;
    std::sort(r.rows.begin(), r.rows.end());
    bool rowsum_zero = true;
    for (const auto& s : h1.row_sums()) rowsum_zero = rowsum_zero && s == 0;
    r.checks.rowsum_zero = rowsum_zero;

    if (values.size() <= 1) {
        long long v = values.empty() ? 0 : values[0].get_si();
        bool ok = (ell == 1 && v == 1) || (ell == nn - 1 && v == -1) || (ell == nn && v == 0);
        if (n == 1) ok = true;
        if (!ok)
            fail(ErrorCode::InvalidSingleValue,
                 "single off-diagonal value " + std::to_string(v) + " with ℓ = " + std::to_string(ell));
        r.params = {nn, ell, v, v};
        r.branch = Branch::SingleValue;
        r.adjacency = IntMatrix::ones(n) - IntMatrix::identity(n);
        r.checks.gram_ok = gram_form(n, I(ell), I(v), I(v), r.adjacency) == g;
        return r;
    }

    std::sort(values.begin(), values.end());
    const long long a = values[1].get_si(), b = values[0].get_si();
    r.params = {nn, ell, a, b};
    r.adjacency = IntMatrix::generate(n, n, [&](std::size_t i, std::size_t j) -> Integer {
        return Integer(i != j && g(i, j) == values[1] ? 1 : 0);
    });
    r.checks.gram_ok = gram_form(n, I(ell), I(a), I(b), r.adjacency) == g;
    auto actual = srg_parameters(r.adjacency);

    if (b == -a) {
        r.branch = Branch::Seidel;
        r.checks.seidel_ok = verify_seidel_matrix(r);
        try {
            r.srg = derive_seidel(nn, ell, a).srg;
        } catch (const Error&) {
        }
        r.checks.srg_ok = r.srg && actual && *actual == *r.srg;
        return r;
    }
    auto ba = case_a_b(nn, ell, a);
    auto bb = case_b_b(nn, ell, a);
    bool in_a = ba && *ba == b, in_b = bb && *bb == b;
    if (!in_a && !in_b)
        fail(ErrorCode::NotSplittable, "parameters " + r.params.str() + " match neither SRG branch");
    r.branch = in_a ? Branch::CaseA : Branch::CaseB;
    r.other_case_also = in_a && in_b;
    try {
        r.srg = in_a ? derive_srg_case_a(nn, ell, a).srg : derive_srg_case_b(nn, ell, a).srg;
    } catch (const Error&) {
    }
    r.checks.srg_ok = r.srg && actual && *actual == *r.srg;
    return r;
}

SplitParams complement_split(const SplitParams& p) { return {p.n, p.n - p.ell, -p.b, -p.a}; }

SplitReport delete_allones_transform(const HadamardMatrix& h, const SplitReport& report) {
    require(report.params.b == -report.params.a && report.params.a != 0, "transform needs a b = −a split");
    std::set<std::size_t> in_h1(report.rows.begin(), report.rows.end());
    std::size_t ones = h.order();
    for (std::size_t i = 0; i < h.order() && ones == h.order(); ++i) {
        if (in_h1.count(i)) continue;
        bool all = true;
        for (std::size_t j = 0; j < h.order() && all; ++j) all = h(i, j) == 1;
        if (all) ones = i;
    }
    if (ones == h.order()) fail(ErrorCode::MissingAllOnesRow, "no all-ones row outside the split");
    RowSet rest;
    for (std::size_t i = 0; i < h.order(); ++i)
        if (!in_h1.count(i) && i != ones) rest.push_back(i);
    return check_split(h, rest);
}

EquiangularReport equiangular_report(const SplitParams& p) {
    require(p.b == -p.a && p.a != 0, "equiangular report needs b = −a ≠ 0");
    require(I(p.ell) * I(p.ell) + I(p.a) * I(p.a) * I(p.n - 1) == I(p.n) * I(p.ell),
            "parameters fail ℓ² + a²(n−1) = nℓ");
    EquiangularReport r;
    r.m = p.ell;
    r.alpha_sq = make_rational(I(p.n - p.ell), I(p.ell) * I(p.n - 1));
    Rational m(I(p.ell));
    if (m * r.alpha_sq >= 1) fail(ErrorCode::BoundInapplicable, "ℓ ≥ 1/α²");
    r.bound = m * (1 - r.alpha_sq) / (1 - m * r.alpha_sq);
    r.attained = r.bound == Rational(I(p.n));
    return r;
}

HadamardMatrix unbiased_partner(const HadamardMatrix& h, const SplitReport& report) {
    const SplitParams& p = report.params;
    auto root = exact_sqrt(I(p.n));
    bool ok = p.b == -p.a && root && I(2 * p.a) == *root &&
              (I(2 * p.ell) == I(p.n) + *root || I(2 * p.ell) == I(p.n) - *root);
    if (!ok) fail(ErrorCode::NotUnbiasedCase, "parameters " + p.str() + " are not ((n±√n)/2, √n/2, −√n/2)");
    std::set<std::size_t> in_h1(report.rows.begin(), report.rows.end());
    RowSet rest;
    for (std::size_t i = 0; i < h.order(); ++i)
        if (!in_h1.count(i)) rest.push_back(i);
    IntMatrix g1 = gram(h.matrix().select_rows(report.rows));
    IntMatrix g2 = gram(h.matrix().select_rows(rest));
    IntMatrix k = (g1 - g2).exact_div(I(2 * p.a));
    HadamardMatrix kh(k);
    IntMatrix hk = h.matrix() * k.transpose();
    for (const auto& x : hk.entries())
        if (abs(x) != *root) fail(ErrorCode::NotUnbiasedCase, "H·Kᵀ has an entry " + x.get_str());
    return kh;
}

HadamardMatrix regular_hadamard_normalize(const HadamardMatrix& h, const SplitReport& report) {
    const SplitParams& p = report.params;
    auto root = exact_sqrt(I(p.n));
    bool ok = root && *root % 2 == 0;
    long long m = ok ? root->get_si() / 2 : 0;
    ok = ok && p.ell == 2 * m * m - m && p.a == m && p.b == -m;
    if (!ok) fail(ErrorCode::WrongParameters, "regular normalization needs (4m², 2m²−m, m, −m), got " + p.str());
    const std::size_t n = h.order();
    std::set<std::size_t> in_h1(report.rows.begin(), report.rows.end());
    const IntMatrix& x = h.matrix();
    // First column becomes −1 on H₁ and +1 on H₂.
    IntMatrix y = IntMatrix::generate(n, n, [&](std::size_t i, std::size_t j) -> Integer {
        Integer target = in_h1.count(i) ? -1 : 1;
        return x(i, j) * x(i, 0) * target;
    });
    auto sums = y.col_sums();
    IntMatrix z = IntMatrix::generate(n, n, [&](std::size_t i, std::size_t j) -> Integer { return sums[j] < 0 ? -y(i, j) : y(i, j); });
    for (const auto& s : z.col_sums())
        if (s != I(2 * m)) fail(ErrorCode::WrongParameters, "column sum " + s.get_str() + " after normalization");
    return HadamardMatrix(std::move(z));
}

Diagonalization diagonalize_by_hadamard(const IntMatrix& a, const HadamardMatrix& h) {
    require(a.square() && a.rows() == h.order(), "adjacency and Hadamard orders differ");
    const std::size_t n = h.order();
    IntMatrix d = h.matrix() * a * h.matrix().transpose();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && d(i, j) != 0)
                fail(ErrorCode::NotDiagonalized, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                     ") of H·A·Hᵀ is " + d(i, j).get_str());
    Diagonalization out;
    Integer nn(static_cast<unsigned long>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (!mpz_divisible_p(d(i, i).get_mpz_t(), nn.get_mpz_t()))
            fail(ErrorCode::NotDiagonalized, "diagonal entry " + std::to_string(i) + " not divisible by n");
        Integer ev = d(i, i) / nn;
        out.eigenvalues.push_back(ev);
        ++out.layout[ev];
    }
    return out;
}

SplitReport split_from_diagonalizable_srg(const IntMatrix& a, const HadamardMatrix& h) {
    const std::size_t n = h.order();
    require(n >= 2 && h.all_ones_row() == n - 1, "Hadamard matrix must have the all-ones row last");
    Diagonalization d = diagonalize_by_hadamard(a, h);
    Integer theta = d.eigenvalues[0];
    for (std::size_t i = 0; i + 1 < n; ++i) theta = std::max(theta, d.eigenvalues[i]);
    RowSet rows;
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (d.eigenvalues[i] == theta) rows.push_back(i);
    return check_split(h, rows);
}

namespace {

struct SearchHit {
    RowSet rows;
    SplitParams params;
};

// Depth-first over lexicographic ℓ-subsets whose first element lies in [first_lo, first_hi).
void search_range(const std::vector<std::int32_t>& hv, std::size_t n, std::size_t ell, std::size_t first_lo,
                  std::size_t first_hi, const HadamardMatrix& h, std::vector<SearchHit>& hits) {
    std::vector<std::vector<std::int32_t>> g(ell + 1, std::vector<std::int32_t>(n * n, 0));
    RowSet chosen;
    std::set<SplitParams> seen;
    auto leaf = [&](const std::vector<std::int32_t>& gram) {
        std::int32_t v[2];
        int count = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                std::int32_t x = gram[i * n + j];
                if (count > 0 && x == v[0]) continue;
                if (count > 1 && x == v[1]) continue;
                if (count == 2) return;
                v[count++] = x;
            }
        SplitReport r = check_split(h, chosen);
        if (seen.insert(r.params).second) hits.push_back({chosen, r.params});
    };
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start) {
        if (depth == ell) {
            leaf(g[depth]);
            return;
        }
        std::size_t lo = depth == 0 ? first_lo : start;
        std::size_t hi = depth == 0 ? first_hi : n - (ell - depth) + 1;
        for (std::size_t r = lo; r < hi && r + (ell - depth) <= n; ++r) {
            const std::int32_t* row = hv.data() + r * n;
            auto& src = g[depth];
            auto& dst = g[depth + 1];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) dst[i * n + j] = src[i * n + j] + row[i] * row[j];
            chosen.push_back(r);
            rec(depth + 1, r + 1);
            chosen.pop_back();
        }
    };
    rec(0, 0);
}

}  // namespace

std::vector<SplitReport> search_splits(const HadamardMatrix& h, std::size_t ell, unsigned long long budget,
                                       unsigned workers) {
    const std::size_t n = h.order();
    require(ell >= 1 && ell <= n, "ℓ must lie in 1..n");
    Integer subsets;
    mpz_bin_uiui(subsets.get_mpz_t(), n, ell);
    if (subsets > Integer(static_cast<unsigned long>(budget)))
        fail(ErrorCode::BudgetExceeded, "C(" + std::to_string(n) + "," + std::to_string(ell) + ") = " +
                                            subsets.get_str() + " exceeds the budget " + std::to_string(budget));
    std::vector<std::int32_t> hv(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) hv[i * n + j] = static_cast<std::int32_t>(h(i, j).get_si());

    workers = std::max(1u, workers);
    std::vector<std::vector<SearchHit>> parts(n);
    if (workers == 1) {
        for (std::size_t f = 0; f < n; ++f) search_range(hv, n, ell, f, f + 1, h, parts[f]);
    } else {
        std::mutex mu;
        std::size_t next = 0;
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t f;
                    {
                        std::lock_guard<std::mutex> lock(mu);
                        if (next >= n) return;
                        f = next++;
                    }
                    std::vector<SearchHit> local;
                    search_range(hv, n, ell, f, f + 1, h, local);
                    std::lock_guard<std::mutex> lock(mu);
                    parts[f] = std::move(local);
                }
            });
        for (auto& t : pool) t.join();
    }
    // Parts are in lexicographic order of their first row; keep the first subset per parameter set.
    std::set<SplitParams> seen;
    std::vector<SplitReport> out;
    for (const auto& part : parts)
        for (const auto& hit : part)
            if (seen.insert(hit.params).second) out.push_back(check_split(h, hit.rows));
    return out;
}

Srg16Class classify_srg16(const IntMatrix& a) {
    auto p = srg_parameters(a);
    if (!p || !(*p == SrgParams{16, 6, 2, 2}))
        fail(ErrorCode::WrongParameters, "input is not an SRG(16,6,2,2)" + (p ? " but " + p->str() : std::string()));
    std::size_t w = max_clique(Graph::from_adjacency(a)).size();
    if (w == 4) return Srg16Class::Lattice;
    if (w == 3) return Srg16Class::Shrikhande;
    fail(ErrorCode::WrongParameters, "unexpected clique number " + std::to_string(w));
}

}  // namespace bsh
