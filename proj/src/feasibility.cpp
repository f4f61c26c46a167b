#include "bsh/feasibility.hpp"

#include "bsh/bundled_data.hpp"
#include "bsh/error.hpp"
#include "bsh/finite_field.hpp"
#include "bsh/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <tuple>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace bsh {

const char* status_name(FeasibleStatus s) {
    switch (s) {
        case FeasibleStatus::ExistsByConstruction: return "exists-by-construction";
        case FeasibleStatus::ExcludedMod4Sum: return "excluded-mod4-sum";
        case FeasibleStatus::ExcludedMod4Diff: return "excluded-mod4-diff";
        case FeasibleStatus::ExcludedEigsearch: return "excluded-eigsearch";
        case FeasibleStatus::Open: return "open";
    }
    return "?";
}

std::string FeasibleRow::annotation() const {
    switch (status) {
        case FeasibleStatus::ExistsByConstruction: return "E";
        case FeasibleStatus::Open: return "";
        default: return "NE";
    }
}

namespace {

long long mod4(long long x) { return ((x % 4) + 4) % 4; }

std::optional<long long> isqrt_exact(long long v) {
    if (v < 0) return std::nullopt;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    if (r * r != v) return std::nullopt;
    return r;
}

std::optional<unsigned> log2_exact(long long v) {
    if (v < 1 || (v & (v - 1)) != 0) return std::nullopt;
    unsigned e = 0;
    while ((1LL << e) < v) ++e;
    return e;
}

bool known_order(long long m) { return m >= 1 && m <= (1LL << 30) && hadamard_order_known(static_cast<unsigned>(m)); }

RowSet complement_of(std::size_t n, const RowSet& rows) {
    std::set<std::size_t> s(rows.begin(), rows.end());
    RowSet out;
    for (std::size_t i = 0; i < n; ++i)
        if (!s.count(i)) out.push_back(i);
    return out;
}

}  // namespace

std::string Witness::describe() const {
    const std::string ms = std::to_string(m);
    switch (kind) {
        case WitnessKind::Twin: return "twin_sylvester(m=" + ms + ") b=-a block";
        case WitnessKind::TwinComplement: return "complement of the twin_sylvester(m=" + ms + ") b=-a block";
        case WitnessKind::TwinDeleted: return "all-ones deletion on twin_sylvester(m=" + ms + ")";
        case WitnessKind::TwinComplementDeleted:
            return "all-ones deletion on the complement of twin_sylvester(m=" + ms + ")";
        case WitnessKind::KronLarge: return "kron_square(order " + ms + ", large)";
        case WitnessKind::KronSmall: return "kron_square(order " + ms + ", small)";
        case WitnessKind::Gram: return "gram_construction(order " + ms + ")";
        case WitnessKind::CoreTensor: return "core_tensor(order " + ms + ", order " + std::to_string(m2) + ")";
        case WitnessKind::TwoRow: return "two_row_split(order " + ms + ")";
        case WitnessKind::SkewCore: return "skew_core_bsh(q=" + ms + ")";
    }
    return "?";
}

std::optional<Witness> find_witness(const SplitParams& p) {
    const long long n = p.n, l = p.ell, a = p.a, b = p.b;
    auto root = isqrt_exact(n);
    if (root) {
        const long long r = *root;
        if (auto e = log2_exact(r); e && *e >= 1) {
            const long long m = *e;
            if (b == -a && a == r / 2) {
                if (l == r * (r - 1) / 2) return Witness{WitnessKind::Twin, m};
                if (l == (n + r) / 2) return Witness{WitnessKind::TwinComplement, m};
            }
            if (m >= 2 && a == r / 2 - 1 && b == -r / 2 - 1) {
                if (l == n - r * (r - 1) / 2 - 1) return Witness{WitnessKind::TwinDeleted, m};
                if (l == (n - r) / 2 - 1) return Witness{WitnessKind::TwinComplementDeleted, m};
            }
        }
        if (r >= 2 && known_order(r)) {
            if (l == (r - 1) * (r - 1) && a == 1 && b == 1 - r) return Witness{WitnessKind::KronLarge, r};
            if (l == 2 * r - 2 && a == r - 2 && b == -2) return Witness{WitnessKind::KronSmall, r};
            if (l == r && a == r && b == 0) return Witness{WitnessKind::Gram, r};
        }
    }
    if (a == 0 && b < 0) {
        const long long k = -b;
        if (n % k == 0) {
            const long long m = n / k;
            if (m >= 2 && l == k * (m - 1) && known_order(k) && known_order(m))
                return Witness{WitnessKind::CoreTensor, k, m};
        }
    }
    if (n >= 4 && l == n - 2 && a == 0 && b == -2 && known_order(n)) return Witness{WitnessKind::TwoRow, n};
    if (b == -1 && a == l && l * (l + 1) == n && l % 4 == 3 && prime_power(static_cast<int>(l)))
        return Witness{WitnessKind::SkewCore, l};
    return std::nullopt;
}

BshInstance build_witness(const Witness& w) {
    const unsigned m = static_cast<unsigned>(w.m);
    switch (w.kind) {
        case WitnessKind::Twin: return twin_sylvester(m).part(2);
        case WitnessKind::TwinComplement: {
            TwinSylvester t = twin_sylvester(m);
            RowSet rows = complement_of(t.h.order(), t.h2_rows);
            SplitParams p = check_split(t.h, rows).params;
            return BshInstance(t.h, rows, p);
        }
        case WitnessKind::TwinDeleted: {
            TwinSylvester t = twin_sylvester(m);
            SplitReport d = delete_allones_transform(t.h, t.part(2).report);
            return BshInstance(t.h, d.rows, d.params);
        }
        case WitnessKind::TwinComplementDeleted: {
            TwinSylvester t = twin_sylvester(m);
            // Switch a row of the block to all-ones so it lies outside the complement.
            HadamardMatrix sw = switch_to_row(t.h, t.h2_rows.front());
            SplitReport c = check_split(sw, complement_of(sw.order(), t.h2_rows));
            SplitReport d = delete_allones_transform(sw, c);
            return BshInstance(sw, d.rows, d.params);
        }
        case WitnessKind::KronLarge: return kron_square(normalize(hadamard_of_order(m)), KronVariant::Large);
        case WitnessKind::KronSmall: return kron_square(normalize(hadamard_of_order(m)), KronVariant::Small);
        case WitnessKind::Gram: return gram_construction(normalize(hadamard_of_order(m)));
        case WitnessKind::CoreTensor:
            return core_tensor(hadamard_of_order(m), normalize(hadamard_of_order(static_cast<unsigned>(w.m2))));
        case WitnessKind::TwoRow: return two_row_split(hadamard_of_order(m));
        case WitnessKind::SkewCore: return skew_core_bsh(paley_skew_core(m));
    }
    fail(ErrorCode::PreconditionViolation, "unknown witness kind");
}

FilterVerdict filter_mod4_sum(long long n, long long ell, long long a) {
    require(1 < ell && ell < n - 1, "mod-4 sum filter needs 1 < ℓ < n−1");
    if (mod4(ell + a) != 0) return {true, "l+a = " + std::to_string(ell + a) + " is not 0 mod 4"};
    return {false, ""};
}

FilterVerdict filter_mod4_diff(long long n, long long ell, long long a) {
    require(1 < ell && ell < n - 1, "mod-4 difference filter needs 1 < ℓ < n−1");
    if (a > 1 && mod4(ell - a) != 0)
        return {true, "l-a = " + std::to_string(ell - a) + " is not 0 mod 4 with a > 1"};
    return {false, ""};
}

SignPattern solve_sign_pattern(SignPatternKind kind, long long ell, long long a) {
    // Rows: all-ones column, i-th column and j-th column sign patterns over the blocks x, y, z, w.
    FieldMatrix<Rational> m{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
    Rational L(integer(ell)), A(integer(a));
    std::vector<Rational> rhs{L, A, A, kind == SignPatternKind::Sum ? Rational(-A) : A};
    auto x = solve(m, rhs);
    SignPattern out;
    out.feasible = true;
    for (int i = 0; i < 4; ++i) {
        out.xyzw[i] = (*x)[i];
        out.feasible = out.feasible && is_integer(out.xyzw[i]) && out.xyzw[i] >= 0;
    }
    return out;
}

namespace {

template <class Fn>
std::vector<FeasibleRow> parallel_over_n(long long max_n, unsigned workers, Fn per_n) {
    std::vector<long long> ns;
    for (long long n = 4; n <= max_n; n += 4) ns.push_back(n);
    std::vector<std::vector<FeasibleRow>> parts(ns.size());
    workers = std::max(1u, workers);
    if (workers == 1) {
        for (std::size_t i = 0; i < ns.size(); ++i) parts[i] = per_n(ns[i]);
    } else {
        std::mutex mu;
        std::size_t next = 0;
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i;
                    {
                        std::lock_guard<std::mutex> lock(mu);
                        if (next >= ns.size()) return;
                        i = next++;
                    }
                    auto rows = per_n(ns[i]);
                    std::lock_guard<std::mutex> lock(mu);
                    parts[i] = std::move(rows);
                }
            });
        for (auto& t : pool) t.join();
    }
    std::vector<FeasibleRow> out;
    for (auto& p : parts)
        for (auto& r : p) out.push_back(std::move(r));
    std::stable_sort(out.begin(), out.end(), [](const FeasibleRow& x, const FeasibleRow& y) {
        return std::tie(x.params.n, x.params.ell, x.params.a) < std::tie(y.params.n, y.params.ell, y.params.a);
    });
    return out;
}

void attach_witness(FeasibleRow& row) {
    row.witness = find_witness(row.params);
    if (row.witness) {
        row.status = FeasibleStatus::ExistsByConstruction;
        row.condition = row.witness->describe();
    }
}

}  // namespace

std::vector<FeasibleRow> enumerate_seidel(long long max_n, unsigned workers) {
    require(max_n >= 4, "max_n must be at least 4");
    return parallel_over_n(max_n, workers, [](long long n) {
        std::vector<FeasibleRow> rows;
        for (long long l = 2; l <= n / 2; ++l) {
            long long num = l * (n - l);
            if (num % (n - 1) != 0) continue;
            auto a = isqrt_exact(num / (n - 1));
            if (!a || *a < 1 || l == *a * *a) continue;
            SeidelDerivation d{};
            try {
                d = derive_seidel(n, l, *a);
            } catch (const Error&) {
                continue;
            }
            FeasibleRow row;
            row.params = {n, l, *a, -*a};
            row.srg = d.srg;
            auto sum = filter_mod4_sum(n, l, *a);
            auto diff = filter_mod4_diff(n, l, *a);
            if (sum.excluded) {
                row.status = FeasibleStatus::ExcludedMod4Sum;
                row.condition = sum.condition;
            } else if (diff.excluded) {
                row.status = FeasibleStatus::ExcludedMod4Diff;
                row.condition = diff.condition;
            } else {
                attach_witness(row);
            }
            rows.push_back(std::move(row));
        }
        return rows;
    });
}

namespace {

std::optional<EigCertificate> order36_certificate(const SrgParams& s) {
    // (36,25,1,−5) is the complementary split of (36,11,5,−1) on the same H, whose graph is the bundled one.
    if (s == SrgParams{36, 10, 4, 2}) return EigCertificate{"srg-36-10-4-2", true, {36, 10, 4, -2}};
    if (s == SrgParams{36, 25, 16, 20}) return EigCertificate{"srg-36-10-4-2", true, {36, 11, 5, -1}};
    if (s == SrgParams{36, 21, 12, 12})
        return EigCertificate{"catalog of the 180 SRG(36,21,12,12)", false, {36, 14, 2, -4}};
    if (s == SrgParams{36, 20, 10, 12})
        return EigCertificate{"catalog of the 32548 SRG(36,20,10,12)", false, {36, 20, 2, -4}};
    return std::nullopt;
}

}  // namespace

std::vector<FeasibleRow> enumerate_case_a(long long max_n, unsigned workers) {
    require(max_n >= 4, "max_n must be at least 4");
    return parallel_over_n(max_n, workers, [](long long n) {
        std::vector<FeasibleRow> rows;
        for (long long l = 2; l < n - 1; ++l)
            for (long long a = 1; a < l; ++a) {
                CaseDerivation d{};
                try {
                    d = derive_srg_case_a(n, l, a);
                } catch (const Error&) {
                    continue;
                }
                if (d.b >= a || d.b == -a || !d.srg.is_feasible()) continue;
                FeasibleRow row;
                row.params = {n, l, a, d.b};
                row.srg = d.srg;
                attach_witness(row);
                if (!row.witness) {
                    if (auto cert = order36_certificate(d.srg)) {
                        row.status = FeasibleStatus::ExcludedEigsearch;
                        row.certificate = cert;
                        row.condition = "no " + std::to_string(cert->searched.ell) +
                                        " mutually orthogonal +-1 eigenvectors for " + cert->searched.str() +
                                        " over the " + cert->srg_source +
                                        (cert->recomputable ? "" : " (catalog not bundled)");
                    }
                }
                rows.push_back(std::move(row));
            }
        return rows;
    });
}

IntMatrix complement_graph(const IntMatrix& a) {
    const std::size_t n = a.rows();
    return IntMatrix::ones(n) - IntMatrix::identity(n) - a;
}

EigSearchResult eigvec_search(const IntMatrix& adj, long long ell, long long a, long long b, std::size_t budget) {
    require(adj.square() && adj.is_symmetric() && adj.is_zero_one(), "adjacency must be symmetric 0/1");
    const std::size_t n = adj.rows();
    require(ell >= 1 && static_cast<std::size_t>(ell) <= n, "ℓ must lie in 1..n");
    require(n <= 4096, "eigvec_search supports up to 4096 vertices");

    // B − nI with B = ℓI + (a−b)A + b(J−I).
    FieldMatrix<Rational> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long long v = i == j ? ell - static_cast<long long>(n) : (adj(i, j) == 1 ? a : b);
            m[i][j] = Rational(integer(v));
        }
    auto pivots = rref(m);
    const std::size_t nullity = n - pivots.size();
    EigSearchResult out;
    out.multiplicity = nullity;
    if (nullity != static_cast<std::size_t>(ell))
        fail(ErrorCode::MultiplicityMismatch, "eigenvalue " + std::to_string(n) + " has multiplicity " +
                                                  std::to_string(nullity) + ", expected " + std::to_string(ell));

    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> freev;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) freev.push_back(j);
    const std::size_t f = freev.size(), d = pivots.size();

    // Integer coefficients: D·x_pivot(r) = Σ c[r][t]·x_free(t), each x = ±1.
    Integer den = 1;
    for (std::size_t r = 0; r < d; ++r)
        for (auto j : freev) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m[r][j].get_den_mpz_t());
    require(mpz_fits_slong_p(den.get_mpz_t()), "eigenspace denominators too large");
    const long long D = den.get_si();
    std::vector<std::vector<long long>> c(d, std::vector<long long>(f));
    std::vector<std::vector<long long>> suffix(d, std::vector<long long>(f + 1, 0));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t t = 0; t < f; ++t) {
            Rational v = -m[r][freev[t]] * Rational(den);
            require(is_integer(v) && mpz_fits_slong_p(v.get_num_mpz_t()), "coefficient overflow");
            c[r][t] = v.get_num().get_si();
        }
        for (std::size_t t = f; t-- > 0;) suffix[r][t] = suffix[r][t + 1] + std::llabs(c[r][t]);
    }

    // Depth-first over the free coordinates, first one fixed to +1 (sign normalization).
    std::vector<std::vector<int>> found;
    std::vector<int> x(f, 1);
    std::vector<long long> partial(d, 0);
    std::function<void(std::size_t)> dfs = [&](std::size_t t) {
        for (std::size_t r = 0; r < d; ++r) {
            long long rest = suffix[r][t];
            if (std::llabs(D - partial[r]) > rest && std::llabs(-D - partial[r]) > rest) return;
        }
        if (t == f) {
            if (found.size() >= budget)
                fail(ErrorCode::BudgetExceeded, "more than " + std::to_string(budget) + " +-1 eigenvectors");
            std::vector<int> v(n);
            for (std::size_t s = 0; s < f; ++s) v[freev[s]] = x[s];
            for (std::size_t r = 0; r < d; ++r) v[pivots[r]] = partial[r] > 0 ? 1 : -1;
            found.push_back(std::move(v));
            return;
        }
        for (int s : {1, -1}) {
            if (t == 0 && s == -1) break;
            x[t] = s;
            for (std::size_t r = 0; r < d; ++r) partial[r] += s * c[r][t];
            dfs(t + 1);
            for (std::size_t r = 0; r < d; ++r) partial[r] -= s * c[r][t];
        }
    };
    dfs(0);
    out.candidates = found.size();

    // Orthogonality graph on sign-packed vectors.
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> bits(found.size() * words, 0);
    for (std::size_t i = 0; i < found.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (found[i][j] < 0) bits[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
    Graph g(found.size());
    for (std::size_t i = 0; i < found.size(); ++i)
        for (std::size_t j = i + 1; j < found.size(); ++j) {
            std::size_t diff = 0;
            for (std::size_t w = 0; w < words; ++w)
                diff += static_cast<std::size_t>(__builtin_popcountll(bits[i * words + w] ^ bits[j * words + w]));
            if (2 * diff == n) g.add_edge(i, j);
        }
    auto clique = max_clique(g);
    out.max_set = clique.size();
    for (auto v : clique) out.witness.push_back(found[v]);
    if (out.max_set == static_cast<std::size_t>(ell)) {
        std::vector<Integer> e;
        for (const auto& row : out.witness)
            for (int v : row) e.push_back(v);
        IntMatrix h1(out.max_set, n, e);
        IntMatrix bm = IntMatrix::generate(n, n, [&](std::size_t i, std::size_t j) -> Integer {
            return integer(i == j ? ell : (adj(i, j) == 1 ? a : b));
        });
        out.witness_gram_matches = gram(h1) == bm;
    }
    return out;
}

}  // namespace bsh
