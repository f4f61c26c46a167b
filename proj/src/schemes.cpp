#include "bsh/schemes.hpp"

#include "bsh/error.hpp"
#include "bsh/graph.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace bsh {

namespace {

using GMatrix = FieldMatrix<GaussRational>;
using I64 = std::vector<std::int64_t>;

I64 as_i64(const IntMatrix& m) {
    auto v = m.to_i64();
    require(v.has_value(), "matrix entries exceed 64 bits");
    return *v;
}

// C = A·B for n×n int64 row-major buffers.
I64 product(const I64& a, const I64& b, std::size_t n) {
    I64 c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < n; ++t) {
            std::int64_t x = a[i * n + t];
            if (x == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i * n + j] += x * b[t * n + j];
        }
    return c;
}

std::string witness(int condition, const std::string& what) {
    return "condition " + std::to_string(condition) + ": " + what;
}

void check_split_usable(const BshInstance& bsh) {
    if (!bsh.report.checks.rowsum_zero)
        fail(ErrorCode::PreconditionViolation, "split rows must have zero row sums (C_i J = O)");
}

int adjacency_class(const IntMatrix& a, std::size_t x, std::size_t y) {
    if (x == y) return 0;
    return a(x, y) != 0 ? 1 : 2;
}

void check_square_shape(const LatinSquare& l, int order, int min_symbol) {
    if (l.order != order || l.min_symbol != min_symbol || !is_latin(l))
        fail(ErrorCode::PreconditionViolation, "expected a Latin square of order " + std::to_string(order) +
                                                   " on symbols from " + std::to_string(min_symbol));
}

Scheme build_4class(const BshInstance& bsh, const LatinSquare& l, bool skew) {
    const SplitParams& sp = bsh.report.params;
    if (sp.ell % 2 == 0) fail(ErrorCode::OddityViolation, "four-class construction needs odd ℓ, got " + std::to_string(sp.ell));
    check_split_usable(bsh);
    const int v = static_cast<int>(sp.ell) + 1;
    check_square_shape(l, v, 0);
    if (!is_symmetric(l) || !has_constant_diagonal(l, 0))
        fail(ErrorCode::PreconditionViolation, "Latin square must be symmetric with constant diagonal 0");

    AuxiliarySet aux = auxiliary_matrices(bsh.h);
    IntMatrix lifted = lift_latin(aux, l, bsh.split_rows);
    if (!lifted_gram_holds(lifted, bsh.report, v)) fail(ErrorCode::AxiomFailure, "lifted Latin square Gram identity");

    const std::size_t n = bsh.h.order(), total = n * v;
    const IntMatrix& a = bsh.report.adjacency;
    std::vector<std::uint8_t> labels(total * total);
    for (std::size_t x = 0; x < total; ++x)
        for (std::size_t y = 0; y < total; ++y) {
            std::size_t p = x / n, q = y / n;
            int cls;
            if (p == q) {
                cls = adjacency_class(a, x % n, y % n);
            } else {
                long e = lifted(x, y).get_si();
                if (skew && p > q) e = -e;
                if (e != 1 && e != -1) fail(ErrorCode::AxiomFailure, "lifted entry is not ±1 off the diagonal blocks");
                cls = e == 1 ? 3 : 4;
            }
            labels[x * total + y] = static_cast<std::uint8_t>(cls);
        }
    return Scheme::from_relations(total, 4, std::move(labels));
}

struct FamilyGram {
    std::vector<IntMatrix> lifted;
    std::size_t block = 0;  // rows of one lifted square
};

FamilyGram lift_family(const BshInstance& bsh, const UfsFamily& family) {
    if (family.size() < 2) fail(ErrorCode::PreconditionViolation, "need at least two Latin squares");
    if (!is_mutually_ufs(family)) fail(ErrorCode::UfsViolation, "Latin squares are not mutually UFS");
    AuxiliarySet aux = auxiliary_matrices(bsh.h);
    FamilyGram g;
    for (const LatinSquare& l : family) {
        g.lifted.push_back(lift_latin(aux, l, bsh.split_rows));
        if (!lifted_gram_holds(g.lifted.back(), bsh.report, l.order))
            fail(ErrorCode::AxiomFailure, "lifted Latin square Gram identity");
    }
    g.block = g.lifted[0].rows();
    return g;
}

// Classes for the five- and six-class constructions; G = (L̃_i L̃_jᵀ) must equal
// nℓA₀ + n(aA₁ + bA₂) + n(A₃ − A₄) on the classes it covers.
Scheme build_from_family(const BshInstance& bsh, const UfsFamily& family, bool six) {
    const SplitParams& sp = bsh.report.params;
    FamilyGram fg = lift_family(bsh, family);
    const std::size_t n = bsh.h.order(), f = family.size(), blk = fg.block, total = f * blk;
    const IntMatrix& a = bsh.report.adjacency;
    const long long nn = static_cast<long long>(n);
    std::vector<std::uint8_t> labels(total * total);
    for (std::size_t i = 0; i < f; ++i)
        for (std::size_t j = 0; j < f; ++j) {
            I64 g = as_i64(fg.lifted[i] * fg.lifted[j].transpose());
            for (std::size_t x = 0; x < blk; ++x)
                for (std::size_t y = 0; y < blk; ++y) {
                    const std::int64_t e = g[x * blk + y];
                    const bool same_row = x / n == y / n;
                    int cls;
                    std::int64_t expect;
                    if (i == j && same_row) {
                        cls = adjacency_class(a, x % n, y % n);
                        expect = nn * (cls == 0 ? sp.ell : cls == 1 ? sp.a : sp.b);
                    } else if (i == j) {
                        cls = 5;
                        expect = 0;
                    } else if (six && same_row) {
                        cls = 6;
                        expect = 0;
                    } else {
                        cls = e > 0 ? 3 : 4;
                        expect = e > 0 ? nn : -nn;
                    }
                    if (e != expect)
                        fail(ErrorCode::AxiomFailure, "Gram entry " + std::to_string(e) + " at block (" + std::to_string(i) +
                                                          "," + std::to_string(j) + ") does not fit the class decomposition");
                    labels[(i * blk + x) * total + j * blk + y] = static_cast<std::uint8_t>(cls);
                }
        }
    return Scheme::from_relations(total, six ? 6 : 5, std::move(labels));
}

// Faddeev–LeVerrier; coefficients c[0..n] with c[n] = 1.
std::vector<Rational> characteristic_polynomial(const FieldMatrix<Rational>& a) {
    const std::size_t n = a.size();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    FieldMatrix<Rational> m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t k = 1; k <= n; ++k) {
        FieldMatrix<Rational> am(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational s = 0;
                for (std::size_t t = 0; t < n; ++t) s += a[i][t] * m[t][j];
                am[i][j] = s;
            }
        for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
        m = am;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t t = 0; t < n; ++t) tr += a[i][t] * m[t][i];
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return c;
}

GaussRational eval(const std::vector<GaussRational>& c, const GaussRational& x) {
    GaussRational s(0);
    for (std::size_t i = c.size(); i-- > 0;) s = s * x + c[i];
    return s;
}

// Divides by (x − r), assuming r is a root.
std::vector<GaussRational> deflate(const std::vector<GaussRational>& c, const GaussRational& r) {
    std::vector<GaussRational> q(c.size() - 1, GaussRational(0));
    GaussRational carry(0);
    for (std::size_t i = c.size(); i-- > 1;) {
        carry = carry * r + c[i];
        q[i - 1] = carry;
    }
    return q;
}

// Distinct roots; all of them must be Gaussian integers of modulus at most bound.
std::vector<GaussRational> gaussian_integer_roots(const std::vector<Rational>& coeffs, long bound) {
    std::vector<GaussRational> c(coeffs.begin(), coeffs.end());
    std::vector<GaussRational> roots;
    auto take = [&](const GaussRational& r) {
        bool found = false;
        while (c.size() > 1 && eval(c, r).is_zero()) {
            c = deflate(c, r);
            found = true;
        }
        if (found) roots.push_back(r);
    };
    for (long x = -bound; x <= bound && c.size() > 1; ++x) take(GaussRational(Rational(x)));
    for (long y = 1; y <= bound && c.size() > 1; ++y)
        for (long x = -bound; x <= bound && c.size() > 1; ++x) {
            if (x * x + y * y > bound * bound) continue;
            take(GaussRational(Rational(x), Rational(y)));
            take(GaussRational(Rational(x), Rational(-y)));
        }
    if (c.size() > 1) fail(ErrorCode::IrrationalEigenvalue, "eigenvalue outside the Gaussian integers");
    return roots;
}

// Basis of the null space of m (rows × cols).
std::vector<std::vector<GaussRational>> kernel(GMatrix m, std::size_t cols) {
    auto piv = rref(m);
    std::vector<char> is_pivot(cols, 0);
    for (std::size_t c : piv) is_pivot[c] = 1;
    std::vector<std::vector<GaussRational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<GaussRational> v(cols, GaussRational(0));
        v[free] = GaussRational(1);
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

using Vec = std::vector<GaussRational>;

// Product of two algebra elements given in the A-basis.
Vec algebra_product(const Scheme& s, const Vec& x, const Vec& y) {
    const int d = s.classes();
    Vec z(d + 1, GaussRational(0));
    for (int i = 0; i <= d; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j <= d; ++j) {
            if (y[j].is_zero()) continue;
            GaussRational xy = x[i] * y[j];
            for (int k = 0; k <= d; ++k)
                if (long long p = s.p(i, j, k)) z[k] += xy * GaussRational(Rational(static_cast<long>(p)));
        }
    }
    return z;
}

GaussRational gr(const Rational& r) { return GaussRational(r); }

Rational q(long long num, long long den = 1) { return make_rational(integer(num), integer(den)); }

}  // namespace

AuxiliarySet auxiliary_matrices(const HadamardMatrix& h) {
    const std::size_t n = h.order();
    AuxiliarySet aux;
    aux.order = n;
    std::vector<I64> c;
    for (std::size_t i = 0; i < n; ++i) {
        IntMatrix r = h.matrix().select_rows({i});
        aux.c.push_back(r.transpose() * r);
        c.push_back(as_i64(aux.c.back()));
    }
    const std::int64_t nn = static_cast<std::int64_t>(n);
    I64 sum(n * n, 0);
    for (const I64& ci : c)
        for (std::size_t t = 0; t < n * n; ++t) sum[t] += ci[t];
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (sum[x * n + y] != (x == y ? nn : 0)) fail(ErrorCode::PreconditionViolation, "auxiliary matrices do not sum to nI");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            I64 prod = product(c[i], c[j], n);
            for (std::size_t t = 0; t < n * n; ++t)
                if (prod[t] != (i == j ? nn * c[i][t] : 0))
                    fail(ErrorCode::PreconditionViolation,
                         "auxiliary product C_" + std::to_string(i) + "·C_" + std::to_string(j) + " is wrong");
        }
    return aux;
}

SplitAuxiliaryChecks check_split_auxiliary(const AuxiliarySet& aux, const SplitReport& split) {
    const std::size_t n = aux.order;
    const SplitParams& sp = split.params;
    SplitAuxiliaryChecks out;
    IntMatrix sum(n, n);
    for (std::size_t r : split.rows) sum = sum + aux.c[r];
    const IntMatrix& a = split.adjacency;
    IntMatrix id = IntMatrix::identity(n), j = IntMatrix::ones(n);
    out.sum_matches = sum == id.scale(integer(sp.ell)) + a.scale(integer(sp.a)) + (j - a - id).scale(integer(sp.b));
    out.annihilates_j = true;
    // r_i is an eigenvector of A with eigenvalue (n−ℓ+b)/(a−b) once C_i J = O.
    const long long num = sp.n - sp.ell + sp.b, den = sp.a - sp.b;
    out.adjacency_commutes = den != 0 && num % den == 0;
    for (std::size_t r : split.rows) {
        const IntMatrix& c = aux.c[r];
        out.annihilates_j = out.annihilates_j && (c * j).is_zero();
        if (!out.adjacency_commutes) break;
        IntMatrix target = c.scale(integer(num / den));
        out.adjacency_commutes = a * c == target && c * a == target;
    }
    return out;
}

IntMatrix lift_latin(const AuxiliarySet& aux, const LatinSquare& l, const RowSet& split) {
    const std::size_t n = aux.order, v = static_cast<std::size_t>(l.order);
    for (int s : l.cells)
        if (s < 0 || s > static_cast<int>(split.size()))
            fail(ErrorCode::PreconditionViolation, "symbol " + std::to_string(s) + " has no split row");
    std::vector<Integer> e(v * n * v * n, Integer(0));
    const std::size_t w = v * n;
    for (std::size_t p = 0; p < v; ++p)
        for (std::size_t q = 0; q < v; ++q) {
            int s = l(static_cast<int>(p), static_cast<int>(q));
            if (s == 0) continue;
            const IntMatrix& c = aux.c[split[s - 1]];
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) e[(p * n + x) * w + q * n + y] = c(x, y);
        }
    return IntMatrix(w, w, std::move(e));
}

bool lifted_gram_holds(const IntMatrix& lifted, const SplitReport& split, int order) {
    const SplitParams& sp = split.params;
    const std::size_t n = static_cast<std::size_t>(sp.n);
    const IntMatrix& a = split.adjacency;
    IntMatrix id = IntMatrix::identity(n), j = IntMatrix::ones(n);
    IntMatrix inner = id.scale(integer(sp.ell)) + a.scale(integer(sp.a)) + (j - a - id).scale(integer(sp.b));
    IntMatrix expect = IntMatrix::identity(static_cast<std::size_t>(order)).kronecker(inner).scale(integer(sp.n));
    return lifted * lifted.transpose() == expect;
}

IntMatrix Scheme::matrix(int i) const {
    std::vector<std::int64_t> e(v_ * v_);
    for (std::size_t t = 0; t < v_ * v_; ++t) e[t] = labels_[t] == i ? 1 : 0;
    return IntMatrix::from_i64(v_, v_, e);
}

Scheme Scheme::from_relations(std::size_t v, int d, std::vector<std::uint8_t> labels) {
    require(labels.size() == v * v && d >= 1 && d < 255, "relation matrix shape");
    const std::size_t w = static_cast<std::size_t>(d) + 1;
    Scheme s;
    s.v_ = v;
    s.d_ = d;
    s.labels_ = std::move(labels);
    const auto& lab = s.labels_;

    std::vector<std::size_t> rep(w, v * v);
    for (std::size_t x = 0; x < v; ++x)
        for (std::size_t y = 0; y < v; ++y) {
            int c = lab[x * v + y];
            if (c > d) fail(ErrorCode::AxiomFailure, witness(2, "relation index " + std::to_string(c) + " out of range"));
            if ((c == 0) != (x == y))
                fail(ErrorCode::AxiomFailure, witness(1, "A_0 is not the identity at (" + std::to_string(x) + "," + std::to_string(y) + ")"));
            if (rep[c] == v * v) rep[c] = x * v + y;
        }
    for (std::size_t c = 0; c < w; ++c)
        if (rep[c] == v * v) fail(ErrorCode::AxiomFailure, witness(2, "class " + std::to_string(c) + " is empty"));

    s.transpose_.assign(w, -1);
    for (std::size_t x = 0; x < v; ++x)
        for (std::size_t y = 0; y < v; ++y) {
            int c = lab[x * v + y], t = lab[y * v + x];
            if (s.transpose_[c] == -1) s.transpose_[c] = t;
            if (s.transpose_[c] != t) fail(ErrorCode::AxiomFailure, witness(3, "transpose of A_" + std::to_string(c) + " is not a class"));
        }
    s.symmetric_ = true;
    for (std::size_t c = 0; c < w; ++c) s.symmetric_ = s.symmetric_ && s.transpose_[c] == static_cast<int>(c);

    auto counts = [&](std::size_t x, std::size_t y, std::vector<long long>& cnt) {
        std::fill(cnt.begin(), cnt.end(), 0);
        const std::uint8_t* row = &lab[x * v];
        for (std::size_t z = 0; z < v; ++z) ++cnt[row[z] * w + lab[z * v + y]];
    };
    s.p_.assign(w * w * w, 0);
    std::vector<long long> cnt(w * w);
    for (std::size_t k = 0; k < w; ++k) {
        counts(rep[k] / v, rep[k] % v, cnt);
        for (std::size_t ij = 0; ij < w * w; ++ij) s.p_[ij * w + k] = cnt[ij];
    }

    unsigned workers = std::max(1u, std::min(16u, std::thread::hardware_concurrency()));
    std::atomic<bool> bad{false};
    std::mutex mu;
    std::string failure;
    auto worker = [&](unsigned id) {
        std::vector<long long> local(w * w);
        for (std::size_t x = id; x < v && !bad; x += workers)
            for (std::size_t y = 0; y < v; ++y) {
                counts(x, y, local);
                std::size_t k = lab[x * v + y];
                for (std::size_t ij = 0; ij < w * w; ++ij)
                    if (local[ij] != s.p_[ij * w + k]) {
                        std::lock_guard<std::mutex> g(mu);
                        if (!bad.exchange(true))
                            failure = "A_" + std::to_string(ij / w) + "·A_" + std::to_string(ij % w) + " is not constant on A_" +
                                      std::to_string(k) + " (pair " + std::to_string(x) + "," + std::to_string(y) + ")";
                        return;
                    }
            }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker, t);
    for (auto& t : pool) t.join();
    if (bad) fail(ErrorCode::AxiomFailure, witness(4, failure));

    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j)
            for (int k = 0; k <= d; ++k)
                if (s.p(i, j, k) != s.p(j, i, k))
                    fail(ErrorCode::AxiomFailure, witness(5, "A_" + std::to_string(i) + " and A_" + std::to_string(j) + " do not commute"));
    return s;
}

Scheme verify_scheme(const std::vector<IntMatrix>& matrices) {
    require(matrices.size() >= 2, "need at least two matrices");
    const std::size_t v = matrices[0].rows();
    for (const IntMatrix& m : matrices) require(m.rows() == v && m.cols() == v, "matrices must be square of equal order");
    std::vector<std::uint8_t> labels(v * v, 0);
    std::vector<I64> vals;
    for (const IntMatrix& m : matrices) vals.push_back(as_i64(m));
    for (std::size_t t = 0; t < v * v; ++t) {
        int hits = 0;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            std::int64_t e = vals[i][t];
            if (e != 0 && e != 1) fail(ErrorCode::AxiomFailure, witness(2, "A_" + std::to_string(i) + " is not a 0/1 matrix"));
            if (e == 1) {
                ++hits;
                labels[t] = static_cast<std::uint8_t>(i);
            }
        }
        if (hits != 1)
            fail(ErrorCode::AxiomFailure,
                 witness(2, "entry (" + std::to_string(t / v) + "," + std::to_string(t % v) + ") is covered " + std::to_string(hits) + " times"));
    }
    if (matrices[0] != IntMatrix::identity(v)) fail(ErrorCode::AxiomFailure, witness(1, "A_0 is not the identity"));
    return Scheme::from_relations(v, static_cast<int>(matrices.size()) - 1, std::move(labels));
}

Scheme build_4class_symmetric(const BshInstance& bsh, const LatinSquare& l) { return build_4class(bsh, l, false); }
Scheme build_4class_nonsymmetric(const BshInstance& bsh, const LatinSquare& l) { return build_4class(bsh, l, true); }

Scheme build_5class(const BshInstance& bsh, const UfsFamily& family) {
    check_split_usable(bsh);
    for (const LatinSquare& l : family) check_square_shape(l, static_cast<int>(bsh.report.params.ell), 1);
    return build_from_family(bsh, family, false);
}

Scheme build_6class(const BshInstance& bsh, const UfsFamily& family) {
    check_split_usable(bsh);
    for (const LatinSquare& l : family) {
        check_square_shape(l, static_cast<int>(bsh.report.params.ell) + 1, 0);
        if (!has_constant_diagonal(l, 0)) fail(ErrorCode::PreconditionViolation, "Latin squares need constant diagonal 0");
    }
    return build_from_family(bsh, family, true);
}

bool five_class_identity_holds(const Scheme& s, const SplitParams& p, int f) {
    IntMatrix m = s.matrix(3) - s.matrix(4);
    IntMatrix inner = s.matrix(0).scale(integer(p.ell)) + s.matrix(1).scale(integer(p.a)) + s.matrix(2).scale(integer(p.b));
    IntMatrix rhs = inner.scale(integer(p.n * (f - 1))) + m.scale(integer(p.n * (f - 2)));
    return m * m == rhs;
}

bool Eigenmatrices::real() const {
    for (const auto& m : {p, q})
        for (const auto& row : m)
            for (const auto& e : row)
                if (!e.is_real()) return false;
    return true;
}

Eigenmatrices eigenmatrices(const Scheme& s) {
    const int d = s.classes();
    const std::size_t w = static_cast<std::size_t>(d) + 1;

    std::vector<std::vector<Vec>> spaces(1);
    for (std::size_t t = 0; t < w; ++t) {
        Vec e(w, GaussRational(0));
        e[t] = GaussRational(1);
        spaces[0].push_back(e);
    }
    for (int i = 1; i <= d; ++i) {
        if (spaces.size() == w) break;
        FieldMatrix<Rational> b(w, std::vector<Rational>(w));
        for (std::size_t j = 0; j < w; ++j)
            for (std::size_t k = 0; k < w; ++k) b[j][k] = Rational(static_cast<long>(s.p(i, static_cast<int>(j), static_cast<int>(k))));
        auto roots = gaussian_integer_roots(characteristic_polynomial(b), static_cast<long>(s.valency(i)));
        std::vector<std::vector<Vec>> next;
        for (const auto& basis : spaces) {
            if (basis.size() == 1) {
                next.push_back(basis);
                continue;
            }
            std::size_t found = 0;
            for (const GaussRational& lam : roots) {
                GMatrix m(w, Vec(basis.size(), GaussRational(0)));
                for (std::size_t r = 0; r < w; ++r)
                    for (std::size_t c = 0; c < basis.size(); ++c) {
                        GaussRational acc(0);
                        for (std::size_t t = 0; t < w; ++t)
                            if (!basis[c][t].is_zero()) acc += gr(b[r][t]) * basis[c][t];
                        m[r][c] = acc - lam * basis[c][r];
                    }
                auto ker = kernel(m, basis.size());
                if (ker.empty()) continue;
                std::vector<Vec> sub;
                for (const auto& coef : ker) {
                    Vec u(w, GaussRational(0));
                    for (std::size_t c = 0; c < basis.size(); ++c)
                        for (std::size_t t = 0; t < w; ++t) u[t] += coef[c] * basis[c][t];
                    sub.push_back(std::move(u));
                }
                found += sub.size();
                next.push_back(std::move(sub));
            }
            if (found != basis.size()) fail(ErrorCode::AxiomFailure, "intersection matrix is not diagonalizable");
        }
        spaces = std::move(next);
    }
    if (spaces.size() != w) fail(ErrorCode::AxiomFailure, "common eigenspaces are not one-dimensional");

    std::vector<Vec> rows;
    for (auto& sp : spaces) {
        Vec u = sp[0];
        GaussRational u0 = u[0];
        for (auto& x : u) x = x / u0;
        rows.push_back(std::move(u));
    }
    Vec trivial(w);
    for (std::size_t t = 0; t < w; ++t) trivial[t] = GaussRational(Rational(static_cast<long>(s.valency(static_cast<int>(t)))));
    auto it = std::find(rows.begin(), rows.end(), trivial);
    if (it == rows.end()) fail(ErrorCode::AxiomFailure, "no trivial eigenspace");
    std::iter_swap(rows.begin(), it);
    std::sort(rows.begin() + 1, rows.end());

    Eigenmatrices e;
    e.p = rows;
    auto inv = inverse(e.p);
    if (!inv) fail(ErrorCode::AxiomFailure, "eigenmatrix P is singular");
    const GaussRational vv(Rational(static_cast<long>(s.vertices())));
    e.q = *inv;
    for (auto& row : e.q)
        for (auto& x : row) x = x * vv;

    if (!pq_identity_holds(e, s.vertices())) fail(ErrorCode::AxiomFailure, "PQ ≠ |X|I");
    Rational msum = 0;
    for (std::size_t j = 0; j < w; ++j) {
        const GaussRational& m = e.q[0][j];
        if (!m.is_real() || !is_integer(m.re) || m.re <= 0) fail(ErrorCode::AxiomFailure, "multiplicity is not a positive integer");
        msum += m.re;
        for (std::size_t i = 0; i < w; ++i) {
            GaussRational k(Rational(static_cast<long>(s.valency(static_cast<int>(i)))));
            if (e.q[i][j] * k != m * e.p[j][i].conj()) fail(ErrorCode::AxiomFailure, "orthogonality relation fails");
        }
    }
    if (msum != Rational(static_cast<long>(s.vertices()))) fail(ErrorCode::AxiomFailure, "multiplicities do not sum to |X|");

    std::vector<Vec> idem(w, Vec(w));
    for (std::size_t j = 0; j < w; ++j)
        for (std::size_t i = 0; i < w; ++i) idem[j][i] = e.q[i][j] / vv;
    Vec total(w, GaussRational(0));
    for (std::size_t j = 0; j < w; ++j) {
        for (std::size_t t = 0; t < w; ++t) total[t] += idem[j][t];
        for (std::size_t l = 0; l < w; ++l) {
            Vec prod = algebra_product(s, idem[j], idem[l]);
            Vec expect = l == j ? idem[j] : Vec(w, GaussRational(0));
            if (prod != expect) fail(ErrorCode::AxiomFailure, "primitive idempotents are not orthogonal idempotents");
        }
        for (std::size_t i = 0; i < w; ++i) {
            Vec ai(w, GaussRational(0));
            ai[i] = GaussRational(1);
            Vec prod = algebra_product(s, ai, idem[j]);
            Vec expect = idem[j];
            for (auto& x : expect) x = x * e.p[j][i];
            if (prod != expect) fail(ErrorCode::AxiomFailure, "A_i E_j ≠ P_{j,i} E_j");
        }
    }
    Vec unit(w, GaussRational(0));
    unit[0] = GaussRational(1);
    if (total != unit) fail(ErrorCode::AxiomFailure, "idempotents do not sum to the identity");
    return e;
}

bool pq_identity_holds(const Eigenmatrices& e, std::size_t vertices) {
    const std::size_t w = e.p.size();
    if (e.q.size() != w) return false;
    const GaussRational vv(Rational(static_cast<long>(vertices)));
    for (std::size_t i = 0; i < w; ++i)
        for (std::size_t j = 0; j < w; ++j) {
            GaussRational s(0);
            for (std::size_t t = 0; t < w; ++t) s += e.p[i][t] * e.q[t][j];
            if (s != (i == j ? vv : GaussRational(0))) return false;
        }
    return true;
}

namespace {

struct ClosedTerms {
    Rational k1, k2, r1, r2, s1, s2, t;
};

ClosedTerms closed_terms(long long n, long long ell, long long a) {
    ClosedTerms c;
    Rational N(integer(n)), L(integer(ell)), A(integer(a));
    Rational d = (N - 1) * A * A + 2 * L * A + L * (N - L);
    c.t = L + A * (N - 1);
    c.k1 = L * (N - L - 1) * N / d;
    c.k2 = c.t * c.t / d;
    c.r1 = A * (N - L - 1) * N / d;
    c.r2 = -c.t * (N + A - L) / d;
    c.s1 = -(A + 1) * L * N / d;
    c.s2 = -(A - L) * c.t / d;
    return c;
}

GMatrix to_gauss(const std::vector<std::vector<Rational>>& m) {
    GMatrix out;
    for (const auto& row : m) out.emplace_back(row.begin(), row.end());
    return out;
}

}  // namespace

Eigenmatrices closed_form_4class(long long n, long long ell, long long a, bool nonsymmetric) {
    ClosedTerms c = closed_terms(n, ell, a);
    Rational N(integer(n)), L(integer(ell)), A(integer(a)), h = q(1, 2);
    Eigenmatrices e;
    e.p = to_gauss({{1, c.k1, c.k2, L * N * h, L * N * h},
                    {1, c.k1, c.k2, -N * h, -N * h},
                    {1, c.r1, c.r2, -N * h, N * h},
                    {1, c.r1, c.r2, N * h, -N * h},
                    {1, c.s1, c.s2, 0, 0}});
    Rational m2 = L * (L + 1) * (L - N - A) / (2 * c.t);
    e.q = to_gauss({{1, L, L * (L + 1) * h, L * (L + 1) * h, (L + 1) * (N - L - 1)},
                    {1, L, A * (L + 1) * h, A * (L + 1) * h, -(A + 1) * (L + 1)},
                    {1, L, m2, m2, (L - A) * (L + 1) * (N - L - 1) / c.t},
                    {1, -1, -(L + 1) * h, (L + 1) * h, 0},
                    {1, -1, (L + 1) * h, -(L + 1) * h, 0}});
    if (nonsymmetric) {
        const GaussRational i(Rational(0), Rational(1));
        for (int r : {2, 3})
            for (int col : {3, 4}) e.p[r][col] = e.p[r][col] * i;
        for (int r : {3, 4})
            for (int col : {2, 3}) e.q[r][col] = e.q[r][col] * i.conj();
    }
    return e;
}

Eigenmatrices closed_form_5class(long long n, long long ell, long long a, long long f) {
    ClosedTerms c = closed_terms(n, ell, a);
    Rational N(integer(n)), L(integer(ell)), A(integer(a)), F(integer(f)), h = q(1, 2);
    Eigenmatrices e;
    e.p = to_gauss({{1, c.k1, c.k2, (F - 1) * L * N * h, (F - 1) * L * N * h, (L - 1) * N},
                    {1, c.r1, c.r2, (F - 1) * N * h, (N - F * N) * h, 0},
                    {1, c.s1, c.s2, 0, 0, 0},
                    {1, c.k1, c.k2, 0, 0, -N},
                    {1, c.r1, c.r2, -N * h, N * h, 0},
                    {1, c.k1, c.k2, -L * N * h, -L * N * h, (L - 1) * N}});
    e.q = to_gauss({{1, L * L, F * L * (N - L - 1), F * (L - 1), (F - 1) * L * L, F - 1},
                    {1, A * L, -(A + 1) * F * L, F * (L - 1), A * (F - 1) * L, F - 1},
                    {1, L * L * (-A + L - N) / c.t, F * (A - L) * L * (L - N + 1) / c.t, F * (L - 1),
                     -(F - 1) * L * L * (A - L + N) / c.t, F - 1},
                    {1, L, 0, 0, -L, -1},
                    {1, -L, 0, 0, L, -1},
                    {1, 0, 0, -F, 0, F - 1}});
    return e;
}

Eigenmatrices closed_form_6class(long long n, long long ell, long long a, long long f) {
    ClosedTerms c = closed_terms(n, ell, a);
    Rational N(integer(n)), L(integer(ell)), A(integer(a)), F(integer(f)), h = q(1, 2);
    Eigenmatrices e;
    e.p = to_gauss({{1, c.k1, c.k2, (F - 1) * L * N * h, (F - 1) * L * N * h, L * N, (F - 1) * N},
                    {1, c.k1, c.k2, -(F - 1) * N * h, -(F - 1) * N * h, -N, (F - 1) * N},
                    {1, c.r1, c.r2, (F - 1) * N * h, (N - F * N) * h, 0, 0},
                    {1, c.s1, c.s2, 0, 0, 0, 0},
                    {1, c.r1, c.r2, -N * h, N * h, 0, 0},
                    {1, c.k1, c.k2, N * h, N * h, -N, -N},
                    {1, c.k1, c.k2, -L * N * h, -L * N * h, L * N, -N}});
    e.q = to_gauss({{1, L, L * (L + 1), -F * (L + 1) * (L - N + 1), (F - 1) * L * (L + 1), (F - 1) * L, F - 1},
                    {1, L, A * (L + 1), -(A + 1) * F * (L + 1), A * (F - 1) * (L + 1), (F - 1) * L, F - 1},
                    {1, L, L * (L + 1) * (-A + L - N) / c.t, F * (A - L) * (L + 1) * (L - N + 1) / c.t,
                     -(F - 1) * L * (L + 1) * (A - L + N) / c.t, (F - 1) * L, F - 1},
                    {1, -1, L + 1, 0, -L - 1, 1, -1},
                    {1, -1, -L - 1, 0, L + 1, 1, -1},
                    {1, -1, 0, 0, 0, 1 - F, F - 1},
                    {1, L, 0, 0, 0, -L, -1}});
    return e;
}

std::optional<std::vector<std::size_t>> match_eigenmatrices(const Eigenmatrices& computed, const Eigenmatrices& closed) {
    const std::size_t w = computed.p.size();
    if (closed.p.size() != w || computed.q.size() != w || closed.q.size() != w) return std::nullopt;
    std::vector<std::size_t> perm(w);
    std::vector<char> used(w, 0);
    for (std::size_t j = 0; j < w; ++j) {
        std::size_t hit = w;
        for (std::size_t t = 0; t < w && hit == w; ++t)
            if (!used[t] && computed.p[j] == closed.p[t]) hit = t;
        if (hit == w) return std::nullopt;
        used[hit] = 1;
        perm[j] = hit;
    }
    for (std::size_t i = 0; i < w; ++i)
        for (std::size_t j = 0; j < w; ++j)
            if (computed.q[i][j] != closed.q[i][perm[j]]) return std::nullopt;
    return perm;
}

Scheme hamming_scheme(int n) {
    require(n >= 1 && n <= 12, "Hamming scheme needs 1 ≤ n ≤ 12");
    IntMatrix i2 = IntMatrix::identity(2), a1 = IntMatrix::ones(2) - i2;
    std::vector<IntMatrix> cur = {i2, a1};
    for (int step = 1; step < n; ++step) {
        const std::size_t v = cur[0].rows();
        std::vector<IntMatrix> next;
        for (int i = 0; i <= step + 1; ++i) {
            IntMatrix m(2 * v, 2 * v);
            if (i <= step) m = m + cur[i].kronecker(i2);
            if (i >= 1) m = m + cur[i - 1].kronecker(a1);
            next.push_back(m);
        }
        cur = std::move(next);
    }
    Scheme s = verify_scheme(cur);
    HadamardMatrix h = sylvester(static_cast<unsigned>(n));
    for (const IntMatrix& m : cur) diagonalize_by_hadamard(m, h);
    return s;
}

Fusion muzychuk_fusion(int n, FusionVariant variant) {
    require(n >= 2 && n % 2 == 0, "fusion needs an even n ≥ 2");
    Scheme h = hamming_scheme(n);
    const std::size_t v = h.vertices();
    std::vector<std::uint8_t> labels(v * v);
    for (std::size_t x = 0; x < v; ++x)
        for (std::size_t y = 0; y < v; ++y) {
            int k = h.relation(x, y);
            int r = k % 4;
            bool first = variant == FusionVariant::V01 ? (r == 0 || r == 1) : (r == 0 || r == 3);
            labels[x * v + y] = static_cast<std::uint8_t>(k == 0 ? 0 : first ? 1 : 2);
        }
    Fusion out{Scheme::from_relations(v, 2, std::move(labels)), {}, {}, n / 2, false};
    auto s1 = srg_parameters(out.scheme.matrix(1));
    auto s2 = srg_parameters(out.scheme.matrix(2));
    if (!s1 || !s2) fail(ErrorCode::AxiomFailure, "fused classes are not strongly regular");
    out.srg1 = *s1;
    out.srg2 = *s2;
    const long long half = 1LL << (out.m - 1), full = 1LL << out.m;
    for (int sign : {1, -1}) {
        SrgParams fam{full * full, half * (full + sign), half * (half + sign), half * (half + sign)};
        out.in_family = out.in_family || out.srg1 == fam || out.srg2 == fam;
    }
    return out;
}

}  // namespace bsh
