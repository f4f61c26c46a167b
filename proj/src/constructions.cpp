#include "bsh/constructions.hpp"

#include "bsh/error.hpp"

#include <algorithm>
#include <set>

namespace bsh {

BshInstance::BshInstance(HadamardMatrix h_, RowSet rows, SplitParams claimed_)
    : h(std::move(h_)), split_rows(std::move(rows)), claimed(claimed_), report(check_split(h, split_rows)) {
    if (report.params != claimed)
        fail(ErrorCode::WrongParameters,
             "construction claimed " + claimed.str() + " but the split verifies as " + report.params.str());
}

namespace {

bool first_row_ones(const HadamardMatrix& h) {
    for (std::size_t j = 0; j < h.order(); ++j)
        if (h(0, j) != 1) return false;
    return true;
}

bool normalized(const HadamardMatrix& h) {
    if (!first_row_ones(h)) return false;
    for (std::size_t i = 0; i < h.order(); ++i)
        if (h(i, 0) != 1) return false;
    return true;
}

}  // namespace

BshInstance kron_square(const HadamardMatrix& h, KronVariant variant) {
    const long long m = static_cast<long long>(h.order());
    require(m >= 2, "kron_square needs order at least 2");
    require(normalized(h), "kron_square needs a normalized Hadamard matrix");
    HadamardMatrix hh(h.matrix().kronecker(h.matrix()));
    RowSet rows;
    for (long long i = 0; i < m; ++i)
        for (long long j = 0; j < m; ++j) {
            bool large = i >= 1 && j >= 1;
            bool small = (i == 0 || j == 0) && !(i == 0 && j == 0);
            if (variant == KronVariant::Large ? large : small) rows.push_back(static_cast<std::size_t>(i * m + j));
        }
    SplitParams claimed = variant == KronVariant::Large ? SplitParams{m * m, (m - 1) * (m - 1), 1, -m + 1}
                                                        : SplitParams{m * m, 2 * m - 2, m - 2, -2};
    return BshInstance(std::move(hh), std::move(rows), claimed);
}

BshInstance gram_construction(const HadamardMatrix& h) {
    const std::size_t m = h.order();
    require(normalized(h), "gram_construction needs a normalized Hadamard matrix");
    // Block (i,j) is r_jᵀ r_i: entry ((i,p),(j,q)) = r_j[p] · r_i[q].
    IntMatrix mm = IntMatrix::generate(m * m, m * m, [&](std::size_t r, std::size_t c) -> Integer {
        std::size_t i = r / m, p = r % m, j = c / m, q = c % m;
        return h(j, p) * h(i, q);
    });
    RowSet rows(m);
    for (std::size_t p = 0; p < m; ++p) rows[p] = p;
    const long long mm_ = static_cast<long long>(m);
    return BshInstance(HadamardMatrix(std::move(mm)), std::move(rows), {mm_ * mm_, mm_, mm_, 0});
}

BshInstance core_tensor(const HadamardMatrix& h, const HadamardMatrix& k) {
    require(first_row_ones(k), "core_tensor needs the second factor with an all-ones first row");
    const std::size_t kk = h.order(), m = k.order();
    HadamardMatrix t(h.matrix().kronecker(k.matrix()));
    RowSet rows;
    for (std::size_t i = 0; i < kk; ++i)
        for (std::size_t p = 1; p < m; ++p) rows.push_back(i * m + p);
    const long long K = static_cast<long long>(kk), M = static_cast<long long>(m);
    return BshInstance(std::move(t), std::move(rows), {K * M, K * (M - 1), 0, -K});
}

BshInstance two_row_split(const HadamardMatrix& h) {
    const std::size_t n = h.order();
    require(n >= 4, "two_row_split needs order at least 4");
    HadamardMatrix g = normalize(h, RowPlacement::First);
    RowSet order;
    for (std::size_t j = 0; j < n; ++j)
        if (g(1, j) == 1) order.push_back(j);
    for (std::size_t j = 0; j < n; ++j)
        if (g(1, j) == -1) order.push_back(j);
    HadamardMatrix p(g.matrix().select_cols(order));
    RowSet rows;
    for (std::size_t i = 2; i < n; ++i) rows.push_back(i);
    const long long N = static_cast<long long>(n);
    return BshInstance(std::move(p), std::move(rows), {N, N - 2, 0, -2});
}

BshInstance TwinSylvester::part(int which) const {
    const long long N = static_cast<long long>(h.order());
    long long n = 1;
    while (n * n < N) ++n;
    switch (which) {
        case 1: return BshInstance(h, h1_rows, {N, n, n, 0});
        case 2: return BshInstance(h, h2_rows, {N, n * (n - 1) / 2, n / 2, -n / 2});
        case 3: return BshInstance(h, h3_rows, {N, n * (n - 1) / 2, n / 2, -n / 2});
        default: fail(ErrorCode::PreconditionViolation, "twin part must be 1, 2 or 3");
    }
}

TwinSylvester twin_sylvester(unsigned m_exponent) {
    require(m_exponent >= 1, "twin_sylvester needs m ≥ 1");
    // Order-4 base: H₁ = rows {0,2}, H₂ = row 1, H₃ = row 3.
    const RowSet c1{0, 2}, c2{1}, c3{3};
    RowSet b1 = c1, b2 = c2, b3 = c3;
    std::size_t order = 4;
    for (unsigned step = 1; step < m_exponent; ++step) {
        auto cross = [](const RowSet& x, const RowSet& y, RowSet& out) {
            for (auto i : x)
                for (auto j : y) out.push_back(i * 4 + j);
        };
        RowSet n1, n3;
        cross(b1, c1, n1);
        // Complement of the stacked (H₁,₁⊗H₂,₁ ; H₁,₂⊗H₂,₂) with H_{·,2} the third block.
        RowSet b12 = b1, c12 = c1;
        b12.insert(b12.end(), b2.begin(), b2.end());
        c12.insert(c12.end(), c2.begin(), c2.end());
        cross(b12, c3, n3);
        cross(b3, c12, n3);
        order *= 4;
        std::set<std::size_t> used(n1.begin(), n1.end());
        used.insert(n3.begin(), n3.end());
        RowSet n2;
        for (std::size_t r = 0; r < order; ++r)
            if (!used.count(r)) n2.push_back(r);
        std::sort(n1.begin(), n1.end());
        std::sort(n3.begin(), n3.end());
        b1 = std::move(n1);
        b2 = std::move(n2);
        b3 = std::move(n3);
    }
    TwinSylvester t{sylvester(2 * m_exponent), b1, b2, b3};
    for (int w = 1; w <= 3; ++w) (void)t.part(w);
    return t;
}

std::pair<IntMatrix, IntMatrix> ja_recursion(const SkewCore& core, unsigned m) {
    const std::size_t q = core.order();
    IntMatrix j{{1}}, a{{1}};
    for (unsigned step = 1; step <= m; ++step) {
        IntMatrix nj = IntMatrix::ones(q).kronecker(a);
        IntMatrix na = IntMatrix::identity(q).kronecker(j) + core.matrix().kronecker(a);
        j = std::move(nj);
        a = std::move(na);
    }
    return {j, a};
}

BshInstance skew_core_bsh(const SkewCore& core) {
    const std::size_t q = core.order();
    IntMatrix c = conference_from_core(core);
    auto [j1, a1] = ja_recursion(core, 1);
    IntMatrix m = -IntMatrix::identity(q + 1).kronecker(j1) + c.kronecker(a1);
    RowSet rows(q);
    for (std::size_t i = 0; i < q; ++i) rows[i] = i;
    const long long Q = static_cast<long long>(q);
    return BshInstance(HadamardMatrix(std::move(m)), std::move(rows), {Q * (Q + 1), Q, Q, -1});
}

}  // namespace bsh
