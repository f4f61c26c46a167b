#include "bsh/hadamard.hpp"

#include "bsh/error.hpp"
#include "bsh/finite_field.hpp"

#include <string>

namespace bsh {

bool is_hadamard(const IntMatrix& m) {
    if (!m.square() || m.rows() == 0) return false;
    for (const auto& x : m.entries())
        if (x != 1 && x != -1) return false;
    const std::size_t n = m.rows();
    return m * m.transpose() == IntMatrix::identity(n).scale(Integer(static_cast<unsigned long>(n)));
}

HadamardMatrix::HadamardMatrix(IntMatrix m) : m_(std::move(m)) {
    require(is_hadamard(m_), "matrix is not Hadamard");
}

std::size_t HadamardMatrix::all_ones_row() const {
    for (std::size_t i = 0; i < order(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < order() && ok; ++j) ok = m_(i, j) == 1;
        if (ok) return i;
    }
    return order();
}

SkewCore::SkewCore(IntMatrix q) : q_(std::move(q)) {
    const std::size_t n = q_.rows();
    require(q_.square() && n > 0, "skew core must be square");
    for (const auto& x : q_.entries()) require(x == 0 || x == 1 || x == -1, "skew core entries must be 0, ±1");
    require(q_.transpose() == -q_, "skew core must be skew-symmetric");
    for (std::size_t i = 0; i < n; ++i) require(q_(i, i) == 0, "skew core diagonal must be zero");
    IntMatrix j = IntMatrix::ones(n);
    require((j * q_).is_zero() && (q_ * j).is_zero(), "skew core must satisfy JQ = QJ = O");
    require(q_ * q_.transpose() == IntMatrix::identity(n).scale(Integer(static_cast<unsigned long>(n))) - j,
            "skew core must satisfy QQᵀ = qI − J");
}

HadamardMatrix sylvester(unsigned m_exponent) {
    require(m_exponent >= 1, "sylvester exponent must be at least 1");
    IntMatrix h1{{1, 1}, {1, -1}};
    IntMatrix h = h1;
    for (unsigned i = 1; i < m_exponent; ++i) h = h.kronecker(h1);
    return HadamardMatrix(std::move(h));
}

HadamardMatrix normalize(const HadamardMatrix& h, RowPlacement placement) {
    const std::size_t n = h.order();
    const std::size_t r = placement == RowPlacement::First ? 0 : n - 1;
    const IntMatrix& m = h.matrix();
    IntMatrix cols = IntMatrix::generate(n, n, [&](std::size_t i, std::size_t j) -> Integer { return m(i, j) * m(r, j); });
    IntMatrix rows = IntMatrix::generate(n, n, [&](std::size_t i, std::size_t j) -> Integer { return cols(i, j) * cols(i, 0); });
    return HadamardMatrix(std::move(rows));
}

HadamardMatrix switch_to_row(const HadamardMatrix& h, std::size_t r) {
    require(r < h.order(), "row index out of range");
    const IntMatrix& m = h.matrix();
    return HadamardMatrix(
        IntMatrix::generate(h.order(), h.order(), [&](std::size_t i, std::size_t j) -> Integer { return m(i, j) * m(r, j); }));
}

HadamardMatrix permute_rows(const HadamardMatrix& h, const RowSet& order) {
    require(order.size() == h.order(), "row order must be a permutation");
    return HadamardMatrix(h.matrix().select_rows(order));
}

SkewCore paley_skew_core(unsigned q) {
    auto pp = prime_power(static_cast<int>(q));
    if (!pp) fail(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
    require(q % 4 == 3, "Paley skew core needs q ≡ 3 (mod 4)");
    FiniteField f(static_cast<int>(q));
    return SkewCore(IntMatrix::generate(q, q, [&](std::size_t x, std::size_t y) -> Integer {
        return Integer(f.chi(f.sub(static_cast<int>(y), static_cast<int>(x))));
    }));
}

HadamardMatrix skew_hadamard_from_core(const SkewCore& core) {
    const std::size_t q = core.order();
    const IntMatrix& qm = core.matrix();
    return HadamardMatrix(IntMatrix::generate(q + 1, q + 1, [&](std::size_t i, std::size_t j) -> Integer {
        if (i == 0) return 1;
        if (j == 0) return -1;
        return qm(i - 1, j - 1) + (i == j ? 1 : 0);
    }));
}

IntMatrix conference_from_core(const SkewCore& core) {
    IntMatrix c = skew_hadamard_from_core(core).matrix() - IntMatrix::identity(core.order() + 1);
    require(c * c.transpose() ==
                IntMatrix::identity(core.order() + 1).scale(Integer(static_cast<unsigned long>(core.order()))),
            "conference identity failed");
    return c;
}

namespace {

// Paley II: order 2(q+1) for a prime power q ≡ 1 (mod 4), from the symmetric conference matrix.
HadamardMatrix paley_two(unsigned q) {
    FiniteField f(static_cast<int>(q));
    IntMatrix c = IntMatrix::generate(q + 1, q + 1, [&](std::size_t i, std::size_t j) -> Integer {
        if (i == j) return 0;
        if (i == 0 || j == 0) return 1;
        return f.chi(f.sub(static_cast<int>(j - 1), static_cast<int>(i - 1)));
    });
    IntMatrix a{{1, 1}, {1, -1}}, b{{1, -1}, {-1, -1}};
    return HadamardMatrix(c.kronecker(a) + IntMatrix::identity(q + 1).kronecker(b));
}

}  // namespace

bool hadamard_order_known(unsigned n) {
    if (n == 0) return false;
    if (n == 1 || (n & (n - 1)) == 0) return true;
    if (n % 4 != 0) return false;
    if (prime_power(static_cast<int>(n - 1)) && (n - 1) % 4 == 3) return true;
    if (prime_power(static_cast<int>(n / 2 - 1)) && (n / 2 - 1) % 4 == 1) return true;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0 && d < n && hadamard_order_known(d) && hadamard_order_known(n / d)) return true;
    return false;
}

HadamardMatrix hadamard_of_order(unsigned n) {
    if (n == 1) return HadamardMatrix(IntMatrix{{1}});
    if ((n & (n - 1)) == 0) {
        unsigned e = 0;
        while ((1u << e) < n) ++e;
        return sylvester(e);
    }
    if (n % 4 == 0) {
        auto pp = prime_power(static_cast<int>(n - 1));
        if (pp && (n - 1) % 4 == 3) return skew_hadamard_from_core(paley_skew_core(n - 1));
        auto pp2 = prime_power(static_cast<int>(n / 2 - 1));
        if (pp2 && (n / 2 - 1) % 4 == 1) return paley_two(n / 2 - 1);
        for (unsigned d = 2; d * d <= n; ++d) {
            if (n % d) continue;
            for (unsigned a : {d, n / d}) {
                unsigned b = n / a;
                if (a == n || b == n) continue;
                try {
                    HadamardMatrix ha = hadamard_of_order(a);
                    HadamardMatrix hb = hadamard_of_order(b);
                    return HadamardMatrix(ha.matrix().kronecker(hb.matrix()));
                } catch (const Error&) {
                }
            }
        }
    }
    fail(ErrorCode::WrongParameters, "no built-in Hadamard matrix of order " + std::to_string(n));
}

}  // namespace bsh
