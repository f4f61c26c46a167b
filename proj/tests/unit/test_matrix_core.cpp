#include "doctest.h"

#include "bsh/error.hpp"
#include "bsh/finite_field.hpp"
#include "bsh/hadamard.hpp"
#include "bsh/matrix_io.hpp"

#include <random>

using namespace bsh;

namespace {

IntMatrix random_signs(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> d(0, 1);
    return IntMatrix::generate(r, c, [&](std::size_t, std::size_t) { return Integer(d(rng) ? 1 : -1); });
}

IntMatrix random_ints(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return IntMatrix::generate(r, c, [&](std::size_t, std::size_t) { return Integer(d(rng)); });
}

// Naive entrywise product, independent of the library's fast path.
IntMatrix naive_product(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows(), b.cols());
    std::vector<Integer> e(a.rows() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            for (std::size_t k = 0; k < a.cols(); ++k) e[i * b.cols() + j] += a(i, k) * b(k, j);
    return IntMatrix(a.rows(), b.cols(), e);
}

}  // namespace

TEST_SUITE("matrix-core") {

TEST_CASE("kronecker of identity and ones is block diagonal") {
    IntMatrix k = kronecker(IntMatrix::identity(2), IntMatrix::ones(2));
    CHECK(k == IntMatrix{{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 1}});
}

TEST_CASE("H2 kron H2 is the order-4 Sylvester matrix") {
    IntMatrix h2{{1, 1}, {1, -1}};
    CHECK(kronecker(h2, h2) == sylvester(2).matrix());
}

TEST_CASE("Gram of a Kronecker square factors entrywise") {
    std::mt19937 rng(11);
    for (int t = 0; t < 5; ++t) {
        IntMatrix h = random_signs(rng, 3, 4);
        IntMatrix k = kronecker(h, h);
        IntMatrix lhs = gram(k);
        IntMatrix g = naive_product(h.transpose(), h);
        // Entry ((i,p),(j,q)) of (HᵀH)⊗(HᵀH) is g(i,j)·g(p,q).
        bool ok = true;
        for (std::size_t r = 0; r < 16; ++r)
            for (std::size_t c = 0; c < 16; ++c) ok = ok && lhs(r, c) == g(r / 4, c / 4) * g(r % 4, c % 4);
        CHECK(ok);
    }
}

TEST_CASE("matrix algebra laws on random inputs") {
    std::mt19937 rng(5);
    for (int t = 0; t < 10; ++t) {
        IntMatrix a = random_ints(rng, 3, 4, -5, 5), b = random_ints(rng, 4, 2, -5, 5), c = random_ints(rng, 2, 3, -5, 5);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == naive_product(a, b));
        CHECK(kronecker(a, b).transpose() == kronecker(a.transpose(), b.transpose()));
        IntMatrix d = random_ints(rng, 3, 2, -3, 3);
        CHECK(kronecker(a, c) * kronecker(b, d) == kronecker(a * b, c * d));
    }
}

TEST_CASE("large entries fall back to exact big-integer products") {
    Integer big("123456789012345678901234567890");
    IntMatrix a(1, 2, {big, big});
    IntMatrix b(2, 1, {big, Integer(-1)});
    CHECK((a * b)(0, 0) == big * big - big);
    IntMatrix c(1, 1, {Integer(1) << 40});
    CHECK((c * c)(0, 0) == Integer(1) << 80);
}

TEST_CASE("sylvester matrices") {
    CHECK(sylvester(1).matrix() == IntMatrix{{1, 1}, {1, -1}});
    IntMatrix shown{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
    CHECK(sylvester(2).matrix().select_rows({0, 2, 1, 3}) == shown);
    auto s16 = sylvester(4).matrix();
    CHECK(is_hadamard(s16));
    auto sums = s16.row_sums();
    CHECK(sums[0] == 16);
    for (std::size_t i = 1; i < 16; ++i) CHECK(sums[i] == 0);
    CHECK(is_hadamard(sylvester(3).matrix()));
}

TEST_CASE("is_hadamard rejects non-Hadamard input") {
    CHECK_FALSE(is_hadamard(IntMatrix::ones(4)));
    CHECK_FALSE(is_hadamard(IntMatrix{{1, 1, 1}, {1, -1, 1}}));
    CHECK_FALSE(is_hadamard(IntMatrix{{2, 0}, {0, 2}}));
}

TEST_CASE("normalize with first-row and last-row placement") {
    HadamardMatrix s4 = sylvester(2);
    CHECK(normalize(s4) == s4);
    HadamardMatrix x(IntMatrix{{-1, 1}, {1, 1}});
    CHECK(normalize(x).matrix() == IntMatrix{{1, 1}, {1, -1}});
    // Exhaustive oracle: the only normalized order-2 matrix with the first row all-ones.
    HadamardMatrix last = normalize(x, RowPlacement::Last);
    CHECK(last.matrix() == IntMatrix{{1, -1}, {1, 1}});
    std::mt19937 rng(3);
    HadamardMatrix s16 = sylvester(4);
    for (int t = 0; t < 5; ++t) {
        auto signs = random_signs(rng, 16, 2);
        IntMatrix y = IntMatrix::generate(16, 16, [&](std::size_t i, std::size_t j) -> Integer {
            return s16(i, j) * signs(i, 0) * signs(j, 1);
        });
        HadamardMatrix z = normalize(HadamardMatrix(y), RowPlacement::Last);
        for (std::size_t j = 0; j < 16; ++j) CHECK(z(15, j) == 1);
        for (std::size_t i = 0; i < 16; ++i) CHECK(z(i, 0) == 1);
    }
}

TEST_CASE("finite fields") {
    CHECK(prime_power(9) == std::make_pair(3, 2));
    CHECK(prime_power(16) == std::make_pair(2, 4));
    CHECK_FALSE(prime_power(12).has_value());
    CHECK_FALSE(prime_power(1).has_value());
    FiniteField f9(9);
    CHECK(f9.modulus() == std::vector<int>{1, 0});  // x² + 1
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27}) {
        FiniteField f(q);
        for (int x = 0; x < q; ++x) {
            CHECK(f.add(x, f.neg(x)) == 0);
            if (x) CHECK(f.mul(x, f.inv(x)) == 1);
            for (int y = 0; y < q; ++y) {
                CHECK(f.mul(x, y) == f.mul(y, x));
                for (int z = 0; z < q; z += 3) CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
            }
        }
    }
    CHECK_THROWS_AS(FiniteField(6), Error);
}

TEST_CASE("paley skew cores") {
    CHECK(paley_skew_core(3).matrix() == IntMatrix{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}});
    for (unsigned q : {3u, 7u, 11u, 19u, 27u}) {
        IntMatrix qm = paley_skew_core(q).matrix();
        IntMatrix j = IntMatrix::ones(q);
        CHECK((j * qm).is_zero());
        CHECK((qm * j).is_zero());
        CHECK(qm * qm.transpose() == IntMatrix::identity(q).scale(Integer(q)) - j);
    }
    CHECK_THROWS_AS(paley_skew_core(5), Error);
    try {
        paley_skew_core(15);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPrimePower);
    }
}

TEST_CASE("conference matrix from a skew core") {
    IntMatrix c = conference_from_core(paley_skew_core(3));
    CHECK(c * c.transpose() == IntMatrix::identity(4).scale(Integer(3)));
    for (std::size_t i = 0; i < 4; ++i) CHECK(c(i, i) == 0);
    CHECK(is_hadamard(skew_hadamard_from_core(paley_skew_core(11)).matrix()));
}

TEST_CASE("every built Hadamard order is 1, 2 or divisible by 4") {
    for (unsigned n : {1u, 2u, 4u, 8u, 12u, 16u, 20u, 24u, 28u, 32u, 36u, 48u}) {
        HadamardMatrix h = hadamard_of_order(n);
        CHECK(h.order() == n);
        CHECK((n <= 2 || n % 4 == 0));
    }
}

TEST_CASE("matrix text format") {
    IntMatrix m = parse_matrix("2 4\n+-+-\n1 0 -3 12\n");
    CHECK(m == IntMatrix{{1, -1, 1, -1}, {1, 0, -3, 12}});
    CHECK(format_matrix(m) == "2 4\n1 -1 1 -1\n1 0 -3 12\n");
    CHECK(parse_matrix(format_matrix(m)) == m);
    try {
        parse_matrix("2 3\n1 2 3\n1 2\n");
        FAIL("ragged row accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_matrix("1 2\n1 x\n"), Error);
    CHECK_THROWS_AS(parse_matrix("2 2\n1 1\n"), Error);
}

}
