#include "doctest.h"

#include "bsh/bundled_data.hpp"
#include "bsh/error.hpp"
#include "bsh/feasibility.hpp"
#include "bsh/schemes.hpp"

#include <bit>

using namespace bsh;

namespace {

BshInstance instance(SplitParams p) { return build_witness(*find_witness(p)); }

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::PreconditionViolation;
}

UfsFamily on_one(UfsFamily fam, std::size_t f) {
    fam.resize(f);
    for (auto& l : fam) l = relabel(l, 1);
    return fam;
}

GaussRational g(long v) { return GaussRational(Rational(v)); }

// Plain matrix multiplication count of p_ij^k, independent of Scheme's row scan.
long long naive_p(const Scheme& s, int i, int j, std::size_t x, std::size_t y) {
    long long c = 0;
    for (std::size_t z = 0; z < s.vertices(); ++z) c += s.relation(x, z) == i && s.relation(z, y) == j;
    return c;
}

}  // namespace

TEST_SUITE("schemes") {

TEST_CASE("auxiliary matrices") {
    AuxiliarySet a2 = auxiliary_matrices(sylvester(1));
    CHECK(a2.c[0] + a2.c[1] == IntMatrix::identity(2).scale(integer(2)));

    BshInstance b = instance({16, 9, 1, -3});
    AuxiliarySet aux = auxiliary_matrices(b.h);
    auto checks = check_split_auxiliary(aux, b.report);
    CHECK(checks.sum_matches);
    CHECK(checks.annihilates_j);
    CHECK(checks.adjacency_commutes);
    const IntMatrix& c = aux.c[b.split_rows[0]];
    CHECK(b.report.adjacency * c == c);
    CHECK(b.report.adjacency * c != c.scale(integer(16 - 9 - 3)));
    CHECK(srg_parameters(b.report.adjacency) == SrgParams{16, 9, 4, 6});
}

TEST_CASE("auxiliary identities on constructed matrices up to order 64") {
    std::vector<HadamardMatrix> hs;
    for (unsigned m = 1; m <= 6; ++m) hs.push_back(sylvester(m));
    for (unsigned n : {12u, 20u, 24u, 28u, 32u, 36u, 40u, 44u, 48u, 52u, 56u, 60u}) hs.push_back(hadamard_of_order(n));
    for (const auto& h : hs) {
        CAPTURE(h.order());
        CHECK_NOTHROW(auxiliary_matrices(h));
    }
}

TEST_CASE("lifted Latin squares") {
    BshInstance toy = two_row_split(sylvester(2));
    REQUIRE(toy.report.params == SplitParams{4, 2, 0, -2});
    AuxiliarySet aux4 = auxiliary_matrices(toy.h);
    LatinSquare l(2, 1);
    l(0, 0) = 1, l(0, 1) = 2, l(1, 0) = 2, l(1, 1) = 1;
    IntMatrix lifted = lift_latin(aux4, l, toy.split_rows);
    CHECK(lifted.rows() == 8);
    CHECK(lifted_gram_holds(lifted, toy.report, 2));

    BshInstance b = instance({16, 9, 1, -3});
    AuxiliarySet aux = auxiliary_matrices(b.h);
    IntMatrix big = lift_latin(aux, circle_symmetric(10), b.split_rows);
    CHECK(big.rows() == 160);
    CHECK(lifted_gram_holds(big, b.report, 10));

    UfsFamily f9 = on_one(affine_ufs_family(9), 2);
    IntMatrix l1 = lift_latin(aux, f9[0], b.split_rows), l2 = lift_latin(aux, f9[1], b.split_rows);
    IntMatrix l12 = lift_latin(aux, compose_ufs(f9[0], f9[1]), b.split_rows);
    CHECK(l1 * l2.transpose() == l12.scale(integer(16)));
}

TEST_CASE("verify_scheme examples") {
    IntMatrix i5 = IntMatrix::identity(5);
    Scheme trivial = verify_scheme({i5, IntMatrix::ones(5) - i5});
    CHECK(trivial.classes() == 1);
    CHECK(trivial.p(1, 1, 0) == 4);
    CHECK(trivial.p(1, 1, 1) == 3);

    IntMatrix lat = bundled_data("lattice-4x4");
    IntMatrix i16 = IntMatrix::identity(16);
    Scheme srg = verify_scheme({i16, lat, IntMatrix::ones(16) - lat - i16});
    CHECK(srg.p(1, 1, 0) == 6);
    CHECK(srg.p(1, 1, 1) == 2);
    CHECK(srg.p(1, 1, 2) == 2);

    IntMatrix c6 = IntMatrix::generate(6, 6, [](std::size_t x, std::size_t y) -> Integer {
        return (x + 1) % 6 == y || (y + 1) % 6 == x ? 1 : 0;
    });
    IntMatrix i6 = IntMatrix::identity(6);
    try {
        verify_scheme({i6, c6, IntMatrix::ones(6) - c6 - i6});
        FAIL("expected AxiomFailure");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AxiomFailure);
        CHECK(std::string(e.what()).find("condition 4") != std::string::npos);
    }
    CHECK(code_of([&] { verify_scheme({i6, c6}); }) == ErrorCode::AxiomFailure);
    CHECK(code_of([&] { verify_scheme({c6, i6, IntMatrix::ones(6) - c6 - i6}); }) == ErrorCode::AxiomFailure);
}

TEST_CASE("four-class schemes") {
    BshInstance b = instance({16, 9, 1, -3});
    Scheme s = build_4class_symmetric(b, circle_symmetric(10));
    CHECK(s.vertices() == 160);
    CHECK(s.symmetric());
    Eigenmatrices e = eigenmatrices(s);
    CHECK(e.p[0] == std::vector<GaussRational>{g(1), g(9), g(6), g(72), g(72)});
    CHECK(pq_identity_holds(e, 160));
    CHECK(match_eigenmatrices(e, closed_form_4class(16, 9, 1)).has_value());

    Scheme ns = build_4class_nonsymmetric(b, circle_symmetric(10));
    CHECK_FALSE(ns.symmetric());
    CHECK(ns.transpose_class(3) == 4);
    CHECK(ns.p(3, 4, 0) == 72);
    CHECK(ns.p(3, 3, 0) == 0);
    CHECK(ns.matrix(3).transpose() == ns.matrix(4));
    Eigenmatrices en = eigenmatrices(ns);
    CHECK_FALSE(en.real());
    CHECK(match_eigenmatrices(en, closed_form_4class(16, 9, 1, true)).has_value());
    Eigenmatrices closed = closed_form_4class(16, 9, 1, true);
    for (int r : {2, 3})
        for (int c : {3, 4}) {
            CHECK(closed.p[r][c].re == 0);
            CHECK(closed.p[r][c].im != 0);
        }

    BshInstance even = instance({16, 6, 2, -2});
    CHECK(code_of([&] { build_4class_symmetric(even, circle_symmetric(8)); }) == ErrorCode::OddityViolation);
}

TEST_CASE("four-class closed form sign slips break PQ") {
    Eigenmatrices e = closed_form_4class(16, 9, 1);
    CHECK(pq_identity_holds(e, 160));
    Eigenmatrices flipped = e;
    flipped.p[2][2] = -flipped.p[2][2];
    flipped.p[3][2] = -flipped.p[3][2];
    CHECK_FALSE(pq_identity_holds(flipped, 160));

    Eigenmatrices n = closed_form_4class(16, 9, 1, true);
    CHECK(pq_identity_holds(n, 160));
    Eigenmatrices conj = n;
    for (int r : {3, 4})
        for (int c : {2, 3}) conj.q[r][c] = conj.q[r][c].conj();
    CHECK_FALSE(pq_identity_holds(conj, 160));
}

TEST_CASE("five-class schemes") {
    BshInstance b = instance({16, 9, 1, -3});
    UfsFamily fam = affine_ufs_family(9);
    for (int f : {2, 3}) {
        CAPTURE(f);
        Scheme s = build_5class(b, on_one(fam, f));
        CHECK(s.vertices() == static_cast<std::size_t>(144 * f));
        CHECK(s.symmetric());
        CHECK(five_class_identity_holds(s, b.report.params, f));
        Eigenmatrices e = eigenmatrices(s);
        CHECK(pq_identity_holds(e, s.vertices()));
        CHECK(match_eigenmatrices(e, closed_form_5class(16, 9, 1, f)).has_value());
        if (f == 2) {
            CHECK(e.p[0] == std::vector<GaussRational>{g(1), g(9), g(6), g(72), g(72), g(128)});
            const auto q0 = closed_form_5class(16, 9, 1, 2).q[0];
            CHECK(q0 == std::vector<GaussRational>{g(1), g(81), g(108), g(16), g(81), g(1)});
        }
    }
    UfsFamily same = on_one(fam, 1);
    same.push_back(same[0]);
    CHECK(code_of([&] { build_5class(b, same); }) == ErrorCode::UfsViolation);
}

TEST_CASE("six-class schemes") {
    BshInstance b = instance({16, 6, 2, -2});
    UfsFamily fam = force_constant_diagonal(affine_ufs_family(7), 0);
    for (int f : {2, 3}) {
        CAPTURE(f);
        UfsFamily ff(fam.begin(), fam.begin() + f);
        Scheme s = build_6class(b, ff);
        CHECK(s.vertices() == static_cast<std::size_t>(112 * f));
        CHECK(s.classes() == 6);
        Eigenmatrices e = eigenmatrices(s);
        CHECK(match_eigenmatrices(e, closed_form_6class(16, 6, 2, f)).has_value());
    }
    UfsFamily raw = affine_ufs_family(7);
    raw.resize(2);
    CHECK(code_of([&] { build_6class(b, raw); }) == ErrorCode::PreconditionViolation);
}

TEST_CASE("intersection numbers agree with direct counting") {
    BshInstance b = instance({16, 6, 2, -2});
    UfsFamily fam = force_constant_diagonal(affine_ufs_family(7), 0);
    Scheme s = build_6class(b, {fam[0], fam[1]});
    for (std::size_t x : {0u, 17u, 130u})
        for (std::size_t y : {0u, 5u, 40u, 200u}) {
            int k = s.relation(x, y);
            for (int i = 0; i <= 6; ++i)
                for (int j = 0; j <= 6; ++j) CHECK(naive_p(s, i, j, x, y) == s.p(i, j, k));
        }
}

TEST_CASE("Hamming schemes") {
    Scheme h1 = hamming_scheme(1);
    CHECK(h1.matrix(0) == IntMatrix::identity(2));
    CHECK(h1.matrix(1) == IntMatrix::ones(2) - IntMatrix::identity(2));

    Scheme h4 = hamming_scheme(4);
    CHECK(h4.classes() == 4);
    CHECK(h4.vertices() == 16);
    bool distance_classes = true;
    for (std::size_t x = 0; x < 16; ++x)
        for (std::size_t y = 0; y < 16; ++y) distance_classes &= h4.relation(x, y) == std::popcount(x ^ y);
    CHECK(distance_classes);
    for (int i = 0; i <= 4; ++i) CHECK_NOTHROW(diagonalize_by_hadamard(h4.matrix(i), sylvester(4)));
    Eigenmatrices e = eigenmatrices(h4);
    CHECK(e.p[0] == std::vector<GaussRational>{g(1), g(4), g(6), g(4), g(1)});
}

TEST_CASE("Muzychuk fusions") {
    Fusion a = muzychuk_fusion(4, FusionVariant::V01);
    CHECK(a.srg1 == SrgParams{16, 5, 0, 2});
    CHECK(a.srg2 == SrgParams{16, 10, 6, 6});
    CHECK(a.in_family);
    Fusion b = muzychuk_fusion(4, FusionVariant::V03);
    CHECK(b.in_family);
    CHECK(b.srg1.k + b.srg2.k == 15);
    Fusion c = muzychuk_fusion(6, FusionVariant::V01);
    CHECK(c.in_family);
    CHECK(c.scheme.vertices() == 64);
    CHECK(code_of([] { muzychuk_fusion(5, FusionVariant::V01); }) == ErrorCode::PreconditionViolation);
}

}
