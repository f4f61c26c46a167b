#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace bsh {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer integer(long long v) { return Integer(static_cast<long>(v)); }

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::optional<std::int64_t> to_i64(const Integer& z) {
    if (!mpz_fits_slong_p(z.get_mpz_t())) return std::nullopt;
    return static_cast<std::int64_t>(z.get_si());
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Exact integer square root, or nullopt for non-squares and negatives.
inline std::optional<Integer> exact_sqrt(const Integer& z) {
    if (z < 0) return std::nullopt;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
    if (r * r != z) return std::nullopt;
    return r;
}

// Gaussian rational x + iy.
struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() = default;
    GaussRational(const Rational& r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussRational(const Rational& r, const Rational& i) : re(r), im(i) {}
    GaussRational(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        Rational d = b.norm();
        GaussRational t = a * b.conj();
        return {t.re / d, t.im / d};
    }
    GaussRational& operator+=(const GaussRational& o) { return *this = *this + o; }
    GaussRational& operator-=(const GaussRational& o) { return *this = *this - o; }
    GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
    // Lexicographic on (re, im); used only for canonical ordering.
    friend bool operator<(const GaussRational& a, const GaussRational& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

std::string to_string(const GaussRational& z);

}  // namespace bsh
