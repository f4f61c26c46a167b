#include "bsh/finite_field.hpp"

#include "bsh/error.hpp"

#include <string>

namespace bsh {

std::optional<std::pair<int, int>> prime_power(int q) {
    if (q < 2) return std::nullopt;
    int p = 0;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return std::make_pair(q, 1);
    int e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    if (q != 1) return std::nullopt;
    return std::make_pair(p, e);
}

namespace {

using Poly = std::vector<int>;  // coefficients, low degree first, trimmed

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    trim(a);
    // m is monic
    while (a.size() >= m.size()) {
        int c = a.back();
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

Poly decode(int code, int p, int len) {
    Poly a(len);
    for (int i = 0; i < len; ++i) {
        a[i] = code % p;
        code /= p;
    }
    return a;
}

bool irreducible(const Poly& f, int p) {
    int deg = static_cast<int>(f.size()) - 1;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (int d = 1; 2 * d <= deg; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int code = 0; code < count; ++code) {
            Poly g = decode(code, p, d);
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q) {
    auto pp = prime_power(q);
    if (!pp) fail(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
    p_ = pp->first;
    e_ = pp->second;

    for (int code = 0; code < q_; ++code) {
        Poly f = decode(code, p_, e_);
        f.push_back(1);
        if (e_ == 1 || irreducible(f, p_)) {
            modulus_.assign(f.begin(), f.end() - 1);
            break;
        }
    }
    Poly m = modulus_;
    m.push_back(1);

    add_.assign(static_cast<std::size_t>(q_) * q_, 0);
    mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
    neg_.assign(q_, 0);
    auto encode = [&](const Poly& a) {
        int code = 0;
        for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) code = code * p_ + a[i];
        return code;
    };
    for (int x = 0; x < q_; ++x) {
        Poly a = decode(x, p_, e_);
        Poly na(e_);
        for (int i = 0; i < e_; ++i) na[i] = (p_ - a[i]) % p_;
        neg_[x] = encode(na);
        for (int y = 0; y < q_; ++y) {
            Poly b = decode(y, p_, e_);
            Poly s(e_);
            for (int i = 0; i < e_; ++i) s[i] = (a[i] + b[i]) % p_;
            add_[x * q_ + y] = encode(s);
            Poly prod(2 * e_, 0);
            for (int i = 0; i < e_; ++i)
                for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
            Poly r = poly_mod(prod, m, p_);
            r.resize(e_, 0);
            mul_[x * q_ + y] = encode(r);
        }
    }
    chi_.assign(q_, -1);
    chi_[0] = 0;
    for (int x = 1; x < q_; ++x) chi_[mul(x, x)] = 1;
}

int FiniteField::inv(int x) const {
    require(x != 0, "inverse of zero");
    for (int y = 1; y < q_; ++y)
        if (mul(x, y) == 1) return y;
    fail(ErrorCode::PreconditionViolation, "no inverse");
}

}  // namespace bsh
