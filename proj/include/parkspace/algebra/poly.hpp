#pragma once

#include "parkspace/algebra/cyclotomic.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace parkspace::algebra {

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Cyclo& x) { return x.is_zero(); }
inline Rational inverse(const Rational& x) { return Rational(1) / x; }
inline Cyclo inverse(const Cyclo& x) { return x.inverse(); }
inline std::string scalar_string(const Rational& x) { return rational_string(x); }
inline std::string scalar_string(const Cyclo& x) { return x.to_string(); }

/// Dense univariate polynomial over Q or Q(zeta).  Trailing zeros are trimmed,
/// so the zero polynomial has no coefficients and degree -1.
template <class R>
class Poly {
public:
    Poly() = default;
    Poly(long c) { if (c != 0) c_.push_back(R(c)); }
    explicit Poly(std::vector<R> c) : c_(std::move(c)) { trim(); }

    static Poly constant(const R& c) { return Poly(std::vector<R>{c}); }
    static Poly monomial(const R& c, std::size_t k) {
        std::vector<R> v(k + 1, R(0));
        v[k] = c;
        return Poly(std::move(v));
    }
    static Poly x() { return monomial(R(1), 1); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<R>& coeffs() const { return c_; }
    R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
    R lead() const { return c_.back(); }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    Poly& operator*=(const R& s) {
        for (auto& x : c_) x *= s;
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const R& s) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<R> r(a.c_.size() + b.c_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (algebra::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned e) const {
        Poly r(1), b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r *= b;
            if (e > 1) b *= b;
        }
        return r;
    }

    /// Quotient and remainder; the divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<R> rem = c_;
        if (rem.size() < d.c_.size()) return {Poly(), *this};
        std::vector<R> quo(rem.size() - d.c_.size() + 1, R(0));
        R inv = algebra::inverse(d.lead());
        for (std::size_t k = rem.size(); k-- >= d.c_.size();) {
            if (algebra::is_zero(rem[k])) continue;
            R f = rem[k] * inv;
            std::size_t shift = k - (d.c_.size() - 1);
            quo[shift] = f;
            for (std::size_t j = 0; j < d.c_.size(); ++j) rem[shift + j] -= f * d.c_[j];
        }
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }

    std::optional<Poly> exact_div(const Poly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) return std::nullopt;
        return q;
    }

    template <class S>
    S evaluate(const S& x) const {
        S acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + S(c_[i]);
        return acc;
    }

    /// p(x^k)
    Poly substitute_power(unsigned k) const {
        if (c_.empty()) return Poly();
        std::vector<R> r((c_.size() - 1) * k + 1, R(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
        return Poly(std::move(r));
    }

    /// p(x + a)
    Poly shift(const R& a) const {
        Poly r, lin = Poly(std::vector<R>{a, R(1)});
        for (std::size_t i = c_.size(); i-- > 0;) r = r * lin + constant(c_[i]);
        return r;
    }

    /// p(x) * x^k
    Poly shifted_up(std::size_t k) const {
        if (c_.empty()) return Poly();
        std::vector<R> r(k, R(0));
        r.insert(r.end(), c_.begin(), c_.end());
        return Poly(std::move(r));
    }

    std::string to_string(const char* var = "q") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (algebra::is_zero(c_[i])) continue;
            if (!first) os << " + ";
            first = false;
            std::string s = scalar_string(c_[i]);
            if (i == 0) { os << s; continue; }
            if (s != "1") os << s << '*';
            os << var;
            if (i > 1) os << '^' << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && algebra::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

using QPoly = Poly<Rational>;
using CPoly = Poly<Cyclo>;

inline CPoly to_cyclo(const QPoly& p) {
    std::vector<Cyclo> c;
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return CPoly(std::move(c));
}

/// Throws VerificationError when a coefficient is irrational.
QPoly to_rational(const CPoly& p);

/// [n]_q = 1 + q + ... + q^(n-1)
QPoly q_integer(unsigned n);
QPoly q_factorial(unsigned n);
/// Gaussian binomial; zero when k > n.
QPoly q_binomial(long n, long k);
/// Exact quotient; throws when the division leaves a remainder.
QPoly exact_quotient(const QPoly& a, const QPoly& b);

}  // namespace parkspace::algebra
