#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace parkspace::algebra {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonicalized a/b; the two-argument mpq_class constructor is not.
inline Rational frac(const Integer& a, const Integer& b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

unsigned euler_phi(unsigned n);
unsigned lcm(unsigned a, unsigned b);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(unsigned n);

/// An element of Q(zeta_N), stored as a residue modulo Phi_N in the power
/// basis 1, zeta, ..., zeta^(phi(N)-1).  Rational values always carry N = 1,
/// so two numbers from the same field compare equal iff their data match.
class Cyclo {
public:
    Cyclo() : n_(1), c_(1) {}
    Cyclo(long v) : n_(1), c_(1, Rational(v)) {}
    Cyclo(const Rational& v) : n_(1), c_(1, v) {}

    static Cyclo zeta(unsigned n, long k);
    static Cyclo from_coeffs(unsigned n, std::vector<Rational> c);

    unsigned conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational to_rational() const;

    /// The same number viewed inside Q(zeta_m); requires conductor() | m.
    Cyclo lifted(unsigned m) const;
    Cyclo inverse() const;
    /// Complex conjugate, zeta -> zeta^-1.
    Cyclo conj() const;

    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }
    Cyclo operator-() const;

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    /// "p/q" for rationals, otherwise "[c0,c1,...]@N".
    std::string to_string() const;

private:
    Cyclo(unsigned n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
    void normalize();

    unsigned n_;
    std::vector<Rational> c_;
};

std::string rational_string(const Rational& r);

}  // namespace parkspace::algebra
