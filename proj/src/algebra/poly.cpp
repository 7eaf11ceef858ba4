#include "parkspace/algebra/poly.hpp"

#include "parkspace/error.hpp"

namespace parkspace::algebra {

QPoly to_rational(const CPoly& p) {
    std::vector<Rational> c;
    for (const auto& x : p.coeffs()) c.push_back(x.to_rational());
    return QPoly(std::move(c));
}

QPoly q_integer(unsigned n) { return QPoly(std::vector<Rational>(n, Rational(1))); }

QPoly q_factorial(unsigned n) {
    QPoly r(1);
    for (unsigned i = 2; i <= n; ++i) r *= q_integer(i);
    return r;
}

QPoly exact_quotient(const QPoly& a, const QPoly& b) {
    auto q = a.exact_div(b);
    if (!q) throw VerificationError("inexact division of " + a.to_string() + " by " + b.to_string());
    return *q;
}

QPoly q_binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return QPoly();
    QPoly num(1), den(1);
    for (long i = 0; i < k; ++i) {
        num *= q_integer(static_cast<unsigned>(n - i));
        den *= q_integer(static_cast<unsigned>(i + 1));
    }
    return exact_quotient(num, den);
}

}  // namespace parkspace::algebra
