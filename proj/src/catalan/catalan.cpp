#include "parkspace/catalan/catalan.hpp"

#include "parkspace/algebra/matrix.hpp"
#include "parkspace/error.hpp"

namespace parkspace::catalan {

using algebra::Cyclo;
using algebra::CPoly;
using algebra::Integer;
using algebra::Matrix;

QPoly cat_q(const CoxeterGroup& g, unsigned p) {
    if (p < 1) throw UsageError("Fuss parameter must be positive");
    QPoly num(1), den(1);
    for (unsigned e : g.exponents()) {
        num *= algebra::q_integer(e + p);
        den *= algebra::q_integer(e + 1);
    }
    auto q = num.exact_div(den);
    check(q.has_value(), g.label() + ": q-Catalan quotient is not a polynomial for p = " + std::to_string(p));
    return *q;
}

CspReport csp_check(const CoxeterGroup& g, const flats::NoncrossingSet& nc) {
    CspReport rep;
    rep.group = g.label();
    QPoly cat = cat_q(g);
    for (unsigned d = 0; d < nc.h; ++d) {
        std::size_t fixed = 0;
        for (std::uint32_t x = 0; x < nc.flats.size(); ++x)
            if (nc.rotate(x, d) == x) ++fixed;
        Cyclo v = cat.evaluate(g.omega(d));
        check(v.is_rational(), g.label() + ": Cat(W, omega^d) is irrational");
        Rational r = v.to_rational();
        bool eq = r == Rational(Integer(static_cast<unsigned long>(fixed)));
        rep.rows.push_back({d, fixed, r, eq});
        rep.all_equal = rep.all_equal && eq;
    }
    return rep;
}

NarayanaKirkman narayana_kirkman(const std::vector<flats::Flat>& nc_flats) {
    std::vector<Rational> c;
    for (const auto& x : nc_flats) {
        if (c.size() <= x.dim) c.resize(x.dim + 1, Rational(0));
        c[x.dim] += 1;
    }
    QPoly nar(std::move(c));
    return {nar, nar.shift(Rational(1))};
}

QPoly h_poly_fuss(const CoxeterGroup& g, unsigned p) {
    const unsigned n = g.rank();
    CPoly acc;
    Matrix id = Matrix::identity(n);
    for (std::uint32_t k = 0; k < g.classes().size(); ++k) {
        const auto& cl = g.classes()[k];
        const Matrix& m = g.class_matrix(k);
        Integer w;
        mpz_ui_pow_ui(w.get_mpz_t(), p, g.fixed_dim(cl.rep));
        w *= static_cast<unsigned long>(cl.size);
        acc += algebra::det_pencil(m, id - m) * Cyclo(Rational(w));
    }
    acc *= Cyclo(algebra::frac(1, Integer(static_cast<unsigned long>(g.order()))));
    QPoly out = algebra::to_rational(acc);
    for (const auto& c : out.coeffs())
        check(c.get_den() == 1 && sgn(c) >= 0, g.label() + ": h-polynomial coefficient is not a nonnegative integer");
    return out;
}

std::size_t default_truncation(const CoxeterGroup& g) {
    const std::size_t h = g.coxeter_number();
    return g.rank() * h + h + 2;
}

}  // namespace parkspace::catalan
