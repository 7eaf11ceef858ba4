#include "parkspace/catalan/kirkman.hpp"

#include "parkspace/algebra/matrix.hpp"
#include "parkspace/error.hpp"
#include "parkspace/parallel.hpp"

#include <algorithm>

namespace parkspace::catalan {

using algebra::Cyclo;
using algebra::CPoly;
using algebra::Integer;
using algebra::Matrix;
using algebra::QUSeries;

namespace {

QPoly monomial(std::size_t k) { return QPoly::monomial(Rational(1), k); }

std::vector<std::uint64_t> class_sizes(const CoxeterGroup& g) {
    std::vector<std::uint64_t> s;
    for (const auto& cl : g.classes()) s.push_back(cl.size);
    return s;
}

Integer group_order(const CoxeterGroup& g) { return Integer(static_cast<unsigned long>(g.order())); }

// 1 / det(1 - q M) as a series
QUSeries inverse_denominator(const Matrix& m, std::size_t order) {
    return QUSeries::from_q(algebra::det_one_minus_qM(m), order).inverse();
}

// a + b q^e with a, b polynomials in u
QUSeries binomial(const CPoly& a, const CPoly& b, std::size_t e, std::size_t order) {
    QUSeries s(order);
    if (order > 0) s.coeff(0) += a;
    if (e < order) s.coeff(e) += b;
    return s;
}

QUSeries product_denominator(const CoxeterGroup& g, std::size_t order) {
    QUSeries r = QUSeries::from_q(CPoly(1), order);
    for (unsigned e : g.exponents())
        r = r * binomial(CPoly(1), CPoly(-1), e + 1, order);
    return r.inverse();
}

}  // namespace

std::vector<QPoly> q_kirkman_all(const CoxeterGroup& g, std::size_t order, unsigned threads) {
    const std::size_t T = order ? order : default_truncation(g);
    const unsigned n = g.rank(), h = g.coxeter_number();
    std::vector<QUSeries> terms(g.classes().size(), QUSeries(T));
    parallel_for(terms.size(), threads, [&](std::size_t k) {
        const Matrix& m = g.class_matrix(static_cast<std::uint32_t>(k));
        CPoly den = algebra::det_one_minus_qM(m);
        terms[k] = QUSeries::from_u(algebra::det_pencil(Matrix::identity(n), m), T) *
                   QUSeries::from_q(den.substitute_power(h + 1), T) * QUSeries::from_q(den, T).inverse();
    });
    bool integral = false;
    QUSeries sum = algebra::series_sum_over_classes(terms, class_sizes(g), group_order(g), &integral);
    check(integral, g.label() + ": q-Kirkman class average is not integral");
    std::vector<QPoly> out;
    for (unsigned k = 0; k <= n; ++k) {
        QPoly p = algebra::to_rational(sum.u_slice(k));
        check(p.degree() <= static_cast<long>(n * h), g.label() + ": q-Kirkman series has a nonzero tail");
        out.push_back(std::move(p));
    }
    return out;
}

QPoly q_kirkman(const CoxeterGroup& g, unsigned k) {
    if (k > g.rank()) throw UsageError("k must lie in [0, rank]");
    return q_kirkman_all(g)[k];
}

std::optional<QPoly> q_kirkman_closed_form(const CoxeterGroup& g, unsigned k) {
    using algebra::q_binomial;
    const unsigned n = g.rank();
    if (k > n) throw UsageError("k must lie in [0, rank]");
    if (k == 0) return cat_q(g);
    if (k == n) return monomial(g.positive_root_count());
    const long K = k;
    switch (g.spec().family) {
    case coxeter::Family::A: {
        const long N = n + 1;
        QPoly p = monomial(K * (K + 1) / 2) * q_binomial(N, K) * q_binomial(2 * N - K, N - K - 1);
        return algebra::exact_quotient(p, algebra::q_integer(N));
    }
    case coxeter::Family::B:
        return monomial(K * K) * q_binomial(n, K).substitute_power(2) *
               q_binomial(2 * n - K, n - K).substitute_power(2);
    case coxeter::Family::D:
        return monomial(K * K) * q_binomial(n - 1, K).substitute_power(2) *
                   q_binomial(2 * n - K - 1, n - K).substitute_power(2) +
               monomial(K * K - 2 * K + n) * q_binomial(n, K).substitute_power(2) *
                   q_binomial(2 * n - K - 2, n - K).substitute_power(2);
    case coxeter::Family::I2:
    case coxeter::Family::G2: {
        const unsigned m = g.coxeter_number();
        return monomial(1) * algebra::q_integer(m).substitute_power(2) +
               monomial(m - 1) * algebra::q_integer(2).substitute_power(2);
    }
    default:
        return std::nullopt;
    }
}

QPoly codegree_polynomial(const CoxeterGroup& g) {
    QPoly r;
    for (unsigned e : g.exponents()) r += monomial(e - 1);
    return r;
}

TauSeries tau_series(const CoxeterGroup& g, std::size_t order, unsigned threads) {
    const unsigned n = g.rank();
    const std::size_t classes = g.classes().size();
    std::vector<QUSeries> triv(classes, QUSeries(order)), refl(classes, QUSeries(order)), det(classes, QUSeries(order));
    parallel_for(classes, threads, [&](std::size_t k) {
        const Matrix& m = g.class_matrix(static_cast<std::uint32_t>(k));
        Cyclo trace;
        for (unsigned i = 0; i < n; ++i) trace += m(i, i);
        triv[k] = QUSeries::from_u(algebra::det_pencil(Matrix::identity(n), m), order) * inverse_denominator(m, order);
        refl[k] = triv[k];
        refl[k] *= trace;
        det[k] = triv[k];
        det[k] *= algebra::determinant(m);
    });
    auto sizes = class_sizes(g);
    return {algebra::series_sum_over_classes(triv, sizes, group_order(g)),
            algebra::series_sum_over_classes(refl, sizes, group_order(g)),
            algebra::series_sum_over_classes(det, sizes, group_order(g))};
}

NearBoundaryReport near_boundary_check(const CoxeterGroup& g, std::size_t order, unsigned threads) {
    const std::size_t T = order ? order : g.positive_root_count() + g.coxeter_number() + 2;
    auto ex = g.exponents();
    std::sort(ex.begin(), ex.end());
    check(!ex.empty() && ex.back() + 1 == g.coxeter_number(), g.label() + ": largest exponent is not h - 1");
    const CPoly u = CPoly::x();

    QUSeries denom = product_denominator(g, T);
    QUSeries trivial = denom, determinant = denom;
    for (unsigned e : ex) {
        trivial = trivial * binomial(CPoly(1), u, e, T);
        determinant = determinant * binomial(u, CPoly(1), e, T);
    }
    QUSeries reflection = denom * QUSeries::from_q(algebra::to_cyclo(codegree_polynomial(g)), T) *
                          binomial(u, CPoly(1), 1, T);
    for (std::size_t i = 0; i + 1 < ex.size(); ++i) reflection = reflection * binomial(CPoly(1), u, ex[i], T);

    TauSeries tau = tau_series(g, T, threads);
    NearBoundaryReport rep;
    rep.group = g.label();
    rep.order = T;
    rep.trivial_match = tau.trivial == trivial;
    rep.determinant_match = tau.determinant == determinant;
    rep.reflection_match = tau.reflection == reflection;
    for (std::size_t i = 0; i < T; ++i)
        if (tau.reflection.coeff(i) != reflection.coeff(i)) {
            rep.first_mismatch_degree = static_cast<long>(i);
            break;
        }
    return rep;
}

}  // namespace parkspace::catalan
