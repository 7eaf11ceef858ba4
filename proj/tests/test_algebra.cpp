#include "doctest.h"

#include "parkspace/algebra/matrix.hpp"
#include "parkspace/algebra/series.hpp"

#include <random>

using namespace parkspace::algebra;

namespace {

QPoly qp(std::vector<long> c) {
    std::vector<Rational> r;
    for (long x : c) r.emplace_back(x);
    return QPoly(r);
}

int mobius(unsigned n) {
    int mu = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    return n > 1 ? -mu : mu;
}

Cyclo random_cyclo(std::mt19937& rng, unsigned n) {
    std::uniform_int_distribution<int> d(-4, 4);
    std::vector<Rational> c;
    for (unsigned i = 0; i < euler_phi(n); ++i) c.push_back(frac(d(rng), 1 + std::abs(d(rng))));
    return Cyclo::from_coeffs(n, c);
}

// Leibniz expansion with polynomial entries: an independent determinant.
CPoly leibniz(const std::vector<std::vector<CPoly>>& a) {
    std::size_t n = a.size();
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    CPoly total;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (p[i] > p[j]) sign = -sign;
        CPoly term(sign);
        for (std::size_t i = 0; i < n; ++i) term *= a[i][p[i]];
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

}  // namespace

TEST_CASE("cyclotomic polynomials match known closed forms") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(15) == std::vector<long>{1, -1, 0, 1, -1, 1, 0, -1, 1});
    for (unsigned n = 1; n <= 60; ++n) CHECK(cyclotomic_polynomial(n).size() - 1 == euler_phi(n));
}

TEST_CASE("roots of unity: powers, conjugates, Ramanujan sums") {
    for (unsigned n : {1u, 2u, 3u, 4u, 5u, 7u, 10u, 12u, 20u, 30u}) {
        Cyclo z = Cyclo::zeta(n, 1), acc(1);
        for (unsigned k = 0; k < n; ++k) acc *= z;
        CHECK(acc == Cyclo(1));
        CHECK(z * z.conj() == Cyclo(1));
        Cyclo prim;
        for (unsigned k = 1; k <= n; ++k)
            if (std::gcd(k, n) == 1) prim += Cyclo::zeta(n, k);
        CHECK(prim == Cyclo(mobius(n)));
    }
    // prod_{k=1}^{p-1} (1 - zeta_p^k) = p
    Cyclo prod(1);
    for (int k = 1; k < 7; ++k) prod *= Cyclo(1) - Cyclo::zeta(7, k);
    CHECK(prod == Cyclo(7));
}

TEST_CASE("field inverses and embeddings") {
    std::mt19937 rng(7);
    for (unsigned n : {5u, 8u, 10u, 12u, 24u}) {
        for (int t = 0; t < 10; ++t) {
            Cyclo a = random_cyclo(rng, n);
            if (a.is_zero()) continue;
            CHECK(a * a.inverse() == Cyclo(1));
            CHECK(a.lifted(3 * n) == a);
            CHECK((a.lifted(2 * n) * a.inverse()) == Cyclo(1));
        }
    }
    // zeta_4 = zeta_8^2
    CHECK(Cyclo::zeta(4, 1) == Cyclo::zeta(8, 2));
    CHECK((Cyclo::zeta(4, 1) - Cyclo::zeta(8, 2)).is_zero());
}

TEST_CASE("q-integers and Gaussian binomials") {
    CHECK(q_integer(3) == qp({1, 1, 1}));
    CHECK(q_binomial(4, 2) == qp({1, 1, 2, 1, 1}));
    CHECK(q_binomial(3, 5).is_zero());
    for (long n = 0; n <= 8; ++n)
        for (long k = 0; k <= n; ++k) {
            // Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
            if (n == 0) continue;
            CHECK(q_binomial(n, k) == q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shifted_up(k));
        }
    auto [quo, rem] = qp({-1, 0, 0, 1}).divmod(qp({-1, 1}));
    CHECK(quo == qp({1, 1, 1}));
    CHECK(rem.is_zero());
}

TEST_CASE("determinant pencil agrees with Leibniz expansion") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 1 + t % 4;
        Matrix a(n, n), b(n, n);
        std::vector<std::vector<CPoly>> e(n, std::vector<CPoly>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = Cyclo(d(rng));
                b(i, j) = Cyclo(d(rng));
                e[i][j] = CPoly(std::vector<Cyclo>{a(i, j), b(i, j)});
            }
        CHECK(det_pencil(a, b) == leibniz(e));
    }
}

TEST_CASE("det(1 - qM) of the A2 Coxeter element is 1 + q + q^2") {
    // c = s1 s2 in the root basis
    Matrix c(2, 2);
    c(0, 0) = Cyclo(0); c(0, 1) = Cyclo(-1);
    c(1, 0) = Cyclo(1); c(1, 1) = Cyclo(-1);
    CHECK(to_rational(det_one_minus_qM(c)) == qp({1, 1, 1}));
    CHECK(eigen_multiplicity(c, Cyclo::zeta(3, 1)) == 1);
    CHECK(eigen_multiplicity(c, Cyclo::zeta(3, 2)) == 1);
    CHECK(eigen_multiplicity(c, Cyclo(1)) == 0);
}

TEST_CASE("kernels are exact and canonical") {
    Matrix m(2, 3);
    m(0, 0) = Cyclo(1); m(0, 1) = Cyclo(2); m(0, 2) = Cyclo(3);
    m(1, 0) = Cyclo(2); m(1, 1) = Cyclo(4); m(1, 2) = Cyclo(6);
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 2);
    for (const auto& v : k) CHECK(dot(m.row(0), v).is_zero());
    // the same plane spanned differently has the same echelon basis
    Vector a{Cyclo(2), Cyclo(-1), Cyclo(0)}, b{Cyclo(1), Cyclo(1), Cyclo(-1)};
    CHECK(echelon_basis({a, b}) == k);
    CHECK(rank(m) == 1);
    Matrix inv = inverse(Matrix::identity(3) * Cyclo(2));
    CHECK(inv(1, 1) == Cyclo(frac(1, 2)));
}

TEST_CASE("series: averaging 1/(1-q) and 1/(1+q) gives 1/(1-q^2)") {
    std::size_t order = 12;
    auto one_minus = QUSeries::from_q(CPoly(std::vector<Cyclo>{Cyclo(1), Cyclo(-1)}), order).inverse();
    auto one_plus = QUSeries::from_q(CPoly(std::vector<Cyclo>{Cyclo(1), Cyclo(1)}), order).inverse();
    bool integral = false;
    auto avg = series_sum_over_classes({one_minus, one_plus}, {1, 1}, Integer(2), &integral);
    CHECK(integral);
    for (std::size_t i = 0; i < order; ++i) CHECK(avg.coeff(i) == CPoly(i % 2 == 0 ? 1 : 0));
    // u-coefficients survive products
    auto u = QUSeries::from_u(CPoly(std::vector<Cyclo>{Cyclo(1), Cyclo(1)}), order);
    auto prod = u * one_minus;
    CHECK(prod.u_slice(1).coeff(5) == Cyclo(1));
}
