#include "parkspace/catalan/identities.hpp"

#include "parkspace/algebra/matrix.hpp"

#include <algorithm>
#include <random>

namespace parkspace::catalan {

using algebra::Cyclo;
using algebra::CPoly;
using algebra::Integer;
using algebra::QPoly;
using algebra::Rational;
using algebra::Vector;

namespace {

IdentityResult orlik_solomon(const coxeter::CoxeterGroup& g) {
    CPoly lhs;
    for (std::uint32_t k = 0; k < g.classes().size(); ++k) {
        const auto& cl = g.classes()[k];
        Cyclo coeff = algebra::determinant(g.class_matrix(k)) * Cyclo(Rational(Integer(static_cast<unsigned long>(cl.size))));
        lhs += CPoly::monomial(coeff, g.fixed_dim(cl.rep));
    }
    QPoly rhs(1);
    for (unsigned e : g.exponents()) rhs *= QPoly(std::vector<Rational>{Rational(-static_cast<long>(e)), Rational(1)});
    return {"orlik-solomon", lhs == algebra::to_cyclo(rhs), "sum det(w) t^dim V^w = " + lhs.to_string("t")};
}

IdentityResult etingof(const coxeter::CoxeterGroup& g, unsigned pairs, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    const unsigned n = g.rank();
    auto random_vector = [&] {
        Vector v;
        for (unsigned i = 0; i < n; ++i) v.emplace_back(algebra::frac(num(rng), den(rng)));
        return v;
    };
    const auto& gram = g.gram();
    Cyclo h(static_cast<long>(g.coxeter_number()));
    unsigned failures = 0;
    for (unsigned t = 0; t < pairs; ++t) {
        Vector a = random_vector(), b = random_vector();
        Cyclo sum;
        for (coxeter::RootIndex r = 0; r < g.positive_root_count(); ++r) {
            const Vector& alpha = g.root(r);
            Cyclo norm = algebra::bilinear(alpha, gram, alpha);
            sum += algebra::bilinear(a, gram, alpha) * algebra::bilinear(b, gram, alpha) * Cyclo(2) * norm.inverse();
        }
        if (sum != h * algebra::bilinear(a, gram, b)) ++failures;
    }
    return {"etingof-sum", failures == 0, std::to_string(pairs - failures) + "/" + std::to_string(pairs) + " pairs exact"};
}

}  // namespace

std::vector<IdentityResult> identity_suite(const coxeter::CoxeterGroup& g, const parking::ParkingSpace* park,
                                           unsigned pairs, std::uint64_t seed) {
    std::vector<IdentityResult> out;
    const unsigned n = g.rank(), h = g.coxeter_number();

    Integer prod = 1;
    for (unsigned d : g.degrees()) prod *= d;
    out.push_back({"order-product", prod == static_cast<unsigned long>(g.order()),
                   "|W| = " + std::to_string(g.order()) + ", prod d_i = " + prod.get_str()});

    std::size_t t = g.reflections().size();
    out.push_back({"reflection-count", 2 * t == std::size_t(h) * n && t == g.positive_root_count(),
                   "|T| = " + std::to_string(t) + ", hn = " + std::to_string(h * n)});

    auto ex = g.exponents();
    std::sort(ex.begin(), ex.end());
    bool dual = true;
    for (std::size_t i = 0; i < ex.size(); ++i) dual = dual && ex[i] + ex[ex.size() - 1 - i] == h;
    out.push_back({"exponent-duality", dual, "e_i + e_{n+1-i} = h"});

    out.push_back(orlik_solomon(g));
    out.push_back(etingof(g, pairs, seed));

    if (park) {
        auto mult = parking::exterior_multiplicities(*park);
        out.push_back({"det-once", mult.back() == 1, "<det, Park> = " + mult.back().get_str()});
    }
    return out;
}

}  // namespace parkspace::catalan
