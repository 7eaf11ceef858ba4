#include "doctest.h"

#include "parkspace/catalan/identities.hpp"
#include "parkspace/catalan/kirkman.hpp"
#include "parkspace/error.hpp"
#include "parkspace/parking/torus.hpp"

#include <map>

using namespace parkspace;
using namespace parkspace::catalan;
using algebra::Integer;
using coxeter::GroupSpec;

namespace {

CoxeterGroup make(const std::string& label) { return CoxeterGroup::build(GroupSpec::parse(label)); }

QPoly poly(std::vector<long> c) {
    std::vector<Rational> r;
    for (long x : c) r.emplace_back(x);
    return QPoly(std::move(r));
}

Rational at_one(const QPoly& p) { return p.evaluate(Rational(1)); }

}  // namespace

TEST_CASE("q-Catalan numbers") {
    auto a2 = make("A2");
    CHECK(cat_q(a2) == poly({1, 0, 1, 1, 1, 0, 1}));
    CHECK(cat_q(a2, 1) == QPoly(1));
    // prod (h + d_i) / d_i, computed by hand
    const std::map<std::string, long> cat = {{"A3", 14}, {"B3", 20}, {"D4", 50}, {"H3", 32}, {"F4", 105}, {"I2(9)", 11}};
    for (const auto& [label, c] : cat) CHECK(at_one(cat_q(make(label))) == c);
    CHECK_THROWS_AS(cat_q(a2, 0), UsageError);
}

TEST_CASE("cyclic sieving on noncrossing flats") {
    for (std::string label : {"A2", "A4", "B2", "B3", "D4", "I2(7)", "H3", "G2"}) {
        INFO(label);
        auto g = make(label);
        auto rep = csp_check(g, flats::noncrossing_set(g));
        CHECK(rep.all_equal);
        CHECK(rep.rows.size() == g.coxeter_number());
        for (const auto& r : rep.rows) CHECK(sgn(r.value) >= 0);
    }
    auto a2 = make("A2");
    CHECK(csp_check(a2, flats::noncrossing_set(a2)).rows[1].fixed == 2);
}

TEST_CASE("Narayana and Kirkman polynomials") {
    auto a2 = make("A2");
    auto nk = narayana_kirkman(flats::noncrossing_set(a2).flats);
    CHECK(nk.narayana == poly({1, 3, 1}));
    CHECK(nk.kirkman == poly({5, 5, 1}));
    auto b2 = make("B2");
    auto nb = narayana_kirkman(flats::noncrossing_set(b2).flats);
    CHECK(nb.narayana == poly({1, 4, 1}));
    CHECK(nb.kirkman == poly({6, 6, 1}));
    auto a1 = make("A1");
    CHECK(narayana_kirkman(flats::noncrossing_set(a1).flats).kirkman == poly({2, 1}));
}

TEST_CASE("q-Kirkman from the class average matches product formulas") {
    for (std::string label : {"A1", "A2", "A3", "A4", "B2", "B3", "D4", "I2(5)", "I2(8)", "G2", "H3", "F4"}) {
        INFO(label);
        auto g = make(label);
        auto all = q_kirkman_all(g);
        const unsigned n = g.rank();
        REQUIRE(all.size() == n + 1);
        CHECK(all[n] == QPoly::monomial(Rational(1), g.positive_root_count()));
        CHECK(all[0] == cat_q(g));
        for (unsigned k = 0; k <= n; ++k) {
            auto closed = q_kirkman_closed_form(g, k);
            if (closed) CHECK(*closed == all[k]);
        }
        // sum_k Kirk(W,k;1) (t-1)^k = Nar(t)
        QPoly kirk;
        for (unsigned k = 0; k <= n; ++k) kirk += QPoly::monomial(at_one(all[k]), k);
        auto nk = narayana_kirkman(flats::noncrossing_set(g).flats);
        CHECK(kirk == nk.kirkman);
        CHECK(kirk.shift(Rational(-1)) == nk.narayana);
    }
    CHECK(q_kirkman_closed_form(make("A2"), 1) == poly({0, 1, 1, 1, 1, 1}));
    CHECK_FALSE(q_kirkman_closed_form(make("H3"), 1).has_value());
}

TEST_CASE("h-polynomial with Fuss parameter") {
    auto a2 = make("A2");
    CHECK(h_poly_fuss(a2, 4) == poly({1, 3, 1}));
    // exponent counts the rank of the stabilizer, so the one-point torus gives t^n
    CHECK(h_poly_fuss(a2, 1) == poly({0, 0, 1}));
    for (std::string label : {"A2", "B2", "B3", "G2"}) {
        auto g = make(label);
        for (unsigned p : {1u, 5u, 7u}) {
            INFO(label << " p=" << p);
            parking::FiniteTorus t(g, p);
            std::vector<long> census(g.rank() + 1, 0);
            for (const auto& o : t.orbits()) ++census[g.rank() - o.fixed.dim];
            QPoly expected = poly(census);
            CHECK(h_poly_fuss(g, p) == expected);
        }
    }
}

TEST_CASE("near-boundary generating function") {
    for (std::string label : {"A1", "A2", "A3", "B2", "B3", "I2(5)", "H3"}) {
        INFO(label);
        auto g = make(label);
        auto rep = near_boundary_check(g);
        CHECK(rep.trivial_match);
        CHECK(rep.determinant_match);
        CHECK(rep.reflection_match);
        CHECK(rep.first_mismatch_degree == -1);
    }
    CHECK(codegree_polynomial(make("A2")) == poly({1, 1}));
}

TEST_CASE("identity suite") {
    for (std::string label : {"A0", "A1", "A3", "B3", "D4", "I2(7)", "H3", "F4", "G2"}) {
        INFO(label);
        auto g = make(label);
        auto park = parking::ParkingSpace::build(g, parking::Variant::NC);
        for (const auto& r : identity_suite(g, &park)) {
            INFO(r.name << ": " << r.detail);
            CHECK(r.ok);
        }
    }
}
