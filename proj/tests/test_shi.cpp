#include "doctest.h"

#include "parkspace/error.hpp"
#include "parkspace/shi/shi.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace parkspace;
using namespace parkspace::shi;
using coxeter::GroupSpec;

namespace {

CoxeterGroup make(const std::string& label) { return CoxeterGroup::build(GroupSpec::parse(label)); }

std::vector<std::uint8_t> all(const CoxeterGroup& g, std::uint8_t p) {
    return std::vector<std::uint8_t>(g.positive_root_count(), p);
}

const ShiRegion& find(const std::vector<ShiRegion>& regions, const std::vector<std::uint8_t>& pos) {
    auto it = std::find_if(regions.begin(), regions.end(), [&](const ShiRegion& r) { return r.position == pos; });
    REQUIRE(it != regions.end());
    return *it;
}

// Sign vectors met by a rational grid in the plane, skipping points on a hyperplane.
std::set<std::vector<std::uint8_t>> grid_regions(const CoxeterGroup& g, int range, int steps) {
    std::set<std::vector<std::uint8_t>> seen;
    for (int a = -range * steps; a <= range * steps; ++a)
        for (int b = -range * steps; b <= range * steps; ++b) {
            Rational y0(a, steps), y1(b, steps);
            y0.canonicalize();
            y1.canonicalize();
            std::vector<std::uint8_t> pos;
            bool generic = true;
            for (RootIndex r = 0; r < g.positive_root_count(); ++r) {
                Rational v = g.root_coords(r)[0].to_rational() * y0 + g.root_coords(r)[1].to_rational() * y1;
                if (v == 0 || v == 1) generic = false;
                pos.push_back(v < 0 ? 0 : v < 1 ? 1 : 2);
            }
            if (generic) seen.insert(pos);
        }
    return seen;
}

}  // namespace

TEST_CASE("strict LP witnesses") {
    // 0 < x, 0 < y, x + y < 1
    std::vector<Inequality> tri = {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, -1}};
    auto w = strict_witness(tri, 2);
    REQUIRE(w);
    CHECK((*w)[0] > 0);
    CHECK((*w)[1] > 0);
    CHECK((*w)[0] + (*w)[1] < 1);

    auto empty = tri;
    empty.push_back({{1, 1}, 1});
    CHECK_FALSE(strictly_feasible(empty, 2));

    // x > 0 and x < 0 touch only at a point
    CHECK_FALSE(strictly_feasible({{{1}, 0}, {{-1}, 0}}, 1));
    // unbounded cone
    CHECK(strictly_feasible({{{1, 0, 0}, 5}, {{1, -1, 0}, 0}, {{0, 0, 1}, 2}}, 3));
    CHECK(strict_witness({}, 2) == std::vector<Rational>{0, 0});
}

TEST_CASE("region counts are (h+1)^n") {
    const std::map<std::string, std::size_t> expected = {{"A1", 2}, {"A2", 16}, {"B2", 25}, {"G2", 49},
                                                         {"A3", 125}, {"B3", 343}, {"C3", 343}};
    for (const auto& [label, count] : expected) {
        INFO(label);
        auto g = make(label);
        auto regions = enumerate_shi_regions(g);
        CHECK(regions.size() == (label == "A1" ? 3u : count));
        for (const auto& r : regions)
            for (const auto& q : region_system(g, r.position)) {
                Rational v = -q.b;
                for (std::size_t i = 0; i < q.a.size(); ++i) v += q.a[i] * r.witness[i];
                CHECK(v > 0);
            }
    }
}

TEST_CASE("rank 2 regions match a grid sample") {
    for (std::string label : {"A2", "B2", "G2"}) {
        INFO(label);
        auto g = make(label);
        auto regions = enumerate_shi_regions(g);
        std::set<std::vector<std::uint8_t>> listed;
        for (const auto& r : regions) listed.insert(r.position);
        CHECK(grid_regions(g, 4, 12) == listed);
    }
}

TEST_CASE("the dominant chamber holds Cat(W) regions") {
    const std::map<std::string, std::size_t> cat = {{"A2", 5}, {"B2", 6}, {"G2", 8}, {"A3", 14}, {"B3", 20}};
    for (const auto& [label, c] : cat) {
        INFO(label);
        auto g = make(label);
        auto regions = enumerate_shi_regions(g);
        CHECK(std::count_if(regions.begin(), regions.end(), [](const ShiRegion& r) { return r.chamber == 0; }) ==
              long(c));
    }
}

TEST_CASE("A2 ceilings and labels") {
    auto g = make("A2");
    auto regions = enumerate_shi_regions(g);
    auto nn = parking::ParkingSpace::build(g, parking::Variant::NN);
    ShiLabelling lab(nn, regions);
    const RootIndex theta = 2;
    REQUIRE(g.root_coords(theta)[0] == 1);
    REQUIRE(g.root_coords(theta)[1] == 1);
    auto index = [&](const ShiRegion& r) { return std::size_t(&r - regions.data()); };

    SUBCASE("far dominant region: no ceilings, label [e, V]") {
        const auto& r = find(regions, all(g, 2));
        CHECK(r.ceilings.empty());
        auto l = lab.label(index(r));
        CHECK(l.antichain.empty());
        CHECK(nn.classes()[l.cls].rep == g.identity());
        CHECK(nn.flats()[nn.classes()[l.cls].flat].dim == 2);
    }
    SUBCASE("fundamental alcove has the highest root as its only ceiling") {
        const auto& r = find(regions, all(g, 1));
        CHECK(r.ceilings == std::vector<RootIndex>{theta});
        auto l = lab.label(index(r));
        CHECK(l.antichain == std::vector<RootIndex>{theta});
        CHECK(nn.flats()[nn.classes()[l.cls].flat].dim == 1);
    }
    SUBCASE("one simple root past level one") {
        const auto& r = find(regions, {2, 1, 2});
        CHECK(r.ceilings == std::vector<RootIndex>{1});
        const auto& s = find(regions, {1, 1, 2});
        CHECK(s.ceilings == std::vector<RootIndex>{0, 1});
        CHECK(lab.label(index(s)).antichain == std::vector<RootIndex>{0, 1});
        CHECK(nn.flats()[nn.classes()[lab.label(index(s)).cls].flat].dim == 0);
    }
    SUBCASE("sixteen distinct labels") {
        std::set<std::uint32_t> labels;
        for (std::size_t i = 0; i < regions.size(); ++i) labels.insert(lab.label(i).cls);
        CHECK(labels.size() == 16);
        CHECK(nn.size() == 16);
    }
}

TEST_CASE("labelling is a bijection with inverse mu") {
    for (std::string label : {"A1", "A2", "B2", "G2", "A3", "B3"}) {
        INFO(label);
        auto g = make(label);
        auto rep = verify_shi(g, 2);
        CHECK(rep.regions == rep.expected);
        CHECK(rep.distinct_labels == rep.expected);
        CHECK(rep.witnesses_ok);
        CHECK(rep.chambers_ok);
        CHECK(rep.antichains_ok);
        CHECK(rep.mu_lambda_identity);
        CHECK(rep.lambda_mu_identity);
        CHECK(rep.ok());
    }
}

TEST_CASE("level-one hyperplanes meet exactly the chambers w C with w^-1 b positive") {
    for (std::string label : {"A1", "A2", "B2", "G2"}) {
        INFO(label);
        CHECK(verify_shi_cox_fact(make(label)));
    }
}

TEST_CASE("chamber descent") {
    auto g = make("B2");
    for (const auto& r : enumerate_shi_regions(g)) CHECK(chamber_of(g, r.witness) == r.chamber);
    CHECK(chamber_of(g, {Rational(1), Rational(1)}) == g.identity());
    CHECK(chamber_of(g, {Rational(-1), Rational(3)}) == g.generator(0));
}

TEST_CASE("unsupported groups") {
    CHECK_THROWS_AS(enumerate_shi_regions(make("H3")), UnsupportedGroup);
    CHECK_THROWS_AS(enumerate_shi_regions(make("I2(5)")), UnsupportedGroup);
    CHECK_THROWS_AS(enumerate_shi_regions(make("A4")), UnsupportedGroup);
    auto g = make("A2");
    auto regions = enumerate_shi_regions(g);
    auto nc = parking::ParkingSpace::build(g, parking::Variant::NC);
    CHECK_THROWS_AS(ShiLabelling(nc, regions), UsageError);
}
