#include "doctest.h"

#include "parkspace/error.hpp"
#include "parkspace/theta/type_a.hpp"
#include "parkspace/theta/type_bc.hpp"
#include "parkspace/theta/type_d.hpp"

#include <random>
#include <set>

using namespace parkspace;
using namespace parkspace::theta;
using coxeter::CoxeterGroup;
using coxeter::Element;
using coxeter::GroupSpec;
using flats::SetPartition;

namespace {

CoxeterGroup make(const std::string& label) { return CoxeterGroup::build(GroupSpec::parse(label)); }

using Forward = ThetaPoint (*)(const parking::ParkingSpace&, std::uint32_t);
using Inverse = std::uint32_t (*)(const parking::ParkingSpace&, const ThetaPoint&);

void check_bijection(const std::string& label, Forward fwd, Inverse inv) {
    INFO(label);
    auto g = make(label);
    auto park = parking::ParkingSpace::build(g, parking::Variant::NC);
    std::set<ThetaPoint> images;
    for (std::uint32_t k = 0; k < park.size(); ++k) {
        auto v = fwd(park, k);
        images.insert(v);
        CHECK(inv(park, v) == k);
    }
    auto points = theta_points(g.spec());
    CHECK(images.size() == points.size());
    CHECK(points.size() == park.size());
    for (const auto& v : points) CHECK(fwd(park, inv(park, v)) == v);

    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint32_t> pick_w(0, static_cast<std::uint32_t>(g.order() - 1));
    std::uniform_int_distribution<std::uint32_t> pick_c(0, static_cast<std::uint32_t>(park.size() - 1));
    std::uniform_int_distribution<long> pick_d(0, g.coxeter_number() - 1);
    for (int t = 0; t < 100; ++t) {
        auto w = pick_w(rng);
        auto cls = pick_c(rng);
        long d = pick_d(rng);
        auto lhs = fwd(park, park.act(w, d, cls));
        auto rhs = fwd(park, cls).scaled(d).permuted(g.signed_permutation(w));
        CHECK(lhs == rhs);
    }

    // the origin is the image of [1,{0}] and the only point fixed by all of W x C
    std::uint32_t zero = 0, whole = 0;
    for (std::uint32_t x = 0; x < park.flats().size(); ++x) {
        if (park.flats()[x].dim == 0) zero = x;
        if (park.flats()[x].dim == g.rank()) whole = x;
    }
    auto origin = fwd(park, park.index_of(zero, g.identity()));
    for (int c : origin.coords) CHECK(c == -1);
    auto regular = fwd(park, park.index_of(whole, g.identity()));
    std::size_t stab = 0;
    for (Element w = 0; w < g.order(); ++w)
        if (regular.permuted(g.signed_permutation(w)) == regular) ++stab;
    CHECK(stab == 1);
}

}  // namespace

TEST_CASE("theta point grids and text") {
    CHECK(theta_points(GroupSpec::parse("B2")).size() == 25);
    CHECK(theta_points(GroupSpec::parse("D4")).size() == 2401);
    CHECK(theta_points(GroupSpec::parse("B4")).size() == 6561);
    CHECK_THROWS_AS(theta_points(GroupSpec::parse("A3")), UsageError);
    auto p = ThetaPoint::parse("-w^7,0,0,-w^7,+w^3,+w^6,+w^6,-w^6,-w^3", 18);
    CHECK(p.to_string() == "-w^7,0,0,-w^7,+w^3,+w^6,+w^6,-w^6,-w^3");
    CHECK(p.scaled(18) == p);
    CHECK(p.scaled(9).scaled(9) == p);
    CHECK(ThetaPoint::parse("+w^9", 18).scaled(1).to_string() == "-w^1");
    CHECK_THROWS_AS(ThetaPoint::parse("+w^10", 18), UsageError);
    CHECK_THROWS_AS(ThetaPoint::parse("w^1", 18), UsageError);
}

TEST_CASE("type B worked example with n = 9") {
    auto pi = SetPartition::parse("{+1,-6,-9|-1,+6,+9|0:±2,±5|+3,+4|-3,-4|+7,+8|-7,-8}");
    auto op = openers(pi);
    std::map<int, int> opener_of;
    for (std::size_t i = 0; i < pi.blocks.size(); ++i) opener_of[pi.blocks[i][0]] = op[i];
    CHECK(opener_of[+1] == -6);
    CHECK(opener_of[-1] == +6);
    CHECK(opener_of[+3] == +3);
    CHECK(opener_of[-3] == -3);
    CHECK(opener_of[+7] == +7);
    CHECK(opener_of[-7] == -7);

    auto lp = LabelledPartition::from_permutation(pi, {-6, -3, +5, -9, +2, -8, -1, -4, +7});
    auto v = bc_forward(lp);
    CHECK(v.to_string() == "-w^7,0,0,-w^7,+w^3,+w^6,+w^6,-w^6,-w^3");
    CHECK(bc_inverse(v) == lp);

    std::vector<unsigned> mult(10, 0);
    mult[3] = 2;
    mult[6] = 3;
    mult[7] = 2;
    CHECK(partition_from_multiplicities(mult, 9) == pi);
}

TEST_CASE("nested blocks of equal size are recovered") {
    // (+1 (+2 +3) +4) and its negative: both blocks have size 2
    auto pi = SetPartition::parse("{+1,+4|-1,-4|+2,+3|-2,-3}");
    auto lp = LabelledPartition::from_permutation(pi, {1, 2, 3, 4});
    CHECK(bc_inverse(bc_forward(lp)) == lp);
}

TEST_CASE("type D worked examples with n = 7") {
    std::vector<int> w = {-1, -5, +2, -7, -6, -4, -3};
    auto x1 = SetPartition::parse("{+1,+2,-5|-1,-2,+5|+3,+4|-3,-4|+6|-6|+7|-7}");
    auto x2 = SetPartition::parse("{+1,+2,-5,-7|-1,-2,+5,+7|+3,+4|-3,-4|+6|-6}");
    auto x3 = SetPartition::parse("{0:±1,±2,±5,±7|+3,+4|-3,-4|+6|-6}");
    const std::vector<std::pair<SetPartition, std::string>> cases = {
        {x1, "+w^5,+w^3,0,-w^6,+w^5,-w^5,-w^3"},
        {x2, "+w^5,+w^3,-w^5,-w^6,+w^5,-w^5,-w^3"},
        {x3, "0,+w^3,0,-w^6,0,0,-w^3"},
    };
    for (const auto& [pi, image] : cases) {
        INFO(pi.to_string());
        CHECK(flats::is_noncrossing_d(pi));
        auto lp = LabelledPartition::from_permutation(pi, w);
        auto v = d_forward(lp);
        CHECK(v.to_string() == image);
        CHECK(d_inverse(v) == lp);
    }
}

TEST_CASE("type B/C bijection on B2-B4") {
    for (const char* label : {"B2", "B3", "B4"}) check_bijection(label, &bc_forward, &bc_inverse);
}

TEST_CASE("type D bijection on D3-D4") {
    for (const char* label : {"D3", "D4"}) check_bijection(label, &d_forward, &d_inverse);
}

TEST_CASE("codecs reject the wrong family") {
    auto g = make("A3");
    auto park = parking::ParkingSpace::build(g, parking::Variant::NC);
    CHECK_THROWS_AS(bc_forward(park, 0), UsageError);
    CHECK_THROWS_AS(d_forward(park, 0), UsageError);
}

TEST_CASE("equivariant function counts") {
    auto id = count_equivariant_functions({1, 2, 3}, 1);
    CHECK(id.d == 3);
    CHECK(id.formula == 1);
    CHECK(id.brute == 1u);
    auto c = count_equivariant_functions({2, 3, 1}, 1);
    CHECK(c.formula == 4);
    CHECK(c.brute == 4u);
    // cycle sizes 1 and 2, d = 3
    CHECK(count_equivariant_functions({1, 3, 2}, 1).brute == 1u);
    CHECK_THROWS_AS(count_equivariant_functions({1, 2, 3}, 3), UsageError);
    CHECK_FALSE(count_equivariant_functions({1, 2, 3, 4, 5, 6, 7, 8}, 1).brute.has_value());
}

TEST_CASE("admissible partitions") {
    Integer total = 0;
    for (const auto& ap : admissible_census({2, 3, 1}, 3)) total += ap.weight;
    CHECK(total == 4);
    auto id = admissible_census({1, 2, 3, 4}, 2);
    REQUIRE(id.size() == 1);
    CHECK(id[0].pi.blocks.size() == 1);
    CHECK(id[0].weight == 1);
}

TEST_CASE("Athanasiadis symmetric noncrossing counts") {
    for (auto [n, d] : std::vector<std::pair<unsigned, unsigned>>{{4, 2}, {6, 2}, {6, 3}, {8, 2}, {8, 4}, {9, 3}}) {
        INFO(n << " " << d);
        for (const auto& row : athanasiadis_census(n, d)) CHECK(Integer(static_cast<unsigned long>(row.count)) == row.formula);
    }
}

TEST_CASE("type A three-way count") {
    for (const char* label : {"A1", "A2", "A3", "A4", "A5"}) {
        INFO(label);
        auto g = make(label);
        auto park = parking::ParkingSpace::build(g, parking::Variant::NC);
        for (const auto& row : type_a_three_way(park)) {
            INFO("ell=" << row.ell);
            CHECK(row.equal);
            CHECK(row.brute.has_value());
        }
    }
}
