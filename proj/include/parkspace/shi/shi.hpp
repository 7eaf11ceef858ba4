#pragma once

#include "parkspace/parking/parking_space.hpp"
#include "parkspace/shi/lp.hpp"

#include <map>
#include <string>
#include <vector>

namespace parkspace::shi {

using coxeter::CoxeterGroup;
using coxeter::Element;
using coxeter::RootIndex;

/// A region of the arrangement {<v,a> = 0, 1 : a positive}.  Points are
/// written in the coordinates y_i = <v, alpha_i>, so <v, a> is the dot
/// product of y with the simple-root coordinates of a.
struct ShiRegion {
    /// position[r]: 0 if <v,a_r> < 0, 1 if 0 < <v,a_r> < 1, 2 if <v,a_r> > 1.
    std::vector<std::uint8_t> position;
    std::vector<Rational> witness;
    Element chamber = 0;              // R lies in chamber * C
    std::vector<RootIndex> ceilings;  // positive roots a with H_{a,1} a facet of R
};

/// Strict inequalities cutting out the region with the given positions.
std::vector<Inequality> region_system(const CoxeterGroup& g, const std::vector<std::uint8_t>& position);

/// Crystallographic groups of rank at most 3; throws UnsupportedGroup otherwise.
void require_shi_support(const CoxeterGroup& g);

/// All (h+1)^n regions, sorted by position vector.
std::vector<ShiRegion> enumerate_shi_regions(const CoxeterGroup& g);

/// Facet test: dropping <v,a> < 1 and asking for <v,a> > 1 stays feasible.
std::vector<RootIndex> ceilings(const CoxeterGroup& g, const std::vector<std::uint8_t>& position);

/// The w with y in wC, by descending y to the dominant cone.
Element chamber_of(const CoxeterGroup& g, const std::vector<Rational>& y);

struct ShiLabel {
    std::uint32_t cls = 0;           // class in Park^NN
    std::vector<RootIndex> antichain;  // w^-1 of the ceilings
};

/// Labels regions by Park^NN classes and inverts the labelling.
class ShiLabelling {
public:
    ShiLabelling(const parking::ParkingSpace& nn, const std::vector<ShiRegion>& regions);

    ShiLabel label(std::size_t region) const;
    /// Index of the region carrying the label, or regions.size() if none.
    std::size_t unlabel(std::uint32_t cls) const;
    /// Positions of the region assigned to a class before it is looked up.
    std::vector<std::uint8_t> unlabel_positions(std::uint32_t cls) const;

private:
    const parking::ParkingSpace* nn_;
    const std::vector<ShiRegion>* regions_;
    flats::RootPoset poset_;
    std::unordered_map<std::string, std::uint32_t> flat_by_key_;
    std::vector<std::vector<RootIndex>> antichain_of_flat_;
    std::map<std::vector<std::uint8_t>, std::size_t> by_position_;
};

struct ShiReport {
    std::string group;
    std::size_t regions = 0;
    std::size_t expected = 0;        // (h+1)^n
    std::size_t distinct_labels = 0;
    bool witnesses_ok = true;
    bool chambers_ok = true;
    bool antichains_ok = true;       // ceilings pull back to antichains with |A| = codim X
    bool mu_lambda_identity = true;
    bool lambda_mu_identity = true;
    bool ok() const;
};

ShiReport verify_shi(const CoxeterGroup& g, unsigned threads = 1);

/// H_{b,1} meets the open chamber wC exactly when w^-1 b is positive.
/// Checked for every w and positive b by exact feasibility.
bool verify_shi_cox_fact(const CoxeterGroup& g);

}  // namespace parkspace::shi
