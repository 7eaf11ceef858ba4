#pragma once

#include "parkspace/flats/flats.hpp"

#include <optional>
#include <vector>

namespace parkspace::flats {

/// Positive roots ordered by: alpha < beta when beta - alpha is a sum of
/// positive roots (transitive closure of "beta - alpha is a positive root").
struct RootPoset {
    std::size_t size = 0;
    std::vector<std::vector<bool>> leq;  // leq[a][b]: root a <= root b
    std::vector<std::pair<RootIndex, RootIndex>> covers;
};

RootPoset root_poset(const CoxeterGroup& g);
/// Independent check: beta - alpha has nonnegative integer simple-root coordinates.
bool leq_by_coordinates(const CoxeterGroup& g, RootIndex a, RootIndex b);
std::vector<std::vector<RootIndex>> antichains(const RootPoset& p);

struct NonnestingSet {
    std::vector<std::vector<RootIndex>> antichains;
    std::vector<Flat> flats;  // flats[i] = intersection of hyperplanes of antichains[i]
    std::unordered_map<std::string, std::uint32_t> by_key;
};

/// Requires a crystallographic group.
NonnestingSet nonnesting_set(const CoxeterGroup& g);

}  // namespace parkspace::flats
