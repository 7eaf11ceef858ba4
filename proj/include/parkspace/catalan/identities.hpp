#pragma once

#include "parkspace/parking/parking_space.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace parkspace::catalan {

struct IdentityResult {
    std::string name;
    bool ok;
    std::string detail;
};

/// Exact group identities: |W| = prod d_i, 2|T| = hn, e_i + e_{n+1-i} = h,
/// the Orlik-Solomon product, the Etingof sum identity on random rational
/// vector pairs, and (when a parking space is given) the single copy of det.
std::vector<IdentityResult> identity_suite(const coxeter::CoxeterGroup& g, const parking::ParkingSpace* park = nullptr,
                                           unsigned pairs = 20, std::uint64_t seed = 1);

}  // namespace parkspace::catalan
