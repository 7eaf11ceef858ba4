#pragma once

#include "parkspace/theta/theta_point.hpp"

namespace parkspace::theta {

ThetaPoint d_forward(const LabelledPartition& lp);
/// Throws VerificationError if the all-nonzero case does not find exactly
/// one block that can take the central vertices.
LabelledPartition d_inverse(const ThetaPoint& v);

ThetaPoint d_forward(const parking::ParkingSpace& park, std::uint32_t cls);
std::uint32_t d_inverse(const parking::ParkingSpace& park, const ThetaPoint& v);

}  // namespace parkspace::theta
