#pragma once

#include "parkspace/theta/theta_point.hpp"

namespace parkspace::theta {

/// Opener of every block of a noncrossing partition of +-[m] on the circle
/// +1..+m,-1..-m: the first element of B met after the gap holding -B.
/// The zero block gets 0.
std::vector<int> openers(const flats::SetPartition& pi);

/// The noncrossing partition of +-[m] whose blocks opened at +j and -j have
/// mult[j] elements (mult[0] unused); leftover letters form the zero block.
/// Parsed with a stack over three periods of the doubly infinite string.
flats::SetPartition partition_from_multiplicities(const std::vector<unsigned>& mult, unsigned m);

/// Labels of the blocks of pi read off v: the block opened by +j gets +k
/// where v_k = +omega^j and -k where v_k = -omega^j; the zero block gets +-k
/// where v_k = 0.  v may have more coordinates than pi has letters.
std::vector<std::vector<int>> labels_from_point(const flats::SetPartition& pi, const ThetaPoint& v);

ThetaPoint bc_forward(const LabelledPartition& lp);
LabelledPartition bc_inverse(const ThetaPoint& v);

ThetaPoint bc_forward(const parking::ParkingSpace& park, std::uint32_t cls);
std::uint32_t bc_inverse(const parking::ParkingSpace& park, const ThetaPoint& v);

}  // namespace parkspace::theta
