#pragma once

#include "parkspace/flats/flats.hpp"

#include <string>
#include <vector>

namespace parkspace::flats {

/// A set partition of [n], or a centrally symmetric partition of +-[n] with
/// at most one self-paired ("zero") block.  Elements within a block and the
/// blocks themselves are kept in the order +1, -1, +2, -2, ...
struct SetPartition {
    bool is_signed = false;
    unsigned n = 0;
    std::vector<std::vector<int>> blocks;

    static SetPartition make(bool is_signed, unsigned n, std::vector<std::vector<int>> blocks);
    /// "{1,3|2}" or "{+1,-2|-1,+2|0:±3,±4}".
    std::string to_string() const;
    static SetPartition parse(const std::string& text);

    /// Index of the block holding letter x, or -1.
    int block_of(int x) const;
    /// Index of the self-paired block, or -1.
    int zero_block() const;
    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.is_signed == b.is_signed && a.n == b.n && a.blocks == b.blocks;
    }
};

/// Coordinate-equality classes of a flat (types A, B, D).
SetPartition partition_of_flat(const CoxeterGroup& g, const Flat& x);
/// The flat {x : coordinates agree on blocks, vanish on the zero block}.
Flat flat_of_partition(const CoxeterGroup& g, const SetPartition& p);

/// Noncrossing on a circle labelled 1..n.
bool is_noncrossing_a(const SetPartition& p);
/// Noncrossing on a circle labelled +1..+n,-1..-n.
bool is_noncrossing_b(const SetPartition& p);
/// Type D picture: +-1..+-(n-1) on a circle, +-n at the centre.
bool is_noncrossing_d(const SetPartition& p);

/// All set partitions of [n] (n <= 9).
std::vector<SetPartition> all_set_partitions(unsigned n);
/// All centrally symmetric partitions of +-[n]; with `type_d` the zero
/// block, when present, has at least four elements.
std::vector<SetPartition> all_symmetric_partitions(unsigned n, bool type_d);

/// Position of letter x on the type-B circle of 2n points, 1-based.
inline int circle_position(int x, unsigned n) { return x > 0 ? x : -x + static_cast<int>(n); }

}  // namespace parkspace::flats
