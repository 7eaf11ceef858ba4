#pragma once

#include "parkspace/flats/set_partition.hpp"
#include "parkspace/parking/parking_space.hpp"

#include <optional>

namespace parkspace::theta {

using algebra::Integer;

/// Permutations of [n] are in one-line form with 1-based images; c = (1, 2, ..., n).

/// Number of cycles of u whose length is divisible by d.
unsigned cycles_divisible(const std::vector<int>& u, unsigned d);

struct EquivariantCount {
    unsigned d;                             // order of c^ell
    Integer formula;                        // (n+1)^{r_d(u)}
    std::optional<std::uint64_t> brute;     // enumeration, n <= 7
};

/// Functions f : [n] -> [n] u {0} with f(u(j)) = c^ell f(j).
/// Throws UsageError when c^ell = 1.
EquivariantCount count_equivariant_functions(const std::vector<int>& u, long ell);

struct AdmissiblePartition {
    flats::SetPartition pi;
    int stable_block = -1;           // the u-stable block, if any
    std::vector<int> orbit_reps;     // one block per length-d orbit
    unsigned k = 0;
    Integer weight;                  // n (n-d) ... (n-(k-1)d)
};

/// (u, d)-admissible set partitions of [n], by enumeration (n <= 9).
std::vector<AdmissiblePartition> admissible_census(const std::vector<int>& u, unsigned d);

struct AthanasiadisRow {
    std::vector<unsigned> mu;  // mu[j-1] = orbits of blocks of size j
    std::size_t count = 0;     // d-fold symmetric noncrossing partitions of this type
    Integer formula;
};

/// Rotation-invariant noncrossing partitions of [n] under i -> i + n/d, by type.
std::vector<AthanasiadisRow> athanasiadis_census(unsigned n, unsigned d);

struct ThreeWayRow {
    std::vector<int> u;
    long ell;
    Integer formula;
    std::optional<std::uint64_t> brute;
    Integer admissible;
    std::uint64_t park;
    bool equal;
};

/// Every class rep u of S_n and every ell with c^ell != 1, for Park^NC of A_{n-1}.
std::vector<ThreeWayRow> type_a_three_way(const parking::ParkingSpace& park);

}  // namespace parkspace::theta
