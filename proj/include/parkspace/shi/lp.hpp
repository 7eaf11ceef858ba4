#pragma once

#include "parkspace/algebra/cyclotomic.hpp"

#include <optional>
#include <vector>

namespace parkspace::shi {

using algebra::Rational;

/// Strict inequality a . x > b.
struct Inequality {
    std::vector<Rational> a;
    Rational b;
};

/// A point strictly satisfying every inequality, or nullopt when the open
/// polyhedron is empty.  Maximizes the smallest slack (capped at 1) by
/// Fourier-Motzkin elimination, then back-substitutes midpoints.
std::optional<std::vector<Rational>> strict_witness(const std::vector<Inequality>& system, unsigned dim);

inline bool strictly_feasible(const std::vector<Inequality>& system, unsigned dim) {
    return strict_witness(system, dim).has_value();
}

}  // namespace parkspace::shi
