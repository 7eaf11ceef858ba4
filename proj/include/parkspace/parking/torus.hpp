#pragma once

#include "parkspace/flats/flats.hpp"

#include <vector>

namespace parkspace::parking {

using coxeter::CoxeterGroup;
using coxeter::Element;

/// The root lattice modulo p, with W acting through integer matrices in the
/// simple-root basis.  Points are encoded in base p.
class FiniteTorus {
public:
    FiniteTorus(const CoxeterGroup& g, unsigned p);

    unsigned modulus() const { return p_; }
    std::size_t size() const { return size_; }
    std::vector<int> point(std::size_t x) const;
    std::size_t encode(const std::vector<int>& coords) const;
    std::size_t act(Element w, std::size_t x) const;

    struct Orbit {
        std::size_t rep;
        std::size_t size;
        std::vector<Element> stabilizer;
        flats::Flat fixed;  // V^{stabilizer}
        std::vector<coxeter::RootIndex> orbit_key;
    };
    /// All W-orbits.  Asserts that every stabilizer is the parabolic W_X of
    /// its fixed space X.
    std::vector<Orbit> orbits() const;

private:
    const CoxeterGroup* g_;
    unsigned p_;
    std::size_t size_;
    std::vector<long> mats_;  // per element, n x n row-major
};

/// (1/|W|) sum_w p^{dim V^w}
algebra::Integer burnside_count(const CoxeterGroup& g, unsigned p);

/// Stabilizer orders of S_N acting on (Z/p)^N modulo the diagonal, one per orbit, sorted.
std::vector<std::size_t> quotient_model_stabilizers(unsigned N, unsigned p);

}  // namespace parkspace::parking
