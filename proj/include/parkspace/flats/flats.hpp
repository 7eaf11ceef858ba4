#pragma once

#include "parkspace/coxeter/group.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace parkspace::flats {

using coxeter::CoxeterGroup;
using coxeter::Element;
using coxeter::RootIndex;

/// A subspace of V cut out by reflecting hyperplanes.
struct Flat {
    std::vector<algebra::Vector> basis;  // reduced row echelon form
    unsigned dim = 0;
    std::vector<RootIndex> orthogonal_roots;  // positive roots whose hyperplane contains X
    std::vector<Element> stabilizer;          // pointwise stabilizer W_X, sorted
    std::string key;                          // canonical text of the basis
};

Flat make_flat(const CoxeterGroup& g, std::vector<algebra::Vector> spanning);
/// V^w
Flat fixed_flat(const CoxeterGroup& g, Element w);
/// Intersection of the reflecting hyperplanes of the given positive roots.
Flat hyperplane_intersection(const CoxeterGroup& g, const std::vector<RootIndex>& roots);
/// The flat w(X).
Flat translate(const CoxeterGroup& g, Element w, const Flat& x);

/// W-orbit identifier: the lexicographically least image of the sorted
/// orthogonal-root set over W.  Since X is the common kernel of those roots,
/// equal identifiers mean W-conjugate flats.
std::vector<RootIndex> orbit_key(const CoxeterGroup& g, const Flat& x);
std::string orbit_key_string(const std::vector<RootIndex>& key);

/// The noncrossing elements [1, c] under absolute order and their fixed spaces.
struct NoncrossingSet {
    unsigned h = 1;
    std::vector<Element> elements;  // ascending element index
    std::vector<Flat> flats;        // flats[i] = V^elements[i]
    std::vector<std::uint32_t> c_action;  // flat id of c(X)
    std::unordered_map<std::string, std::uint32_t> by_key;
    std::unordered_map<Element, std::uint32_t> by_element;

    std::uint32_t rotate(std::uint32_t x, long d) const;
};

NoncrossingSet noncrossing_set(const CoxeterGroup& g, unsigned threads = 1);
/// u <=_T v in absolute order.
bool absolute_leq(const CoxeterGroup& g, Element u, Element v);

}  // namespace parkspace::flats
