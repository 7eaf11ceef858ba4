#pragma once

#include "parkspace/flats/root_poset.hpp"

#include <map>
#include <optional>
#include <vector>

namespace parkspace::parking {

using coxeter::CoxeterGroup;
using coxeter::Element;
using algebra::Integer;

enum class Variant { NC, NN };

/// [w, X]: X is a flat id, rep the least element index of the coset w W_X.
struct ParkingClass {
    std::uint32_t flat;
    Element rep;
    friend bool operator==(const ParkingClass&, const ParkingClass&) = default;
};

/// Park^NC (a W x C-set) or Park^NN (a W-set) as the disjoint union of the
/// coset spaces W/W_X over the relevant flats.  Keeps a reference to the group.
class ParkingSpace {
public:
    static ParkingSpace build(const CoxeterGroup& g, Variant variant, unsigned threads = 1);

    Variant variant() const { return variant_; }
    const CoxeterGroup& group() const { return *g_; }
    const std::vector<flats::Flat>& flats() const { return flats_; }
    /// Present for the NC variant only.
    const flats::NoncrossingSet* noncrossing() const { return nc_ ? &*nc_ : nullptr; }

    std::size_t size() const { return classes_.size(); }
    const std::vector<ParkingClass>& classes() const { return classes_; }
    std::uint32_t index_of(std::uint32_t flat, Element w) const { return class_of_[flat][w]; }

    /// (v, c^d) . [w, X] = [v w c^-d, c^d X]; d must be 0 for Park^NN.
    std::uint32_t act(Element v, long d, std::uint32_t cls) const;
    /// Number of classes fixed by (u, c^d) for every d in [0, h) (NC) or d = 0 (NN).
    std::vector<std::uint64_t> fixed_counts(Element u) const;
    std::uint64_t fixed_count(Element u, long d) const;

private:
    const CoxeterGroup* g_ = nullptr;
    Variant variant_ = Variant::NC;
    std::vector<flats::Flat> flats_;
    std::optional<flats::NoncrossingSet> nc_;
    std::vector<ParkingClass> classes_;
    std::vector<std::vector<std::uint32_t>> class_of_;
    // For the NC variant: per flat, the shifts d fixing it and masks of W_X c^d.
    std::vector<std::vector<std::pair<unsigned, std::vector<bool>>>> coset_masks_;
};

/// (h+1)^{mult of omega^d as an eigenvalue of u}
Integer park_alg_character(const CoxeterGroup& g, Element u, long d);
/// Type A shortcut from the cycle type of u; agrees with the matrix computation.
Integer park_alg_character_type_a(const CoxeterGroup& g, Element u, long d);

struct CharacterPair {
    Element class_rep;
    unsigned d;
    Integer chi_nc;
    Integer chi_alg;
    bool equal;
};

struct WeakConjectureReport {
    std::string group;
    std::vector<CharacterPair> pairs;
    bool all_equal = true;
};

/// Compares the two W x C-characters on every (class, c^d).
WeakConjectureReport verify_weak_conjecture(const ParkingSpace& park, unsigned threads = 1);

/// <wedge^k V, Park> for k = 0..n.
std::vector<Integer> exterior_multiplicities(const ParkingSpace& park);

/// Type A: the multiset of block-size partitions, one per W-orbit.
std::map<std::vector<unsigned>, unsigned> frobenius_characteristic(const ParkingSpace& park);

/// W x C stabilizer of a class, as (v, d) pairs.
std::vector<std::pair<Element, unsigned>> stabilizer(const ParkingSpace& park, std::uint32_t cls);

}  // namespace parkspace::parking
