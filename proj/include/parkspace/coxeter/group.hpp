#pragma once

#include "parkspace/algebra/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace parkspace::coxeter {

enum class Family { A, B, D, I2, H3, H4, F4, E6, E7, E8, G2 };

/// A Cartan-Killing label such as "A3", "B4", "I2(7)", "H3".  "C" parses as B.
struct GroupSpec {
    Family family = Family::A;
    unsigned rank = 1;
    unsigned m = 0;  // dihedral parameter for I2(m)

    static GroupSpec parse(const std::string& label);
    std::string label() const;
};

enum class CoxeterChoice { Linear, Bipartite };

struct BuildOptions {
    CoxeterChoice choice = CoxeterChoice::Linear;
    bool allow_stretch = false;
};

using Element = std::uint32_t;
using RootIndex = std::uint16_t;

struct ConjugacyClass {
    Element rep;
    std::uint64_t size;
};

/// A finite real reflection group with every element enumerated.
///
/// Elements are indexed in breadth-first order from the identity (index 0)
/// using right multiplication by simple generators in a fixed order.  Each
/// element is stored as the permutation it induces on the root system;
/// matrices are produced on demand from the images of the simple roots.
class CoxeterGroup {
public:
    static CoxeterGroup build(const GroupSpec& spec, const BuildOptions& opts = {});

    const GroupSpec& spec() const { return spec_; }
    std::string label() const { return spec_.label(); }
    unsigned rank() const { return n_; }
    std::size_t order() const { return order_; }
    unsigned coxeter_number() const { return h_; }
    const std::vector<unsigned>& degrees() const { return degrees_; }
    std::vector<unsigned> exponents() const;
    bool crystallographic() const { return crystallographic_; }
    /// Conductor of the cyclotomic field holding the matrix entries.
    unsigned field_conductor() const { return field_; }
    /// zeta_h^d, the d-th power of the regular eigenvalue of c.
    algebra::Cyclo omega(long d) const;

    std::size_t root_count() const { return roots_.size(); }
    std::size_t positive_root_count() const { return roots_.size() / 2; }
    const algebra::Vector& root(RootIndex r) const { return roots_[r]; }
    /// Coordinates in the basis of simple roots.
    const algebra::Vector& root_coords(RootIndex r) const { return root_coords_[r]; }
    /// Positive roots are 0..N-1 with simple roots first; -root(r) is r+N mod 2N.
    bool is_positive(RootIndex r) const { return r < positive_root_count(); }
    RootIndex negative(RootIndex r) const;
    RootIndex simple_root(unsigned i) const { return static_cast<RootIndex>(i); }
    RootIndex root_index(const algebra::Vector& v) const;
    std::optional<RootIndex> find_root(const algebra::Vector& v) const;
    /// Invariant symmetric bilinear form in the working coordinates.
    const algebra::Matrix& gram() const { return gram_; }

    Element identity() const { return 0; }
    Element generator(unsigned i) const { return gens_[i]; }
    Element multiply(Element a, Element b) const;
    Element inverse(Element a) const { return inverse_[a]; }
    Element power(Element a, long k) const;
    Element coxeter_element() const { return c_; }
    unsigned element_order(Element a) const;
    /// Reflection through positive root r.
    Element reflection(RootIndex r) const { return reflections_[r]; }
    const std::vector<Element>& reflections() const { return reflections_; }
    RootIndex act(Element w, RootIndex r) const { return perms_[std::size_t(w) * roots_.size() + r]; }
    algebra::Matrix matrix(Element w) const;
    std::vector<unsigned> word(Element w) const;
    /// Element with the given images of the simple roots, or order() if none.
    Element from_simple_images(const std::vector<RootIndex>& images) const;

    const std::vector<ConjugacyClass>& classes() const { return classes_; }
    std::uint32_t class_of(Element w) const { return class_of_[w]; }
    /// Class representatives' matrices, aligned with classes().
    const algebra::Matrix& class_matrix(std::uint32_t k) const { return class_matrices_[k]; }
    unsigned fixed_dim(Element w) const { return class_fixed_dim_[class_of_[w]]; }
    unsigned reflection_length(Element w) const { return n_ - fixed_dim(w); }

    /// Type A (letters 1..rank+1) and B/D (letters +-1..+-rank) only.
    bool has_permutation_word() const;
    unsigned permutation_degree() const;
    std::vector<int> signed_permutation(Element w) const;
    Element from_signed_permutation(const std::vector<int>& images) const;

private:
    CoxeterGroup() = default;
    std::uint64_t key_of(const RootIndex* perm) const;

    GroupSpec spec_;
    unsigned n_ = 0, h_ = 1, field_ = 1;
    bool crystallographic_ = true;
    std::size_t order_ = 0;
    std::vector<unsigned> degrees_;
    algebra::Matrix gram_;
    algebra::Matrix simple_inverse_;  // inverse of the simple-root column matrix
    std::vector<algebra::Vector> roots_, root_coords_;
    std::unordered_map<std::string, RootIndex> root_lookup_;
    std::vector<RootIndex> perms_;
    std::vector<Element> inverse_, parent_, gens_, reflections_;
    std::vector<unsigned char> parent_gen_;
    std::unordered_map<std::uint64_t, Element> lookup_;
    Element c_ = 0;
    std::vector<ConjugacyClass> classes_;
    std::vector<std::uint32_t> class_of_;
    std::vector<algebra::Matrix> class_matrices_;
    std::vector<unsigned> class_fixed_dim_;
    std::vector<algebra::Vector> letters_;  // type A: projections of e_k
};

}  // namespace parkspace::coxeter
