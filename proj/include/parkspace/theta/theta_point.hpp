#pragma once

#include "parkspace/flats/set_partition.hpp"
#include "parkspace/parking/parking_space.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace parkspace::theta {

/// A point of V^Theta for Theta = (x_i^{h+1}): every coordinate is 0 or a
/// power of omega = e^{2 pi i / h}.
struct ThetaPoint {
    unsigned h = 2;
    std::vector<int> coords;  // -1 for 0, otherwise the exponent in [0, h)

    std::size_t size() const { return coords.size(); }
    bool is_zero(std::size_t i) const { return coords[i] < 0; }

    /// Comma list of "0", "+w^j", "-w^j" with 1 <= j <= h/2.
    std::string to_string() const;
    static ThetaPoint parse(const std::string& text, unsigned h);

    /// Multiplication by omega^d.
    ThetaPoint scaled(long d) const;
    /// (u.v)_{|u(i)|} = sign(u(i)) v_i for a signed permutation in one-line form.
    ThetaPoint permuted(const std::vector<int>& u) const;

    auto operator<=>(const ThetaPoint&) const = default;
};

/// Exponent of sign * omega^j.
int signed_exponent(int sign, unsigned j, unsigned h);
/// Inverse of signed_exponent: (sign, j) with 1 <= j <= h/2.
std::pair<int, unsigned> signed_power(int exponent, unsigned h);

/// All (h+1)^n points.
std::vector<ThetaPoint> theta_points(unsigned n, unsigned h);
/// h = 2n for type B/C, 2(n-1) for type D.
std::vector<ThetaPoint> theta_points(const coxeter::GroupSpec& spec);

/// A parking class [w, X] in combinatorial form: the partition of X and the
/// image w(B) of every block.
struct LabelledPartition {
    flats::SetPartition pi;
    std::vector<std::vector<int>> labels;  // labels[i] = w(pi.blocks[i]), letter order

    static LabelledPartition from_permutation(flats::SetPartition pi, const std::vector<int>& w);
    /// A signed permutation sending each block onto its label.  With `even`,
    /// one with an even number of sign changes, adjusting inside the zero
    /// block when needed; nullopt if no such permutation exists.
    std::optional<std::vector<int>> permutation(bool even) const;
    /// "{+1,-6,-9}>{-6,-7,+8}|..." block by block.
    std::string to_string() const;

    friend bool operator==(const LabelledPartition&, const LabelledPartition&) = default;
};

/// Sorts letters as +1, -1, +2, -2, ...
void sort_letters(std::vector<int>& letters);

/// Group side of the codecs (types B and D).
LabelledPartition labelled_class(const parking::ParkingSpace& park, std::uint32_t cls);
std::uint32_t class_of_labelled(const parking::ParkingSpace& park, const LabelledPartition& lp);

}  // namespace parkspace::theta
