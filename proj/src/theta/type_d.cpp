#include "parkspace/theta/type_d.hpp"

#include "parkspace/error.hpp"
#include "parkspace/theta/type_bc.hpp"

#include <cstdlib>

namespace parkspace::theta {

namespace {

int sign(int x) { return x < 0 ? -1 : 1; }

// pi with +-n removed, as a partition of +-[n-1].
flats::SetPartition drop_centre(const flats::SetPartition& pi) {
    const int n = static_cast<int>(pi.n);
    std::vector<std::vector<int>> blocks;
    for (const auto& b : pi.blocks) {
        std::vector<int> r;
        for (int x : b)
            if (std::abs(x) != n) r.push_back(x);
        blocks.push_back(std::move(r));
    }
    return flats::SetPartition::make(true, pi.n - 1, std::move(blocks));
}

// Lifts a partition of +-[n-1] to +-[n]: with `zero` the centre joins the
// zero block, else +n joins the block holding `plus_letter` and -n its
// negative, or both are singletons when plus_letter is 0.
flats::SetPartition add_centre(const flats::SetPartition& hat, bool zero, int plus_letter) {
    const int n = static_cast<int>(hat.n) + 1;
    auto blocks = hat.blocks;
    if (zero) {
        int z = hat.zero_block();
        check(z >= 0, "no zero block to extend");
        blocks[z].push_back(n);
        blocks[z].push_back(-n);
    } else if (plus_letter == 0) {
        blocks.push_back({n});
        blocks.push_back({-n});
    } else {
        blocks[hat.block_of(plus_letter)].push_back(n);
        blocks[hat.block_of(-plus_letter)].push_back(-n);
    }
    return flats::SetPartition::make(true, static_cast<unsigned>(n), std::move(blocks));
}

// Labels for the lifted partition, taken from the labels of `hat`; the centre
// singletons (if any) get {+-j0}.
LabelledPartition lift_labels(const flats::SetPartition& hat, const flats::SetPartition& full,
                              const std::vector<std::vector<int>>& hat_labels, int centre_label) {
    const int n = static_cast<int>(full.n);
    LabelledPartition lp;
    lp.pi = full;
    for (const auto& b : full.blocks) {
        if (b.size() == 1 && std::abs(b[0]) == n) {
            lp.labels.push_back({b[0] > 0 ? centre_label : -centre_label});
            continue;
        }
        int rep = std::abs(b[0]) == n ? b[1] : b[0];
        lp.labels.push_back(hat_labels[hat.block_of(rep)]);
    }
    return lp;
}

bool has_even_realization(const LabelledPartition& lp) { return lp.permutation(true).has_value(); }

}  // namespace

ThetaPoint d_forward(const LabelledPartition& lp) {
    const unsigned n = lp.pi.n;
    check(lp.pi.is_signed && n >= 3, "type D codec needs a partition of +-[n], n >= 3");
    const int N = static_cast<int>(n);
    ThetaPoint v;
    v.h = 2 * (n - 1);
    v.coords.assign(n, -1);
    auto hat = drop_centre(lp.pi);
    auto op = openers(hat);
    const int zero = lp.pi.zero_block();
    for (std::size_t i = 0; i < lp.pi.blocks.size(); ++i) {
        const auto& b = lp.pi.blocks[i];
        bool to_zero = static_cast<int>(i) == zero || (b.size() == 1 && std::abs(b[0]) == N);
        int o = 0;
        if (!to_zero) o = op[hat.block_of(std::abs(b[0]) == N ? b[1] : b[0])];
        for (int x : lp.labels[i]) {
            if (x < 0) continue;
            v.coords[x - 1] = to_zero ? -1 : signed_exponent(sign(o), std::abs(o), v.h);
        }
    }
    return v;
}

LabelledPartition d_inverse(const ThetaPoint& v) {
    const unsigned n = static_cast<unsigned>(v.size());
    check(n >= 3 && v.h == 2 * (n - 1), "type D points need n >= 3 and h = 2(n-1)");
    const unsigned m = n - 1;
    std::vector<unsigned> mult(m + 1, 0);
    std::vector<int> zeros;
    for (std::size_t k = 0; k < n; ++k) {
        if (v.is_zero(k)) zeros.push_back(static_cast<int>(k) + 1);
        else ++mult[signed_power(v.coords[k], v.h).second];
    }

    if (zeros.size() == 1) {
        auto hat = partition_from_multiplicities(mult, m);
        auto labels = labels_from_point(hat, v);
        auto full = add_centre(hat, false, 0);
        auto lp = lift_labels(hat, full, labels, zeros[0]);
        if (!has_even_realization(lp)) lp = lift_labels(hat, full, labels, -zeros[0]);
        check(has_even_realization(lp), "no even labelling in the single-zero case");
        return lp;
    }

    if (zeros.size() >= 2) {
        auto hat = partition_from_multiplicities(mult, m);
        auto labels = labels_from_point(hat, v);
        auto full = add_centre(hat, true, 0);
        return lift_labels(hat, full, labels, 0);
    }

    std::vector<LabelledPartition> found;
    for (unsigned j = 1; j <= m; ++j) {
        if (mult[j] < 2) continue;
        auto reduced = mult;
        --reduced[j];
        auto hat = partition_from_multiplicities(reduced, m);
        auto full = add_centre(hat, false, static_cast<int>(j));
        if (!flats::is_noncrossing_d(full)) continue;
        auto labels = labels_from_point(hat, v);
        auto lp = lift_labels(hat, full, labels, 0);
        if (!has_even_realization(lp)) {
            full = add_centre(hat, false, -static_cast<int>(j));
            lp = lift_labels(hat, full, labels, 0);
        }
        check(has_even_realization(lp), "no even labelling in the all-nonzero case");
        found.push_back(std::move(lp));
    }
    check(found.size() == 1, "expected exactly one block to take the centre, found " + std::to_string(found.size()));
    return found[0];
}

ThetaPoint d_forward(const parking::ParkingSpace& park, std::uint32_t cls) {
    if (park.group().spec().family != coxeter::Family::D) throw UsageError("d_forward needs a type D group");
    return d_forward(labelled_class(park, cls));
}

std::uint32_t d_inverse(const parking::ParkingSpace& park, const ThetaPoint& v) {
    if (park.group().spec().family != coxeter::Family::D) throw UsageError("d_inverse needs a type D group");
    return class_of_labelled(park, d_inverse(v));
}

}  // namespace parkspace::theta
