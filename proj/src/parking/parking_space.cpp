#include "parkspace/parking/parking_space.hpp"

#include "parkspace/error.hpp"
#include "parkspace/flats/set_partition.hpp"
#include "parkspace/parallel.hpp"

#include <algorithm>
#include <numeric>

namespace parkspace::parking {

using algebra::Cyclo;
using algebra::Matrix;
using algebra::Rational;

ParkingSpace ParkingSpace::build(const CoxeterGroup& g, Variant variant, unsigned threads) {
    ParkingSpace ps;
    ps.g_ = &g;
    ps.variant_ = variant;
    if (variant == Variant::NC) {
        ps.nc_ = flats::noncrossing_set(g, threads);
        ps.flats_ = ps.nc_->flats;
    } else {
        ps.flats_ = flats::nonnesting_set(g).flats;
    }
    constexpr std::uint32_t unset = ~0u;
    const std::size_t W = g.order();
    ps.class_of_.assign(ps.flats_.size(), std::vector<std::uint32_t>(W, unset));
    for (std::uint32_t x = 0; x < ps.flats_.size(); ++x) {
        auto& row = ps.class_of_[x];
        for (Element w = 0; w < W; ++w) {
            if (row[w] != unset) continue;
            auto id = static_cast<std::uint32_t>(ps.classes_.size());
            ps.classes_.push_back({x, w});
            for (Element s : ps.flats_[x].stabilizer) row[g.multiply(w, s)] = id;
        }
    }
    Integer expected = 1;
    for (unsigned i = 0; i < g.rank(); ++i) expected *= g.coxeter_number() + 1;
    check(Integer(static_cast<unsigned long>(ps.classes_.size())) == expected,
          g.label() + ": parking space does not have (h+1)^n classes");

    const unsigned h = g.coxeter_number();
    ps.coset_masks_.resize(ps.flats_.size());
    for (std::uint32_t x = 0; x < ps.flats_.size(); ++x)
        for (unsigned d = 0; d < (ps.nc_ ? h : 1u); ++d) {
            if (ps.nc_ && ps.nc_->rotate(x, d) != x) continue;
            Element cd = g.power(g.coxeter_element(), d);
            std::vector<bool> mask(W, false);
            for (Element s : ps.flats_[x].stabilizer) mask[g.multiply(s, cd)] = true;
            ps.coset_masks_[x].emplace_back(d, std::move(mask));
        }
    return ps;
}

std::uint32_t ParkingSpace::act(Element v, long d, std::uint32_t cls) const {
    if (!nc_ && d != 0) throw UsageError("the cyclic group acts on the noncrossing parking space only");
    const auto& pc = classes_[cls];
    const CoxeterGroup& g = *g_;
    Element w = g.multiply(v, pc.rep);
    std::uint32_t x = pc.flat;
    if (d != 0) {
        w = g.multiply(w, g.power(g.coxeter_element(), -d));
        x = nc_->rotate(x, d);
    }
    return class_of_[x][w];
}

std::vector<std::uint64_t> ParkingSpace::fixed_counts(Element u) const {
    const CoxeterGroup& g = *g_;
    std::vector<std::uint64_t> counts(nc_ ? g.coxeter_number() : 1, 0);
    for (const auto& pc : classes_) {
        const auto& masks = coset_masks_[pc.flat];
        Element conj = g.multiply(g.multiply(g.inverse(pc.rep), u), pc.rep);
        for (const auto& [d, mask] : masks)
            if (mask[conj]) ++counts[d];
    }
    return counts;
}

std::uint64_t ParkingSpace::fixed_count(Element u, long d) const {
    long h = nc_ ? g_->coxeter_number() : 1;
    return fixed_counts(u)[((d % h) + h) % h];
}

Integer park_alg_character(const CoxeterGroup& g, Element u, long d) {
    const Matrix& m = g.class_matrix(g.class_of(u));
    std::size_t mult = algebra::eigen_multiplicity(m, g.omega(d));
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), g.coxeter_number() + 1, mult);
    return r;
}

Integer park_alg_character_type_a(const CoxeterGroup& g, Element u, long d) {
    if (g.spec().family != coxeter::Family::A) throw UsageError("cycle-type shortcut is for type A");
    auto perm = g.signed_permutation(u);
    const unsigned h = g.coxeter_number();
    unsigned k = h / std::gcd<unsigned>(static_cast<unsigned>(((d % h) + h) % h), h);
    std::vector<bool> seen(perm.size(), false);
    unsigned cycles = 0, divisible = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        unsigned len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j] - 1) {
            seen[j] = true;
            ++len;
        }
        ++cycles;
        if (len % k == 0) ++divisible;
    }
    // the reflection representation drops one trivial summand
    unsigned mult = k == 1 ? cycles - 1 : divisible;
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), h + 1, mult);
    return r;
}

WeakConjectureReport verify_weak_conjecture(const ParkingSpace& park, unsigned threads) {
    if (park.variant() != Variant::NC) throw UsageError("the weak conjecture concerns Park^NC");
    const CoxeterGroup& g = park.group();
    const unsigned h = g.coxeter_number();
    std::vector<std::vector<CharacterPair>> rows(g.classes().size());
    parallel_for(g.classes().size(), threads, [&](std::size_t k) {
        Element u = g.classes()[k].rep;
        auto counts = park.fixed_counts(u);
        for (unsigned d = 0; d < h; ++d) {
            Integer nc(static_cast<unsigned long>(counts[d]));
            Integer alg = park_alg_character(g, u, d);
            rows[k].push_back({u, d, nc, alg, nc == alg});
        }
    });
    WeakConjectureReport rep;
    rep.group = g.label();
    for (auto& r : rows)
        for (auto& p : r) {
            rep.all_equal = rep.all_equal && p.equal;
            rep.pairs.push_back(std::move(p));
        }
    return rep;
}

std::vector<Integer> exterior_multiplicities(const ParkingSpace& park) {
    const CoxeterGroup& g = park.group();
    const unsigned n = g.rank();
    std::vector<Cyclo> acc(n + 1);
    for (std::uint32_t k = 0; k < g.classes().size(); ++k) {
        const auto& cl = g.classes()[k];
        const Matrix& m = g.class_matrix(k);
        auto wedge = algebra::det_pencil(Matrix::identity(n), m);
        Cyclo chi(Rational(Integer(static_cast<unsigned long>(park.fixed_counts(cl.rep)[0]))));
        Cyclo weight = chi * Cyclo(Rational(Integer(static_cast<unsigned long>(cl.size))));
        for (unsigned j = 0; j <= n; ++j) acc[j] += wedge.coeff(j) * weight;
    }
    std::vector<Integer> out;
    for (auto& a : acc) {
        Rational q = a.to_rational() / Rational(Integer(static_cast<unsigned long>(g.order())));
        check(q.get_den() == 1, g.label() + ": exterior multiplicity is not an integer");
        out.push_back(q.get_num());
    }
    return out;
}

std::map<std::vector<unsigned>, unsigned> frobenius_characteristic(const ParkingSpace& park) {
    const CoxeterGroup& g = park.group();
    if (g.spec().family != coxeter::Family::A) throw UsageError("Frobenius characteristic is for type A");
    std::map<std::vector<unsigned>, unsigned> out;
    for (const auto& x : park.flats()) {
        auto p = flats::partition_of_flat(g, x);
        std::vector<unsigned> sizes;
        for (const auto& b : p.blocks) sizes.push_back(static_cast<unsigned>(b.size()));
        std::sort(sizes.rbegin(), sizes.rend());
        ++out[sizes];
    }
    return out;
}

std::vector<std::pair<Element, unsigned>> stabilizer(const ParkingSpace& park, std::uint32_t cls) {
    const CoxeterGroup& g = park.group();
    unsigned hs = park.variant() == Variant::NC ? g.coxeter_number() : 1;
    std::vector<std::pair<Element, unsigned>> out;
    for (unsigned d = 0; d < hs; ++d)
        for (Element v = 0; v < g.order(); ++v)
            if (park.act(v, d, cls) == cls) out.emplace_back(v, d);
    return out;
}

}  // namespace parkspace::parking
