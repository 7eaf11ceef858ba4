#include "parkspace/theta/type_a.hpp"

#include "parkspace/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace parkspace::theta {

namespace {

Integer ipow(unsigned long b, unsigned e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), b, e);
    return r;
}

void check_permutation(const std::vector<int>& u) {
    std::vector<bool> seen(u.size() + 1, false);
    for (int x : u) {
        if (x < 1 || x > static_cast<int>(u.size()) || seen[x]) throw UsageError("not a permutation of [n]");
        seen[x] = true;
    }
}

unsigned order_of_shift(long ell, unsigned n) {
    long r = ((ell % long(n)) + long(n)) % long(n);
    if (r == 0) throw UsageError("c^ell must not be the identity");
    return n / std::gcd(static_cast<unsigned>(r), n);
}

}  // namespace

unsigned cycles_divisible(const std::vector<int>& u, unsigned d) {
    std::vector<bool> seen(u.size(), false);
    unsigned count = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (seen[i]) continue;
        unsigned len = 0;
        for (std::size_t j = i; !seen[j]; j = u[j] - 1) {
            seen[j] = true;
            ++len;
        }
        if (len % d == 0) ++count;
    }
    return count;
}

EquivariantCount count_equivariant_functions(const std::vector<int>& u, long ell) {
    check_permutation(u);
    const unsigned n = static_cast<unsigned>(u.size());
    EquivariantCount out;
    out.d = order_of_shift(ell, n);
    out.formula = ipow(n + 1, cycles_divisible(u, out.d));
    if (n > 7) return out;
    const long shift = ((ell % long(n)) + long(n)) % long(n);
    auto rotate = [&](int x) { return x == 0 ? 0 : static_cast<int>((x - 1 + shift) % n) + 1; };
    std::vector<int> f(n, 0);
    std::uint64_t count = 0;
    while (true) {
        bool ok = true;
        for (unsigned j = 0; j < n && ok; ++j) ok = f[u[j] - 1] == rotate(f[j]);
        if (ok) ++count;
        unsigned i = 0;
        for (; i < n; ++i) {
            if (++f[i] <= static_cast<int>(n)) break;
            f[i] = 0;
        }
        if (i == n) break;
    }
    out.brute = count;
    return out;
}

std::vector<AdmissiblePartition> admissible_census(const std::vector<int>& u, unsigned d) {
    check_permutation(u);
    if (d < 2) throw UsageError("admissibility needs d >= 2");
    const unsigned n = static_cast<unsigned>(u.size());
    std::vector<AdmissiblePartition> out;
    for (auto& pi : flats::all_set_partitions(n)) {
        const std::size_t nb = pi.blocks.size();
        std::vector<int> sigma(nb);
        bool stable = true;
        for (std::size_t i = 0; i < nb && stable; ++i) {
            std::vector<int> img;
            for (int x : pi.blocks[i]) img.push_back(u[x - 1]);
            std::sort(img.begin(), img.end());
            int j = pi.block_of(img[0]);
            stable = pi.blocks[j] == img;
            sigma[i] = j;
        }
        if (!stable) continue;
        AdmissiblePartition ap;
        bool admissible = true;
        std::vector<bool> seen(nb, false);
        for (std::size_t i = 0; i < nb && admissible; ++i) {
            if (seen[i]) continue;
            unsigned len = 0;
            for (std::size_t j = i; !seen[j]; j = sigma[j]) {
                seen[j] = true;
                ++len;
            }
            if (len == 1) {
                admissible = ap.stable_block < 0;
                ap.stable_block = static_cast<int>(i);
            } else if (len == d) {
                ap.orbit_reps.push_back(static_cast<int>(i));
            } else {
                admissible = false;
            }
        }
        if (!admissible) continue;
        ap.k = static_cast<unsigned>(ap.orbit_reps.size());
        ap.weight = 1;
        for (unsigned i = 0; i < ap.k; ++i) ap.weight *= static_cast<long>(n) - static_cast<long>(i * d);
        ap.pi = std::move(pi);
        out.push_back(std::move(ap));
    }
    return out;
}

std::vector<AthanasiadisRow> athanasiadis_census(unsigned n, unsigned d) {
    if (d < 2 || n % d) throw UsageError("d must divide n and be at least 2");
    const unsigned shift = n / d, nhat = n / d;
    std::map<std::vector<unsigned>, std::size_t> counts;
    for (const auto& pi : flats::all_set_partitions(n)) {
        if (!flats::is_noncrossing_a(pi)) continue;
        std::vector<std::vector<int>> rotated;
        for (const auto& b : pi.blocks) {
            std::vector<int> r;
            for (int x : b) r.push_back(static_cast<int>((x - 1 + shift) % n) + 1);
            rotated.push_back(std::move(r));
        }
        if (!(flats::SetPartition::make(false, n, std::move(rotated)) == pi)) continue;
        std::vector<unsigned> mu(nhat, 0);
        unsigned fixed = 0;
        for (const auto& b : pi.blocks) {
            int rot = static_cast<int>((b[0] - 1 + shift) % n) + 1;
            if (std::find(b.begin(), b.end(), rot) != b.end()) {
                ++fixed;
                continue;
            }
            // each length-d orbit contributes d blocks of the same size
            check(b.size() <= nhat, "rotation orbit of unexpected length");
            ++mu[b.size() - 1];
        }
        check(fixed <= 1, "two rotation-invariant blocks");
        for (auto& x : mu) {
            check(x % d == 0, "rotation orbit of unexpected length");
            x /= d;
        }
        ++counts[mu];
    }
    std::vector<AthanasiadisRow> out;
    for (const auto& [mu, count] : counts) {
        unsigned k = std::accumulate(mu.begin(), mu.end(), 0u);
        Integer num = 1, den = 1;
        for (unsigned i = 0; i < k; ++i) num *= nhat - i;
        for (unsigned x : mu)
            for (unsigned i = 2; i <= x; ++i) den *= i;
        check(num % den == 0, "non-integral symmetric count");
        out.push_back({mu, count, num / den});
    }
    return out;
}

std::vector<ThreeWayRow> type_a_three_way(const parking::ParkingSpace& park) {
    const auto& g = park.group();
    if (g.spec().family != coxeter::Family::A) throw UsageError("three-way count is for type A");
    if (park.variant() != parking::Variant::NC) throw UsageError("three-way count uses Park^NC");
    const unsigned n = g.rank() + 1;
    std::vector<ThreeWayRow> out;
    for (const auto& cl : g.classes()) {
        auto u = g.signed_permutation(cl.rep);
        auto counts = park.fixed_counts(cl.rep);
        for (long ell = 1; ell < static_cast<long>(n); ++ell) {
            ThreeWayRow row;
            row.u = u;
            row.ell = ell;
            auto eq = count_equivariant_functions(u, ell);
            row.formula = eq.formula;
            row.brute = eq.brute;
            row.admissible = 0;
            for (const auto& ap : admissible_census(u, eq.d)) row.admissible += ap.weight;
            row.park = counts[ell];
            row.equal = row.formula == row.admissible && row.formula == static_cast<unsigned long>(row.park) &&
                        (!row.brute || row.formula == static_cast<unsigned long>(*row.brute));
            out.push_back(std::move(row));
        }
    }
    return out;
}

}  // namespace parkspace::theta
