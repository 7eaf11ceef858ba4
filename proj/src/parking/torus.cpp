#include "parkspace/parking/torus.hpp"

#include "parkspace/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace parkspace::parking {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t(0)); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void join(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

long mod(long a, long p) { return ((a % p) + p) % p; }

}  // namespace

FiniteTorus::FiniteTorus(const CoxeterGroup& g, unsigned p) : g_(&g), p_(p), size_(1) {
    if (!g.crystallographic()) throw UsageError(g.label() + ": the root lattice needs a crystallographic group");
    if (p < 1) throw UsageError("torus modulus must be positive");
    const unsigned n = g.rank();
    for (unsigned i = 0; i < n; ++i) size_ *= p;
    mats_.resize(g.order() * n * n);
    for (Element w = 0; w < g.order(); ++w)
        for (unsigned i = 0; i < n; ++i) {
            const auto& col = g.root_coords(g.act(w, g.simple_root(i)));
            for (unsigned r = 0; r < n; ++r) mats_[(std::size_t(w) * n + r) * n + i] = col[r].to_rational().get_num().get_si();
        }
}

std::vector<int> FiniteTorus::point(std::size_t x) const {
    std::vector<int> c(g_->rank());
    for (auto& v : c) {
        v = static_cast<int>(x % p_);
        x /= p_;
    }
    return c;
}

std::size_t FiniteTorus::encode(const std::vector<int>& coords) const {
    std::size_t x = 0;
    for (std::size_t i = coords.size(); i-- > 0;) x = x * p_ + static_cast<std::size_t>(mod(coords[i], p_));
    return x;
}

std::size_t FiniteTorus::act(Element w, std::size_t x) const {
    const unsigned n = g_->rank();
    auto c = point(x);
    std::vector<int> out(n);
    const long* m = mats_.data() + std::size_t(w) * n * n;
    for (unsigned r = 0; r < n; ++r) {
        long s = 0;
        for (unsigned i = 0; i < n; ++i) s += m[r * n + i] * c[i];
        out[r] = static_cast<int>(mod(s, p_));
    }
    return encode(out);
}

std::vector<FiniteTorus::Orbit> FiniteTorus::orbits() const {
    const CoxeterGroup& g = *g_;
    UnionFind uf(size_);
    for (std::size_t x = 0; x < size_; ++x)
        for (unsigned i = 0; i < g.rank(); ++i) uf.join(x, act(g.generator(i), x));
    std::map<std::size_t, std::size_t> sizes;
    for (std::size_t x = 0; x < size_; ++x) ++sizes[uf.find(x)];
    std::vector<Orbit> out;
    for (auto [rep, count] : sizes) {
        Orbit o;
        o.rep = rep;
        o.size = count;
        for (Element w = 0; w < g.order(); ++w)
            if (act(w, rep) == rep) o.stabilizer.push_back(w);
        check(o.size * o.stabilizer.size() == g.order(), g.label() + ": orbit-stabilizer failed on the torus");
        std::vector<coxeter::RootIndex> roots;
        for (coxeter::RootIndex r = 0; r < g.positive_root_count(); ++r)
            if (std::binary_search(o.stabilizer.begin(), o.stabilizer.end(), g.reflection(r))) roots.push_back(r);
        o.fixed = flats::hyperplane_intersection(g, roots);
        check(o.fixed.stabilizer == o.stabilizer, g.label() + ": torus stabilizer is not parabolic");
        o.orbit_key = flats::orbit_key(g, o.fixed);
        out.push_back(std::move(o));
    }
    return out;
}

algebra::Integer burnside_count(const CoxeterGroup& g, unsigned p) {
    algebra::Integer total = 0;
    for (const auto& cl : g.classes()) {
        algebra::Integer t;
        mpz_ui_pow_ui(t.get_mpz_t(), p, g.fixed_dim(cl.rep));
        total += t * static_cast<unsigned long>(cl.size);
    }
    algebra::Integer order(static_cast<unsigned long>(g.order()));
    check(total % order == 0, g.label() + ": Burnside sum not divisible by |W|");
    return total / order;
}

std::vector<std::size_t> quotient_model_stabilizers(unsigned N, unsigned p) {
    if (N < 1 || N > 7) throw UsageError("quotient model is enumerated for 1 <= N <= 7");
    // Points: x in (Z/p)^N with x_N = 0, one per coset of the diagonal.
    std::size_t count = 1;
    for (unsigned i = 0; i + 1 < N; ++i) count *= p;
    auto decode = [&](std::size_t x) {
        std::vector<long> c(N, 0);
        for (unsigned i = 0; i + 1 < N; ++i) {
            c[i] = static_cast<long>(x % p);
            x /= p;
        }
        return c;
    };
    auto normal = [&](std::vector<long> c) {
        long shift = c[N - 1];
        std::size_t x = 0;
        for (unsigned i = N - 1; i-- > 0;) x = x * p + static_cast<std::size_t>(mod(c[i] - shift, p));
        return x;
    };
    auto permute = [&](const std::vector<unsigned>& sigma, std::size_t x) {
        auto c = decode(x);
        std::vector<long> out(N);
        for (unsigned i = 0; i < N; ++i) out[sigma[i]] = c[i];
        return normal(out);
    };
    UnionFind uf(count);
    for (unsigned i = 0; i + 1 < N; ++i) {
        std::vector<unsigned> s(N);
        std::iota(s.begin(), s.end(), 0u);
        std::swap(s[i], s[i + 1]);
        for (std::size_t x = 0; x < count; ++x) uf.join(x, permute(s, x));
    }
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < count; ++x) {
        if (uf.find(x) != x) continue;
        std::vector<unsigned> s(N);
        std::iota(s.begin(), s.end(), 0u);
        std::size_t stab = 0;
        do {
            if (permute(s, x) == x) ++stab;
        } while (std::next_permutation(s.begin(), s.end()));
        out.push_back(stab);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace parkspace::parking
