#include "parkspace/flats/flats.hpp"

#include "parkspace/error.hpp"
#include "parkspace/parallel.hpp"

#include <algorithm>
#include <map>

namespace parkspace::flats {

using algebra::Cyclo;
using algebra::Matrix;
using algebra::Vector;

Flat make_flat(const CoxeterGroup& g, std::vector<Vector> spanning) {
    Flat x;
    x.basis = algebra::echelon_basis(std::move(spanning));
    x.dim = static_cast<unsigned>(x.basis.size());
    for (const auto& b : x.basis) x.key += algebra::vector_key(b) + "|";
    x.key += "dim" + std::to_string(x.dim);

    // Label every root by its pairings with the basis.  w fixes X pointwise
    // iff <b, w^-1 alpha_i> = <b, alpha_i> for every simple root and basis b.
    std::map<std::string, int> ids;
    std::vector<int> label(g.root_count());
    std::string zero;
    for (unsigned j = 0; j < x.dim; ++j) zero += "0;";
    std::vector<Vector> gb;
    for (const auto& b : x.basis) gb.push_back(g.gram() * b);
    for (RootIndex r = 0; r < g.root_count(); ++r) {
        std::string s;
        for (const auto& v : gb) s += algebra::dot(v, g.root(r)).to_string() + ";";
        auto [it, fresh] = ids.emplace(s, static_cast<int>(ids.size()));
        label[r] = it->second;
        if (g.is_positive(r) && s == zero) x.orthogonal_roots.push_back(r);
    }
    for (Element w = 0; w < g.order(); ++w) {
        Element wi = g.inverse(w);
        bool fixes = true;
        for (unsigned i = 0; i < g.rank() && fixes; ++i)
            fixes = label[g.act(wi, g.simple_root(i))] == label[g.simple_root(i)];
        if (fixes) x.stabilizer.push_back(w);
    }
    return x;
}

Flat fixed_flat(const CoxeterGroup& g, Element w) {
    Matrix m = g.matrix(w) - Matrix::identity(g.rank());
    return make_flat(g, algebra::kernel_basis(m));
}

Flat hyperplane_intersection(const CoxeterGroup& g, const std::vector<RootIndex>& roots) {
    Matrix eq(roots.size(), g.rank());
    for (std::size_t i = 0; i < roots.size(); ++i) {
        Vector row = g.gram() * g.root(roots[i]);
        for (unsigned j = 0; j < g.rank(); ++j) eq(i, j) = row[j];
    }
    return make_flat(g, algebra::kernel_basis(eq));
}

Flat translate(const CoxeterGroup& g, Element w, const Flat& x) {
    Matrix m = g.matrix(w);
    std::vector<Vector> img;
    for (const auto& b : x.basis) img.push_back(m * b);
    return make_flat(g, std::move(img));
}

std::vector<RootIndex> orbit_key(const CoxeterGroup& g, const Flat& x) {
    std::vector<RootIndex> best = x.orthogonal_roots, cur;
    for (Element w = 1; w < g.order(); ++w) {
        cur.clear();
        for (RootIndex r : x.orthogonal_roots) {
            RootIndex s = g.act(w, r);
            cur.push_back(g.is_positive(s) ? s : g.negative(s));
        }
        std::sort(cur.begin(), cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

std::string orbit_key_string(const std::vector<RootIndex>& key) {
    std::string s = "[";
    for (std::size_t i = 0; i < key.size(); ++i) s += (i ? "," : "") + std::to_string(key[i]);
    return s + "]";
}

std::uint32_t NoncrossingSet::rotate(std::uint32_t x, long d) const {
    long k = ((d % static_cast<long>(h)) + h) % h;
    for (long i = 0; i < k; ++i) x = c_action[x];
    return x;
}

NoncrossingSet noncrossing_set(const CoxeterGroup& g, unsigned threads) {
    NoncrossingSet nc;
    nc.h = g.coxeter_number();
    Element c = g.coxeter_element();
    for (Element w = 0; w < g.order(); ++w)
        if (g.reflection_length(w) + g.reflection_length(g.multiply(g.inverse(w), c)) == g.rank())
            nc.elements.push_back(w);
    nc.flats.resize(nc.elements.size());
    parallel_for(nc.elements.size(), threads, [&](std::size_t i) { nc.flats[i] = fixed_flat(g, nc.elements[i]); });
    for (std::uint32_t i = 0; i < nc.elements.size(); ++i) {
        nc.by_element[nc.elements[i]] = i;
        check(nc.by_key.emplace(nc.flats[i].key, i).second, g.label() + ": two noncrossing elements share a fixed space");
    }
    Element ci = g.inverse(c);
    for (Element w : nc.elements) nc.c_action.push_back(nc.by_element.at(g.multiply(g.multiply(c, w), ci)));
    return nc;
}

bool absolute_leq(const CoxeterGroup& g, Element u, Element v) {
    return g.reflection_length(u) + g.reflection_length(g.multiply(g.inverse(u), v)) == g.reflection_length(v);
}

}  // namespace parkspace::flats
