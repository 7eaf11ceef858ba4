#include "parkspace/flats/root_poset.hpp"

#include "parkspace/error.hpp"

namespace parkspace::flats {

RootPoset root_poset(const CoxeterGroup& g) {
    RootPoset p;
    p.size = g.positive_root_count();
    p.leq.assign(p.size, std::vector<bool>(p.size, false));
    for (RootIndex a = 0; a < p.size; ++a) {
        p.leq[a][a] = true;
        for (RootIndex b = 0; b < p.size; ++b) {
            algebra::Vector diff = g.root(b);
            for (std::size_t k = 0; k < diff.size(); ++k) diff[k] -= g.root(a)[k];
            auto r = g.find_root(diff);
            if (r && g.is_positive(*r)) {
                p.leq[a][b] = true;
                p.covers.emplace_back(a, b);
            }
        }
    }
    for (std::size_t k = 0; k < p.size; ++k)
        for (std::size_t i = 0; i < p.size; ++i)
            if (p.leq[i][k])
                for (std::size_t j = 0; j < p.size; ++j)
                    if (p.leq[k][j]) p.leq[i][j] = true;
    return p;
}

bool leq_by_coordinates(const CoxeterGroup& g, RootIndex a, RootIndex b) {
    const auto& ca = g.root_coords(a);
    const auto& cb = g.root_coords(b);
    for (std::size_t k = 0; k < ca.size(); ++k) {
        algebra::Cyclo d = cb[k] - ca[k];
        if (!d.is_rational()) return false;
        algebra::Rational q = d.to_rational();
        if (q < 0 || q.get_den() != 1) return false;
    }
    return true;
}

namespace {

void extend(const RootPoset& p, std::size_t start, std::vector<RootIndex>& cur,
            std::vector<std::vector<RootIndex>>& out) {
    out.push_back(cur);
    for (std::size_t r = start; r < p.size; ++r) {
        bool ok = true;
        for (RootIndex a : cur)
            if (p.leq[a][r] || p.leq[r][a]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        cur.push_back(static_cast<RootIndex>(r));
        extend(p, r + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<RootIndex>> antichains(const RootPoset& p) {
    std::vector<std::vector<RootIndex>> out;
    std::vector<RootIndex> cur;
    extend(p, 0, cur, out);
    return out;
}

NonnestingSet nonnesting_set(const CoxeterGroup& g) {
    if (!g.crystallographic())
        throw UsageError(g.label() + ": nonnesting parking functions need a crystallographic group");
    NonnestingSet nn;
    nn.antichains = antichains(root_poset(g));
    for (std::uint32_t i = 0; i < nn.antichains.size(); ++i) {
        nn.flats.push_back(hyperplane_intersection(g, nn.antichains[i]));
        check(nn.by_key.emplace(nn.flats.back().key, i).second, g.label() + ": two antichains give the same flat");
    }
    return nn;
}

}  // namespace parkspace::flats
