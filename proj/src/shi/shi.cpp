#include "parkspace/shi/shi.hpp"

#include "parkspace/error.hpp"
#include "parkspace/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <set>

namespace parkspace::shi {

namespace {

std::vector<Rational> coords(const CoxeterGroup& g, RootIndex r) {
    std::vector<Rational> c;
    for (const auto& x : g.root_coords(r)) c.push_back(x.to_rational());
    return c;
}

Inequality above(std::vector<Rational> c, long k) { return {std::move(c), Rational(k)}; }

Inequality below(std::vector<Rational> c, long k) {
    for (auto& x : c) x = -x;
    return {std::move(c), Rational(-k)};
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

void require_shi_support(const CoxeterGroup& g) {
    if (!g.crystallographic())
        throw UnsupportedGroup(g.label() + ": the Shi arrangement needs a crystallographic group");
    if (g.rank() > 3) throw UnsupportedGroup(g.label() + ": Shi regions are enumerated up to rank 3");
}

std::vector<Inequality> region_system(const CoxeterGroup& g, const std::vector<std::uint8_t>& position) {
    std::vector<Inequality> sys;
    for (RootIndex r = 0; r < position.size(); ++r) {
        auto c = coords(g, r);
        switch (position[r]) {
            case 0: sys.push_back(below(c, 0)); break;
            case 1:
                sys.push_back(above(c, 0));
                sys.push_back(below(c, 1));
                break;
            default: sys.push_back(above(c, 1)); break;
        }
    }
    return sys;
}

std::vector<RootIndex> ceilings(const CoxeterGroup& g, const std::vector<std::uint8_t>& position) {
    std::vector<RootIndex> out;
    for (RootIndex r = 0; r < position.size(); ++r) {
        if (position[r] != 1) continue;
        auto sys = region_system(g, position);
        auto c = coords(g, r);
        auto wall = below(c, 1);
        sys.erase(std::find_if(sys.begin(), sys.end(),
                               [&](const Inequality& q) { return q.a == wall.a && q.b == wall.b; }));
        sys.push_back(above(c, 1));
        if (strictly_feasible(sys, g.rank())) out.push_back(r);
    }
    return out;
}

Element chamber_of(const CoxeterGroup& g, const std::vector<Rational>& y0) {
    const unsigned n = g.rank();
    // reflect[i][j]: simple-root coordinates of s_i(alpha_j)
    std::vector<std::vector<std::vector<Rational>>> reflect(n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) reflect[i].push_back(coords(g, g.act(g.generator(i), g.simple_root(j))));
    auto y = y0;
    Element w = g.identity();
    for (std::size_t steps = 0;; ++steps) {
        check(steps <= g.positive_root_count(), "chamber descent did not terminate");
        unsigned i = 0;
        while (i < n && sgn(y[i]) > 0) ++i;
        if (i == n) break;
        check(sgn(y[i]) != 0, "witness lies on a reflecting hyperplane");
        std::vector<Rational> next(n);
        for (unsigned j = 0; j < n; ++j) next[j] = dot(reflect[i][j], y);
        y = std::move(next);
        w = g.multiply(w, g.generator(i));
    }
    return w;
}

std::vector<ShiRegion> enumerate_shi_regions(const CoxeterGroup& g) {
    require_shi_support(g);
    const unsigned n = g.rank();
    const std::size_t npos = g.positive_root_count();

    struct Piece {
        std::vector<Inequality> sys;
        std::vector<std::uint8_t> position;
        std::vector<Rational> witness;
    };
    std::vector<Piece> pieces{{{}, std::vector<std::uint8_t>(npos, 0), std::vector<Rational>(n, Rational(0))}};

    for (RootIndex r = 0; r < npos; ++r) {
        auto c = coords(g, r);
        for (long k = 0; k <= 1; ++k) {
            std::vector<Piece> next;
            for (auto& p : pieces) {
                if (k == 1 && p.position[r] == 0) {
                    next.push_back(std::move(p));
                    continue;
                }
                Rational val = dot(c, p.witness) - k;
                std::optional<std::vector<Rational>> lo, hi;
                auto lo_sys = p.sys, hi_sys = p.sys;
                lo_sys.push_back(below(c, k));
                hi_sys.push_back(above(c, k));
                if (sgn(val) < 0) lo = p.witness; else lo = strict_witness(lo_sys, n);
                if (sgn(val) > 0) hi = p.witness; else hi = strict_witness(hi_sys, n);
                check(lo || hi, "a region vanished on insertion");
                if (lo) {
                    Piece q{lo_sys, p.position, *lo};
                    next.push_back(std::move(q));
                }
                if (hi) {
                    Piece q{hi_sys, p.position, *hi};
                    q.position[r] = static_cast<std::uint8_t>(k + 1);
                    next.push_back(std::move(q));
                }
            }
            pieces = std::move(next);
        }
    }

    std::vector<ShiRegion> out;
    out.reserve(pieces.size());
    for (auto& p : pieces) {
        ShiRegion reg;
        reg.position = std::move(p.position);
        reg.witness = std::move(p.witness);
        reg.chamber = chamber_of(g, reg.witness);
        reg.ceilings = ceilings(g, reg.position);
        out.push_back(std::move(reg));
    }
    std::sort(out.begin(), out.end(), [](const ShiRegion& a, const ShiRegion& b) { return a.position < b.position; });
    return out;
}

ShiLabelling::ShiLabelling(const parking::ParkingSpace& nn, const std::vector<ShiRegion>& regions)
    : nn_(&nn), regions_(&regions) {
    if (nn.variant() != parking::Variant::NN) throw UsageError("Shi labels live in the nonnesting parking space");
    const auto& g = nn.group();
    poset_ = flats::root_poset(g);
    for (std::uint32_t x = 0; x < nn.flats().size(); ++x) flat_by_key_.emplace(nn.flats()[x].key, x);
    antichain_of_flat_.resize(nn.flats().size());
    auto ns = flats::nonnesting_set(g);
    for (std::size_t i = 0; i < ns.flats.size(); ++i) antichain_of_flat_.at(flat_by_key_.at(ns.flats[i].key)) = ns.antichains[i];
    for (std::size_t i = 0; i < regions.size(); ++i)
        check(by_position_.emplace(regions[i].position, i).second, "two regions share a sign vector");
}

ShiLabel ShiLabelling::label(std::size_t region) const {
    const auto& g = nn_->group();
    const auto& reg = regions_->at(region);
    const Element winv = g.inverse(reg.chamber);
    ShiLabel out;
    for (RootIndex r : reg.ceilings) out.antichain.push_back(g.act(winv, r));
    std::sort(out.antichain.begin(), out.antichain.end());
    for (RootIndex a : out.antichain) check(g.is_positive(a), g.label() + ": a ceiling pulls back to a negative root");
    auto x = flats::hyperplane_intersection(g, out.antichain);
    auto it = flat_by_key_.find(x.key);
    check(it != flat_by_key_.end(), g.label() + ": ceiling flat is not a nonnesting flat");
    out.cls = nn_->index_of(it->second, reg.chamber);
    return out;
}

std::vector<std::uint8_t> ShiLabelling::unlabel_positions(std::uint32_t cls) const {
    const auto& g = nn_->group();
    const auto& pc = nn_->classes().at(cls);
    const auto& x = nn_->flats()[pc.flat];
    Element w = g.order();
    for (Element s : x.stabilizer) {
        Element cand = g.multiply(pc.rep, s);
        if (std::all_of(x.orthogonal_roots.begin(), x.orthogonal_roots.end(),
                        [&](RootIndex a) { return g.is_positive(g.act(cand, a)); })) {
            w = cand;
            break;
        }
    }
    check(w != g.order(), g.label() + ": coset has no representative positive on the flat's roots");
    const auto& anti = antichain_of_flat_[pc.flat];
    const Element winv = g.inverse(w);
    std::vector<std::uint8_t> pos(g.positive_root_count());
    for (RootIndex r = 0; r < pos.size(); ++r) {
        RootIndex b = g.act(winv, r);
        if (!g.is_positive(b)) pos[r] = 0;
        else pos[r] = std::any_of(anti.begin(), anti.end(), [&](RootIndex a) { return bool(poset_.leq[b][a]); }) ? 1 : 2;
    }
    return pos;
}

std::size_t ShiLabelling::unlabel(std::uint32_t cls) const {
    auto it = by_position_.find(unlabel_positions(cls));
    return it == by_position_.end() ? regions_->size() : it->second;
}

bool ShiReport::ok() const {
    return regions == expected && distinct_labels == expected && witnesses_ok && chambers_ok && antichains_ok &&
           mu_lambda_identity && lambda_mu_identity;
}

ShiReport verify_shi(const CoxeterGroup& g, unsigned threads) {
    ShiReport rep;
    rep.group = g.label();
    auto regions = enumerate_shi_regions(g);
    auto nn = parking::ParkingSpace::build(g, parking::Variant::NN, threads);
    ShiLabelling lab(nn, regions);
    rep.regions = regions.size();
    rep.expected = 1;
    for (unsigned i = 0; i < g.rank(); ++i) rep.expected *= g.coxeter_number() + 1;

    const std::size_t m = regions.size();
    std::vector<char> wit(m), cham(m), anti(m), mulam(m);
    std::vector<std::uint32_t> labels(m);
    parallel_for(m, threads, [&](std::size_t i) {
        const auto& reg = regions[i];
        bool ok = true;
        for (const auto& q : region_system(g, reg.position)) ok = ok && sgn(dot(q.a, reg.witness) - q.b) > 0;
        wit[i] = ok;
        const Element winv = g.inverse(reg.chamber);
        bool c = true;
        for (RootIndex r = 0; r < reg.position.size(); ++r) c = c && (g.is_positive(g.act(winv, r)) == (reg.position[r] != 0));
        cham[i] = c;
        auto l = lab.label(i);
        labels[i] = l.cls;
        bool a = true;
        for (std::size_t s = 0; s < l.antichain.size(); ++s)
            for (std::size_t t = 0; t < l.antichain.size(); ++t)
                if (s != t && flats::leq_by_coordinates(g, l.antichain[s], l.antichain[t])) a = false;
        auto x = flats::hyperplane_intersection(g, l.antichain);
        a = a && l.antichain.size() == g.rank() - x.dim;
        anti[i] = a;
        mulam[i] = lab.unlabel(l.cls) == i;
    });
    rep.witnesses_ok = std::all_of(wit.begin(), wit.end(), [](char c) { return c; });
    rep.chambers_ok = std::all_of(cham.begin(), cham.end(), [](char c) { return c; });
    rep.antichains_ok = std::all_of(anti.begin(), anti.end(), [](char c) { return c; });
    rep.mu_lambda_identity = std::all_of(mulam.begin(), mulam.end(), [](char c) { return c; });
    rep.distinct_labels = std::set<std::uint32_t>(labels.begin(), labels.end()).size();

    std::vector<char> lammu(nn.size());
    parallel_for(nn.size(), threads, [&](std::size_t cls) {
        auto i = lab.unlabel(static_cast<std::uint32_t>(cls));
        lammu[cls] = i < m && lab.label(i).cls == cls;
    });
    rep.lambda_mu_identity = std::all_of(lammu.begin(), lammu.end(), [](char c) { return c; });
    return rep;
}

bool verify_shi_cox_fact(const CoxeterGroup& g) {
    require_shi_support(g);
    for (Element w = 0; w < g.order(); ++w) {
        std::vector<Inequality> chamber;
        for (unsigned i = 0; i < g.rank(); ++i) chamber.push_back(above(coords(g, g.act(w, g.simple_root(i))), 0));
        for (RootIndex b = 0; b < g.positive_root_count(); ++b) {
            auto sys = chamber;
            sys.push_back(above(coords(g, b), 1));
            if (strictly_feasible(sys, g.rank()) != g.is_positive(g.act(g.inverse(w), b))) return false;
        }
    }
    return true;
}

}  // namespace parkspace::shi
