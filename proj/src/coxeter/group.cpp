#include "parkspace/coxeter/group.hpp"

#include "parkspace/error.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

namespace parkspace::coxeter {

using algebra::Cyclo;
using algebra::Matrix;
using algebra::Rational;
using algebra::Vector;

namespace {

constexpr std::size_t kMaxElements = 60000;

Cyclo cos_pi_over(unsigned m) {
    // cos(pi/m) = (zeta_2m + zeta_2m^-1) / 2
    return (Cyclo::zeta(2 * m, 1) + Cyclo::zeta(2 * m, -1)) * Cyclo(algebra::frac(1, 2));
}

struct Setup {
    unsigned dim = 0;
    std::vector<Vector> simple;
    Matrix gram;
    std::vector<unsigned> degrees;
    bool crystallographic = true;
    bool root_basis = true;
};

Vector unit(unsigned n, unsigned i, long s = 1) {
    Vector v(n);
    v[i] = Cyclo(s);
    return v;
}

Setup root_basis_setup(const Matrix& gram) {
    Setup s;
    s.dim = static_cast<unsigned>(gram.rows());
    s.gram = gram;
    for (unsigned i = 0; i < s.dim; ++i) s.simple.push_back(unit(s.dim, i));
    return s;
}

Matrix chain_gram(unsigned n) {
    Matrix g(n, n);
    for (unsigned i = 0; i < n; ++i) {
        g(i, i) = Cyclo(2);
        if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = Cyclo(-1);
    }
    return g;
}

Setup make_setup(const GroupSpec& spec) {
    Setup s;
    unsigned n = spec.rank;
    switch (spec.family) {
    case Family::A: {
        s = root_basis_setup(chain_gram(n));
        for (unsigned d = 2; d <= n + 1; ++d) s.degrees.push_back(d);
        break;
    }
    case Family::B: {
        // s0 = (-1,+1) with root -e1, si = (i,i+1) with root e_i - e_(i+1)
        s.dim = n;
        s.root_basis = false;
        s.gram = Matrix::identity(n);
        s.simple.push_back(unit(n, 0, -1));
        for (unsigned i = 0; i + 1 < n; ++i) {
            Vector v(n);
            v[i] = Cyclo(1);
            v[i + 1] = Cyclo(-1);
            s.simple.push_back(v);
        }
        for (unsigned d = 1; d <= n; ++d) s.degrees.push_back(2 * d);
        break;
    }
    case Family::D: {
        s.dim = n;
        s.root_basis = false;
        s.gram = Matrix::identity(n);
        for (unsigned i = 0; i + 1 < n; ++i) {
            Vector v(n);
            v[i] = Cyclo(1);
            v[i + 1] = Cyclo(-1);
            s.simple.push_back(v);
        }
        Vector last(n);
        last[n - 2] = Cyclo(1);
        last[n - 1] = Cyclo(1);
        s.simple.push_back(last);
        for (unsigned d = 1; d + 1 <= n; ++d) s.degrees.push_back(2 * d);
        s.degrees.push_back(n);
        break;
    }
    case Family::I2: {
        Matrix g(2, 2);
        g(0, 0) = g(1, 1) = Cyclo(1);
        g(0, 1) = g(1, 0) = -cos_pi_over(spec.m);
        s = root_basis_setup(g);
        s.degrees = {2, spec.m};
        s.crystallographic = false;
        break;
    }
    case Family::H3:
    case Family::H4: {
        Matrix g(n, n);
        for (unsigned i = 0; i < n; ++i) g(i, i) = Cyclo(1);
        g(0, 1) = g(1, 0) = -cos_pi_over(5);
        for (unsigned i = 1; i + 1 < n; ++i) g(i, i + 1) = g(i + 1, i) = Cyclo(algebra::frac(-1, 2));
        s = root_basis_setup(g);
        s.degrees = n == 3 ? std::vector<unsigned>{2, 6, 10} : std::vector<unsigned>{2, 12, 20, 30};
        s.crystallographic = false;
        break;
    }
    case Family::F4: {
        Matrix g(4, 4);
        g(0, 0) = g(1, 1) = Cyclo(2);
        g(2, 2) = g(3, 3) = Cyclo(1);
        g(0, 1) = g(1, 0) = Cyclo(-1);
        g(1, 2) = g(2, 1) = Cyclo(-1);
        g(2, 3) = g(3, 2) = Cyclo(algebra::frac(-1, 2));
        s = root_basis_setup(g);
        s.degrees = {2, 6, 8, 12};
        break;
    }
    case Family::G2: {
        Matrix g(2, 2);
        g(0, 0) = Cyclo(2);
        g(1, 1) = Cyclo(6);
        g(0, 1) = g(1, 0) = Cyclo(-3);
        s = root_basis_setup(g);
        s.degrees = {2, 6};
        break;
    }
    case Family::E6: {
        Matrix g(6, 6);
        for (unsigned i = 0; i < 6; ++i) g(i, i) = Cyclo(2);
        const std::pair<int, int> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
        for (auto [a, b] : edges) g(a, b) = g(b, a) = Cyclo(-1);
        s = root_basis_setup(g);
        s.degrees = {2, 5, 6, 8, 9, 12};
        break;
    }
    default:
        throw UnsupportedGroup(spec.label() + " is not supported at desk scale");
    }
    return s;
}

void check_scale(const GroupSpec& spec, const BuildOptions& opts) {
    auto unsupported = [&](const char* why) {
        throw UnsupportedGroup(spec.label() + ": " + why);
    };
    switch (spec.family) {
    case Family::A: if (spec.rank > 7) unsupported("type A is enumerated up to rank 7"); break;
    case Family::B: if (spec.rank < 2 || spec.rank > 5) unsupported("type B is enumerated for ranks 2..5"); break;
    case Family::D: if (spec.rank < 3 || spec.rank > 5) unsupported("type D is enumerated for ranks 3..5"); break;
    case Family::I2: if (spec.m < 3 || spec.m > 30) unsupported("I2(m) is enumerated for 3 <= m <= 30"); break;
    case Family::H4:
    case Family::E6: if (!opts.allow_stretch) unsupported("needs --allow-stretch"); break;
    case Family::E7:
    case Family::E8: unsupported("unsupported at desk scale"); break;
    default: break;
    }
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& label) {
    static const std::regex dihedral(R"(I2\((\d+)\))");
    static const std::regex plain(R"(([A-I])(\d+))");
    std::smatch m;
    GroupSpec s;
    if (std::regex_match(label, m, dihedral)) {
        s.family = Family::I2;
        s.rank = 2;
        s.m = static_cast<unsigned>(std::stoul(m[1]));
        return s;
    }
    if (!std::regex_match(label, m, plain)) throw UsageError("unrecognised group label: " + label);
    char f = m[1].str()[0];
    if (m[2].str().size() > 3) throw UsageError("unrecognised group label: " + label);
    s.rank = static_cast<unsigned>(std::stoul(m[2]));
    auto need = [&](bool ok) {
        if (!ok) throw UsageError("unrecognised group label: " + label);
    };
    switch (f) {
    case 'A': s.family = Family::A; break;
    case 'B':
    case 'C': s.family = Family::B; need(s.rank >= 1); break;
    case 'D': s.family = Family::D; need(s.rank >= 2); break;
    case 'E':
        need(s.rank >= 6 && s.rank <= 8);
        s.family = s.rank == 6 ? Family::E6 : s.rank == 7 ? Family::E7 : Family::E8;
        break;
    case 'F': need(s.rank == 4); s.family = Family::F4; break;
    case 'G': need(s.rank == 2); s.family = Family::G2; break;
    case 'H':
        need(s.rank == 3 || s.rank == 4);
        s.family = s.rank == 3 ? Family::H3 : Family::H4;
        break;
    default: need(false);
    }
    return s;
}

std::string GroupSpec::label() const {
    switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::I2: return "I2(" + std::to_string(m) + ")";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::G2: return "G2";
    }
    return "?";
}

std::uint64_t CoxeterGroup::key_of(const RootIndex* perm) const {
    std::uint64_t k = 0;
    for (unsigned i = 0; i < n_; ++i) k |= std::uint64_t(perm[i]) << (8 * i);
    return k;
}

CoxeterGroup CoxeterGroup::build(const GroupSpec& spec, const BuildOptions& opts) {
    check_scale(spec, opts);
    Setup s = make_setup(spec);
    CoxeterGroup g;
    g.spec_ = spec;
    g.n_ = s.dim;
    g.degrees_ = s.degrees;
    std::sort(g.degrees_.begin(), g.degrees_.end());
    g.h_ = g.degrees_.empty() ? 1 : g.degrees_.back();
    g.crystallographic_ = s.crystallographic;
    g.gram_ = s.gram;
    g.field_ = 1;
    for (std::size_t i = 0; i < g.n_; ++i)
        for (std::size_t j = 0; j < g.n_; ++j) g.field_ = algebra::lcm(g.field_, s.gram(i, j).conductor());
    const unsigned n = g.n_;

    Matrix S = Matrix::from_columns(s.simple, n);
    g.simple_inverse_ = algebra::inverse(S);
    std::vector<Cyclo> norm;
    for (unsigned i = 0; i < n; ++i) norm.push_back(Cyclo(2) / algebra::bilinear(s.simple[i], s.gram, s.simple[i]));
    auto reflect = [&](const Vector& v, unsigned i) {
        Cyclo f = algebra::bilinear(v, s.gram, s.simple[i]) * norm[i];
        Vector r = v;
        if (f.is_zero()) return r;
        for (unsigned k = 0; k < n; ++k) r[k] -= f * s.simple[i][k];
        return r;
    };

    // Positive roots: simple roots, closed under s_i away from alpha_i.
    std::vector<Vector> pos = s.simple;
    std::unordered_map<std::string, RootIndex> seen;
    for (unsigned i = 0; i < n; ++i) seen[algebra::vector_key(pos[i])] = static_cast<RootIndex>(i);
    for (std::size_t q = 0; q < pos.size(); ++q)
        for (unsigned i = 0; i < n; ++i) {
            if (q == i) continue;
            Vector r = reflect(pos[q], i);
            auto key = algebra::vector_key(r);
            if (seen.count(key)) continue;
            seen.emplace(key, static_cast<RootIndex>(pos.size()));
            pos.push_back(std::move(r));
        }
    check(2 * pos.size() == std::size_t(g.h_) * n, g.label() + ": positive root count disagrees with h*n/2");
    g.roots_ = pos;
    for (const auto& v : pos) {
        Vector neg = v;
        for (auto& x : neg) x = -x;
        g.roots_.push_back(std::move(neg));
    }
    for (std::size_t r = 0; r < g.roots_.size(); ++r) {
        g.root_lookup_[algebra::vector_key(g.roots_[r])] = static_cast<RootIndex>(r);
        g.root_coords_.push_back(s.root_basis ? g.roots_[r] : g.simple_inverse_ * g.roots_[r]);
    }
    const std::size_t R = g.roots_.size();
    if (R > 255) throw UnsupportedGroup(g.label() + ": root system too large");

    std::vector<std::vector<RootIndex>> gen_perm(n, std::vector<RootIndex>(R));
    for (unsigned i = 0; i < n; ++i)
        for (std::size_t r = 0; r < R; ++r) gen_perm[i][r] = g.root_index(reflect(g.roots_[r], i));

    // Breadth-first closure under right multiplication.
    g.perms_.resize(R);
    std::iota(g.perms_.begin(), g.perms_.end(), RootIndex(0));
    g.lookup_[g.key_of(g.perms_.data())] = 0;
    g.parent_.push_back(0);
    g.parent_gen_.push_back(0);
    std::vector<RootIndex> next(R);
    for (Element e = 0; e < g.parent_.size(); ++e) {
        for (unsigned i = 0; i < n; ++i) {
            const RootIndex* p = g.perms_.data() + std::size_t(e) * R;
            for (std::size_t r = 0; r < R; ++r) next[r] = p[gen_perm[i][r]];
            auto key = g.key_of(next.data());
            if (g.lookup_.count(key)) continue;
            if (g.parent_.size() >= kMaxElements) throw UnsupportedGroup(g.label() + ": group too large");
            g.lookup_.emplace(key, static_cast<Element>(g.parent_.size()));
            g.perms_.insert(g.perms_.end(), next.begin(), next.end());
            g.parent_.push_back(e);
            g.parent_gen_.push_back(static_cast<unsigned char>(i));
        }
    }
    g.order_ = g.parent_.size();
    std::size_t expected = 1;
    for (auto d : g.degrees_) expected *= d;
    check(g.order_ == expected, g.label() + ": |W| differs from the product of degrees");

    g.inverse_.resize(g.order_);
    std::vector<RootIndex> inv(R);
    for (Element e = 0; e < g.order_; ++e) {
        const RootIndex* p = g.perms_.data() + std::size_t(e) * R;
        for (std::size_t r = 0; r < R; ++r) inv[p[r]] = static_cast<RootIndex>(r);
        g.inverse_[e] = g.lookup_.at(g.key_of(inv.data()));
    }
    for (unsigned i = 0; i < n; ++i) g.gens_.push_back(g.lookup_.at(g.key_of(gen_perm[i].data())));

    for (std::size_t r = 0; r < pos.size(); ++r) {
        const Vector& beta = pos[r];
        Cyclo f0 = Cyclo(2) / algebra::bilinear(beta, s.gram, beta);
        std::vector<RootIndex> images;
        for (unsigned i = 0; i < n; ++i) {
            Cyclo f = algebra::bilinear(s.simple[i], s.gram, beta) * f0;
            Vector v = s.simple[i];
            for (unsigned k = 0; k < n; ++k) v[k] -= f * beta[k];
            images.push_back(g.root_index(v));
        }
        g.reflections_.push_back(g.from_simple_images(images));
    }

    // Coxeter element.
    std::vector<unsigned> order(n);
    std::iota(order.begin(), order.end(), 0u);
    if (opts.choice == CoxeterChoice::Bipartite && n > 0) {
        std::vector<int> colour(n, -1);
        for (unsigned start = 0; start < n; ++start) {
            if (colour[start] >= 0) continue;
            colour[start] = 0;
            std::vector<unsigned> stack{start};
            while (!stack.empty()) {
                unsigned a = stack.back();
                stack.pop_back();
                for (unsigned b = 0; b < n; ++b)
                    if (b != a && !s.gram(a, b).is_zero() && colour[b] < 0) {
                        colour[b] = 1 - colour[a];
                        stack.push_back(b);
                    }
            }
        }
        std::stable_sort(order.begin(), order.end(), [&](unsigned a, unsigned b) { return colour[a] < colour[b]; });
    }
    g.c_ = 0;
    for (unsigned i : order) g.c_ = g.multiply(g.c_, g.gens_[i]);
    check(g.element_order(g.c_) == g.h_, g.label() + ": Coxeter element has wrong order");

    // Conjugacy classes by closure under conjugation with generators.
    constexpr std::uint32_t unset = ~0u;
    g.class_of_.assign(g.order_, unset);
    for (Element e = 0; e < g.order_; ++e) {
        if (g.class_of_[e] != unset) continue;
        auto k = static_cast<std::uint32_t>(g.classes_.size());
        std::vector<Element> queue{e};
        g.class_of_[e] = k;
        for (std::size_t q = 0; q < queue.size(); ++q)
            for (unsigned i = 0; i < n; ++i) {
                Element y = g.multiply(g.multiply(g.gens_[i], queue[q]), g.gens_[i]);
                if (g.class_of_[y] != unset) continue;
                g.class_of_[y] = k;
                queue.push_back(y);
            }
        g.classes_.push_back({e, queue.size()});
    }
    for (const auto& cl : g.classes_) {
        Matrix m = g.matrix(cl.rep);
        g.class_fixed_dim_.push_back(static_cast<unsigned>(n - algebra::rank(m - Matrix::identity(n))));
        g.class_matrices_.push_back(std::move(m));
    }

    if (spec.family == Family::A) {
        unsigned N = n + 1;
        for (unsigned k = 1; k <= N; ++k) {
            Vector v(n);
            for (unsigned i = 1; i <= n; ++i) v[i - 1] = Cyclo(Rational(i >= k ? 1 : 0) - algebra::frac(i, N));
            g.letters_.push_back(std::move(v));
        }
    }
    return g;
}

std::vector<unsigned> CoxeterGroup::exponents() const {
    std::vector<unsigned> e;
    for (auto d : degrees_) e.push_back(d - 1);
    return e;
}

Cyclo CoxeterGroup::omega(long d) const { return Cyclo::zeta(h_, d); }

RootIndex CoxeterGroup::negative(RootIndex r) const {
    std::size_t N = positive_root_count();
    return static_cast<RootIndex>(r < N ? r + N : r - N);
}

RootIndex CoxeterGroup::root_index(const Vector& v) const {
    auto it = root_lookup_.find(algebra::vector_key(v));
    if (it == root_lookup_.end()) throw VerificationError(label() + ": vector is not a root");
    return it->second;
}

std::optional<RootIndex> CoxeterGroup::find_root(const Vector& v) const {
    auto it = root_lookup_.find(algebra::vector_key(v));
    if (it == root_lookup_.end()) return std::nullopt;
    return it->second;
}

Element CoxeterGroup::multiply(Element a, Element b) const {
    const std::size_t R = roots_.size();
    const RootIndex* pa = perms_.data() + std::size_t(a) * R;
    const RootIndex* pb = perms_.data() + std::size_t(b) * R;
    std::uint64_t k = 0;
    for (unsigned i = 0; i < n_; ++i) k |= std::uint64_t(pa[pb[i]]) << (8 * i);
    return lookup_.find(k)->second;
}

Element CoxeterGroup::power(Element a, long k) const {
    if (k < 0) {
        a = inverse(a);
        k = -k;
    }
    Element r = 0;
    for (long i = 0; i < k; ++i) r = multiply(r, a);
    return r;
}

unsigned CoxeterGroup::element_order(Element a) const {
    unsigned k = 1;
    for (Element x = a; x != 0; x = multiply(x, a)) ++k;
    return k;
}

Element CoxeterGroup::from_simple_images(const std::vector<RootIndex>& images) const {
    auto it = lookup_.find(key_of(images.data()));
    return it == lookup_.end() ? static_cast<Element>(order_) : it->second;
}

Matrix CoxeterGroup::matrix(Element w) const {
    std::vector<Vector> cols;
    for (unsigned i = 0; i < n_; ++i) cols.push_back(roots_[act(w, simple_root(i))]);
    Matrix m = Matrix::from_columns(cols, n_);
    if (spec_.family == Family::B || spec_.family == Family::D) m = m * simple_inverse_;
    return m;
}

std::vector<unsigned> CoxeterGroup::word(Element w) const {
    std::vector<unsigned> out;
    for (; w != 0; w = parent_[w]) out.push_back(parent_gen_[w]);
    std::reverse(out.begin(), out.end());
    return out;
}

bool CoxeterGroup::has_permutation_word() const {
    return spec_.family == Family::A || spec_.family == Family::B || spec_.family == Family::D;
}

unsigned CoxeterGroup::permutation_degree() const {
    return spec_.family == Family::A ? n_ + 1 : n_;
}

std::vector<int> CoxeterGroup::signed_permutation(Element w) const {
    if (!has_permutation_word()) throw UsageError(label() + " has no permutation word");
    Matrix m = matrix(w);
    std::vector<int> img;
    if (spec_.family == Family::A) {
        for (const auto& v : letters_) {
            Vector u = m * v;
            auto it = std::find(letters_.begin(), letters_.end(), u);
            img.push_back(static_cast<int>(it - letters_.begin()) + 1);
        }
        return img;
    }
    for (unsigned k = 0; k < n_; ++k)
        for (unsigned j = 0; j < n_; ++j)
            if (!m(j, k).is_zero()) img.push_back(m(j, k) == Cyclo(1) ? int(j) + 1 : -int(j) - 1);
    return img;
}

Element CoxeterGroup::from_signed_permutation(const std::vector<int>& w) const {
    if (!has_permutation_word()) throw UsageError(label() + " has no permutation word");
    if (w.size() != permutation_degree()) throw UsageError("permutation has the wrong degree");
    std::vector<RootIndex> images;
    if (spec_.family == Family::A) {
        for (unsigned i = 0; i < n_; ++i) {
            int a = w[i], b = w[i + 1];
            Vector v(n_);
            int lo = std::min(a, b), hi = std::max(a, b);
            for (int k = lo; k < hi; ++k) v[k - 1] = Cyclo(a < b ? 1 : -1);
            images.push_back(root_index(v));
        }
    } else {
        Matrix S = algebra::inverse(simple_inverse_);
        for (unsigned i = 0; i < n_; ++i) {
            Vector v(n_);
            for (unsigned k = 0; k < n_; ++k) {
                const Cyclo& x = S(k, i);
                if (x.is_zero()) continue;
                int t = w[k];
                v[std::abs(t) - 1] += t > 0 ? x : -x;
            }
            images.push_back(root_index(v));
        }
    }
    return from_simple_images(images);
}

}  // namespace parkspace::coxeter
