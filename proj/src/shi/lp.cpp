#include "parkspace/shi/lp.hpp"

#include "parkspace/error.hpp"

#include <map>

namespace parkspace::shi {

namespace {

// sum c[j] x_j + c[dim] t >= b
struct Row {
    std::vector<Rational> c;
    Rational b;
};

using RowSet = std::map<std::vector<Rational>, Rational>;

// Scales by the first nonzero coefficient's absolute value and keeps the
// tightest right-hand side per direction.  Returns false on 0 >= b > 0.
bool insert(RowSet& rows, Row r) {
    std::size_t i = 0;
    while (i < r.c.size() && sgn(r.c[i]) == 0) ++i;
    if (i == r.c.size()) return sgn(r.b) <= 0;
    Rational s = abs(r.c[i]);
    for (auto& x : r.c) x /= s;
    r.b /= s;
    auto [it, fresh] = rows.emplace(std::move(r.c), r.b);
    if (!fresh && r.b > it->second) it->second = r.b;
    return true;
}

}  // namespace

std::optional<std::vector<Rational>> strict_witness(const std::vector<Inequality>& system, unsigned dim) {
    const unsigned t = dim;  // index of the slack variable
    RowSet rows;
    for (const auto& q : system) {
        check(q.a.size() == dim, "inequality has the wrong dimension");
        Row r{q.a, q.b};
        r.c.push_back(Rational(-1));
        if (!insert(rows, std::move(r))) return std::nullopt;
    }
    {
        Row cap{std::vector<Rational>(dim + 1, Rational(0)), Rational(-1)};
        cap.c[t] = -1;
        insert(rows, std::move(cap));
    }

    // stages[j] holds the rows before x_j is eliminated
    std::vector<RowSet> stages(dim);
    for (unsigned j = dim; j-- > 0;) {
        stages[j] = rows;
        RowSet next;
        std::vector<std::pair<std::vector<Rational>, Rational>> pos, neg;
        for (const auto& [c, b] : rows) {
            int s = sgn(c[j]);
            if (s == 0) {
                if (!insert(next, {c, b})) return std::nullopt;
            } else if (s > 0) {
                pos.emplace_back(c, b);
            } else {
                neg.emplace_back(c, b);
            }
        }
        for (const auto& [cp, bp] : pos)
            for (const auto& [cn, bn] : neg) {
                Rational fp = -cn[j], fn = cp[j];
                Row r{std::vector<Rational>(dim + 1), bp * fp + bn * fn};
                for (unsigned k = 0; k <= dim; ++k) r.c[k] = cp[k] * fp + cn[k] * fn;
                r.c[j] = 0;
                if (!insert(next, std::move(r))) return std::nullopt;
            }
        rows = std::move(next);
    }

    std::optional<Rational> lo, hi;
    for (const auto& [c, b] : rows) {
        Rational bound = b / c[t];
        if (sgn(c[t]) > 0) {
            if (!lo || bound > *lo) lo = bound;
        } else if (!hi || bound < *hi) {
            hi = bound;
        }
    }
    check(hi.has_value(), "slack variable is unbounded");
    if (lo && *lo > *hi) return std::nullopt;
    if (sgn(*hi) <= 0) return std::nullopt;
    const Rational slack = *hi;

    std::vector<Rational> x(dim, Rational(0));
    for (unsigned j = 0; j < dim; ++j) {
        std::optional<Rational> l, u;
        for (const auto& [c, b] : stages[j]) {
            if (sgn(c[j]) == 0) continue;
            Rational rest = b - c[t] * slack;
            for (unsigned k = 0; k < j; ++k) rest -= c[k] * x[k];
            Rational bound = rest / c[j];
            if (sgn(c[j]) > 0) {
                if (!l || bound > *l) l = bound;
            } else if (!u || bound < *u) {
                u = bound;
            }
        }
        if (l && u) x[j] = (*l + *u) / 2;
        else if (l) x[j] = *l + 1;
        else if (u) x[j] = *u - 1;
    }
    for (const auto& q : system) {
        Rational v = -q.b;
        for (unsigned k = 0; k < dim; ++k) v += q.a[k] * x[k];
        check(sgn(v) > 0, "Fourier-Motzkin witness violates an inequality");
    }
    return x;
}

}  // namespace parkspace::shi
