#include "parkspace/flats/set_partition.hpp"

#include "parkspace/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

namespace parkspace::flats {

using algebra::Cyclo;
using algebra::Matrix;
using algebra::Vector;
using coxeter::Family;

namespace {

bool letter_less(int a, int b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return a > b;
}

bool classical(const CoxeterGroup& g) {
    auto f = g.spec().family;
    return f == Family::A || f == Family::B || f == Family::D;
}

// Coordinate functional x_k on the working coordinates of g.
Vector coordinate(const CoxeterGroup& g, unsigned k) {
    unsigned r = g.rank();
    Vector x(r);
    if (g.spec().family == Family::A) {
        // v = sum a_i (e_i - e_(i+1))  =>  x_k = a_k - a_(k-1)
        if (k <= r) x[k - 1] = Cyclo(1);
        if (k >= 2) x[k - 2] = Cyclo(-1);
    } else {
        x[k - 1] = Cyclo(1);
    }
    return x;
}

int runs_on_circle(std::vector<std::pair<int, int>> marks) {
    std::sort(marks.begin(), marks.end());
    int runs = 0;
    for (std::size_t i = 0; i < marks.size(); ++i)
        if (marks[i].second != marks[(i + marks.size() - 1) % marks.size()].second) ++runs;
    return runs;
}

bool blocks_noncrossing(const std::vector<std::vector<int>>& positions) {
    for (std::size_t a = 0; a < positions.size(); ++a)
        for (std::size_t b = a + 1; b < positions.size(); ++b) {
            std::vector<std::pair<int, int>> marks;
            for (int p : positions[a]) marks.emplace_back(p, 0);
            for (int p : positions[b]) marks.emplace_back(p, 1);
            if (runs_on_circle(marks) > 2) return false;
        }
    return true;
}

}  // namespace

SetPartition SetPartition::make(bool is_signed, unsigned n, std::vector<std::vector<int>> blocks) {
    SetPartition p;
    p.is_signed = is_signed;
    p.n = n;
    for (auto& b : blocks) {
        if (b.empty()) continue;
        if (is_signed)
            std::sort(b.begin(), b.end(), letter_less);
        else
            std::sort(b.begin(), b.end());
        p.blocks.push_back(std::move(b));
    }
    std::sort(p.blocks.begin(), p.blocks.end(), [&](const auto& x, const auto& y) {
        return is_signed ? letter_less(x[0], y[0]) : x[0] < y[0];
    });
    return p;
}

int SetPartition::block_of(int x) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (std::find(blocks[i].begin(), blocks[i].end(), x) != blocks[i].end()) return static_cast<int>(i);
    return -1;
}

int SetPartition::zero_block() const {
    if (!is_signed) return -1;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (std::find(blocks[i].begin(), blocks[i].end(), -blocks[i][0]) != blocks[i].end()) return static_cast<int>(i);
    return -1;
}

std::string SetPartition::to_string() const {
    std::ostringstream os;
    os << '{';
    int z = zero_block();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) os << '|';
        if (static_cast<int>(i) == z) {
            os << "0:";
            bool first = true;
            for (int x : blocks[i]) {
                if (x < 0) continue;
                os << (first ? "" : ",") << "±" << x;
                first = false;
            }
            continue;
        }
        for (std::size_t j = 0; j < blocks[i].size(); ++j) {
            int x = blocks[i][j];
            if (j) os << ',';
            if (is_signed) os << (x > 0 ? '+' : '-') << std::abs(x);
            else os << x;
        }
    }
    os << '}';
    return os.str();
}

SetPartition SetPartition::parse(const std::string& text) {
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw UsageError("set partition must be enclosed in braces: " + text);
    std::string body = text.substr(1, text.size() - 2);
    bool is_signed = false;
    unsigned n = 0;
    std::vector<std::vector<int>> blocks;
    std::stringstream blocks_in(body);
    std::string blk;
    while (std::getline(blocks_in, blk, '|')) {
        std::vector<int> b;
        bool zero = blk.rfind("0:", 0) == 0;
        if (zero) {
            is_signed = true;
            blk = blk.substr(2);
        }
        std::stringstream items(blk);
        std::string item;
        while (std::getline(items, item, ',')) {
            if (zero) {
                const std::string pm = "±";
                if (item.rfind(pm, 0) == 0) item = item.substr(pm.size());
                else if (item.rfind("+-", 0) == 0) item = item.substr(2);
                int k = std::stoi(item);
                b.push_back(k);
                b.push_back(-k);
                n = std::max<unsigned>(n, k);
                continue;
            }
            if (!item.empty() && (item[0] == '+' || item[0] == '-')) is_signed = true;
            int k = std::stoi(item);
            b.push_back(k);
            n = std::max<unsigned>(n, std::abs(k));
        }
        blocks.push_back(std::move(b));
    }
    return make(is_signed, n, std::move(blocks));
}

SetPartition partition_of_flat(const CoxeterGroup& g, const Flat& x) {
    if (!classical(g)) throw UsageError(g.label() + ": set partitions exist only in types A, B, D");
    bool is_signed = g.spec().family != Family::A;
    unsigned n = g.permutation_degree();
    std::map<std::string, std::vector<int>> classes;
    std::vector<std::string> order;
    std::string zero;
    for (unsigned j = 0; j < x.dim; ++j) zero += "0;";
    for (unsigned k = 1; k <= n; ++k) {
        Vector xk = coordinate(g, k);
        for (int s : {1, -1}) {
            if (s < 0 && !is_signed) break;
            std::string key;
            for (const auto& b : x.basis) key += (algebra::dot(xk, b) * Cyclo(s)).to_string() + ";";
            if (!classes.count(key)) order.push_back(key);
            classes[key].push_back(s * static_cast<int>(k));
        }
    }
    std::vector<std::vector<int>> blocks;
    for (const auto& key : order) blocks.push_back(classes[key]);
    return SetPartition::make(is_signed, n, std::move(blocks));
}

Flat flat_of_partition(const CoxeterGroup& g, const SetPartition& p) {
    if (!classical(g)) throw UsageError(g.label() + ": set partitions exist only in types A, B, D");
    auto functional = [&](int letter) {
        Vector v = coordinate(g, static_cast<unsigned>(std::abs(letter)));
        if (letter < 0)
            for (auto& c : v) c = -c;
        return v;
    };
    std::vector<Vector> rows;
    int z = p.zero_block();
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        const auto& b = p.blocks[i];
        if (static_cast<int>(i) == z) {
            for (int x : b)
                if (x > 0) rows.push_back(functional(x));
            continue;
        }
        Vector first = functional(b[0]);
        for (std::size_t j = 1; j < b.size(); ++j) {
            Vector r = functional(b[j]);
            for (std::size_t k = 0; k < r.size(); ++k) r[k] -= first[k];
            rows.push_back(std::move(r));
        }
    }
    Matrix eq(rows.size(), g.rank());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (unsigned j = 0; j < g.rank(); ++j) eq(i, j) = rows[i][j];
    return make_flat(g, algebra::kernel_basis(eq));
}

bool is_noncrossing_a(const SetPartition& p) { return blocks_noncrossing(p.blocks); }

bool is_noncrossing_b(const SetPartition& p) {
    std::vector<std::vector<int>> pos;
    for (const auto& b : p.blocks) {
        std::vector<int> q;
        for (int x : b) q.push_back(circle_position(x, p.n));
        pos.push_back(std::move(q));
    }
    return blocks_noncrossing(pos);
}

bool is_noncrossing_d(const SetPartition& p) {
    const int n = static_cast<int>(p.n);
    int z = p.zero_block();
    if (z >= 0 && std::find(p.blocks[z].begin(), p.blocks[z].end(), n) == p.blocks[z].end()) return false;
    // Drop the central letters and test the boundary picture.
    std::vector<std::vector<int>> hat;
    std::vector<int> with_n;
    for (const auto& b : p.blocks) {
        std::vector<int> q;
        bool has_n = false;
        for (int x : b) {
            if (std::abs(x) == n) {
                has_n |= x == n;
                continue;
            }
            q.push_back(x);
        }
        if (has_n && static_cast<int>(&b - p.blocks.data()) != z) with_n = q;
        if (!q.empty()) hat.push_back(std::move(q));
    }
    SetPartition boundary = SetPartition::make(true, p.n - 1, hat);
    if (!is_noncrossing_b(boundary)) return false;
    if (with_n.empty()) return true;
    // The block joined to +n must face the centre: it may not sit inside a
    // gap of another block that points away from the centre.
    const int L = 2 * (n - 1);
    int probe = circle_position(with_n[0], p.n - 1);
    for (const auto& c : boundary.blocks) {
        if (c.size() < 2 || std::find(c.begin(), c.end(), with_n[0]) != c.end()) continue;
        std::vector<int> pos;
        for (int x : c) pos.push_back(circle_position(x, p.n - 1));
        std::sort(pos.begin(), pos.end());
        for (std::size_t i = 0; i < pos.size(); ++i) {
            int a = pos[i], b = pos[(i + 1) % pos.size()];
            int len = ((b - a) % L + L) % L;
            int off = ((probe - a) % L + L) % L;
            if (off > 0 && off < len && 2 * len < L) return false;
        }
    }
    return true;
}

std::vector<SetPartition> all_set_partitions(unsigned n) {
    if (n > 9) throw UsageError("set partition enumeration is capped at n = 9");
    std::vector<SetPartition> out;
    std::vector<std::vector<int>> blocks;
    auto rec = [&](auto&& self, unsigned k) -> void {
        if (k > n) {
            out.push_back(SetPartition::make(false, n, blocks));
            return;
        }
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            blocks[i].push_back(static_cast<int>(k));
            self(self, k + 1);
            blocks[i].pop_back();
        }
        blocks.push_back({static_cast<int>(k)});
        self(self, k + 1);
        blocks.pop_back();
    };
    rec(rec, 1);
    return out;
}

std::vector<SetPartition> all_symmetric_partitions(unsigned n, bool type_d) {
    if (n > 6) throw UsageError("symmetric partition enumeration is capped at n = 6");
    std::vector<SetPartition> out;
    std::vector<std::vector<int>> pairs;
    std::vector<int> zero;
    auto rec = [&](auto&& self, unsigned k) -> void {
        if (k > n) {
            if (!zero.empty() && zero.size() < (type_d ? 2u : 1u)) return;
            std::vector<std::vector<int>> blocks;
            for (const auto& b : pairs) {
                blocks.push_back(b);
                std::vector<int> neg;
                for (int x : b) neg.push_back(-x);
                blocks.push_back(neg);
            }
            if (!zero.empty()) {
                std::vector<int> zb;
                for (int x : zero) {
                    zb.push_back(x);
                    zb.push_back(-x);
                }
                blocks.push_back(zb);
            }
            out.push_back(SetPartition::make(true, n, std::move(blocks)));
            return;
        }
        int x = static_cast<int>(k);
        zero.push_back(x);
        self(self, k + 1);
        zero.pop_back();
        for (std::size_t i = 0; i < pairs.size(); ++i)
            for (int s : {1, -1}) {
                pairs[i].push_back(s * x);
                self(self, k + 1);
                pairs[i].pop_back();
            }
        pairs.push_back({x});
        self(self, k + 1);
        pairs.pop_back();
    };
    rec(rec, 1);
    return out;
}

}  // namespace parkspace::flats
