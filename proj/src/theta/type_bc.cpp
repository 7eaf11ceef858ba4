#include "parkspace/theta/type_bc.hpp"

#include "parkspace/error.hpp"

#include <cstdlib>
#include <map>

namespace parkspace::theta {

namespace {

// Letter at 0-based position p on the circle +1..+m,-1..-m.
int letter_at(unsigned p, unsigned m) { return p < m ? static_cast<int>(p) + 1 : -static_cast<int>(p - m) - 1; }
unsigned position_of(int x, unsigned m) { return x > 0 ? static_cast<unsigned>(x) - 1 : static_cast<unsigned>(-x) - 1 + m; }

int sign(int x) { return x < 0 ? -1 : 1; }

}  // namespace

std::vector<int> openers(const flats::SetPartition& pi) {
    const unsigned m = pi.n, len = 2 * m;
    std::vector<int> out(pi.blocks.size(), 0);
    const int zero = pi.zero_block();
    for (std::size_t i = 0; i < pi.blocks.size(); ++i) {
        if (static_cast<int>(i) == zero) continue;
        unsigned p = position_of(-pi.blocks[i][0], m);
        for (unsigned step = 1; step <= len; ++step) {
            int x = letter_at((p + step) % len, m);
            if (pi.block_of(x) == static_cast<int>(i)) {
                out[i] = x;
                break;
            }
        }
    }
    return out;
}

flats::SetPartition partition_from_multiplicities(const std::vector<unsigned>& mult, unsigned m) {
    check(mult.size() == m + 1, "multiplicity vector has the wrong length");
    unsigned total = 0;
    for (unsigned j = 1; j <= m; ++j) total += mult[j];
    check(total <= m, "multiplicities exceed n");
    const unsigned len = 2 * m;
    struct Open {
        int opener;
        unsigned remaining;
    };
    std::vector<Open> stack;
    std::vector<int> owner(len, 0);
    for (unsigned t = 0; t < 3 * len; ++t) {
        int x = letter_at(t % len, m);
        unsigned size = mult[std::abs(x)];
        if (size > 0) stack.push_back({x, size});
        int who = 0;
        if (!stack.empty()) {
            who = stack.back().opener;
            if (--stack.back().remaining == 0) stack.pop_back();
        }
        if (t >= len && t < 2 * len) owner[t % len] = who;
    }
    std::map<int, std::vector<int>> blocks;
    for (unsigned p = 0; p < len; ++p) blocks[owner[p]].push_back(letter_at(p, m));
    for (const auto& [op, b] : blocks) {
        if (op == 0) {
            for (int x : b) check(owner[position_of(-x, m)] == 0, "zero block is not symmetric");
            continue;
        }
        check(b.size() == mult[std::abs(op)], "parenthesization does not close");
        for (int x : b) check(owner[position_of(-x, m)] == -op, "blocks are not centrally symmetric");
    }
    std::vector<std::vector<int>> out;
    for (auto& [op, b] : blocks) out.push_back(b);
    return flats::SetPartition::make(true, m, std::move(out));
}

ThetaPoint bc_forward(const LabelledPartition& lp) {
    const unsigned n = lp.pi.n;
    check(lp.pi.is_signed && n >= 1, "type B codec needs a partition of +-[n]");
    ThetaPoint v;
    v.h = 2 * n;
    v.coords.assign(n, -1);
    auto op = openers(lp.pi);
    for (std::size_t i = 0; i < lp.pi.blocks.size(); ++i)
        for (int x : lp.labels[i]) {
            if (x < 0) continue;
            v.coords[x - 1] = op[i] == 0 ? -1 : signed_exponent(sign(op[i]), std::abs(op[i]), v.h);
        }
    return v;
}

std::vector<std::vector<int>> labels_from_point(const flats::SetPartition& pi, const ThetaPoint& v) {
    auto op = openers(pi);
    std::vector<std::vector<int>> labels(pi.blocks.size());
    const int zero = pi.zero_block();
    for (std::size_t k = 0; k < v.size(); ++k) {
        const int coord = static_cast<int>(k) + 1;
        if (v.is_zero(k)) {
            if (zero >= 0) {
                labels[zero].push_back(coord);
                labels[zero].push_back(-coord);
            }
            continue;
        }
        auto [s, j] = signed_power(v.coords[k], v.h);
        for (std::size_t i = 0; i < op.size(); ++i) {
            if (op[i] == s * static_cast<int>(j)) labels[i].push_back(coord);
            if (op[i] == -s * static_cast<int>(j)) labels[i].push_back(-coord);
        }
    }
    for (auto& l : labels) sort_letters(l);
    return labels;
}

LabelledPartition bc_inverse(const ThetaPoint& v) {
    const unsigned n = static_cast<unsigned>(v.size());
    check(v.h == 2 * n, "type B points need h = 2n");
    std::vector<unsigned> mult(n + 1, 0);
    for (std::size_t k = 0; k < n; ++k)
        if (!v.is_zero(k)) ++mult[signed_power(v.coords[k], v.h).second];
    LabelledPartition lp;
    lp.pi = partition_from_multiplicities(mult, n);
    lp.labels = labels_from_point(lp.pi, v);
    for (std::size_t i = 0; i < lp.pi.blocks.size(); ++i)
        check(lp.labels[i].size() == lp.pi.blocks[i].size(), "label sizes disagree with block sizes");
    return lp;
}

ThetaPoint bc_forward(const parking::ParkingSpace& park, std::uint32_t cls) {
    if (park.group().spec().family != coxeter::Family::B) throw UsageError("bc_forward needs a type B/C group");
    return bc_forward(labelled_class(park, cls));
}

std::uint32_t bc_inverse(const parking::ParkingSpace& park, const ThetaPoint& v) {
    if (park.group().spec().family != coxeter::Family::B) throw UsageError("bc_inverse needs a type B/C group");
    return class_of_labelled(park, bc_inverse(v));
}

}  // namespace parkspace::theta
