#include "parkspace/theta/theta_point.hpp"

#include "parkspace/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace parkspace::theta {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

bool letter_less(int a, int b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return a > b;
}

}  // namespace

void sort_letters(std::vector<int>& letters) { std::sort(letters.begin(), letters.end(), letter_less); }

int signed_exponent(int sign, unsigned j, unsigned h) {
    return static_cast<int>(mod(static_cast<long>(j) + (sign < 0 ? h / 2 : 0), h));
}

std::pair<int, unsigned> signed_power(int exponent, unsigned h) {
    unsigned half = h / 2;
    unsigned e = static_cast<unsigned>(mod(exponent, h));
    if (e >= 1 && e <= half) return {+1, e};
    return {-1, e == 0 ? half : e - half};
}

std::string ThetaPoint::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ',';
        if (coords[i] < 0) {
            os << '0';
            continue;
        }
        auto [s, j] = signed_power(coords[i], h);
        os << (s > 0 ? '+' : '-') << "w^" << j;
    }
    return os.str();
}

ThetaPoint ThetaPoint::parse(const std::string& text, unsigned h) {
    if (h < 2 || h % 2) throw UsageError("theta points need an even h");
    ThetaPoint p;
    p.h = h;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok == "0") {
            p.coords.push_back(-1);
            continue;
        }
        if (tok.size() < 4 || (tok[0] != '+' && tok[0] != '-') || tok.compare(1, 2, "w^") != 0)
            throw UsageError("bad theta token '" + tok + "'");
        unsigned j = 0;
        try {
            j = static_cast<unsigned>(std::stoul(tok.substr(3)));
        } catch (const std::exception&) {
            throw UsageError("bad theta token '" + tok + "'");
        }
        if (j < 1 || j > h / 2) throw UsageError("theta exponent out of range in '" + tok + "'");
        p.coords.push_back(signed_exponent(tok[0] == '+' ? 1 : -1, j, h));
    }
    return p;
}

ThetaPoint ThetaPoint::scaled(long d) const {
    ThetaPoint r = *this;
    for (auto& c : r.coords)
        if (c >= 0) c = static_cast<int>(mod(c + d, h));
    return r;
}

ThetaPoint ThetaPoint::permuted(const std::vector<int>& u) const {
    if (u.size() != coords.size()) throw UsageError("permutation and point sizes differ");
    ThetaPoint r = *this;
    for (std::size_t i = 0; i < u.size(); ++i) {
        int c = coords[i];
        if (c >= 0 && u[i] < 0) c = static_cast<int>(mod(c + h / 2, h));
        r.coords[std::abs(u[i]) - 1] = c;
    }
    return r;
}

std::vector<ThetaPoint> theta_points(unsigned n, unsigned h) {
    std::vector<ThetaPoint> out;
    ThetaPoint p;
    p.h = h;
    p.coords.assign(n, -1);
    while (true) {
        out.push_back(p);
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++p.coords[i] < static_cast<int>(h)) break;
            p.coords[i] = -1;
        }
        if (i == n) break;
    }
    return out;
}

std::vector<ThetaPoint> theta_points(const coxeter::GroupSpec& spec) {
    const unsigned n = spec.rank;
    if (n < 2) throw UsageError("theta points need n >= 2");
    if (spec.family == coxeter::Family::B) return theta_points(n, 2 * n);
    if (spec.family == coxeter::Family::D) return theta_points(n, 2 * (n - 1));
    throw UsageError("theta points are defined for types B/C and D");
}

LabelledPartition LabelledPartition::from_permutation(flats::SetPartition pi, const std::vector<int>& w) {
    LabelledPartition lp;
    for (const auto& b : pi.blocks) {
        std::vector<int> img;
        for (int x : b) img.push_back(x > 0 ? w[x - 1] : -w[-x - 1]);
        sort_letters(img);
        lp.labels.push_back(std::move(img));
    }
    lp.pi = std::move(pi);
    return lp;
}

std::optional<std::vector<int>> LabelledPartition::permutation(bool even) const {
    const unsigned n = pi.n;
    std::vector<int> w(n, 0);
    const int zero = pi.zero_block();
    for (std::size_t i = 0; i < pi.blocks.size(); ++i) {
        const auto& b = pi.blocks[i];
        const auto& l = labels[i];
        check(b.size() == l.size(), "block and label sizes differ");
        if (static_cast<int>(i) == zero) {
            std::vector<int> pos_b, pos_l;
            for (int x : b)
                if (x > 0) pos_b.push_back(x);
            for (int x : l)
                if (x > 0) pos_l.push_back(x);
            check(pos_b.size() == pos_l.size(), "zero block label is not symmetric");
            for (std::size_t k = 0; k < pos_b.size(); ++k) w[pos_b[k] - 1] = pos_l[k];
            continue;
        }
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (b[k] > 0) w[b[k] - 1] = l[k];
            else w[-b[k] - 1] = -l[k];
        }
    }
    std::vector<bool> seen(n + 1, false);
    for (int x : w) {
        check(x != 0 && !seen[std::abs(x)], "labels do not define a signed permutation");
        seen[std::abs(x)] = true;
    }
    if (even) {
        int neg = 0;
        for (int x : w) neg += x < 0;
        if (neg % 2) {
            if (zero < 0) return std::nullopt;
            int first = pi.blocks[zero][0];
            w[std::abs(first) - 1] = -w[std::abs(first) - 1];
        }
    }
    return w;
}

std::string LabelledPartition::to_string() const {
    std::ostringstream os;
    auto list = [&](const std::vector<int>& v) {
        os << '{';
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ',';
            if (pi.is_signed && v[i] > 0) os << '+';
            os << v[i];
        }
        os << '}';
    };
    for (std::size_t i = 0; i < pi.blocks.size(); ++i) {
        if (i) os << '|';
        list(pi.blocks[i]);
        os << '>';
        list(labels[i]);
    }
    return os.str();
}

LabelledPartition labelled_class(const parking::ParkingSpace& park, std::uint32_t cls) {
    const auto& g = park.group();
    const auto& pc = park.classes().at(cls);
    return LabelledPartition::from_permutation(flats::partition_of_flat(g, park.flats()[pc.flat]),
                                               g.signed_permutation(pc.rep));
}

std::uint32_t class_of_labelled(const parking::ParkingSpace& park, const LabelledPartition& lp) {
    const auto& g = park.group();
    const auto* nc = park.noncrossing();
    if (!nc) throw UsageError("codecs use the noncrossing parking space");
    auto key = flats::flat_of_partition(g, lp.pi).key;
    auto it = nc->by_key.find(key);
    check(it != nc->by_key.end(), "partition " + lp.pi.to_string() + " is not noncrossing");
    auto w = lp.permutation(g.spec().family == coxeter::Family::D);
    check(w.has_value(), "no even signed permutation realizes " + lp.to_string());
    return park.index_of(it->second, g.from_signed_permutation(*w));
}

}  // namespace parkspace::theta
