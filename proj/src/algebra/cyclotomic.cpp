#include "parkspace/algebra/cyclotomic.hpp"

#include "parkspace/error.hpp"

#include <numeric>
#include <sstream>

namespace parkspace::algebra {

namespace {

constexpr unsigned kMaxConductor = 256;

std::vector<std::vector<long>> build_cyclotomic_table() {
    std::vector<std::vector<long>> table(kMaxConductor + 1);
    table[1] = {-1, 1};
    for (unsigned n = 2; n <= kMaxConductor; ++n) {
        std::vector<long> num(n + 1, 0);
        num[0] = -1;
        num[n] = 1;
        for (unsigned d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            const auto& den = table[d];
            // monic long division, exact
            std::size_t dd = den.size() - 1;
            std::vector<long> quo(num.size() - dd, 0);
            for (std::size_t k = num.size(); k-- > dd;) {
                long lead = num[k];
                quo[k - dd] = lead;
                if (lead == 0) continue;
                for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= lead * den[j];
            }
            num = std::move(quo);
        }
        table[n] = std::move(num);
    }
    return table;
}

}  // namespace

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

unsigned lcm(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

const std::vector<long>& cyclotomic_polynomial(unsigned n) {
    static const std::vector<std::vector<long>> table = build_cyclotomic_table();
    if (n == 0 || n > kMaxConductor)
        throw UsageError("cyclotomic conductor out of range: " + std::to_string(n));
    return table[n];
}

namespace {

// Reduce a dense coefficient vector modulo Phi_n in place and trim to phi(n).
void reduce_mod(std::vector<Rational>& r, unsigned n) {
    const auto& phi = cyclotomic_polynomial(n);
    std::size_t deg = phi.size() - 1;
    for (std::size_t k = r.size(); k-- > deg;) {
        if (sgn(r[k]) == 0) continue;
        Rational lead = r[k];
        for (std::size_t j = 0; j < deg; ++j)
            if (phi[j] != 0) r[k - deg + j] -= lead * phi[j];
        r[k] = 0;
    }
    r.resize(deg);
}

}  // namespace

Cyclo Cyclo::zeta(unsigned n, long k) {
    long e = ((k % static_cast<long>(n)) + n) % n;
    std::vector<Rational> r(std::max<std::size_t>(e + 1, euler_phi(n)), Rational(0));
    r[e] = 1;
    reduce_mod(r, n);
    Cyclo z(n, std::move(r));
    z.normalize();
    return z;
}

Cyclo Cyclo::from_coeffs(unsigned n, std::vector<Rational> c) {
    if (c.size() < euler_phi(n)) c.resize(euler_phi(n), Rational(0));
    reduce_mod(c, n);
    Cyclo z(n, std::move(c));
    z.normalize();
    return z;
}

void Cyclo::normalize() {
    if (n_ == 1) return;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return;
    c_.resize(1);
    n_ = 1;
}

bool Cyclo::is_zero() const { return n_ == 1 && sgn(c_[0]) == 0; }

bool Cyclo::is_rational() const { return n_ == 1; }

Rational Cyclo::to_rational() const {
    if (n_ != 1) throw VerificationError("expected a rational value, got " + to_string());
    return c_[0];
}

Cyclo Cyclo::lifted(unsigned m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw UsageError("cannot embed Q(zeta_" + std::to_string(n_) + ") in Q(zeta_" + std::to_string(m) + ")");
    if (n_ == 1) {
        std::vector<Rational> r(euler_phi(m), Rational(0));
        r[0] = c_[0];
        return Cyclo(m, std::move(r));
    }
    unsigned step = m / n_;
    std::vector<Rational> r(std::max<std::size_t>((c_.size() - 1) * step + 1, euler_phi(m)), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * step] = c_[i];
    reduce_mod(r, m);
    return Cyclo(m, std::move(r));
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    if (n_ == o.n_) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    } else {
        unsigned m = lcm(n_, o.n_);
        Cyclo a = lifted(m), b = o.lifted(m);
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
        *this = std::move(a);
    }
    normalize();
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    if (n_ == 1 && o.n_ == 1) {
        c_[0] *= o.c_[0];
        return *this;
    }
    if (o.n_ == 1) {
        for (auto& x : c_) x *= o.c_[0];
        normalize();
        return *this;
    }
    if (n_ == 1) {
        Rational s = c_[0];
        *this = o;
        for (auto& x : c_) x *= s;
        normalize();
        return *this;
    }
    unsigned m = lcm(n_, o.n_);
    Cyclo a = lifted(m), b = o.lifted(m);
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (sgn(b.c_[j]) != 0) r[i + j] += a.c_[i] * b.c_[j];
    }
    reduce_mod(r, m);
    n_ = m;
    c_ = std::move(r);
    normalize();
    return *this;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(zeta)");
    if (n_ == 1) return Cyclo(Rational(1) / c_[0]);
    // Solve (this * y) = 1 through the multiplication matrix over Q.
    std::size_t d = c_.size();
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d + 1, Rational(0)));
    std::vector<Rational> col(c_);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) a[i][j] = col[i];
        // col <- col * zeta
        std::vector<Rational> next(d + 1, Rational(0));
        for (std::size_t i = 0; i < d; ++i) next[i + 1] = col[i];
        reduce_mod(next, n_);
        col = std::move(next);
    }
    a[0][d] = 1;
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t p = c;
        while (sgn(a[p][c]) == 0) ++p;
        std::swap(a[p], a[c]);
        Rational inv = Rational(1) / a[c][c];
        for (std::size_t j = c; j <= d; ++j) a[c][j] *= inv;
        for (std::size_t i = 0; i < d; ++i) {
            if (i == c || sgn(a[i][c]) == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j <= d; ++j) a[i][j] -= f * a[c][j];
        }
    }
    std::vector<Rational> y(d);
    for (std::size_t i = 0; i < d; ++i) y[i] = a[i][d];
    Cyclo r(n_, std::move(y));
    r.normalize();
    return r;
}

Cyclo Cyclo::conj() const {
    if (n_ == 1) return *this;
    std::vector<Rational> r(2 * n_, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[(n_ - i) % n_] += c_[i];
    reduce_mod(r, n_);
    Cyclo z(n_, std::move(r));
    z.normalize();
    return z;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    if (a.n_ == 1 || b.n_ == 1) return false;
    unsigned m = lcm(a.n_, b.n_);
    return a.lifted(m).c_ == b.lifted(m).c_;
}

std::string rational_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string Cyclo::to_string() const {
    if (n_ == 1) return rational_string(c_[0]);
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << rational_string(c_[i]);
    os << "]@" << n_;
    return os.str();
}

}  // namespace parkspace::algebra
