#pragma once

#include "parkspace/algebra/poly.hpp"

#include <cstdint>
#include <vector>

namespace parkspace::algebra {

/// Power series in q truncated below q^order, whose coefficients are
/// polynomials in a second variable u.
class QUSeries {
public:
    explicit QUSeries(std::size_t order) : c_(order) {}

    static QUSeries from_q(const CPoly& p, std::size_t order);
    static QUSeries from_u(const CPoly& p, std::size_t order);

    std::size_t order() const { return c_.size(); }
    const CPoly& coeff(std::size_t i) const { return c_[i]; }
    CPoly& coeff(std::size_t i) { return c_[i]; }

    QUSeries& operator+=(const QUSeries& o);
    QUSeries& operator*=(const Cyclo& s);
    friend QUSeries operator*(const QUSeries& a, const QUSeries& b);
    friend bool operator==(const QUSeries& a, const QUSeries& b) { return a.c_ == b.c_; }

    /// Multiplicative inverse; the q^0 coefficient must be a nonzero constant.
    QUSeries inverse() const;

    /// Coefficient of u^k as a polynomial in q (truncated).
    CPoly u_slice(std::size_t k) const;

private:
    std::vector<CPoly> c_;
};

/// (1/order) * sum of sizes[i] * terms[i].  `integral` reports whether all
/// resulting coefficients are integers.
QUSeries series_sum_over_classes(const std::vector<QUSeries>& terms,
                                 const std::vector<std::uint64_t>& sizes,
                                 const Integer& group_order, bool* integral = nullptr);

}  // namespace parkspace::algebra
