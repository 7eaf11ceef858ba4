#include "parkspace/algebra/series.hpp"

#include "parkspace/error.hpp"

namespace parkspace::algebra {

QUSeries QUSeries::from_q(const CPoly& p, std::size_t order) {
    QUSeries s(order);
    for (std::size_t i = 0; i < p.coeffs().size() && i < order; ++i)
        s.c_[i] = CPoly::constant(p.coeffs()[i]);
    return s;
}

QUSeries QUSeries::from_u(const CPoly& p, std::size_t order) {
    QUSeries s(order);
    if (order) s.c_[0] = p;
    return s;
}

QUSeries& QUSeries::operator+=(const QUSeries& o) {
    for (std::size_t i = 0; i < c_.size() && i < o.c_.size(); ++i) c_[i] += o.c_[i];
    if (o.c_.size() < c_.size()) c_.resize(o.c_.size());
    return *this;
}

QUSeries& QUSeries::operator*=(const Cyclo& s) {
    for (auto& p : c_) p *= s;
    return *this;
}

QUSeries operator*(const QUSeries& a, const QUSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    QUSeries r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j)
            if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

QUSeries QUSeries::inverse() const {
    if (c_.empty()) return *this;
    if (c_[0].degree() != 0) throw std::domain_error("series constant term is not a unit");
    Cyclo inv0 = c_[0].lead().inverse();
    QUSeries r(c_.size());
    r.c_[0] = CPoly::constant(inv0);
    for (std::size_t k = 1; k < c_.size(); ++k) {
        CPoly acc;
        for (std::size_t j = 1; j <= k; ++j)
            if (!c_[j].is_zero()) acc += c_[j] * r.c_[k - j];
        r.c_[k] = -acc * inv0;
    }
    return r;
}

CPoly QUSeries::u_slice(std::size_t k) const {
    std::vector<Cyclo> c;
    for (const auto& p : c_) c.push_back(p.coeff(k));
    return CPoly(std::move(c));
}

QUSeries series_sum_over_classes(const std::vector<QUSeries>& terms,
                                 const std::vector<std::uint64_t>& sizes,
                                 const Integer& group_order, bool* integral) {
    if (terms.size() != sizes.size()) throw UsageError("class term/size mismatch");
    std::size_t order = terms.empty() ? 0 : terms[0].order();
    QUSeries acc(order);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        QUSeries t = terms[i];
        t *= Cyclo(Rational(Integer(static_cast<unsigned long>(sizes[i]))));
        acc += t;
    }
    acc *= Cyclo(frac(Integer(1), group_order));
    if (integral) {
        *integral = true;
        for (std::size_t i = 0; i < acc.order(); ++i)
            for (const auto& x : acc.coeff(i).coeffs())
                if (!x.is_rational() || x.to_rational().get_den() != 1) *integral = false;
    }
    return acc;
}

}  // namespace parkspace::algebra
