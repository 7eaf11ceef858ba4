#pragma once

#include "parkspace/flats/flats.hpp"
#include "parkspace/algebra/poly.hpp"

#include <string>
#include <vector>

namespace parkspace::catalan {

using algebra::QPoly;
using algebra::Rational;
using coxeter::CoxeterGroup;

/// prod_i [e_i + p]_q / [e_i + 1]_q, divided exactly.
QPoly cat_q(const CoxeterGroup& g, unsigned p);
inline QPoly cat_q(const CoxeterGroup& g) { return cat_q(g, g.coxeter_number() + 1); }

struct CspRow {
    unsigned d;
    std::size_t fixed;  // #{X in NC : c^d X = X}
    Rational value;     // Cat(W, omega^d)
    bool equal;
};

struct CspReport {
    std::string group;
    std::vector<CspRow> rows;
    bool all_equal = true;
};

/// Throws VerificationError when an evaluation is not rational.
CspReport csp_check(const CoxeterGroup& g, const flats::NoncrossingSet& nc);

struct NarayanaKirkman {
    QPoly narayana;  // sum over NC flats of t^dim X
    QPoly kirkman;   // narayana(t + 1)
};

NarayanaKirkman narayana_kirkman(const std::vector<flats::Flat>& nc_flats);

/// (1/|W|) sum_w det(t + (1 - t) w) p^{dim V^w}
QPoly h_poly_fuss(const CoxeterGroup& g, unsigned p);

/// Series order used by the class-sum computations: nh + h + 2.
std::size_t default_truncation(const CoxeterGroup& g);

}  // namespace parkspace::catalan
