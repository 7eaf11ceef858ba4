#pragma once

#include "parkspace/catalan/catalan.hpp"
#include "parkspace/algebra/series.hpp"

#include <optional>

namespace parkspace::catalan {

/// Kirk(W, k; q) for k = 0..n from the class average of
/// det(1 + tw) det(1 - q^{h+1} w) / det(1 - qw).  `order` = 0 picks
/// default_truncation.  Throws VerificationError if the truncated series has
/// a nonzero tail above degree nh or non-integer coefficients.
std::vector<QPoly> q_kirkman_all(const CoxeterGroup& g, std::size_t order = 0, unsigned threads = 1);
QPoly q_kirkman(const CoxeterGroup& g, unsigned k);

/// Product formulas where known: k = 0 and k = n for every group, the
/// families A, B, D for all k, and k = 1 for the dihedral groups.
std::optional<QPoly> q_kirkman_closed_form(const CoxeterGroup& g, unsigned k);

/// n_q = sum_i q^{e_i - 1}
QPoly codegree_polynomial(const CoxeterGroup& g);

/// (1/|W|) sum_w chi(w) det(1 + uw) / det(1 - qw) for chi = 1, V, det.
struct TauSeries {
    algebra::QUSeries trivial, reflection, determinant;
};
TauSeries tau_series(const CoxeterGroup& g, std::size_t order, unsigned threads = 1);

struct NearBoundaryReport {
    std::string group;
    std::size_t order = 0;
    bool trivial_match = false;
    bool determinant_match = false;
    bool reflection_match = false;  // the conjectured product for chi_V
    long first_mismatch_degree = -1;  // in q, for chi_V
};

/// `order` = 0 means |Phi+| + h + 2.
NearBoundaryReport near_boundary_check(const CoxeterGroup& g, std::size_t order = 0, unsigned threads = 1);

}  // namespace parkspace::catalan
