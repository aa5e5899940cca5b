#pragma once

/**
 * @file ricci.hpp
 * @brief The Riemannian s-value of the submersion metric on spin M_{m,n,l}
 *        and the construction of infinite families of such manifolds that
 *        are pairwise diffeomorphic with pairwise distinct s-values.
 */

#include "circle7/classify.hpp"

namespace circle7 {

/// Exact s-value of the submersion metric on a spin M1 triple.
Rat s_metric(const Int& m, const Int& n, const Int& l);

/// The step 2^lambda2(n) * 7^lambda7(n) * n^2 / 3^mu3(n); n odd, nonzero.
Int delta0(const Int& n);

struct RicciEntry {
    Int m;
    Rat s_value;
    VerdictKind verdict;  // against entry 0
};

struct MetricFamilyReport {
    Int n, l, m0;
    Int step;  // delta0(n)
    std::vector<RicciEntry> entries;
};

/// Builds m_k = m0 + k * delta0(n) for k = 0..count-1 and checks that the
/// entries are pairwise diffeomorphic with strictly decreasing negative
/// s-values of pairwise distinct absolute value. The lower bound on m0 that
/// forces every s-value negative is enforced as a strict rational inequality
/// unless allow_sign_mixed is set.
MetricFamilyReport ricci_family(const Int& n, const Int& l, const Int& m0, int count,
                                bool allow_sign_mixed = false);

}  // namespace circle7
