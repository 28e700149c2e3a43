// SPDX-License-Identifier: Apache-2.0
#pragma once
//
// Closed-form mutual information approximations for index modulation.
//
// For a channel realization the tS augmented vectors form an effective
// constellation; every closed-form term derives from the pairwise
// similarity table exp(-gamma * squared distance) and its row sums. The
// first-order value is log2(tS) minus the mean log row sum; the
// second-order value subtracts a curvature correction obtained from the
// second derivatives of the noise-averaged log-sum-exp at the noiseless
// point.

#include <cstddef>
#include <vector>

#include "immi/augmented.hpp"
#include "immi/types.hpp"

namespace immi {

/// Pairwise similarity table over an augmented set.
///
/// Entries are exp(-gamma * d2) in [0, 1]; the diagonal is exactly 1, so
/// every row sum is >= 1. Entries may underflow to 0 at high SNR, which is
/// the correct limit. Row sums are accumulated largest-entry-first in a
/// fixed order for deterministic rounding.
struct GibbsKernel {
    double gamma = 0.0;
    std::size_t inputs = 0;  // t
    std::size_t order = 0;   // S
    RealMatrix d;
    std::vector<double> row_sums;

    std::size_t size() const { return inputs * order; }
};

GibbsKernel gibbs_kernel(const RealMatrix& sq_distances, double gamma, std::size_t inputs,
                         std::size_t order);

/// First-order MI approximation: log2(tS) - mean_k log2(row_sum_k), which
/// equals log2(tS / geometric_mean(row sums)). Always in [0, log2(tS)].
double mi_first_order(const GibbsKernel& kernel);

/// Per-point pieces of the curvature correction; both are nonnegative.
/// The correction applied to point k is (dlog_term[k] - grad_sq_term[k]) / (4*gamma).
struct SecondOrderTerms {
    std::vector<double> dlog_term;     // 4*gamma * sum_k' D*log2(1/D) / row_sum
    std::vector<double> grad_sq_term;  // (2*gamma)^2/ln2 * sum_m (weighted offset)^2 / row_sum^2
};

SecondOrderTerms second_order_terms(const GibbsKernel& kernel, const AugmentedSymbolSet& aug);

struct SecondOrderMi {
    double bits;      // clamped to [0, log2(tS)]
    double raw_bits;  // unclamped
};

/// Second-order MI approximation: first order minus the mean curvature
/// correction. The clamp to [0, log2(tS)] is presentation only; raw_bits
/// carries the unclamped value.
SecondOrderMi mi_second_order(const GibbsKernel& kernel, const AugmentedSymbolSet& aug);

}  // namespace immi
