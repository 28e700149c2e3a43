// SPDX-License-Identifier: Apache-2.0
#pragma once
//
// Monte Carlo reference estimator for the exact mutual information. The
// closed-form approximations are judged against this oracle.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "immi/augmented.hpp"
#include "immi/types.hpp"

namespace immi {

enum class MiMethod { first_order, second_order, monte_carlo };

std::string_view method_name(MiMethod method);
std::optional<MiMethod> method_from_name(std::string_view name);

/// Uniform result record for all three methods.
struct MiEstimate {
    double mean_bits = 0.0;
    double std_error_bits = 0.0;  // 0 for closed-form methods
    MiMethod method = MiMethod::monte_carlo;
    std::int64_t n_samples = 0;  // 0 for closed-form methods

    static MiEstimate closed_form(double bits, MiMethod method) {
        return {bits, 0.0, method, 0};
    }
};

/// log2 sum_k' exp(-gamma*(||x_k - x_k' + w||^2 - ||w||^2)) for the point
/// k = (symbol_idx, input_idx), via a max-shifted log-sum-exp. The self
/// term's exponent is always 0, so the result is finite and >= 0 for any
/// gamma. At w = 0 this is log2 of the kernel row sum.
double g_integrand(const AugmentedSymbolSet& aug, std::size_t symbol_idx, std::size_t input_idx,
                   std::span<const Complex> w_prime, double gamma);

/// Noise vector for one draw, total per-component variance 1/gamma.
/// Component m consumes words 2m and 2m+1 of stream (seed, draw_index);
/// the Box-Muller pair becomes (real, imaginary), each scaled by
/// sqrt(1/(2*gamma)).
std::vector<Complex> draw_noise(std::size_t dim, double gamma, std::uint64_t seed,
                                std::uint64_t draw_index);

/// Monte Carlo MI estimate. Per draw, g is averaged over all (symbol,
/// input) points; the estimate is log2(tS) minus the across-draw mean with
/// the standard error of that mean. Each draw's noise depends only on
/// (seed, draw index) and the reduction runs in draw order, so the result
/// is bit-identical for any thread count.
MiEstimate mi_monte_carlo(const AugmentedSymbolSet& aug, double gamma, std::int64_t n_samples,
                          std::uint64_t seed, unsigned threads = 1);

/// Central moments of each real/imaginary noise part:
/// (n-1)!! / (2*gamma)^(n/2) for even n, 0 for odd n.
double noise_moments(int n, double gamma);

}  // namespace immi
