// SPDX-License-Identifier: Apache-2.0

#include "immi/closed_form.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace immi {

GibbsKernel gibbs_kernel(const RealMatrix& sq_distances, double gamma, std::size_t inputs,
                         std::size_t order) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::invalid_argument("gamma must be positive and finite");
    const std::size_t n = inputs * order;
    if (sq_distances.rows() != n || sq_distances.cols() != n)
        throw std::invalid_argument("distance matrix does not match t*S");
    for (double v : sq_distances.data())
        if (!std::isfinite(v)) throw std::invalid_argument("distances must be finite");

    GibbsKernel kernel;
    kernel.gamma = gamma;
    kernel.inputs = inputs;
    kernel.order = order;
    kernel.d = RealMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        assert(sq_distances(i, i) == 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            assert(sq_distances(i, j) == sq_distances(j, i));
            kernel.d(i, j) = std::exp(-gamma * sq_distances(i, j));
        }
    }

    // Row sums accumulated largest-first; the order is fixed so repeated
    // runs round identically.
    kernel.row_sums.resize(n);
    std::vector<double> row(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) row[j] = kernel.d(i, j);
        std::sort(row.begin(), row.end(), std::greater<>());
        double acc = 0.0;
        for (double v : row) acc += v;
        kernel.row_sums[i] = acc;
    }
    return kernel;
}

double mi_first_order(const GibbsKernel& kernel) {
    const std::size_t n = kernel.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += std::log2(kernel.row_sums[i]);
    return std::log2(static_cast<double>(n)) - acc / static_cast<double>(n);
}

SecondOrderTerms second_order_terms(const GibbsKernel& kernel, const AugmentedSymbolSet& aug) {
    const std::size_t n = kernel.size();
    if (aug.inputs() != kernel.inputs || aug.order() != kernel.order)
        throw std::invalid_argument("kernel and augmented set dimensions do not match");
    const std::size_t r = aug.dim();
    const double gamma = kernel.gamma;

    SecondOrderTerms terms;
    terms.dlog_term.resize(n);
    terms.grad_sq_term.resize(n);
    std::vector<double> acc_re(r), acc_im(r);

    for (std::size_t k = 0; k < n; ++k) {
        const auto xk = aug.vector(k);
        double dlog = 0.0;
        std::fill(acc_re.begin(), acc_re.end(), 0.0);
        std::fill(acc_im.begin(), acc_im.end(), 0.0);
        for (std::size_t kp = 0; kp < n; ++kp) {
            const double d = kernel.d(k, kp);
            // 0*log2(1/0) is taken as 0, the correct underflow limit.
            if (d > 0.0 && d < 1.0) dlog -= d * std::log2(d);
            const auto xkp = aug.vector(kp);
            for (std::size_t m = 0; m < r; ++m) {
                acc_re[m] += (xkp[m].real() - xk[m].real()) * d;
                acc_im[m] += (xkp[m].imag() - xk[m].imag()) * d;
            }
        }
        const double row_sum = kernel.row_sums[k];
        double offset_sq = 0.0;
        for (std::size_t m = 0; m < r; ++m)
            offset_sq += acc_re[m] * acc_re[m] + acc_im[m] * acc_im[m];
        terms.dlog_term[k] = 4.0 * gamma * dlog / row_sum;
        terms.grad_sq_term[k] =
            (4.0 * gamma * gamma / std::numbers::ln2) * offset_sq / (row_sum * row_sum);
    }
    return terms;
}

SecondOrderMi mi_second_order(const GibbsKernel& kernel, const AugmentedSymbolSet& aug) {
    const std::size_t n = kernel.size();
    const SecondOrderTerms terms = second_order_terms(kernel, aug);
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += terms.dlog_term[k] - terms.grad_sq_term[k];
    const double correction = acc / (4.0 * kernel.gamma * static_cast<double>(n));
    const double raw = mi_first_order(kernel) - correction;
    const double ceiling = std::log2(static_cast<double>(n));
    return {std::clamp(raw, 0.0, ceiling), raw};
}

}  // namespace immi
