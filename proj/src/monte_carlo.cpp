// SPDX-License-Identifier: Apache-2.0

#include "immi/monte_carlo.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "immi/rng.hpp"

namespace immi {

std::string_view method_name(MiMethod method) {
    switch (method) {
        case MiMethod::first_order: return "first_order";
        case MiMethod::second_order: return "second_order";
        default: return "monte_carlo";
    }
}

std::optional<MiMethod> method_from_name(std::string_view name) {
    if (name == "first_order") return MiMethod::first_order;
    if (name == "second_order") return MiMethod::second_order;
    if (name == "monte_carlo") return MiMethod::monte_carlo;
    return std::nullopt;
}

double g_integrand(const AugmentedSymbolSet& aug, std::size_t symbol_idx, std::size_t input_idx,
                   std::span<const Complex> w_prime, double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::invalid_argument("gamma must be positive and finite");
    if (w_prime.size() != aug.dim())
        throw std::invalid_argument("noise vector length does not match output count");

    const std::size_t n = aug.size();
    const std::size_t r = aug.dim();
    const auto xk = aug.vector(aug.flat_index(symbol_idx, input_idx));

    // ||x_k - x_k' + w||^2 - ||w||^2 expands to ||d||^2 + 2*Re<d, w>, which
    // avoids the large-w cancellation of the direct difference.
    const auto exponent = [&](std::size_t kp) {
        const auto xkp = aug.vector(kp);
        double norm_sq = 0.0;
        double cross = 0.0;
        for (std::size_t m = 0; m < r; ++m) {
            const double dre = xk[m].real() - xkp[m].real();
            const double dim = xk[m].imag() - xkp[m].imag();
            norm_sq += dre * dre + dim * dim;
            cross += dre * w_prime[m].real() + dim * w_prime[m].imag();
        }
        return -gamma * (norm_sq + 2.0 * cross);
    };

    double max_a = 0.0;  // the self term is always 0
    for (std::size_t kp = 0; kp < n; ++kp) max_a = std::max(max_a, exponent(kp));
    double sum = 0.0;
    for (std::size_t kp = 0; kp < n; ++kp) sum += std::exp(exponent(kp) - max_a);
    return (max_a + std::log(sum)) / std::numbers::ln2;
}

namespace {

void fill_noise(std::span<Complex> out, double gamma, std::uint64_t seed,
                std::uint64_t draw_index) {
    rng::CounterStream stream(seed, draw_index);
    const double sigma = std::sqrt(1.0 / (2.0 * gamma));
    for (Complex& w : out) {
        const auto [re, im] = stream.next_gaussian_pair();
        w = {sigma * re, sigma * im};
    }
}

}  // namespace

std::vector<Complex> draw_noise(std::size_t dim, double gamma, std::uint64_t seed,
                                std::uint64_t draw_index) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::invalid_argument("gamma must be positive and finite");
    std::vector<Complex> w(dim);
    fill_noise(w, gamma, seed, draw_index);
    return w;
}

MiEstimate mi_monte_carlo(const AugmentedSymbolSet& aug, double gamma, std::int64_t n_samples,
                          std::uint64_t seed, unsigned threads) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::invalid_argument("gamma must be positive and finite");
    if (n_samples < 2) throw std::invalid_argument("Monte Carlo needs at least 2 samples");

    const std::size_t n_points = aug.size();
    const auto n = static_cast<std::size_t>(n_samples);
    std::vector<double> per_draw(n);

    const auto evaluate_range = [&](std::size_t lo, std::size_t hi) {
        std::vector<Complex> w(aug.dim());
        for (std::size_t i = lo; i < hi; ++i) {
            fill_noise(w, gamma, seed, i);
            double acc = 0.0;
            for (std::size_t k = 0; k < n_points; ++k)
                acc += g_integrand(aug, aug.symbol_index(k), aug.input_index(k), w, gamma);
            per_draw[i] = acc / static_cast<double>(n_points);
        }
    };

    if (threads <= 1) {
        evaluate_range(0, n);
    } else {
        const std::size_t workers = std::min<std::size_t>(threads, n);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (n + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(n, lo + chunk);
            if (lo < hi) pool.emplace_back(evaluate_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    // Reduce in draw order regardless of how the draws were scheduled.
    double mean = 0.0;
    for (double v : per_draw) mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double v : per_draw) var += (v - mean) * (v - mean);
    var /= static_cast<double>(n - 1);

    MiEstimate est;
    est.mean_bits = std::log2(static_cast<double>(n_points)) - mean;
    est.std_error_bits = std::sqrt(var / static_cast<double>(n));
    est.method = MiMethod::monte_carlo;
    est.n_samples = n_samples;
    return est;
}

double noise_moments(int n, double gamma) {
    if (n < 1) throw std::invalid_argument("moment order must be >= 1");
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::invalid_argument("gamma must be positive and finite");
    if (n % 2 != 0) return 0.0;
    double double_factorial = 1.0;
    for (int k = n - 1; k > 1; k -= 2) double_factorial *= static_cast<double>(k);
    return double_factorial / std::pow(2.0 * gamma, static_cast<double>(n) / 2.0);
}

}  // namespace immi
