// SPDX-License-Identifier: Apache-2.0
#pragma once
//
// Shared generators and independent oracles for the test suites.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "immi/augmented.hpp"
#include "immi/channel.hpp"
#include "immi/closed_form.hpp"
#include "immi/constellation.hpp"
#include "immi/monte_carlo.hpp"
#include "immi/rng.hpp"

namespace testutil {

using namespace immi;

inline ChannelRealization random_channel(rng::CounterStream& stream, std::size_t outputs,
                                         std::size_t inputs) {
    ChannelRealization h(outputs, inputs);
    const double scale = std::sqrt(0.5);
    for (std::size_t i = 0; i < outputs; ++i)
        for (std::size_t j = 0; j < inputs; ++j) {
            const auto [re, im] = stream.next_gaussian_pair();
            h.set_entry(i, j, {scale * re, scale * im});
        }
    return h;
}

inline ChannelRealization identity_channel(std::size_t n) {
    ChannelRealization h(n, n);
    for (std::size_t i = 0; i < n; ++i) h.set_entry(i, i, {1.0, 0.0});
    return h;
}

inline ChannelRealization scalar_channel(Complex value) {
    ChannelRealization h(1, 1);
    h.set_entry(0, 0, value);
    return h;
}

struct Instance {
    ChannelRealization channel;
    Constellation constellation;
    double gamma;
    AugmentedSymbolSet aug;
    GibbsKernel kernel;
};

/// Small random problem: tS <= 8, r <= 2, generic channel, moderate SNR.
inline Instance random_instance(rng::CounterStream& stream, double gamma_lo = 0.2,
                                double gamma_hi = 2.0) {
    struct Shape {
        ConstellationKind kind;
        std::size_t order;
        std::size_t inputs;
    };
    static const Shape shapes[] = {
        {ConstellationKind::psk, 2, 1}, {ConstellationKind::psk, 2, 2},
        {ConstellationKind::psk, 4, 1}, {ConstellationKind::psk, 4, 2},
        {ConstellationKind::qam, 4, 2},
    };
    const Shape& shape = shapes[stream.next_u64() % std::size(shapes)];
    const std::size_t outputs = 1 + stream.next_u64() % 2;
    const double gamma = gamma_lo + (gamma_hi - gamma_lo) * stream.next_unit();

    ChannelRealization h = random_channel(stream, outputs, shape.inputs);
    Constellation c = Constellation::build(shape.kind, shape.order);
    AugmentedSymbolSet aug = augment(h, c);
    GibbsKernel kernel = gibbs_kernel(pairwise_sq_distances(aug), gamma, shape.inputs, shape.order);
    return {std::move(h), std::move(c), gamma, std::move(aug), std::move(kernel)};
}

/// Random unitary via Gram-Schmidt on a complex Gaussian matrix (row-major).
inline std::vector<std::vector<Complex>> random_unitary(rng::CounterStream& stream,
                                                        std::size_t n) {
    std::vector<std::vector<Complex>> cols(n, std::vector<Complex>(n));
    for (auto& col : cols)
        for (auto& z : col) {
            const auto [re, im] = stream.next_gaussian_pair();
            z = {re, im};
        }
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t prev = 0; prev < j; ++prev) {
            Complex proj{0.0, 0.0};
            for (std::size_t i = 0; i < n; ++i) proj += std::conj(cols[prev][i]) * cols[j][i];
            for (std::size_t i = 0; i < n; ++i) cols[j][i] -= proj * cols[prev][i];
        }
        double norm = 0.0;
        for (const Complex& z : cols[j]) norm += std::norm(z);
        norm = std::sqrt(norm);
        for (Complex& z : cols[j]) z /= norm;
    }
    // Return as row-major for easy application.
    std::vector<std::vector<Complex>> rows(n, std::vector<Complex>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = cols[j][i];
    return rows;
}

inline ChannelRealization apply_matrix(const std::vector<std::vector<Complex>>& m,
                                       const ChannelRealization& h) {
    ChannelRealization out(h.outputs(), h.inputs());
    for (std::size_t i = 0; i < h.outputs(); ++i)
        for (std::size_t j = 0; j < h.inputs(); ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < h.outputs(); ++k) acc += m[i][k] * h.entry(k, j);
            out.set_entry(i, j, acc);
        }
    return out;
}

/// Independent oracle: sum over all 2r real coordinates of central second
/// differences of the integrand at w = 0.
inline double fd_second_derivative_sum(const AugmentedSymbolSet& aug, std::size_t k, double gamma,
                                       double step) {
    const std::size_t r = aug.dim();
    const std::size_t s_idx = aug.symbol_index(k);
    const std::size_t l_idx = aug.input_index(k);
    std::vector<Complex> w(r, Complex{0.0, 0.0});
    const double g0 = g_integrand(aug, s_idx, l_idx, w, gamma);

    double acc = 0.0;
    for (std::size_t m = 0; m < r; ++m) {
        for (int part = 0; part < 2; ++part) {
            const Complex offset = part == 0 ? Complex{step, 0.0} : Complex{0.0, step};
            w[m] = offset;
            const double gp = g_integrand(aug, s_idx, l_idx, w, gamma);
            w[m] = -offset;
            const double gm = g_integrand(aug, s_idx, l_idx, w, gamma);
            w[m] = {0.0, 0.0};
            acc += (gp - 2.0 * g0 + gm) / (step * step);
        }
    }
    return acc;
}

/// Self-cleaning scratch directory for file round-trip tests.
class TempDir {
  public:
    explicit TempDir(const std::string& tag) {
        path_ = std::filesystem::temp_directory_path() /
                (tag + "_" + std::to_string(rng::mix64(reinterpret_cast<std::uintptr_t>(this))));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

  private:
    std::filesystem::path path_;
};

inline void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

}  // namespace testutil
