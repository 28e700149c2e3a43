// SPDX-License-Identifier: Apache-2.0

#include "immi/augmented.hpp"

namespace immi {

AugmentedSymbolSet augment(const ChannelRealization& channel, const Constellation& constellation) {
    const std::size_t r = channel.outputs();
    const std::size_t t = channel.inputs();
    const std::size_t s = constellation.order();

    std::vector<Complex> data;
    data.reserve(t * s * r);
    for (std::size_t l = 0; l < t; ++l) {
        const auto column = channel.column(l);
        for (std::size_t si = 0; si < s; ++si) {
            const Complex symbol = constellation.point(si);
            for (std::size_t m = 0; m < r; ++m) data.push_back(column[m] * symbol);
        }
    }
    return AugmentedSymbolSet(r, t, s, std::move(data));
}

RealMatrix pairwise_sq_distances(const AugmentedSymbolSet& aug) {
    const std::size_t n = aug.size();
    const std::size_t r = aug.dim();
    RealMatrix d2(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto vi = aug.vector(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto vj = aug.vector(j);
            double acc = 0.0;
            for (std::size_t m = 0; m < r; ++m) {
                const double dre = vi[m].real() - vj[m].real();
                const double dim = vi[m].imag() - vj[m].imag();
                acc += dre * dre + dim * dim;
            }
            d2(i, j) = acc;
            d2(j, i) = acc;  // mirrored, so symmetry is exact
        }
    }
    return d2;
}

}  // namespace immi
