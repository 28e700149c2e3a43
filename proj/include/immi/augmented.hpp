// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "immi/channel.hpp"
#include "immi/constellation.hpp"
#include "immi/types.hpp"

namespace immi {

/// Effective constellation induced by one channel realization: one length-r
/// vector (input column scaled by the symbol) per (symbol, input) pair.
/// Flat index is input-major: k = input_index * S + symbol_index, so the
/// first S vectors all use input 0. Coincident vectors (rank-deficient or
/// duplicated columns) are kept as-is.
class AugmentedSymbolSet {
  public:
    std::size_t size() const { return inputs_ * order_; }  // t*S
    std::size_t dim() const { return dim_; }               // r
    std::size_t inputs() const { return inputs_; }         // t
    std::size_t order() const { return order_; }           // S

    std::span<const Complex> vector(std::size_t k) const {
        return {data_.data() + k * dim_, dim_};
    }

    std::size_t flat_index(std::size_t symbol_idx, std::size_t input_idx) const {
        return input_idx * order_ + symbol_idx;
    }
    std::size_t symbol_index(std::size_t k) const { return k % order_; }
    std::size_t input_index(std::size_t k) const { return k / order_; }

    friend AugmentedSymbolSet augment(const ChannelRealization&, const Constellation&);

  private:
    AugmentedSymbolSet(std::size_t dim, std::size_t inputs, std::size_t order,
                       std::vector<Complex> data)
        : dim_(dim), inputs_(inputs), order_(order), data_(std::move(data)) {}

    std::size_t dim_;
    std::size_t inputs_;
    std::size_t order_;
    std::vector<Complex> data_;  // vector k at [k*dim, (k+1)*dim)
};

AugmentedSymbolSet augment(const ChannelRealization& channel, const Constellation& constellation);

/// Squared Euclidean distances between all pairs of augmented vectors.
/// Symmetric with an exactly-zero diagonal.
RealMatrix pairwise_sq_distances(const AugmentedSymbolSet& aug);

}  // namespace immi
