// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "immi/types.hpp"

namespace immi {

/// One MIMO channel instant: an outputs x inputs complex matrix stored
/// column-major, so each input's column is contiguous.
class ChannelRealization {
  public:
    ChannelRealization(std::size_t outputs, std::size_t inputs)
        : outputs_(outputs), inputs_(inputs), data_(outputs * inputs, Complex{0.0, 0.0}) {
        if (outputs == 0 || inputs == 0)
            throw std::invalid_argument("channel dimensions must be >= 1");
    }

    ChannelRealization(std::size_t outputs, std::size_t inputs, std::vector<Complex> column_major)
        : ChannelRealization(outputs, inputs) {
        if (column_major.size() != outputs * inputs)
            throw std::invalid_argument("channel entry count does not match dimensions");
        for (const Complex& z : column_major)
            if (!is_finite(z)) throw std::invalid_argument("channel entries must be finite");
        data_ = std::move(column_major);
    }

    std::size_t outputs() const { return outputs_; }
    std::size_t inputs() const { return inputs_; }

    const Complex& entry(std::size_t row, std::size_t col) const {
        return data_[col * outputs_ + row];
    }

    void set_entry(std::size_t row, std::size_t col, Complex value) {
        if (!is_finite(value)) throw std::invalid_argument("channel entries must be finite");
        data_[col * outputs_ + row] = value;
    }

    std::span<const Complex> column(std::size_t col) const {
        return {data_.data() + col * outputs_, outputs_};
    }

    bool operator==(const ChannelRealization&) const = default;

  private:
    std::size_t outputs_;
    std::size_t inputs_;
    std::vector<Complex> data_;
};

/// Average SNR carried in both linear and dB form, kept consistent.
class SnrPoint {
  public:
    static SnrPoint from_db(double db) {
        if (!std::isfinite(db)) throw std::invalid_argument("SNR dB must be finite");
        return SnrPoint(std::pow(10.0, db / 10.0), db);
    }

    static SnrPoint from_linear(double gamma) {
        if (!(gamma > 0.0) || !std::isfinite(gamma))
            throw std::invalid_argument("linear SNR must be positive and finite");
        return SnrPoint(gamma, 10.0 * std::log10(gamma));
    }

    double gamma() const { return gamma_; }
    double db() const { return db_; }

  private:
    SnrPoint(double gamma, double db) : gamma_(gamma), db_(db) {
        if (!(gamma_ > 0.0)) throw std::invalid_argument("linear SNR must be positive");
    }

    double gamma_;
    double db_;
};

}  // namespace immi
