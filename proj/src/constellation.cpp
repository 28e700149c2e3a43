// SPDX-License-Identifier: Apache-2.0

#include "immi/constellation.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <utility>

#include <json.hpp>

namespace immi {

namespace {

constexpr double kEnergyTolerance = 1e-12;

// Point at angle 2*pi*k/den on the unit circle, exact on the axes so BPSK
// is {+1, -1} without trigonometric dust.
Complex unit_circle_point(std::size_t k, std::size_t den) {
    k %= den;
    if (4 * k % den == 0) {
        switch (4 * k / den) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

std::vector<Complex> psk_points(std::size_t order) {
    if (order < 2) throw std::invalid_argument("psk order must be >= 2");
    std::vector<Complex> points;
    points.reserve(order);
    if (order == 4) {
        const double a = std::sqrt(0.5);
        return {{a, a}, {-a, a}, {-a, -a}, {a, -a}};
    }
    for (std::size_t k = 0; k < order; ++k) points.push_back(unit_circle_point(k, order));
    return points;
}

std::vector<Complex> qam_points(std::size_t order) {
    const auto side = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(order))));
    if (side < 2 || side * side != order)
        throw std::invalid_argument("qam order must be a perfect square >= 4");
    // Odd-integer levels; mean squared level over one axis is (side^2-1)/3.
    const double scale =
        1.0 / std::sqrt(2.0 * (static_cast<double>(side) * static_cast<double>(side) - 1.0) / 3.0);
    std::vector<Complex> points;
    points.reserve(order);
    for (std::size_t i = 0; i < side; ++i) {
        const double im = static_cast<double>(side - 1) - 2.0 * static_cast<double>(i);
        for (std::size_t j = 0; j < side; ++j) {
            const double re = 2.0 * static_cast<double>(j) - static_cast<double>(side - 1);
            points.emplace_back(re * scale, im * scale);
        }
    }
    return points;
}

}  // namespace

std::string_view kind_name(ConstellationKind kind) {
    switch (kind) {
        case ConstellationKind::psk: return "psk";
        case ConstellationKind::qam: return "qam";
        default: return "custom";
    }
}

Constellation::Constellation(ConstellationKind kind, std::vector<Complex> points)
    : kind_(kind), points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("constellation must have at least one point");
    for (const Complex& p : points_)
        if (!is_finite(p)) throw std::invalid_argument("constellation points must be finite");
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            if (points_[i] == points_[j])
                throw std::invalid_argument("constellation points must be pairwise distinct");
    if (std::abs(average_energy() - 1.0) > kEnergyTolerance)
        throw std::invalid_argument("constellation must have unit average energy");
}

double Constellation::average_energy() const {
    double acc = 0.0;
    for (const Complex& p : points_) acc += std::norm(p);
    return acc / static_cast<double>(points_.size());
}

Constellation Constellation::build(ConstellationKind kind, std::size_t order) {
    switch (kind) {
        case ConstellationKind::psk: return Constellation(kind, psk_points(order));
        case ConstellationKind::qam: return Constellation(kind, qam_points(order));
        default:
            throw std::invalid_argument("custom constellations are built from explicit points");
    }
}

Constellation Constellation::custom(std::vector<Complex> points) {
    return Constellation(ConstellationKind::custom, std::move(points));
}

Constellation Constellation::from_name(std::string_view name) {
    if (name == "bpsk") return build(ConstellationKind::psk, 2);
    if (name == "qpsk") return build(ConstellationKind::psk, 4);
    const auto parse_order = [&](std::string_view digits) -> std::size_t {
        std::size_t value = 0;
        if (digits.empty()) throw std::invalid_argument("unsupported constellation: " + std::string(name));
        for (char c : digits) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("unsupported constellation: " + std::string(name));
            value = value * 10 + static_cast<std::size_t>(c - '0');
        }
        return value;
    };
    if (name.starts_with("psk")) return build(ConstellationKind::psk, parse_order(name.substr(3)));
    if (name.starts_with("qam")) return build(ConstellationKind::qam, parse_order(name.substr(3)));
    throw std::invalid_argument("unsupported constellation: " + std::string(name));
}

Constellation Constellation::load_custom(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open constellation file: " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("constellation file ") + path + ": " + e.what());
    }
    if (!doc.is_array() || doc.empty())
        throw ValidationError("constellation file must be a nonempty array of [re, im] pairs");
    std::vector<Complex> points;
    points.reserve(doc.size());
    for (const auto& item : doc) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number())
            throw ValidationError("constellation file must be a nonempty array of [re, im] pairs");
        points.emplace_back(item[0].get<double>(), item[1].get<double>());
    }
    return custom(std::move(points));
}

}  // namespace immi
