// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "helpers.hpp"

using namespace immi;

TEST_SUITE("constellation") {

TEST_CASE("bpsk is the exact real pair") {
    const Constellation c = Constellation::build(ConstellationKind::psk, 2);
    REQUIRE(c.order() == 2);
    CHECK(c.point(0) == Complex{1.0, 0.0});
    CHECK(c.point(1) == Complex{-1.0, 0.0});
    CHECK(c.kind() == ConstellationKind::psk);
}

TEST_CASE("qpsk points are the diagonal pattern, counterclockwise") {
    const Constellation c = Constellation::from_name("qpsk");
    REQUIRE(c.order() == 4);
    const double a = std::sqrt(0.5);
    CHECK(c.point(0) == Complex{a, a});
    CHECK(c.point(1) == Complex{-a, a});
    CHECK(c.point(2) == Complex{-a, -a});
    CHECK(c.point(3) == Complex{a, -a});
}

TEST_CASE("qam16 is the scaled odd-level grid in row-major order") {
    const Constellation c = Constellation::from_name("qam16");
    REQUIRE(c.order() == 16);
    const double s = 1.0 / std::sqrt(10.0);
    CHECK(c.point(0).real() == doctest::Approx(-3.0 * s).epsilon(1e-15));
    CHECK(c.point(0).imag() == doctest::Approx(3.0 * s).epsilon(1e-15));
    CHECK(c.point(1).real() == doctest::Approx(-1.0 * s).epsilon(1e-15));
    CHECK(c.point(3).real() == doctest::Approx(3.0 * s).epsilon(1e-15));
    CHECK(c.point(15).real() == doctest::Approx(3.0 * s).epsilon(1e-15));
    CHECK(c.point(15).imag() == doctest::Approx(-3.0 * s).epsilon(1e-15));

    // Direct summation of the grid energy.
    double acc = 0.0;
    for (const Complex& p : c.points()) acc += std::norm(p);
    CHECK(std::abs(acc / 16.0 - 1.0) <= 1e-12);
}

TEST_CASE("every built-in kind and order has unit average energy") {
    for (std::size_t order : {2, 4, 8, 16}) {
        const Constellation c = Constellation::build(ConstellationKind::psk, order);
        CHECK(std::abs(c.average_energy() - 1.0) <= 1e-12);
    }
    for (std::size_t order : {4, 16, 64, 256}) {
        const Constellation c = Constellation::build(ConstellationKind::qam, order);
        CHECK(std::abs(c.average_energy() - 1.0) <= 1e-12);
    }
}

TEST_CASE("points are pairwise distinct") {
    for (const char* name : {"bpsk", "qpsk", "qam16", "qam64", "psk8"}) {
        const Constellation c = Constellation::from_name(name);
        for (std::size_t i = 0; i < c.order(); ++i)
            for (std::size_t j = i + 1; j < c.order(); ++j)
                CHECK(c.point(i) != c.point(j));
    }
}

TEST_CASE("unsupported orders are rejected") {
    CHECK_THROWS_AS(Constellation::build(ConstellationKind::psk, 1), std::invalid_argument);
    CHECK_THROWS_AS(Constellation::build(ConstellationKind::psk, 0), std::invalid_argument);
    CHECK_THROWS_AS(Constellation::build(ConstellationKind::qam, 8), std::invalid_argument);
    CHECK_THROWS_AS(Constellation::build(ConstellationKind::qam, 2), std::invalid_argument);
    CHECK_THROWS_AS(Constellation::build(ConstellationKind::custom, 4), std::invalid_argument);
    CHECK_THROWS_AS(Constellation::from_name("qam32"), std::invalid_argument);
    CHECK_THROWS_AS(Constellation::from_name("dvbs2"), std::invalid_argument);
    CHECK_THROWS_AS(Constellation::from_name("psk"), std::invalid_argument);
}

TEST_CASE("custom points validate energy, finiteness and distinctness") {
    CHECK_NOTHROW(Constellation::custom({{1.0, 0.0}}));
    const Constellation single = Constellation::custom({{1.0, 0.0}});
    CHECK(single.order() == 1);
    CHECK(single.kind() == ConstellationKind::custom);

    CHECK_THROWS_AS(Constellation::custom({{2.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Constellation::custom({{1.0, 0.0}, {1.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Constellation::custom({}), std::invalid_argument);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(Constellation::custom({{inf, 0.0}}), std::invalid_argument);
}

TEST_CASE("custom point list loads from JSON") {
    testutil::TempDir dir("immi_constellation");
    const std::string path = dir.file("points.json");
    testutil::write_text(path, "[[1.0, 0.0], [-1.0, 0.0]]");
    const Constellation c = Constellation::load_custom(path);
    CHECK(c.order() == 2);
    CHECK(c.point(0) == Complex{1.0, 0.0});

    testutil::write_text(path, "[[1.0, 0.0],");
    CHECK_THROWS_AS(Constellation::load_custom(path), ParseError);
    testutil::write_text(path, "{\"a\": 1}");
    CHECK_THROWS_AS(Constellation::load_custom(path), ValidationError);
    CHECK_THROWS(Constellation::load_custom(dir.file("missing.json")));
}

}  // TEST_SUITE
