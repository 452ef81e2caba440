#include <doctest.h>

#include <cmath>

#include "fdns/fdns.hpp"
#include "oracles.hpp"

using namespace fdns;

TEST_CASE("dct2 of the zero image is zero") {
    const CoeffMatrix c = dct2(GrayImage(6, 4, 0.0));
    for (double v : c.values) CHECK(v == 0.0);
}

TEST_CASE("dct2 of 2x2 all-ones") {
    const CoeffMatrix c = dct2(GrayImage(2, 2, 1.0));
    CHECK(c.at(0, 0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::fabs(c.at(0, 1)) < 1e-12);
    CHECK(std::fabs(c.at(1, 0)) < 1e-12);
    CHECK(std::fabs(c.at(1, 1)) < 1e-12);
}

TEST_CASE("dct2 of the 2x2 identity matrix is itself") {
    GrayImage img(2, 2, 0.0);
    img.at(0, 0) = 1.0;
    img.at(1, 1) = 1.0;
    const CoeffMatrix c = dct2(img);
    CHECK(c.at(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::fabs(c.at(0, 1)) < 1e-12);
    CHECK(std::fabs(c.at(1, 0)) < 1e-12);
    CHECK(c.at(1, 1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dct2 matches the direct quartic evaluation") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        const GrayImage img = oracle::random_image(8, 8, seed);
        const CoeffMatrix fast = dct2(img);
        const CoeffMatrix slow = oracle::dct2_direct(img);
        CHECK(oracle::max_abs_diff(fast.values, slow.values) < 1e-9);
    }
    // non-square
    const GrayImage img = oracle::random_image(13, 7, 17);
    CHECK(oracle::max_abs_diff(dct2(img).values, oracle::dct2_direct(img).values) < 1e-9);
}

TEST_CASE("dct2 DC term is sqrt(w*h) times the mean") {
    const GrayImage img = oracle::random_image(12, 7, 5);
    double mean = 0.0;
    for (double p : img.pixels) mean += p;
    mean /= img.pixels.size();
    CHECK(dct2(img).at(0, 0) ==
          doctest::Approx(std::sqrt(12.0 * 7.0) * mean).epsilon(1e-12));
}

TEST_CASE("dct2 preserves energy") {
    for (int size : {8, 23, 64}) {
        const GrayImage img = oracle::random_image(size, size, 100 + size);
        const CoeffMatrix c = dct2(img);
        double pixel_energy = 0.0, coeff_energy = 0.0;
        for (double p : img.pixels) pixel_energy += p * p;
        for (double v : c.values) coeff_energy += v * v;
        CHECK(coeff_energy == doctest::Approx(pixel_energy).epsilon(1e-6));
    }
}
