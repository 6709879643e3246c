#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "pdelum/kernels.hpp"
#include "pdelum/synth.hpp"

using namespace pdelum;

namespace {

int clampi(int v, int lo, int hi) { return std::min(std::max(v, lo), hi); }

// independent reference written from the definition, not from the library code
Raster naive_convolve3(const Raster& img, const Kernel3& k) {
    Raster out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            double acc = 0.0;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    const int sx = clampi(x + dx, 0, img.width() - 1);
                    const int sy = clampi(y + dy, 0, img.height() - 1);
                    acc += k.w[static_cast<std::size_t>((dy + 1) * 3 + (dx + 1))] * img(sx, sy);
                }
            }
            out(x, y) = acc;
        }
    }
    return out;
}

double max_abs_diff(const Raster& a, const Raster& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

} // namespace

TEST_CASE("identity kernel reproduces the input bitwise") {
    const Raster img = random_raster(9, 7, 3);
    CHECK(convolve3(img, identity_kernel(), BoundaryMode::Replicate) == img);
}

TEST_CASE("convolve3 matches an independent reference") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Raster img = random_raster(8, 8, seed);
        for (const Kernel3& k :
             {identity_kernel(), box_mean_kernel(), four_neighbor_laplacian_kernel()}) {
            const Raster got = convolve3(img, k, BoundaryMode::Replicate);
            CHECK(max_abs_diff(got, naive_convolve3(img, k)) <= 1e-15);
        }
    }
}

TEST_CASE("replicate boundary duplicates edge samples") {
    // 1x1 image: every tap reads the same pixel, so box mean is the identity
    // up to summation rounding
    Raster one(1, 1, 0.37);
    CHECK(convolve3(one, box_mean_kernel(), BoundaryMode::Replicate)(0, 0) ==
          doctest::Approx(0.37).epsilon(1e-15));

    // 2x1 image: corner taps replicate; hand-computed box means
    Raster two(2, 1, std::vector<double>{0.0, 0.9});
    const Raster out = convolve3(two, box_mean_kernel(), BoundaryMode::Replicate);
    CHECK(out(0, 0) == doctest::Approx((6 * 0.0 + 3 * 0.9) / 9.0).epsilon(1e-15));
    CHECK(out(1, 0) == doctest::Approx((3 * 0.0 + 6 * 0.9) / 9.0).epsilon(1e-15));
}

TEST_CASE("center impulse spreads to one ninth under the box mean") {
    Raster img(3, 3, 0.0);
    img(1, 1) = 1.0;
    const Raster out = convolve3(img, box_mean_kernel(), BoundaryMode::Replicate);
    CHECK(out(1, 1) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
    CHECK(out(0, 0) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));

    const Raster lap = laplacian(img);
    CHECK(lap(1, 1) == doctest::Approx(-8.0 / 9.0).epsilon(1e-14));
    const Raster hp = highpass(img);
    CHECK(hp(1, 1) == doctest::Approx(8.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("checkerboard lowpass interior takes only the two box-mean values") {
    const Raster board = checkerboard(16, 16, 1, 0.0, 1.0);
    const Raster lp = lowpass(board);
    for (int y = 1; y < 15; ++y) {
        for (int x = 1; x < 15; ++x) {
            const double v = lp(x, y);
            const bool is_four = std::abs(v - 4.0 / 9.0) <= 1e-12;
            const bool is_five = std::abs(v - 5.0 / 9.0) <= 1e-12;
            CHECK((is_four || is_five));
        }
    }
}

TEST_CASE("box lowpass is exact on constant rasters") {
    Raster img(11, 6, 0.123456789);
    const Raster lp = lowpass(img);
    CHECK(lp == img);
}

TEST_CASE("lowpass stays in range for inputs in range") {
    const Raster img = random_raster(17, 13, 11);
    CHECK(lowpass(img).in_range(0.0, 1.0));
}

TEST_CASE("highpass is the exact complement of lowpass") {
    const Raster img = random_raster(17, 11, 7);
    const Raster lp = lowpass(img);
    const Raster hp = highpass(img);
    for (std::size_t i = 0; i < img.data().size(); ++i) {
        CHECK(hp.data()[i] == img.data()[i] - lp.data()[i]);
        // reconstruction differs from the input by at most one ulp of 1.0
        CHECK(std::abs(lp.data()[i] + hp.data()[i] - img.data()[i]) <= 0x1.0p-53);
    }
}

TEST_CASE("averaging laplacian equals lowpass minus input") {
    const Raster img = random_raster(9, 9, 19);
    const Raster lap = laplacian(img);
    const Raster lp = lowpass(img);
    for (std::size_t i = 0; i < img.data().size(); ++i) {
        CHECK(lap.data()[i] == lp.data()[i] - img.data()[i]);
    }
}

TEST_CASE("four neighbor laplacian kernel sums to zero and kills linear ramps") {
    const Kernel3 k = four_neighbor_laplacian_kernel();
    CHECK(std::accumulate(k.w.begin(), k.w.end(), 0.0) == 0.0);

    Raster ramp(8, 8);
    for (int y = 0; y < 8; ++y) {
        for (int x = 0; x < 8; ++x) {
            ramp(x, y) = 0.1 * x + 0.05 * y;
        }
    }
    const Raster out = convolve3(ramp, k, BoundaryMode::Replicate);
    for (int y = 1; y < 7; ++y) {
        for (int x = 1; x < 7; ++x) {
            CHECK(std::abs(out(x, y)) <= 1e-15);
        }
    }
}
