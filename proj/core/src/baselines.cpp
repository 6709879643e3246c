#include "pdelum/baselines.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pdelum/kernels.hpp"

namespace pdelum {

namespace {

int bin_of(double v) {
    const int b = static_cast<int>(std::floor(v * 255.0 + 0.5));
    return std::clamp(b, 0, 255);
}

} // namespace

Raster global_he(const Raster& img) {
    std::array<long long, 256> hist{};
    for (double v : img.data()) {
        ++hist[static_cast<std::size_t>(bin_of(v))];
    }
    const double n = static_cast<double>(img.pixel_count());
    std::array<double, 256> cdf{};
    long long running = 0;
    double cdf_min = 1.0;
    for (std::size_t b = 0; b < 256; ++b) {
        running += hist[b];
        cdf[b] = static_cast<double>(running) / n;
        if (hist[b] != 0 && cdf[b] < cdf_min) {
            cdf_min = cdf[b];
        }
    }

    Raster out(img.width(), img.height());
    if (cdf_min == 1.0) {
        return out;
    }
    const double denom = 1.0 - cdf_min;
    const std::size_t count = img.pixel_count();
    for (std::size_t i = 0; i < count; ++i) {
        out.data()[i] = (cdf[static_cast<std::size_t>(bin_of(img.data()[i]))] - cdf_min) / denom;
    }
    return out;
}

Raster linear_stretch(const Raster& img, double lo_pct, double hi_pct) {
    if (!(lo_pct >= 0.0 && lo_pct < hi_pct && hi_pct <= 100.0)) {
        throw std::invalid_argument("percentiles must satisfy 0 <= lo < hi <= 100");
    }
    std::vector<double> sorted(img.data().begin(), img.data().end());
    std::sort(sorted.begin(), sorted.end());
    const auto nearest_rank = [&](double pct) {
        const double n = static_cast<double>(sorted.size());
        const long long idx = static_cast<long long>(std::ceil(pct / 100.0 * n)) - 1;
        return sorted[static_cast<std::size_t>(
            std::clamp<long long>(idx, 0, static_cast<long long>(sorted.size()) - 1))];
    };
    const double lo = nearest_rank(lo_pct);
    const double hi = nearest_rank(hi_pct);
    if (hi <= lo) {
        return img;
    }

    Raster out(img.width(), img.height());
    const std::size_t count = img.pixel_count();
    for (std::size_t i = 0; i < count; ++i) {
        out.data()[i] = std::clamp((img.data()[i] - lo) / (hi - lo), 0.0, 1.0);
    }
    return out;
}

Raster gain_offset(const Raster& img, double gain, double offset) {
    Raster out(img.width(), img.height());
    const std::size_t count = img.pixel_count();
    for (std::size_t i = 0; i < count; ++i) {
        out.data()[i] = std::clamp(gain * img.data()[i] + offset, 0.0, 1.0);
    }
    return out;
}

Raster gamma_correct(const Raster& img, double g) {
    if (!(g > 0.0)) {
        throw std::invalid_argument("gamma must be > 0");
    }
    Raster out(img.width(), img.height());
    const std::size_t count = img.pixel_count();
    for (std::size_t i = 0; i < count; ++i) {
        out.data()[i] = std::pow(img.data()[i], g);
    }
    return out;
}

Raster spatial_homomorphic(const Raster& img, double gamma_h, double gamma_l) {
    if (!(gamma_h > 0.0) || !(gamma_l > 0.0)) {
        throw std::invalid_argument("homomorphic gains must be > 0");
    }
    const std::size_t count = img.pixel_count();
    Raster z(img.width(), img.height());
    for (std::size_t i = 0; i < count; ++i) {
        z.data()[i] = std::log1p(255.0 * img.data()[i]);
    }
    const Raster az = convolve3(z, box_mean_kernel(), BoundaryMode::Replicate);

    Raster out(img.width(), img.height());
    for (std::size_t i = 0; i < count; ++i) {
        const double zp = gamma_h * (z.data()[i] - az.data()[i]) + gamma_l * az.data()[i];
        out.data()[i] = std::clamp(std::expm1(zp) / 255.0, 0.0, 1.0);
    }
    return out;
}

ColorImage apply_on_intensity(const ColorImage& rgb,
                              const std::function<Raster(const Raster&)>& op) {
    ColorImage hsi = rgb_to_hsi(rgb);
    hsi.planes[2] = op(hsi.planes[2]);
    return hsi_to_rgb(hsi);
}

} // namespace pdelum
