#include "pdelum/synth.hpp"

#include <algorithm>
#include <cmath>

namespace pdelum {

double quantize255(double v) {
    const double c = std::clamp(v, 0.0, 1.0);
    return std::floor(c * 255.0 + 0.5) / 255.0;
}

Raster random_raster(int width, int height, std::uint64_t seed) {
    SeededUniform rng(seed);
    Raster out(width, height);
    for (double& v : out.data()) {
        v = rng.next();
    }
    return out;
}

Raster gamma_darkened_ramp(int width, int height, std::uint64_t seed) {
    SeededUniform rng(seed);
    Raster out(width, height);
    const std::size_t n = out.pixel_count();
    for (std::size_t i = 0; i < n; ++i) {
        const double u = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
        out.data()[i] = quantize255(0.30 * u * u + 0.04 * rng.next());
    }
    return out;
}

Raster low_light_texture(int width, int height, std::uint64_t seed) {
    SeededUniform rng(seed);
    Raster out(width, height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double tex = 0.5 + 0.5 * std::sin(0.37 * x) * std::cos(0.23 * y);
            out(x, y) = quantize255(0.03 + 0.18 * tex + 0.07 * rng.next());
        }
    }
    return out;
}

Raster checkerboard(int width, int height, int cell, double lo, double hi) {
    Raster out(width, height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            out(x, y) = ((x / cell + y / cell) % 2 == 0) ? lo : hi;
        }
    }
    return out;
}

ColorImage dark_color_scene(int width, int height, std::uint64_t seed) {
    SeededUniform rng(seed);
    Raster hue(width, height);
    Raster sat(width, height);
    Raster inten(width, height);
    const double ilo = 0.02;
    const double ispan = 0.30;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double base = 0.5 + 0.5 * std::sin(0.31 * x) * std::sin(0.27 * y);
            const double iv = ilo + ispan * base + 0.05 * rng.next();
            inten(x, y) = iv;
            const double fade = 1.0 - (iv - ilo) / (ispan + 0.05);
            const double s = 0.18 * std::max(fade - 0.2, 0.0) * (0.5 + 0.5 * rng.next());
            sat(x, y) = s < 0.05 ? 0.0 : s;
            const double u = rng.next();
            hue(x, y) = u < 0.5 ? 1.0 + 178.0 * (2.0 * u) : 181.0 + 178.0 * (2.0 * u - 1.0);
        }
    }
    ColorImage rgb = hsi_to_rgb(
        ColorImage{ColorModel::HSI, {std::move(hue), std::move(sat), std::move(inten)}});
    for (Raster& plane : rgb.planes) {
        for (double& v : plane.data()) {
            v = quantize255(v);
        }
    }
    return rgb;
}

} // namespace pdelum
