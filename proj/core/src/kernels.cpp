#include "pdelum/kernels.hpp"

#include <algorithm>

namespace pdelum {

namespace {

int clamp_coord(int v, int lo, int hi) {
    return std::clamp(v, lo, hi);
}

} // namespace

Kernel3 identity_kernel() {
    return Kernel3{{0, 0, 0, 0, 1, 0, 0, 0, 0}};
}

Kernel3 box_mean_kernel() {
    const double w = 1.0 / 9.0;
    return Kernel3{{w, w, w, w, w, w, w, w, w}};
}

Kernel3 four_neighbor_laplacian_kernel() {
    return Kernel3{{0, 1, 0, 1, -4, 1, 0, 1, 0}};
}

Raster convolve3(const Raster& img, const Kernel3& k, BoundaryMode) {
    const int w = img.width();
    const int h = img.height();
    Raster out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int dy = -1; dy <= 1; ++dy) {
                const int sy = clamp_coord(y + dy, 0, h - 1);
                for (int dx = -1; dx <= 1; ++dx) {
                    const int sx = clamp_coord(x + dx, 0, w - 1);
                    acc += k.w[static_cast<std::size_t>((dy + 1) * 3 + (dx + 1))] * img(sx, sy);
                }
            }
            out(x, y) = acc;
        }
    }
    return out;
}

Raster lowpass(const Raster& img) {
    const int w = img.width();
    const int h = img.height();
    Raster out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double c = img(x, y);
            double resid = 0.0;
            for (int dy = -1; dy <= 1; ++dy) {
                const int sy = clamp_coord(y + dy, 0, h - 1);
                for (int dx = -1; dx <= 1; ++dx) {
                    const int sx = clamp_coord(x + dx, 0, w - 1);
                    resid += img(sx, sy) - c;
                }
            }
            out(x, y) = std::clamp(c + resid / 9.0, 0.0, 1.0);
        }
    }
    return out;
}

Raster laplacian(const Raster& img) {
    Raster lp = lowpass(img);
    const std::size_t n = lp.data().size();
    for (std::size_t i = 0; i < n; ++i) {
        lp.data()[i] -= img.data()[i];
    }
    return lp;
}

Raster highpass(const Raster& img) {
    Raster lp = lowpass(img);
    const std::size_t n = lp.data().size();
    for (std::size_t i = 0; i < n; ++i) {
        lp.data()[i] = img.data()[i] - lp.data()[i];
    }
    return lp;
}

} // namespace pdelum
