#include "pdelum/raster.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pdelum {

namespace {

constexpr double kChromaEps = 1e-12;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

} // namespace

Raster::Raster(int width, int height, double fill)
    : width_(width), height_(height) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("Raster: dimensions must be >= 1");
    data_.assign(static_cast<std::size_t>(width) * height, fill);
}

Raster::Raster(int width, int height, std::vector<double> data)
    : width_(width), height_(height), data_(std::move(data)) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("Raster: dimensions must be >= 1");
    if (data_.size() != static_cast<std::size_t>(width) * height)
        throw std::invalid_argument("Raster: data length != width * height");
}

bool Raster::in_range(double lo, double hi) const {
    for (double v : data_)
        if (!std::isfinite(v) || v < lo || v > hi) return false;
    return true;
}

PlaneStats plane_stats(const Raster& img) {
    const auto d = img.data();
    const double n = static_cast<double>(d.size());
    double sum = 0.0;
    for (double v : d) sum += v;
    const double mean = sum / n;
    double sq = 0.0;
    for (double v : d) {
        const double c = v - mean;
        sq += c * c;
    }
    return {mean, std::sqrt(sq / n)};
}

ColorImage make_rgb(Raster r, Raster g, Raster b) {
    if (!r.same_shape(g) || !r.same_shape(b))
        throw std::invalid_argument("make_rgb: planes must share dimensions");
    return ColorImage{ColorModel::RGB, {std::move(r), std::move(g), std::move(b)}};
}

ColorImage rgb_to_hsi(const ColorImage& rgb) {
    if (rgb.model != ColorModel::RGB)
        throw std::invalid_argument("rgb_to_hsi: input must be RGB");
    const int w = rgb.width(), h = rgb.height();
    Raster hue(w, h), sat(w, h), inten(w, h);
    const auto& R = rgb.planes[0];
    const auto& G = rgb.planes[1];
    const auto& B = rgb.planes[2];
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double r = R(x, y), g = G(x, y), b = B(x, y);
            const double sum = r + g + b;
            inten(x, y) = sum / 3.0;
            double s = 0.0;
            if (sum >= kChromaEps)
                s = 1.0 - 3.0 * std::min({r, g, b}) / sum;
            if (s < 0.0) s = 0.0;
            sat(x, y) = s;
            double H = 0.0;
            if (s > 0.0) {
                const double num = 0.5 * ((r - g) + (r - b));
                const double den = std::sqrt((r - g) * (r - g) + (r - b) * (g - b));
                if (den >= kChromaEps) {
                    const double theta =
                        std::acos(std::clamp(num / den, -1.0, 1.0)) * 180.0 / std::numbers::pi;
                    H = (b <= g) ? theta : 360.0 - theta;
                    if (H >= 360.0) H -= 360.0;
                }
            }
            hue(x, y) = H;
        }
    }
    return ColorImage{ColorModel::HSI, {std::move(hue), std::move(sat), std::move(inten)}};
}

ColorImage hsi_to_rgb(const ColorImage& hsi) {
    if (hsi.model != ColorModel::HSI)
        throw std::invalid_argument("hsi_to_rgb: input must be HSI");
    const int w = hsi.width(), h = hsi.height();
    Raster R(w, h), G(w, h), B(w, h);
    const auto& hue = hsi.planes[0];
    const auto& sat = hsi.planes[1];
    const auto& inten = hsi.planes[2];
    constexpr double deg = std::numbers::pi / 180.0;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double H = hue(x, y), s = sat(x, y), i = inten(x, y);
            if (s <= 0.0) {
                R(x, y) = G(x, y) = B(x, y) = clamp01(i);
                continue;
            }
            double r, g, b;
            if (H < 120.0) {
                b = i * (1.0 - s);
                r = i * (1.0 + s * std::cos(H * deg) / std::cos((60.0 - H) * deg));
                g = 3.0 * i - (r + b);
            } else if (H < 240.0) {
                const double hh = H - 120.0;
                r = i * (1.0 - s);
                g = i * (1.0 + s * std::cos(hh * deg) / std::cos((60.0 - hh) * deg));
                b = 3.0 * i - (r + g);
            } else {
                const double hh = H - 240.0;
                g = i * (1.0 - s);
                b = i * (1.0 + s * std::cos(hh * deg) / std::cos((60.0 - hh) * deg));
                r = 3.0 * i - (g + b);
            }
            R(x, y) = clamp01(r);
            G(x, y) = clamp01(g);
            B(x, y) = clamp01(b);
        }
    }
    return ColorImage{ColorModel::RGB, {std::move(R), std::move(G), std::move(B)}};
}

Raster intensity_plane(const ColorImage& rgb) {
    if (rgb.model != ColorModel::RGB)
        throw std::invalid_argument("intensity_plane: input must be RGB");
    const int w = rgb.width(), h = rgb.height();
    Raster out(w, h);
    const auto& R = rgb.planes[0];
    const auto& G = rgb.planes[1];
    const auto& B = rgb.planes[2];
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            out(x, y) = (R(x, y) + G(x, y) + B(x, y)) / 3.0;
    return out;
}

} // namespace pdelum
