#ifndef PDELUM_RASTER_HPP
#define PDELUM_RASTER_HPP

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace pdelum {

/// Single-channel 2-D field of double-precision intensities, row-major.
/// The enhancement pipeline keeps values in [0,1]; intermediate fields
/// (gradients, log images) may leave that range.
class Raster {
public:
    Raster() = default;
    Raster(int width, int height, double fill = 0.0);
    Raster(int width, int height, std::vector<double> data);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t pixel_count() const { return data_.size(); }

    double operator()(int x, int y) const { return data_[static_cast<std::size_t>(y) * width_ + x]; }
    double& operator()(int x, int y) { return data_[static_cast<std::size_t>(y) * width_ + x]; }

    std::span<const double> data() const { return data_; }
    std::span<double> data() { return data_; }

    bool same_shape(const Raster& other) const {
        return width_ == other.width_ && height_ == other.height_;
    }

    /// True iff every sample is finite and within [lo, hi].
    bool in_range(double lo, double hi) const;

    friend bool operator==(const Raster&, const Raster&) = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<double> data_;
};

/// Mean and population standard deviation on the raster's own scale.
struct PlaneStats {
    double mean;
    double stddev;
};

PlaneStats plane_stats(const Raster& img);

/// Maximum representable intensity of the working domain (S = D - 1).
/// 1.0 internally; 255 only at the 8-bit I/O boundary.
struct PixelDomain {
    double scale = 1.0;
};

enum class ColorModel { RGB, HSI };

/// Three planes sharing dimensions. RGB planes live in [0,1];
/// HSI carries H in degrees [0,360), S in [0,1], I in [0,1].
struct ColorImage {
    ColorModel model = ColorModel::RGB;
    std::array<Raster, 3> planes;

    int width() const { return planes[0].width(); }
    int height() const { return planes[0].height(); }
};

ColorImage make_rgb(Raster r, Raster g, Raster b);

/// Gonzalez-Woods HSI. Achromatic pixels (R+G+B below epsilon, or S == 0)
/// take H = 0 so hue-based metrics stay total.
ColorImage rgb_to_hsi(const ColorImage& rgb);

/// Inverse of rgb_to_hsi; outputs clamped to [0,1]. S == 0 maps to (I,I,I)
/// exactly.
ColorImage hsi_to_rgb(const ColorImage& hsi);

/// (R+G+B)/3, summed left to right — identical to the I plane of rgb_to_hsi.
Raster intensity_plane(const ColorImage& rgb);

} // namespace pdelum

#endif
