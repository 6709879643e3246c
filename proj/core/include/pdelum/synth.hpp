#ifndef PDELUM_SYNTH_HPP
#define PDELUM_SYNTH_HPP

#include <cstdint>
#include <random>

#include "pdelum/raster.hpp"

namespace pdelum {

/// Uniform doubles in [0,1) from a seeded mt19937_64, mapped as
/// (bits >> 11) * 2^-53 so the sequence is identical on every platform.
class SeededUniform {
public:
    explicit SeededUniform(std::uint64_t seed) : engine_(seed) {}
    double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

/// Snaps to the 8-bit grid: round-half-up(clamp01(v) * 255)/255.
double quantize255(double v);

/// Unquantized iid uniform [0,1) samples in row-major draw order.
Raster random_raster(int width, int height, std::uint64_t seed);

/// Row-major ramp u in [0,1] squared and range-capped (v = 0.3*u^2) plus
/// seeded sub-range noise, snapped to the 8-bit grid. The cap concentrates
/// the histogram in the low bins so entropy has room to grow under
/// brightening; the noise gives same-valued pixels different neighborhoods
/// so the high-pass term can separate them.
Raster gamma_darkened_ramp(int width, int height, std::uint64_t seed);

/// Dark textured scene: smooth sinusoidal structure plus seeded noise,
/// values near [0.03, 0.28], snapped to the 8-bit grid.
Raster low_light_texture(int width, int height, std::uint64_t seed);

/// Two-level square tiling.
Raster checkerboard(int width, int height, int cell = 8, double lo = 0.0, double hi = 1.0);

/// Dark chromatic RGB scene built in HSI (random hue, low saturation,
/// textured low intensity) then converted and snapped to the 8-bit grid.
/// Saturation fades to exactly 0 toward the top of the intensity range so
/// that brightening the intensity plane cannot push the reconverted RGB out
/// of gamut, and generated hues keep a degree of clearance from the
/// conversion's acos singularities at 0 and 180 degrees; both properties
/// keep hue recovery numerically clean under intensity-only enhancement.
ColorImage dark_color_scene(int width, int height, std::uint64_t seed);

} // namespace pdelum

#endif
