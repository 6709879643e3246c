#ifndef PDELUM_BASELINES_HPP
#define PDELUM_BASELINES_HPP

#include <functional>

#include "pdelum/raster.hpp"

namespace pdelum {

/// Classical closed-form enhancers used as comparison rows. Each maps a
/// [0,1] raster to a [0,1] raster of the same shape, pure and deterministic.

/// 256-bin histogram equalization: v -> (cdf(v) - cdf_min)/(1 - cdf_min)
/// with cdf_min the smallest non-zero cdf value. A constant image maps to 0
/// (the formula's degenerate limit with a single occupied bin).
Raster global_he(const Raster& img);

/// Percentile clip at [lo_pct, hi_pct] (nearest-rank) then affine map to
/// [0,1]; (0,100) is a min-max stretch. Zero-range inputs are returned
/// unchanged.
Raster linear_stretch(const Raster& img, double lo_pct = 0.0, double hi_pct = 100.0);

/// clamp(gain*v + offset, 0, 1).
Raster gain_offset(const Raster& img, double gain, double offset);

/// v^g pointwise; g > 0. 0 and 1 are fixed points for any g.
Raster gamma_correct(const Raster& img, double g);

/// Log-domain homomorphic split: z = ln(1 + 255 v); the box-mean low-pass
/// of z is scaled by gamma_l and the residual by gamma_h; output is
/// (exp(z') - 1)/255 clamped. Deliberately log-using, in contrast to the
/// log-agnostic flow.
Raster spatial_homomorphic(const Raster& img, double gamma_h, double gamma_l);

/// Runs a raster enhancer on the HSI intensity plane of an RGB image and
/// reconverts, leaving hue and saturation untouched. op must preserve shape
/// and [0,1] range.
ColorImage apply_on_intensity(const ColorImage& rgb,
                              const std::function<Raster(const Raster&)>& op);

} // namespace pdelum

#endif
