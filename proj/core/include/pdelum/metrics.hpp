#ifndef PDELUM_METRICS_HPP
#define PDELUM_METRICS_HPP

#include <optional>
#include <string>
#include <string_view>

#include "pdelum/raster.hpp"

namespace pdelum {

/// Shannon entropy in bits of the 256-bin histogram, bin = floor(v*255 + 0.5).
/// 0 for constants, 8 for a perfectly uniform histogram.
double entropy_bits(const Raster& img);

struct MeanStd {
    double mu;
    double sigma;
};

/// Mean and population standard deviation of the image re-expressed on the
/// 8-bit [0,255] scale.
MeanStd mean_std(const Raster& img);

/// Mean forward-difference gradient magnitude on the [0,255] scale:
/// sqrt((dx^2 + dy^2)/2) averaged over the (W-1)x(H-1) interior grid.
/// Requires width, height >= 2.
double avg_gradient(const Raster& img);

/// Hasler-Suesstrunk colourfulness on 255-scaled channels:
/// rg = R-G, yb = (R+G)/2 - B; sqrt(var_rg + var_yb) + 0.3*sqrt(mu_rg^2 + mu_yb^2).
/// Exactly 0 on grayscale.
double colourfulness(const ColorImage& rgb);

/// Blockwise log contrast: mean over 8x8 blocks (ragged edge blocks included)
/// of 20*log10((max*255 + 1)/(min*255 + 1)). 0 on constants.
double emec(const Raster& img);

/// Mean wrap-aware hue-angle distance in degrees, in [0,180] per pixel.
/// Pixels achromatic in either image (S < 1e-6) contribute 0.
double hue_deviation(const ColorImage& a, const ColorImage& b);

/// No-reference blockiness/activity/zero-crossing quality score on the
/// 255 scale; ~10 on natural-statistics images. Requires width, height >= 16.
/// The three features are floored at 1e-3 before exponentiation so constants
/// return a finite sentinel value rather than diverging.
double pqm(const Raster& img);

/// One image's standalone metric values; entropy in bits, the rest on the
/// 8-bit scale. Requires width, height >= 2 (avg_gradient).
struct AbsoluteMetrics {
    double colourfulness;
    double mu;
    double sigma;
    double entropy;
    double avg_gradient;
    double emec;
};

AbsoluteMetrics absolute_metrics(const ColorImage& rgb);

/// Output/input ratios plus hue deviation and the output's perceptual score.
/// A ratio whose denominator is zero is "undefined" (nullopt), as is pqm on
/// images too small for it and rag on images narrower than 2 pixels.
struct RelativeMetrics {
    std::optional<double> cef;
    std::optional<double> pqm_score;
    std::optional<double> rm;
    std::optional<double> rsd;
    std::optional<double> re;
    std::optional<double> rag;
    double hdi = 0.0;
    std::optional<double> remec;

    static std::string csv_header();
    std::string csv_row(std::string_view algo) const;
};

/// Ratios are output metric over input metric; hdi compares the two hue
/// planes; pqm scores the output intensity plane.
RelativeMetrics relative_report(const ColorImage& input, const ColorImage& output);

} // namespace pdelum

#endif
