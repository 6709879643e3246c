#ifndef PDELUM_KERNELS_HPP
#define PDELUM_KERNELS_HPP

#include <array>

#include "pdelum/raster.hpp"

namespace pdelum {

/// 3x3 weights, row-major: w[(dy+1)*3 + (dx+1)].
struct Kernel3 {
    std::array<double, 9> w;
};

enum class BoundaryMode { Replicate };

Kernel3 identity_kernel();
Kernel3 box_mean_kernel();
Kernel3 four_neighbor_laplacian_kernel();

/// out(x,y) = sum w_ij * img(clamp(x+i), clamp(y+j)); plain 9-term sum per
/// pixel, taps in row-major order, no value clamping.
Raster convolve3(const Raster& img, const Kernel3& k, BoundaryMode mode);

/// 3x3 box mean of an image in [0,1]. Computed as
/// center + sum(sample - center)/9 so constant images are exact fixed
/// points, then clamped into [0,1]; equals convolve3 with box_mean_kernel
/// to ~1e-15.
Raster lowpass(const Raster& img);

/// Averaging Laplacian lowpass(img) - img; zero on constants, exactly.
Raster laplacian(const Raster& img);

/// img - lowpass(img), the unsharp detail component; exact negation of
/// laplacian, so highpass(img) + lowpass(img) recovers img.
Raster highpass(const Raster& img);

} // namespace pdelum

#endif
