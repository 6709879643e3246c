#ifndef PDELUM_FLOW_HPP
#define PDELUM_FLOW_HPP

#include <string>
#include <utility>
#include <vector>

#include "pdelum/raster.hpp"

namespace pdelum {

/// Free parameters of the enhancement flow
///   dI/dt = lambda*( hp_weight*(I - A*I) + S^(1-k)*(A*I)^k - I )
///           + beta*(I - mu)/max(sigma, sigma_floor)
/// where A* is the 3x3 box mean. hp_weight scales the sharpening (high-pass)
/// term; k < 1 brightens, k > 1 darkens faded input.
struct EnhanceParams {
    double lambda = 0.5;
    double beta = 0.05;
    double k = 0.5;
    double hp_weight = 1.0;
    double dt = 1.0;
    double sigma_floor = 1e-6;
    double scale = 1.0;
    /// Replace the averaging form with the classical 4-neighbor stencil;
    /// the power-term base is then clamped to [0,1] before exponentiation.
    bool four_neighbor_laplacian = false;
};

/// Throws std::invalid_argument when out of domain: lambda in (0,1],
/// beta >= 0, k > 0, hp_weight >= 0, dt > 0, lambda*dt <= 1,
/// sigma_floor > 0, scale > 0.
void validate(const EnhanceParams& p);

struct StopPolicy {
    enum class Mode { EntropyPeak, FixedIterations };
    Mode mode = Mode::EntropyPeak;
    /// EntropyPeak: iteration budget. FixedIterations: exact step count.
    int max_iters = 100;
    /// Consecutive iterations without a new entropy maximum before stopping
    /// (EntropyPeak only).
    int patience = 3;

    static StopPolicy entropy_peak(int max_iters = 100, int patience = 3);
    static StopPolicy fixed_iterations(int n);
};

void validate(const StopPolicy& s);

struct TraceEntry {
    int iter;
    double entropy;
    double mu;
    double sigma;
    double energy;
};

/// Per-iteration record of the evolution, entry 0 being the input plane.
/// mu/sigma are on the working [0,1] scale (the values the beta term uses).
struct EvolutionTrace {
    std::vector<TraceEntry> entries;
    /// Index of the returned iterate: the earliest entropy maximum under
    /// EntropyPeak, the final iteration under FixedIterations.
    int chosen_iteration = 0;

    /// Header "iter,entropy,mu,sigma,energy", one row per entry,
    /// 9 significant digits.
    std::string to_csv() const;
};

/// S^(1-k) * x^k, mapping [0,S] onto [0,S], monotone in x. Exactly x when
/// k == 1.
double power_lift(double x, double k, double S);

/// Right-hand side of the flow at one instant; mu/sigma must be the mean and
/// population std of I. The beta term is skipped entirely on exactly-uniform
/// images (sigma would be 0 and every deviation exactly 0). With k == 1 and
/// the averaging Laplacian the flow term factors to
/// lambda*(hp_weight - 1)*(I - A*I), which is the exact zero raster at the
/// default hp_weight = 1.
Raster pde_rhs(const Raster& I, const EnhanceParams& p, double mu, double sigma);

/// One explicit step: clamp(I + dt * pde_rhs(I, ...), 0, 1).
Raster pde_step(const Raster& I, const EnhanceParams& p);

/// Mean over pixels of the flow's right-hand side; diagnostic only, recorded
/// in the trace and never used for control.
double energy(const Raster& I, const EnhanceParams& p);

/// Iterates pde_step from I, recording (entropy, mu, sigma, energy) per
/// iterate including the input. EntropyPeak returns the earliest
/// maximum-entropy iterate, stopping once `patience` consecutive iterations
/// fail to beat the running maximum or the budget runs out. FixedIterations
/// runs exactly n steps and returns the final iterate.
std::pair<Raster, EvolutionTrace> evolve(const Raster& I, const EnhanceParams& p,
                                         const StopPolicy& s);

enum class ColorMode { HSI, RGBPerChannel };

/// HSI mode: evolve the intensity plane only, hue and saturation pass
/// through untouched. RGBPerChannel: evolve each channel under shared
/// parameters; the trace and the joint stop decision are computed on the
/// channel-mean intensity plane.
std::pair<ColorImage, EvolutionTrace> enhance_color(const ColorImage& rgb,
                                                    const EnhanceParams& p,
                                                    const StopPolicy& s, ColorMode mode);

} // namespace pdelum

#endif
