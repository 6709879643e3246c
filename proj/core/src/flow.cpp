#include "pdelum/flow.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "pdelum/csv.hpp"
#include "pdelum/kernels.hpp"
#include "pdelum/metrics.hpp"

namespace pdelum {

namespace {

double raster_mean(const Raster& r) {
    double acc = 0.0;
    for (double v : r.data()) {
        acc += v;
    }
    return acc / static_cast<double>(r.pixel_count());
}

bool is_uniform(const Raster& r) {
    const double first = r.data()[0];
    for (double v : r.data()) {
        if (v != first) {
            return false;
        }
    }
    return true;
}

Raster channel_mean(const std::array<Raster, 3>& ch) {
    Raster out(ch[0].width(), ch[0].height());
    const std::size_t n = out.pixel_count();
    for (std::size_t i = 0; i < n; ++i) {
        out.data()[i] = (ch[0].data()[i] + ch[1].data()[i] + ch[2].data()[i]) / 3.0;
    }
    return out;
}

} // namespace

void validate(const EnhanceParams& p) {
    if (!(p.lambda > 0.0 && p.lambda <= 1.0)) {
        throw std::invalid_argument("lambda must be in (0, 1]");
    }
    if (!(p.beta >= 0.0)) {
        throw std::invalid_argument("beta must be >= 0");
    }
    if (!(p.k > 0.0)) {
        throw std::invalid_argument("k must be > 0");
    }
    if (!(p.hp_weight >= 0.0)) {
        throw std::invalid_argument("hp-weight must be >= 0");
    }
    if (!(p.dt > 0.0)) {
        throw std::invalid_argument("dt must be > 0");
    }
    if (!(p.lambda * p.dt <= 1.0)) {
        throw std::invalid_argument("lambda*dt must be <= 1 (explicit-step stability)");
    }
    if (!(p.sigma_floor > 0.0)) {
        throw std::invalid_argument("sigma floor must be > 0");
    }
    if (!(p.scale > 0.0)) {
        throw std::invalid_argument("scale must be > 0");
    }
}

StopPolicy StopPolicy::entropy_peak(int max_iters, int patience) {
    return StopPolicy{Mode::EntropyPeak, max_iters, patience};
}

StopPolicy StopPolicy::fixed_iterations(int n) {
    return StopPolicy{Mode::FixedIterations, n, 1};
}

void validate(const StopPolicy& s) {
    if (s.max_iters < 1) {
        throw std::invalid_argument("iteration count must be >= 1");
    }
    if (s.patience < 1) {
        throw std::invalid_argument("patience must be >= 1");
    }
}

std::string EvolutionTrace::to_csv() const {
    std::string out = "iter,entropy,mu,sigma,energy\n";
    for (const TraceEntry& e : entries) {
        out += format_int(e.iter);
        out += ',';
        out += format_g9(e.entropy);
        out += ',';
        out += format_g9(e.mu);
        out += ',';
        out += format_g9(e.sigma);
        out += ',';
        out += format_g9(e.energy);
        out += '\n';
    }
    return out;
}

double power_lift(double x, double k, double S) {
    if (k == 1.0) {
        return x;
    }
    return std::pow(S, 1.0 - k) * std::pow(x, k);
}

Raster pde_rhs(const Raster& I, const EnhanceParams& p, double mu, double sigma) {
    const std::size_t n = I.pixel_count();
    Raster rhs(I.width(), I.height());

    if (p.four_neighbor_laplacian) {
        const Raster lap = convolve3(I, four_neighbor_laplacian_kernel(), BoundaryMode::Replicate);
        for (std::size_t i = 0; i < n; ++i) {
            const double base = std::clamp(I.data()[i] + lap.data()[i], 0.0, 1.0);
            rhs.data()[i] = p.lambda * (p.hp_weight * -lap.data()[i] +
                                        power_lift(base, p.k, p.scale) - I.data()[i]);
        }
    } else if (p.k == 1.0) {
        const Raster lp = lowpass(I);
        const double c = p.lambda * (p.hp_weight - 1.0);
        for (std::size_t i = 0; i < n; ++i) {
            rhs.data()[i] = c * (I.data()[i] - lp.data()[i]);
        }
    } else {
        const Raster lp = lowpass(I);
        for (std::size_t i = 0; i < n; ++i) {
            rhs.data()[i] = p.lambda * (p.hp_weight * (I.data()[i] - lp.data()[i]) +
                                        power_lift(lp.data()[i], p.k, p.scale) - I.data()[i]);
        }
    }

    if (p.beta != 0.0 && !is_uniform(I)) {
        const double denom = std::max(sigma, p.sigma_floor);
        for (std::size_t i = 0; i < n; ++i) {
            rhs.data()[i] += p.beta * (I.data()[i] - mu) / denom;
        }
    }
    return rhs;
}

Raster pde_step(const Raster& I, const EnhanceParams& p) {
    const PlaneStats st = plane_stats(I);
    const Raster rhs = pde_rhs(I, p, st.mean, st.stddev);
    const std::size_t n = I.pixel_count();
    Raster out(I.width(), I.height());
    for (std::size_t i = 0; i < n; ++i) {
        out.data()[i] = std::clamp(I.data()[i] + p.dt * rhs.data()[i], 0.0, 1.0);
    }
    return out;
}

double energy(const Raster& I, const EnhanceParams& p) {
    const PlaneStats st = plane_stats(I);
    return raster_mean(pde_rhs(I, p, st.mean, st.stddev));
}

std::pair<Raster, EvolutionTrace> evolve(const Raster& I, const EnhanceParams& p,
                                         const StopPolicy& s) {
    validate(p);
    validate(s);

    Raster cur = I;
    Raster best = cur;
    EvolutionTrace trace;
    double best_entropy = 0.0;
    int stale = 0;

    for (int t = 0;; ++t) {
        const PlaneStats st = plane_stats(cur);
        const double ent = entropy_bits(cur);
        const Raster rhs = pde_rhs(cur, p, st.mean, st.stddev);
        trace.entries.push_back(TraceEntry{t, ent, st.mean, st.stddev, raster_mean(rhs)});

        if (s.mode == StopPolicy::Mode::EntropyPeak) {
            if (t == 0 || ent > best_entropy) {
                best_entropy = ent;
                best = cur;
                trace.chosen_iteration = t;
                stale = 0;
            } else if (++stale >= s.patience) {
                break;
            }
            if (t == s.max_iters) {
                break;
            }
        } else {
            trace.chosen_iteration = t;
            if (t == s.max_iters) {
                best = std::move(cur);
                break;
            }
        }

        const std::size_t n = cur.pixel_count();
        for (std::size_t i = 0; i < n; ++i) {
            cur.data()[i] = std::clamp(cur.data()[i] + p.dt * rhs.data()[i], 0.0, 1.0);
        }
    }
    return {std::move(best), std::move(trace)};
}

std::pair<ColorImage, EvolutionTrace> enhance_color(const ColorImage& rgb,
                                                    const EnhanceParams& p,
                                                    const StopPolicy& s, ColorMode mode) {
    if (rgb.model != ColorModel::RGB) {
        throw std::invalid_argument("enhance_color requires an RGB image");
    }

    if (mode == ColorMode::HSI) {
        ColorImage hsi = rgb_to_hsi(rgb);
        auto [plane, trace] = evolve(hsi.planes[2], p, s);
        hsi.planes[2] = std::move(plane);
        return {hsi_to_rgb(hsi), std::move(trace)};
    }

    validate(p);
    validate(s);

    std::array<Raster, 3> cur = rgb.planes;
    std::array<Raster, 3> best = cur;
    EvolutionTrace trace;
    double best_entropy = 0.0;
    int stale = 0;

    for (int t = 0;; ++t) {
        const Raster mean_plane = channel_mean(cur);
        const PlaneStats st = plane_stats(mean_plane);
        const double ent = entropy_bits(mean_plane);
        const Raster mean_rhs = pde_rhs(mean_plane, p, st.mean, st.stddev);
        trace.entries.push_back(TraceEntry{t, ent, st.mean, st.stddev, raster_mean(mean_rhs)});

        if (s.mode == StopPolicy::Mode::EntropyPeak) {
            if (t == 0 || ent > best_entropy) {
                best_entropy = ent;
                best = cur;
                trace.chosen_iteration = t;
                stale = 0;
            } else if (++stale >= s.patience) {
                break;
            }
            if (t == s.max_iters) {
                break;
            }
        } else {
            trace.chosen_iteration = t;
            if (t == s.max_iters) {
                best = std::move(cur);
                break;
            }
        }

        for (Raster& channel : cur) {
            channel = pde_step(channel, p);
        }
    }
    return {ColorImage{ColorModel::RGB, std::move(best)}, std::move(trace)};
}

} // namespace pdelum
