// Acceptance gate: one line per criterion, nonzero exit if any fail.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli_lib.hpp"
#include "pdelum/baselines.hpp"
#include "pdelum/flow.hpp"
#include "pdelum/kernels.hpp"
#include "pdelum/metrics.hpp"
#include "pdelum/ppm.hpp"
#include "pdelum/synth.hpp"

using namespace pdelum;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int clampi(int v, int lo, int hi) { return std::min(std::max(v, lo), hi); }

Raster naive_convolve3(const Raster& img, const Kernel3& k) {
    Raster out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            double acc = 0.0;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    const int sx = clampi(x + dx, 0, img.width() - 1);
                    const int sy = clampi(y + dy, 0, img.height() - 1);
                    acc += k.w[static_cast<std::size_t>((dy + 1) * 3 + (dx + 1))] * img(sx, sy);
                }
            }
            out(x, y) = acc;
        }
    }
    return out;
}

double max_abs_diff(const Raster& a, const Raster& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

bool all_finite(const Raster& r) {
    return std::all_of(r.data().begin(), r.data().end(),
                       [](double v) { return std::isfinite(v); });
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

struct Gate {
    int failures = 0;

    void report(int index, const char* name, bool ok, const std::string& detail) {
        std::printf("[%s] %2d. %s: %s\n", ok ? "PASS" : "FAIL", index, name, detail.c_str());
        if (!ok) {
            ++failures;
        }
    }
};

// 1. cancelling-term evolution is a bit-exact fixed point, 50 images under 5 s
void criterion_fixed_point(Gate& gate) {
    const auto t0 = Clock::now();
    const double lambdas[] = {0.1, 0.5, 1.0};
    int exact = 0;
    for (int i = 0; i < 50; ++i) {
        const int w = 8 + (i * 7) % 33;
        const int h = 8 + (i * 5) % 25;
        const Raster img = random_raster(w, h, static_cast<std::uint64_t>(i + 1));
        EnhanceParams p;
        p.k = 1.0;
        p.beta = 0.0;
        p.lambda = lambdas[i % 3];
        auto [out, trace] = evolve(img, p, StopPolicy::fixed_iterations(10));
        if (out == img) {
            ++exact;
        }
    }
    const double dt = seconds_since(t0);
    std::ostringstream detail;
    detail << exact << "/50 images bit-exact after 10 iterations, " << dt << " s";
    gate.report(1, "fixed point at k=1, beta=0", exact == 50 && dt < 5.0, detail.str());
}

// 2. rhs cancellation: high-pass and lift terms annihilate at k=1, beta=0
void criterion_rhs_cancellation(Gate& gate) {
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Raster img = random_raster(15, 11, seed);
        EnhanceParams p;
        p.k = 1.0;
        p.beta = 0.0;
        const PlaneStats st = plane_stats(img);
        const Raster rhs = pde_rhs(img, p, st.mean, st.stddev);
        for (double v : rhs.data()) {
            worst = std::max(worst, std::abs(v));
        }
    }
    std::ostringstream detail;
    detail << "max |rhs| = " << worst << " (bound 1e-15)";
    gate.report(2, "rhs algebraic cancellation", worst <= 1e-15, detail.str());
}

// 3. smaller lambda needs at least as many iterations to reach peak entropy.
// beta = 0 here so the rate parameter is the only difference between runs:
// the flow becomes a pure time rescaling of one trajectory.
void criterion_lambda_speed(Gate& gate) {
    const auto t0 = Clock::now();
    const Raster ramp = gamma_darkened_ramp(256, 192, 1);
    std::vector<int> peaks;
    for (double lambda : {0.1, 0.5, 1.0}) {
        EnhanceParams p;
        p.lambda = lambda;
        p.beta = 0.0;
        auto [out, trace] = evolve(ramp, p, StopPolicy::entropy_peak(100, 10));
        peaks.push_back(trace.chosen_iteration);
    }
    const double dt = seconds_since(t0);
    const bool ordered = peaks[0] >= peaks[1] && peaks[1] >= peaks[2];
    std::ostringstream detail;
    detail << "iterations to peak = {" << peaks[0] << ", " << peaks[1] << ", " << peaks[2]
           << "} for lambda {0.1, 0.5, 1.0}, " << dt << " s";
    gate.report(3, "lambda vs iterations-to-peak", ordered && dt < 30.0, detail.str());
}

// 4. default enhancement brightens dark scenes without touching hue
void criterion_enhancement(Gate& gate) {
    double min_re = 1e300;
    double min_rm = 1e300;
    double max_hdi = 0.0;
    bool defined = true;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const ColorImage scene = dark_color_scene(128, 96, seed);
        auto [out, trace] = enhance_color(scene, EnhanceParams{},
                                          StopPolicy::entropy_peak(100, 3), ColorMode::HSI);
        const RelativeMetrics rel = relative_report(scene, out);
        if (!rel.re.has_value() || !rel.rm.has_value()) {
            defined = false;
            continue;
        }
        min_re = std::min(min_re, *rel.re);
        min_rm = std::min(min_rm, *rel.rm);
        max_hdi = std::max(max_hdi, rel.hdi);
    }
    // hue comes back through an RGB round trip, so "zero" is the acos noise
    // floor, bounded at 1e-9 degrees
    const bool ok = defined && min_re > 1.0 && min_rm > 1.0 && max_hdi <= 1e-9;
    std::ostringstream detail;
    detail << "min RE = " << min_re << ", min RM = " << min_rm << ", max HDI = " << max_hdi;
    gate.report(4, "dark-scene enhancement with hue preservation", ok, detail.str());
}

// 5. uniform 256-bin histogram: entropy 8, equalization near-identity
void criterion_entropy_ceiling(Gate& gate) {
    Raster img(256, 32);
    for (int y = 0; y < 32; ++y) {
        for (int x = 0; x < 256; ++x) {
            img(x, y) = x / 255.0;
        }
    }
    const double ent = entropy_bits(img);
    const double id_err = max_abs_diff(global_he(img), img);
    const bool ok = std::abs(ent - 8.0) <= 1e-9 && id_err <= 1.0 / 255.0;
    std::ostringstream detail;
    detail << "entropy = " << ent << ", equalization max error = " << id_err
           << " (bound 1/255)";
    gate.report(5, "entropy ceiling and flat-histogram equalization", ok, detail.str());
}

// 6. convolution against an independent oracle; exact low/high split
void criterion_kernel_oracle(Gate& gate) {
    double conv_worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Raster img = random_raster(8, 8, static_cast<std::uint64_t>(i + 1));
        for (const Kernel3& k :
             {identity_kernel(), box_mean_kernel(), four_neighbor_laplacian_kernel()}) {
            conv_worst = std::max(
                conv_worst,
                max_abs_diff(convolve3(img, k, BoundaryMode::Replicate), naive_convolve3(img, k)));
        }
    }

    bool split_exact = true;
    double recon_worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Raster img = random_raster(19, 13, seed);
        const Raster lp = lowpass(img);
        const Raster hp = highpass(img);
        for (std::size_t i = 0; i < img.data().size(); ++i) {
            if (hp.data()[i] != img.data()[i] - lp.data()[i]) {
                split_exact = false;
            }
            recon_worst =
                std::max(recon_worst, std::abs(lp.data()[i] + hp.data()[i] - img.data()[i]));
        }
    }
    const bool ok = conv_worst <= 1e-15 && split_exact && recon_worst <= 0x1.0p-53;
    std::ostringstream detail;
    detail << "conv err = " << conv_worst << ", split exact = " << (split_exact ? "yes" : "no")
           << ", reconstruction err = " << recon_worst << " (bound 2^-53)";
    gate.report(6, "kernel oracle and exact decomposition", ok, detail.str());
}

// 7. metric anchor values
void criterion_metric_anchors(Gate& gate) {
    const auto const_rgb = [](double r, double g, double b) {
        return make_rgb(Raster(16, 16, r), Raster(16, 16, g), Raster(16, 16, b));
    };
    const double cf_gray = colourfulness(const_rgb(0.5, 0.5, 0.5));
    const double cf_red = colourfulness(const_rgb(1.0, 0.0, 0.0));

    const double step = 0.004;
    Raster ramp(32, 8);
    for (int y = 0; y < 8; ++y) {
        for (int x = 0; x < 32; ++x) {
            ramp(x, y) = step * x;
        }
    }
    const double ag = avg_gradient(ramp);
    const double ag_want = step * 255.0 / std::sqrt(2.0);

    const double emec_const = emec(Raster(16, 16, 0.4));

    const ColorImage scene = dark_color_scene(64, 48, 1);
    const RelativeMetrics rel = relative_report(scene, scene);
    double ratio_err = std::abs(rel.hdi);
    bool ratios_defined = true;
    for (const auto& r : {rel.cef, rel.rm, rel.rsd, rel.re, rel.rag, rel.remec}) {
        if (!r.has_value()) {
            ratios_defined = false;
        } else {
            ratio_err = std::max(ratio_err, std::abs(*r - 1.0));
        }
    }

    const bool ok = cf_gray == 0.0 && std::abs(cf_red - 85.53) <= 0.01 &&
                    std::abs(ag - ag_want) <= 1e-9 && emec_const == 0.0 && ratios_defined &&
                    ratio_err <= 1e-9;
    std::ostringstream detail;
    detail << "colourfulness gray/red = " << cf_gray << "/" << cf_red
           << ", ramp gradient err = " << std::abs(ag - ag_want)
           << ", identity ratio err = " << ratio_err;
    gate.report(7, "metric anchor values", ok, detail.str());
}

// 8. HSI round trip on chromatic pixels
void criterion_hsi_round_trip(Gate& gate) {
    SeededUniform rng(42);
    double worst = 0.0;
    int tested = 0;
    while (tested < 1000) {
        const double r = rng.next();
        const double g = rng.next();
        const double b = rng.next();
        if (std::max({r, g, b}) - std::min({r, g, b}) < 0.05) {
            continue;
        }
        ++tested;
        const ColorImage img =
            make_rgb(Raster(1, 1, r), Raster(1, 1, g), Raster(1, 1, b));
        const ColorImage back = hsi_to_rgb(rgb_to_hsi(img));
        for (int c = 0; c < 3; ++c) {
            worst = std::max(worst, std::abs(back.planes[static_cast<std::size_t>(c)](0, 0) -
                                             img.planes[static_cast<std::size_t>(c)](0, 0)));
        }
    }
    std::ostringstream detail;
    detail << "max channel error = " << worst << " over 1000 chromatic pixels (bound 1e-6)";
    gate.report(8, "hsi round trip", worst <= 1e-6, detail.str());
}

// 9. boundedness fuzz across the parameter domain
void criterion_boundedness(Gate& gate) {
    SeededUniform rng(7);
    int clean = 0;
    for (int combo = 0; combo < 200; ++combo) {
        EnhanceParams p;
        p.lambda = 0.1 + 0.9 * rng.next();
        p.beta = 0.2 * rng.next();
        p.k = 0.1 + 1.9 * rng.next();
        p.hp_weight = 2.0 * rng.next();
        p.dt = (0.05 + 0.95 * rng.next()) / p.lambda;
        validate(p);

        const int w = 8 + static_cast<int>(rng.next() * 17.0);
        const int h = 8 + static_cast<int>(rng.next() * 13.0);
        Raster img = random_raster(w, h, static_cast<std::uint64_t>(combo + 101));

        bool ok = true;
        for (int t = 0; t < 8; ++t) {
            img = pde_step(img, p);
            ok = ok && img.in_range(0.0, 1.0) && all_finite(img);
        }

        auto [out, trace] =
            evolve(img, p, StopPolicy::entropy_peak(15, 3));
        ok = ok && out.in_range(0.0, 1.0) && all_finite(out);
        for (const TraceEntry& e : trace.entries) {
            ok = ok && std::isfinite(e.entropy) && std::isfinite(e.mu) &&
                 std::isfinite(e.sigma) && std::isfinite(e.energy);
        }
        if (ok) {
            ++clean;
        }
    }
    std::ostringstream detail;
    detail << clean << "/200 parameter/image combinations bounded and finite";
    gate.report(9, "boundedness fuzz", clean == 200, detail.str());
}

// 10. near-linear per-step cost; full comparison run under 10 s at 512^2
void criterion_complexity(Gate& gate) {
    EnhanceParams p;
    std::vector<double> medians;
    for (int size : {128, 256, 512, 1024}) {
        const Raster img = low_light_texture(size, size, 1);
        pde_step(img, p);
        std::vector<double> times;
        for (int r = 0; r < 7; ++r) {
            const auto t0 = Clock::now();
            pde_step(img, p);
            times.push_back(seconds_since(t0));
        }
        std::sort(times.begin(), times.end());
        medians.push_back(times[3]);
    }
    // pixels quadruple per rung: two doublings at <= 2.5x each
    bool scaling_ok = true;
    double worst_ratio = 0.0;
    for (std::size_t i = 0; i + 1 < medians.size(); ++i) {
        const double ratio = medians[i + 1] / medians[i];
        worst_ratio = std::max(worst_ratio, ratio);
        scaling_ok = scaling_ok && ratio <= 6.25;
    }

    const auto dir = std::filesystem::temp_directory_path() / "pdelum_acceptance_c10";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    save_ppm_file(dark_color_scene(512, 512, 1), dir / "scene.ppm");
    cli::RunConfig cfg;
    cfg.inputs = {dir / "scene.ppm"};
    cfg.out_dir = dir;
    cfg.stop = StopPolicy::entropy_peak(100, 3);
    cfg.baselines = "ghe,stretch,goc,gamma,shf";
    const auto t0 = Clock::now();
    std::vector<std::string> errors;
    const int code = cli::cmd_compare(cfg, errors);
    const double compare_s = seconds_since(t0);
    std::filesystem::remove_all(dir);

    const bool ok = scaling_ok && code == 0 && compare_s < 10.0;
    std::ostringstream detail;
    detail << "worst per-rung step-time ratio = " << worst_ratio
           << " (bound 6.25 for 4x pixels), 512^2 compare = " << compare_s << " s";
    gate.report(10, "complexity and runtime budget", ok, detail.str());
}

// 11. byte determinism across runs and thread counts
void criterion_determinism(Gate& gate) {
    const auto dir = std::filesystem::temp_directory_path() / "pdelum_acceptance_c11";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);

    std::vector<std::filesystem::path> inputs;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const auto path = dir / ("scene" + std::to_string(seed) + ".ppm");
        save_ppm_file(dark_color_scene(64, 48, seed), path);
        inputs.push_back(path);
    }

    const auto run = [&](const std::string& tag, int threads) {
        cli::RunConfig cfg;
        cfg.inputs = inputs;
        cfg.out_dir = dir / tag;
        cfg.stop = StopPolicy::entropy_peak(60, 3);
        cfg.baselines = "ghe,gamma";
        cfg.threads = threads;
        std::vector<std::string> errors;
        const int enhance_code = cli::cmd_enhance(cfg, errors);
        const int compare_code = cli::cmd_compare(cfg, errors);
        std::string all;
        if (enhance_code != 0 || compare_code != 0) {
            return all;
        }
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const std::string stem = "scene" + std::to_string(seed);
            all += slurp(cfg.out_dir / (stem + ".enhanced.ppm"));
            all += slurp(cfg.out_dir / (stem + ".trace.csv"));
            all += slurp(cfg.out_dir / (stem + ".metrics.csv"));
            all += slurp(cfg.out_dir / (stem + ".compare.csv"));
        }
        return all;
    };

    const std::string a = run("a", 1);
    const std::string b = run("b", 1);
    const std::string c = run("c", 4);
    std::filesystem::remove_all(dir);

    const bool ok = !a.empty() && a == b && a == c;
    std::ostringstream detail;
    detail << (ok ? "identical bytes across two runs and thread counts 1 and 4"
                  : "outputs diverged");
    gate.report(11, "byte determinism", ok, detail.str());
}

} // namespace

int main() {
    Gate gate;
    criterion_fixed_point(gate);
    criterion_rhs_cancellation(gate);
    criterion_lambda_speed(gate);
    criterion_enhancement(gate);
    criterion_entropy_ceiling(gate);
    criterion_kernel_oracle(gate);
    criterion_metric_anchors(gate);
    criterion_hsi_round_trip(gate);
    criterion_boundedness(gate);
    criterion_complexity(gate);
    criterion_determinism(gate);

    if (gate.failures != 0) {
        std::printf("%d criterion(s) failed\n", gate.failures);
        return 1;
    }
    std::printf("all 11 criteria passed\n");
    return 0;
}
