#include <benchmark/benchmark.h>

#include "pdelum/baselines.hpp"
#include "pdelum/flow.hpp"
#include "pdelum/kernels.hpp"
#include "pdelum/metrics.hpp"
#include "pdelum/synth.hpp"

using namespace pdelum;

namespace {

const Raster& texture(int size) {
    static const Raster t128 = low_light_texture(128, 128, 1);
    static const Raster t256 = low_light_texture(256, 256, 1);
    static const Raster t512 = low_light_texture(512, 512, 1);
    static const Raster t1024 = low_light_texture(1024, 1024, 1);
    switch (size) {
    case 128: return t128;
    case 256: return t256;
    case 512: return t512;
    default: return t1024;
    }
}

void BM_convolve3_box(benchmark::State& state) {
    const Raster& img = texture(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(convolve3(img, box_mean_kernel(), BoundaryMode::Replicate));
    }
    state.SetComplexityN(state.range(0) * state.range(0));
}
BENCHMARK(BM_convolve3_box)->RangeMultiplier(2)->Range(128, 1024)->Complexity(benchmark::oN);

void BM_lowpass(benchmark::State& state) {
    const Raster& img = texture(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lowpass(img));
    }
    state.SetComplexityN(state.range(0) * state.range(0));
}
BENCHMARK(BM_lowpass)->RangeMultiplier(2)->Range(128, 1024)->Complexity(benchmark::oN);

void BM_pde_step(benchmark::State& state) {
    const Raster& img = texture(static_cast<int>(state.range(0)));
    const EnhanceParams p;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pde_step(img, p));
    }
    state.SetComplexityN(state.range(0) * state.range(0));
}
BENCHMARK(BM_pde_step)->RangeMultiplier(2)->Range(128, 1024)->Complexity(benchmark::oN);

void BM_evolve_entropy_stop(benchmark::State& state) {
    const Raster& img = texture(static_cast<int>(state.range(0)));
    const EnhanceParams p;
    const StopPolicy stop = StopPolicy::entropy_peak(100, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve(img, p, stop));
    }
}
BENCHMARK(BM_evolve_entropy_stop)->Arg(128)->Arg(256);

void BM_enhance_color_hsi(benchmark::State& state) {
    const ColorImage scene =
        dark_color_scene(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 1);
    const EnhanceParams p;
    const StopPolicy stop = StopPolicy::entropy_peak(100, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enhance_color(scene, p, stop, ColorMode::HSI));
    }
}
BENCHMARK(BM_enhance_color_hsi)->Arg(128)->Arg(256);

void BM_global_he(benchmark::State& state) {
    const Raster& img = texture(256);
    for (auto _ : state) {
        benchmark::DoNotOptimize(global_he(img));
    }
}
BENCHMARK(BM_global_he);

void BM_linear_stretch(benchmark::State& state) {
    const Raster& img = texture(256);
    for (auto _ : state) {
        benchmark::DoNotOptimize(linear_stretch(img, 5.0, 95.0));
    }
}
BENCHMARK(BM_linear_stretch);

void BM_gamma_correct(benchmark::State& state) {
    const Raster& img = texture(256);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gamma_correct(img, 0.5));
    }
}
BENCHMARK(BM_gamma_correct);

void BM_spatial_homomorphic(benchmark::State& state) {
    const Raster& img = texture(256);
    for (auto _ : state) {
        benchmark::DoNotOptimize(spatial_homomorphic(img, 2.0, 0.5));
    }
}
BENCHMARK(BM_spatial_homomorphic);

void BM_entropy_bits(benchmark::State& state) {
    const Raster& img = texture(256);
    for (auto _ : state) {
        benchmark::DoNotOptimize(entropy_bits(img));
    }
}
BENCHMARK(BM_entropy_bits);

void BM_pqm(benchmark::State& state) {
    const Raster& img = texture(256);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pqm(img));
    }
}
BENCHMARK(BM_pqm);

void BM_rgb_to_hsi(benchmark::State& state) {
    const ColorImage scene = dark_color_scene(256, 256, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rgb_to_hsi(scene));
    }
}
BENCHMARK(BM_rgb_to_hsi);

} // namespace

BENCHMARK_MAIN();
