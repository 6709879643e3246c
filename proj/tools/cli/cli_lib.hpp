#ifndef PDELUM_CLI_LIB_HPP
#define PDELUM_CLI_LIB_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "pdelum/flow.hpp"
#include "pdelum/raster.hpp"

namespace pdelum::cli {

/// One comparison-row algorithm: the label that appears in the CSV algo
/// column plus the raster transform it runs on the intensity plane.
struct BaselineSpec {
    std::string label;
    std::function<Raster(const Raster&)> fn;
};

/// Parses one baseline token:
///   ghe | stretch[:lo:hi] | goc[:gain:offset] | gamma[:g] | shf[:gh:gl]
/// Defaults: stretch 0:100, goc 1:0, gamma 0.5, shf 2:0.5.
/// Throws std::invalid_argument on unknown names or malformed numbers.
BaselineSpec parse_baseline_spec(const std::string& token);

/// Splits a comma-separated baseline list; empty string means none.
std::vector<BaselineSpec> parse_baseline_list(const std::string& list);

struct RunConfig {
    std::vector<std::filesystem::path> inputs;
    std::filesystem::path out_dir = ".";
    EnhanceParams params;
    StopPolicy stop;
    ColorMode mode = ColorMode::HSI;
    std::string baselines;
    std::uint64_t seed = 1;
    std::vector<int> sizes = {128, 256, 512};
    int repeats = 3;
    /// 0 = hardware concurrency; the PDELUM_THREADS env var caps the result
    /// either way.
    int threads = 0;
};

/// "entropy" or "fixed:N" -> StopPolicy (max_iters/patience taken from the
/// given defaults for entropy mode). Throws std::invalid_argument otherwise.
StopPolicy parse_stop_spec(const std::string& spec, int max_iters, int patience);

/// "hsi" or "rgb".
ColorMode parse_mode(const std::string& mode);

/// Worker-count resolution: explicit requested value, else hardware
/// concurrency, capped by PDELUM_THREADS when that is set to a positive
/// integer.
int resolve_threads(int requested);

/// Enhances every input image: writes <stem>.enhanced.ppm, <stem>.trace.csv
/// and <stem>.metrics.csv into out_dir. Returns the process exit code:
/// 0 iff every file succeeded; per-file failures go to errors.
int cmd_enhance(const RunConfig& config, std::vector<std::string>& errors);

/// Writes one <stem>.compare.csv per input: one RelativeMetrics row per
/// requested baseline (input order) plus the "pa" row.
int cmd_compare(const RunConfig& config, std::vector<std::string>& errors);

/// Benchmarks the requested baselines plus "pa" (full evolution) and
/// "pa_step" (one explicit step) on seeded synthetic scenes of each
/// configured size; writes bench.csv ("algo,pixels,median_ms") into out_dir.
int cmd_bench(const RunConfig& config, std::vector<std::string>& errors);

/// Renders a trace CSV to <stem>.svg in out_dir: entropy, its first and its
/// second discrete difference vs iteration, with the entropy argmax marked.
int cmd_trace_plot(const RunConfig& config, std::vector<std::string>& errors);

/// Parsed trace row data for plotting.
struct TraceData {
    std::vector<int> iters;
    std::vector<double> entropy;
};

/// Parses the "iter,entropy,mu,sigma,energy" CSV; throws
/// std::invalid_argument naming the 1-based line number on malformed input.
TraceData parse_trace_csv(const std::string& text);

/// Deterministic SVG with the three polylines and the argmax marker.
std::string render_trace_svg(const TraceData& trace);

} // namespace pdelum::cli

#endif
