#include "cli_lib.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pdelum/baselines.hpp"
#include "pdelum/csv.hpp"
#include "pdelum/metrics.hpp"
#include "pdelum/ppm.hpp"
#include "pdelum/synth.hpp"

namespace pdelum::cli {

namespace {

double parse_double(std::string_view s) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end) {
        throw std::invalid_argument("malformed number '" + std::string(s) + "'");
    }
    return v;
}

long long parse_int(std::string_view s) {
    long long v = 0;
    const auto* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end) {
        throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

/// Runs fn(i) for i in [0, n) on `threads` workers; per-index errors land in
/// errors[i]. Output files are per-index, so completion order is irrelevant.
void parallel_for(std::size_t n, int threads, std::vector<std::string>& errors,
                  const std::function<void(std::size_t)>& fn) {
    errors.assign(n, std::string());
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(n)));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) {
            try {
                fn(i);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= n) {
                        return;
                    }
                    try {
                        fn(i);
                    } catch (const std::exception& e) {
                        errors[i] = e.what();
                    }
                }
            });
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }
    std::erase_if(errors, [](const std::string& e) { return e.empty(); });
}

int exit_code(const std::vector<std::string>& errors) {
    return errors.empty() ? 0 : 1;
}

} // namespace

BaselineSpec parse_baseline_spec(const std::string& token) {
    const std::vector<std::string> parts = split(token, ':');
    const std::string& name = parts[0];
    const auto want_args = [&](std::size_t n) {
        if (parts.size() != 1 && parts.size() != n + 1) {
            throw std::invalid_argument("baseline '" + token + "' takes 0 or " +
                                        std::to_string(n) + " parameters");
        }
        return parts.size() == n + 1;
    };

    if (name == "ghe") {
        if (parts.size() != 1) {
            throw std::invalid_argument("baseline 'ghe' takes no parameters");
        }
        return {token, [](const Raster& r) { return global_he(r); }};
    }
    if (name == "stretch") {
        double lo = 0.0;
        double hi = 100.0;
        if (want_args(2)) {
            lo = parse_double(parts[1]);
            hi = parse_double(parts[2]);
        }
        return {token, [lo, hi](const Raster& r) { return linear_stretch(r, lo, hi); }};
    }
    if (name == "goc") {
        double gain = 1.0;
        double offset = 0.0;
        if (want_args(2)) {
            gain = parse_double(parts[1]);
            offset = parse_double(parts[2]);
        }
        return {token, [gain, offset](const Raster& r) { return gain_offset(r, gain, offset); }};
    }
    if (name == "gamma") {
        double g = 0.5;
        if (want_args(1)) {
            g = parse_double(parts[1]);
        }
        return {token, [g](const Raster& r) { return gamma_correct(r, g); }};
    }
    if (name == "shf") {
        double gh = 2.0;
        double gl = 0.5;
        if (want_args(2)) {
            gh = parse_double(parts[1]);
            gl = parse_double(parts[2]);
        }
        return {token, [gh, gl](const Raster& r) { return spatial_homomorphic(r, gh, gl); }};
    }
    throw std::invalid_argument("unknown baseline '" + name +
                                "' (expected ghe, stretch, goc, gamma, or shf)");
}

std::vector<BaselineSpec> parse_baseline_list(const std::string& list) {
    std::vector<BaselineSpec> specs;
    if (list.empty()) {
        return specs;
    }
    for (const std::string& token : split(list, ',')) {
        specs.push_back(parse_baseline_spec(token));
    }
    return specs;
}

StopPolicy parse_stop_spec(const std::string& spec, int max_iters, int patience) {
    if (spec == "entropy") {
        return StopPolicy::entropy_peak(max_iters, patience);
    }
    if (spec.rfind("fixed:", 0) == 0) {
        const long long n = parse_int(std::string_view(spec).substr(6));
        if (n < 1) {
            throw std::invalid_argument("fixed iteration count must be >= 1");
        }
        return StopPolicy::fixed_iterations(static_cast<int>(n));
    }
    throw std::invalid_argument("stop policy must be 'entropy' or 'fixed:N', got '" + spec + "'");
}

ColorMode parse_mode(const std::string& mode) {
    if (mode == "hsi") {
        return ColorMode::HSI;
    }
    if (mode == "rgb") {
        return ColorMode::RGBPerChannel;
    }
    throw std::invalid_argument("mode must be 'hsi' or 'rgb', got '" + mode + "'");
}

int resolve_threads(int requested) {
    int threads = requested > 0 ? requested
                                : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PDELUM_THREADS")) {
        long long cap = 0;
        const auto res = std::from_chars(env, env + std::string_view(env).size(), cap);
        if (res.ec == std::errc{} && *res.ptr == '\0' && cap > 0) {
            threads = std::min<long long>(threads, cap);
        }
    }
    return std::max(1, threads);
}

int cmd_enhance(const RunConfig& config, std::vector<std::string>& errors) {
    try {
        validate(config.params);
        validate(config.stop);
        std::filesystem::create_directories(config.out_dir);
    } catch (const std::exception& e) {
        errors.assign(1, e.what());
        return 1;
    }

    parallel_for(config.inputs.size(), resolve_threads(config.threads), errors,
                 [&](std::size_t i) {
                     const std::filesystem::path& in_path = config.inputs[i];
                     const ColorImage img = load_ppm_file(in_path);
                     auto [out, trace] =
                         enhance_color(img, config.params, config.stop, config.mode);
                     const std::string stem = in_path.stem().string();
                     save_ppm_file(out, config.out_dir / (stem + ".enhanced.ppm"));
                     write_text_file(config.out_dir / (stem + ".trace.csv"), trace.to_csv());
                     const RelativeMetrics rel = relative_report(img, out);
                     write_text_file(config.out_dir / (stem + ".metrics.csv"),
                                     RelativeMetrics::csv_header() + "\n" + rel.csv_row("pa") +
                                         "\n");
                 });
    return exit_code(errors);
}

int cmd_compare(const RunConfig& config, std::vector<std::string>& errors) {
    std::vector<BaselineSpec> specs;
    try {
        validate(config.params);
        validate(config.stop);
        specs = parse_baseline_list(config.baselines);
        std::filesystem::create_directories(config.out_dir);
    } catch (const std::exception& e) {
        errors.assign(1, e.what());
        return 1;
    }

    parallel_for(config.inputs.size(), resolve_threads(config.threads), errors,
                 [&](std::size_t i) {
                     const std::filesystem::path& in_path = config.inputs[i];
                     const ColorImage img = load_ppm_file(in_path);
                     std::string csv = RelativeMetrics::csv_header() + "\n";
                     for (const BaselineSpec& spec : specs) {
                         const ColorImage out = apply_on_intensity(img, spec.fn);
                         csv += relative_report(img, out).csv_row(spec.label) + "\n";
                     }
                     auto [out, trace] =
                         enhance_color(img, config.params, config.stop, config.mode);
                     csv += relative_report(img, out).csv_row("pa") + "\n";
                     const std::string stem = in_path.stem().string();
                     write_text_file(config.out_dir / (stem + ".compare.csv"), csv);
                 });
    return exit_code(errors);
}

int cmd_bench(const RunConfig& config, std::vector<std::string>& errors) {
    std::vector<BaselineSpec> specs;
    try {
        validate(config.params);
        validate(config.stop);
        specs = parse_baseline_list(config.baselines);
        std::filesystem::create_directories(config.out_dir);
        if (config.repeats < 1) {
            throw std::invalid_argument("repeats must be >= 1");
        }
        for (int s : config.sizes) {
            if (s < 1) {
                throw std::invalid_argument("sizes must be >= 1");
            }
        }
    } catch (const std::exception& e) {
        errors.assign(1, e.what());
        return 1;
    }

    const auto median_ms = [&](const std::function<void()>& work) {
        std::vector<double> times;
        times.reserve(static_cast<std::size_t>(config.repeats));
        for (int r = 0; r < config.repeats; ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            work();
            const auto t1 = std::chrono::steady_clock::now();
            times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        }
        std::sort(times.begin(), times.end());
        const std::size_t n = times.size();
        return n % 2 == 1 ? times[n / 2] : 0.5 * (times[n / 2 - 1] + times[n / 2]);
    };

    std::string csv = "algo,pixels,median_ms\n";
    for (int size : config.sizes) {
        const ColorImage scene = dark_color_scene(size, size, config.seed);
        const Raster inten = intensity_plane(scene);
        const long long pixels = static_cast<long long>(size) * size;
        for (const BaselineSpec& spec : specs) {
            const double ms = median_ms([&] { spec.fn(inten); });
            csv += spec.label + "," + format_int(pixels) + "," + format_g9(ms) + "\n";
        }
        {
            const double ms = median_ms(
                [&] { enhance_color(scene, config.params, config.stop, config.mode); });
            csv += "pa," + format_int(pixels) + "," + format_g9(ms) + "\n";
        }
        {
            const double ms = median_ms([&] { pde_step(inten, config.params); });
            csv += "pa_step," + format_int(pixels) + "," + format_g9(ms) + "\n";
        }
    }
    try {
        write_text_file(config.out_dir / "bench.csv", csv);
    } catch (const std::exception& e) {
        errors.assign(1, e.what());
    }
    return exit_code(errors);
}

TraceData parse_trace_csv(const std::string& text) {
    const std::vector<std::string> lines = split(text, '\n');
    if (lines.empty() || lines[0] != "iter,entropy,mu,sigma,energy") {
        throw std::invalid_argument("line 1: expected header 'iter,entropy,mu,sigma,energy'");
    }
    TraceData data;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const std::string& line = lines[li];
        if (line.empty() && li + 1 == lines.size()) {
            break;
        }
        const std::string where = "line " + std::to_string(li + 1) + ": ";
        const std::vector<std::string> cells = split(line, ',');
        if (cells.size() != 5) {
            throw std::invalid_argument(where + "expected 5 fields, got " +
                                        std::to_string(cells.size()));
        }
        try {
            data.iters.push_back(static_cast<int>(parse_int(cells[0])));
            data.entropy.push_back(parse_double(cells[1]));
            parse_double(cells[2]);
            parse_double(cells[3]);
            parse_double(cells[4]);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(where + e.what());
        }
    }
    return data;
}

std::string render_trace_svg(const TraceData& trace) {
    constexpr double kWidth = 800.0;
    constexpr double kHeight = 500.0;
    constexpr double kLeft = 60.0;
    constexpr double kRight = 780.0;
    constexpr double kTop = 20.0;
    constexpr double kBottom = 460.0;

    const std::size_t n = trace.entropy.size();

    // series values: entropy, first difference, second difference
    std::vector<double> d1(n >= 1 ? n - 1 : 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        d1[i] = trace.entropy[i + 1] - trace.entropy[i];
    }
    std::vector<double> d2(d1.size() >= 1 ? d1.size() - 1 : 0);
    for (std::size_t i = 0; i + 1 < d1.size(); ++i) {
        d2[i] = d1[i + 1] - d1[i];
    }

    double xmin = 0.0;
    double xmax = 1.0;
    double ymin = 0.0;
    double ymax = 1.0;
    if (n > 0) {
        xmin = trace.iters.front();
        xmax = trace.iters.back();
        ymin = ymax = trace.entropy[0];
        const auto stretch = [&](const std::vector<double>& s) {
            for (double v : s) {
                ymin = std::min(ymin, v);
                ymax = std::max(ymax, v);
            }
        };
        stretch(trace.entropy);
        stretch(d1);
        stretch(d2);
    }
    if (xmax <= xmin) {
        xmax = xmin + 1.0;
    }
    if (ymax <= ymin) {
        ymin -= 1.0;
        ymax += 1.0;
    }

    const auto px = [&](double it) {
        return kLeft + (it - xmin) / (xmax - xmin) * (kRight - kLeft);
    };
    const auto py = [&](double v) {
        return kBottom - (v - ymin) / (ymax - ymin) * (kBottom - kTop);
    };
    const auto polyline = [&](const std::vector<double>& series, std::size_t iter_offset,
                              const char* color) {
        std::string pts;
        for (std::size_t i = 0; i < series.size(); ++i) {
            if (!pts.empty()) {
                pts += ' ';
            }
            pts += format_g9(px(trace.iters[i + iter_offset]));
            pts += ',';
            pts += format_g9(py(series[i]));
        }
        return "  <polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_g9(kWidth) +
           "\" height=\"" + format_g9(kHeight) + "\" viewBox=\"0 0 " + format_g9(kWidth) + " " +
           format_g9(kHeight) + "\">\n";
    svg += "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    svg += "  <line x1=\"" + format_g9(kLeft) + "\" y1=\"" + format_g9(kBottom) + "\" x2=\"" +
           format_g9(kRight) + "\" y2=\"" + format_g9(kBottom) +
           "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    svg += "  <line x1=\"" + format_g9(kLeft) + "\" y1=\"" + format_g9(kTop) + "\" x2=\"" +
           format_g9(kLeft) + "\" y2=\"" + format_g9(kBottom) +
           "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    svg += polyline(trace.entropy, 0, "#1f77b4");
    svg += polyline(d1, 1, "#2ca02c");
    svg += polyline(d2, 2, "#d62728");

    if (n > 0) {
        std::size_t argmax = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (trace.entropy[i] > trace.entropy[argmax]) {
                argmax = i;
            }
        }
        svg += "  <circle cx=\"" + format_g9(px(trace.iters[argmax])) + "\" cy=\"" +
               format_g9(py(trace.entropy[argmax])) +
               "\" r=\"4\" fill=\"none\" stroke=\"#ff7f0e\" stroke-width=\"2\"/>\n";
        svg += "  <text x=\"" + format_g9(px(trace.iters[argmax]) + 6.0) + "\" y=\"" +
               format_g9(py(trace.entropy[argmax]) - 6.0) +
               "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#ff7f0e\">peak iter " +
               format_int(trace.iters[argmax]) + "</text>\n";
    }

    svg += "  <text x=\"400\" y=\"490\" font-family=\"sans-serif\" font-size=\"13\" "
           "fill=\"#333333\" text-anchor=\"middle\">iteration</text>\n";
    svg += "  <text x=\"70\" y=\"34\" font-family=\"sans-serif\" font-size=\"12\" "
           "fill=\"#1f77b4\">entropy</text>\n";
    svg += "  <text x=\"70\" y=\"50\" font-family=\"sans-serif\" font-size=\"12\" "
           "fill=\"#2ca02c\">first difference</text>\n";
    svg += "  <text x=\"70\" y=\"66\" font-family=\"sans-serif\" font-size=\"12\" "
           "fill=\"#d62728\">second difference</text>\n";
    svg += "</svg>\n";
    return svg;
}

int cmd_trace_plot(const RunConfig& config, std::vector<std::string>& errors) {
    try {
        std::filesystem::create_directories(config.out_dir);
    } catch (const std::exception& e) {
        errors.assign(1, e.what());
        return 1;
    }

    parallel_for(config.inputs.size(), resolve_threads(config.threads), errors,
                 [&](std::size_t i) {
                     const std::filesystem::path& in_path = config.inputs[i];
                     const TraceData data = parse_trace_csv(read_text_file(in_path));
                     const std::string stem = in_path.stem().string();
                     write_text_file(config.out_dir / (stem + ".svg"), render_trace_svg(data));
                 });
    return exit_code(errors);
}

} // namespace pdelum::cli
