#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_lib.hpp"

namespace {

struct FlagState {
    pdelum::cli::RunConfig cfg;
    std::vector<std::string> inputs;
    std::string out = ".";
    std::string mode = "hsi";
    std::string stop = "entropy";
    int max_iters = 100;
    int patience = 3;
    std::string baselines = "ghe,stretch,goc,gamma,shf";
};

void add_flow_flags(CLI::App& cmd, FlagState& st) {
    cmd.add_option("--lambda", st.cfg.params.lambda, "flow rate in (0,1]")
        ->capture_default_str();
    cmd.add_option("--beta", st.cfg.params.beta, "contrast term weight, >= 0")
        ->capture_default_str();
    cmd.add_option("--k", st.cfg.params.k, "lift exponent, > 0")->capture_default_str();
    cmd.add_option("--hp-weight", st.cfg.params.hp_weight, "high-pass term weight, >= 0")
        ->capture_default_str();
    cmd.add_option("--dt", st.cfg.params.dt, "step size, 0 < lambda*dt <= 1")
        ->capture_default_str();
    cmd.add_option("--max-iters", st.max_iters, "iteration cap")->capture_default_str();
    cmd.add_option("--patience", st.patience,
                   "iterations past the entropy peak before stopping")
        ->capture_default_str();
    cmd.add_option("--stop", st.stop, "stopping rule: entropy or fixed:N")
        ->capture_default_str();
    cmd.add_option("--mode", st.mode, "color handling: hsi or rgb")->capture_default_str();
}

void add_out_flag(CLI::App& cmd, FlagState& st) {
    cmd.add_option("--out", st.out, "output directory")->capture_default_str();
}

int finish_config(FlagState& st) {
    st.cfg.inputs.assign(st.inputs.begin(), st.inputs.end());
    st.cfg.out_dir = st.out;
    if (st.baselines == "none") {
        st.baselines.clear();
    }
    st.cfg.baselines = st.baselines;
    try {
        st.cfg.stop = pdelum::cli::parse_stop_spec(st.stop, st.max_iters, st.patience);
        st.cfg.mode = pdelum::cli::parse_mode(st.mode);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

int report(int code, const std::vector<std::string>& errors) {
    for (const std::string& e : errors) {
        std::cerr << "error: " << e << "\n";
    }
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"PDE-based illumination correction: batch enhancement, metric tables, "
                 "entropy traces, runtime benchmarks"};
    app.require_subcommand(1);

    FlagState st;

    CLI::App* enhance = app.add_subcommand("enhance", "enhance images, write per-image "
                                                      "PPM, trace CSV, and metrics CSV");
    enhance->add_option("inputs", st.inputs, "input PPM files")->required();
    add_flow_flags(*enhance, st);
    add_out_flag(*enhance, st);

    CLI::App* compare = app.add_subcommand(
        "compare", "write a per-image CSV of relative metrics for baselines plus pa");
    compare->add_option("inputs", st.inputs, "input PPM files")->required();
    add_flow_flags(*compare, st);
    add_out_flag(*compare, st);
    compare->add_option("--baselines", st.baselines,
                        "comma list: ghe, stretch[:lo:hi], goc[:gain:offset], "
                        "gamma[:g], shf[:gh:gl]; 'none' for pa only")
        ->capture_default_str();

    CLI::App* bench = app.add_subcommand(
        "bench", "time baselines and pa on seeded synthetic scenes, write bench.csv");
    add_flow_flags(*bench, st);
    add_out_flag(*bench, st);
    bench->add_option("--baselines", st.baselines, "comma list of baselines to time")
        ->capture_default_str();
    bench->add_option("--seed", st.cfg.seed, "synthetic scene seed")->capture_default_str();
    bench->add_option("--sizes", st.cfg.sizes, "square image edge lengths")
        ->delimiter(',')
        ->capture_default_str();
    bench->add_option("--repeats", st.cfg.repeats, "timing repeats per algorithm (median)")
        ->capture_default_str();

    CLI::App* trace_plot = app.add_subcommand(
        "trace-plot", "render a trace CSV as an SVG of entropy and its differences");
    trace_plot->add_option("inputs", st.inputs, "trace CSV files")->required();
    add_out_flag(*trace_plot, st);

    CLI11_PARSE(app, argc, argv);

    if (const int code = finish_config(st); code != 0) {
        return code;
    }

    std::vector<std::string> errors;
    if (enhance->parsed()) {
        return report(pdelum::cli::cmd_enhance(st.cfg, errors), errors);
    }
    if (compare->parsed()) {
        return report(pdelum::cli::cmd_compare(st.cfg, errors), errors);
    }
    if (bench->parsed()) {
        return report(pdelum::cli::cmd_bench(st.cfg, errors), errors);
    }
    return report(pdelum::cli::cmd_trace_plot(st.cfg, errors), errors);
}
