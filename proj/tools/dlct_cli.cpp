#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dlct/experiments.hpp"
#include "dlct/io.hpp"

namespace fs = std::filesystem;

namespace {

struct ParamFlags {
    std::string transform;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> gamma;

    void attach(CLI::App* cmd) {
        cmd->add_option("--transform", transform, "named transform T1..T4");
        cmd->add_option("--alpha", alpha, "LCT parameter alpha");
        cmd->add_option("--beta", beta, "LCT parameter beta");
        cmd->add_option("--gamma", gamma, "LCT parameter gamma");
    }

    bool any() const { return !transform.empty() || alpha || beta || gamma; }

    dlct::LctParams resolve() const {
        if (!transform.empty()) {
            if (alpha || beta || gamma) {
                throw CLI::ValidationError("give either --transform or --alpha/--beta/--gamma");
            }
            return dlct::transform_by_name(transform);
        }
        if (!(alpha && beta && gamma)) {
            throw CLI::ValidationError("need --transform or all of --alpha, --beta, --gamma");
        }
        return {*alpha, *beta, *gamma};
    }
};

struct QuadratureFlags {
    int oversampling = 16;
    double padding = 3.0;
    std::string rule = "simpson";

    void attach(CLI::App* cmd) {
        cmd->add_option("--oversampling", oversampling, "integration substeps per grid step");
        cmd->add_option("--padding", padding, "integration half-extent in units of sqrt(N)/2");
        cmd->add_option("--rule", rule, "quadrature rule: simpson|trapezoid");
    }

    dlct::QuadratureConfig resolve() const {
        return {oversampling, padding, dlct::rule_from_name(rule)};
    }
};

void write_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw std::runtime_error("cannot open " + out_path);
    }
    out << text;
}

std::vector<dlct::SignalId> resolve_signals(const std::vector<std::string>& names) {
    std::vector<dlct::SignalId> ids;
    for (const std::string& name : names) {
        ids.push_back(dlct::signal_id_from_name(name));
    }
    return ids;
}

std::vector<int> resolve_transforms(const std::vector<std::string>& names) {
    std::vector<int> indices;
    for (const std::string& name : names) {
        dlct::transform_by_name(name);  // validates
        indices.push_back(name[1] - '0');
    }
    return indices;
}

std::vector<dlct::Scheme> resolve_schemes(const std::vector<std::string>& names) {
    std::vector<dlct::Scheme> schemes;
    for (const std::string& name : names) {
        schemes.push_back(dlct::scheme_from_name(name));
    }
    return schemes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete linear canonical transform toolkit"};
    app.require_subcommand(1);

    // table1
    auto* table1 = app.add_subcommand("table1", "DLCT vs quadrature reference MSE table");
    std::vector<std::string> t1_signals = {"F1", "F2", "F3", "F4"};
    std::vector<std::string> t1_transforms = {"T1", "T2", "T3", "T4"};
    std::vector<int> t1_sizes = {256, 1024};
    std::vector<std::string> t1_schemes = {"ordinary"};
    std::string t1_out;
    QuadratureFlags t1_quad;
    table1->add_option("--signal", t1_signals, "signals F1..F4");
    table1->add_option("--transform", t1_transforms, "transforms T1..T4");
    table1->add_option("--n", t1_sizes, "sample counts");
    table1->add_option("--scheme", t1_schemes, "indexing schemes");
    table1->add_option("--out", t1_out, "output CSV path (default stdout)");
    t1_quad.attach(table1);

    // table2
    auto* table2 = app.add_subcommand("table2", "concatenation and inverse MSE table");
    std::vector<std::string> t2_signals = {"F1", "F2", "F3", "F4"};
    std::vector<int> t2_sizes = {256, 1024};
    std::string t2_out;
    table2->add_option("--signal", t2_signals, "signals F1..F4");
    table2->add_option("--n", t2_sizes, "sample counts");
    table2->add_option("--out", t2_out, "output CSV path (default stdout)");

    // build
    auto* build = app.add_subcommand("build", "construct a DLCT matrix and write it to a file");
    ParamFlags build_params;
    int build_n = 256;
    std::string build_scheme = "ordinary";
    std::string build_out;
    std::string build_csv;
    build_params.attach(build);
    build->add_option("--n", build_n, "sample count");
    build->add_option("--scheme", build_scheme, "indexing scheme");
    build->add_option("--out", build_out, "output matrix file")->required();
    build->add_option("--csv", build_csv, "also export the matrix as CSV");

    // apply
    auto* apply_cmd = app.add_subcommand("apply", "apply a matrix file or parameters to a signal CSV");
    ParamFlags apply_params;
    std::string apply_matrix;
    std::string apply_in;
    std::string apply_out;
    apply_params.attach(apply_cmd);
    apply_cmd->add_option("--matrix", apply_matrix, "matrix file produced by build");
    apply_cmd->add_option("--in", apply_in, "input signal CSV")->required();
    apply_cmd->add_option("--out", apply_out, "output signal CSV")->required();

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force continuous LCT of a test signal");
    ParamFlags oracle_params;
    std::string oracle_signal = "F1";
    int oracle_n = 256;
    std::string oracle_scheme = "ordinary";
    std::string oracle_out;
    std::string oracle_cache;
    QuadratureFlags oracle_quad;
    oracle_params.attach(oracle_cmd);
    oracle_cmd->add_option("--signal", oracle_signal, "signal F1..F4");
    oracle_cmd->add_option("--n", oracle_n, "sample count");
    oracle_cmd->add_option("--scheme", oracle_scheme, "indexing scheme");
    oracle_cmd->add_option("--out", oracle_out, "output signal CSV")->required();
    oracle_cmd->add_option("--cache-dir", oracle_cache, "directory for cached oracle results");
    oracle_quad.attach(oracle_cmd);

    // figure-data
    auto* figure = app.add_subcommand("figure-data",
                                      "per-sample DLCT vs reference CSVs for F1/T1..F4/T4");
    int figure_n = 256;
    std::string figure_scheme = "ordinary";
    std::string figure_prefix = "figure-";
    QuadratureFlags figure_quad;
    figure->add_option("--n", figure_n, "sample count");
    figure->add_option("--scheme", figure_scheme, "indexing scheme");
    figure->add_option("--out-prefix", figure_prefix, "output path prefix");
    figure_quad.attach(figure);

    CLI11_PARSE(app, argc, argv);

    try {
        if (table1->parsed()) {
            dlct::ExperimentSpec spec;
            spec.signals = resolve_signals(t1_signals);
            spec.transforms = resolve_transforms(t1_transforms);
            spec.sizes = t1_sizes;
            spec.schemes = resolve_schemes(t1_schemes);
            spec.quadrature = t1_quad.resolve();
            std::ostringstream text;
            dlct::write_table1_csv(dlct::run_table1(spec), text);
            write_text(text.str(), t1_out);
        } else if (table2->parsed()) {
            dlct::ExperimentSpec spec;
            spec.signals = resolve_signals(t2_signals);
            spec.sizes = t2_sizes;
            std::ostringstream text;
            dlct::write_table2_csv(dlct::run_table2(spec), text);
            write_text(text.str(), t2_out);
        } else if (build->parsed()) {
            const dlct::Grid grid = dlct::make_grid(build_n, dlct::scheme_from_name(build_scheme));
            const dlct::DlctMatrix c = dlct::dlct_matrix(grid, build_params.resolve());
            dlct::save_matrix(c.matrix, build_out);
            if (!build_csv.empty()) {
                dlct::save_matrix_csv(c.matrix, build_csv);
            }
        } else if (apply_cmd->parsed()) {
            const dlct::SignalVector x = dlct::load_signal_csv(apply_in);
            dlct::SignalVector y;
            if (!apply_matrix.empty()) {
                if (apply_params.any()) {
                    throw CLI::ValidationError("give either --matrix or transform parameters");
                }
                y = dlct::apply(dlct::load_matrix(apply_matrix), x);
            } else {
                y = dlct::apply(dlct::dlct_matrix(x.grid, apply_params.resolve()), x);
            }
            dlct::save_signal_csv(y, apply_out);
        } else if (oracle_cmd->parsed()) {
            const dlct::LctParams p = oracle_params.resolve();
            const dlct::SignalId signal = dlct::signal_id_from_name(oracle_signal);
            const dlct::Scheme scheme = dlct::scheme_from_name(oracle_scheme);
            const dlct::QuadratureConfig cfg = oracle_quad.resolve();
            dlct::SignalVector result;
            bool computed = false;
            fs::path cache_path;
            if (!oracle_cache.empty()) {
                cache_path = fs::path(oracle_cache) /
                             dlct::oracle_cache_name(signal, p, oracle_n, scheme, cfg);
                if (fs::exists(cache_path)) {
                    result = dlct::load_signal_csv(cache_path);
                    computed = true;
                }
            }
            if (!computed) {
                result = dlct::continuous_lct(p, dlct::signal_by_id(signal),
                                              dlct::make_grid(oracle_n, scheme), cfg);
                if (!cache_path.empty()) {
                    fs::create_directories(cache_path.parent_path());
                    dlct::save_signal_csv(result, cache_path);
                }
            }
            dlct::save_signal_csv(result, oracle_out);
        } else if (figure->parsed()) {
            const dlct::Scheme scheme = dlct::scheme_from_name(figure_scheme);
            const dlct::QuadratureConfig cfg = figure_quad.resolve();
            for (int pair = 1; pair <= 4; ++pair) {
                const auto rows = dlct::figure_rows(static_cast<dlct::SignalId>(pair - 1),
                                                    dlct::transform_params(pair), figure_n,
                                                    scheme, cfg);
                const std::string path = figure_prefix + "F" + std::to_string(pair) + "_T" +
                                         std::to_string(pair) + ".csv";
                std::ofstream out(path);
                if (!out) {
                    throw std::runtime_error("cannot open " + path);
                }
                dlct::write_figure_csv(rows, out);
            }
        }
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    return 0;
}
