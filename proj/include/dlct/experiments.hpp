#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "dlct/factors.hpp"
#include "dlct/oracle.hpp"

namespace dlct {

/// Transform parameter sets T1..T4 used throughout the experiments.
LctParams transform_params(int index);
LctParams transform_by_name(const std::string& name);

/// Axes of one experiment run.
struct ExperimentSpec {
    std::vector<SignalId> signals = {SignalId::f1, SignalId::f2, SignalId::f3, SignalId::f4};
    std::vector<int> transforms = {1, 2, 3, 4};
    std::vector<int> sizes = {256, 1024};
    std::vector<Scheme> schemes = {Scheme::ordinary};
    QuadratureConfig quadrature;
};

/// One DLCT-vs-oracle percentage MSE cell.
struct Table1Cell {
    SignalId signal;
    int transform;
    int n;
    Scheme scheme;
    double mse_percent;
};

std::vector<Table1Cell> run_table1(const ExperimentSpec& spec);
void write_table1_csv(const std::vector<Table1Cell>& cells, std::ostream& out);

/// One concatenation / inverse-recovery percentage MSE cell. The pair name
/// is "Ti-Tj" (apply Ti, then Tj, against the single product-parameter
/// transform) or "Ti-Ti^-1" (against the input signal).
struct Table2Cell {
    SignalId signal;
    std::string pair;
    int n;
    double mse_percent;
};

std::vector<Table2Cell> run_table2(const ExperimentSpec& spec);
void write_table2_csv(const std::vector<Table2Cell>& cells, std::ostream& out);

/// Per-sample DLCT and oracle values for one (signal, transform) pairing.
struct FigureRow {
    double index;
    double u;
    std::complex<double> dlct;
    std::complex<double> oracle;
};

std::vector<FigureRow> figure_rows(SignalId signal, const LctParams& p, int n, Scheme scheme,
                                   const QuadratureConfig& cfg);
void write_figure_csv(const std::vector<FigureRow>& rows, std::ostream& out);

/// Cache file name for one oracle result, keyed by signal, parameters, grid
/// and quadrature configuration.
std::string oracle_cache_name(SignalId signal, const LctParams& p, int n, Scheme scheme,
                              const QuadratureConfig& cfg);

}  // namespace dlct
