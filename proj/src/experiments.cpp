#include "dlct/experiments.hpp"

#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "dlct/io.hpp"

namespace dlct {

namespace {

struct Table2Pair {
    std::string name;
    int first;
    int second;  // 0 marks the inverse of first
};

const std::vector<Table2Pair>& table2_pairs() {
    static const std::vector<Table2Pair> pairs = {
        {"T1-T2", 1, 2},     {"T3-T4", 3, 4},     {"T3-T1", 3, 1},
        {"T3-T2", 3, 2},     {"T1-T1^-1", 1, 0},  {"T3-T3^-1", 3, 0},
    };
    return pairs;
}

std::string transform_name(int index) {
    return "T" + std::to_string(index);
}

}  // namespace

LctParams transform_params(int index) {
    switch (index) {
        case 1: return {-3.0, -2.0, -1.0};
        case 2: return {-0.8, 3.0, 1.0};
        case 3: return {-1.8, -1.75, -1.3};
        case 4: return {0.3, -1.6, -0.9};
        default: break;
    }
    throw std::invalid_argument("transform index must be 1..4");
}

LctParams transform_by_name(const std::string& name) {
    if (name.size() == 2 && (name[0] == 'T' || name[0] == 't') && name[1] >= '1' &&
        name[1] <= '4') {
        return transform_params(name[1] - '0');
    }
    throw std::invalid_argument("unknown transform: " + name);
}

std::vector<Table1Cell> run_table1(const ExperimentSpec& spec) {
    // every signal reuses the same matrices, so build each one once
    std::map<std::tuple<int, int, Scheme>, DlctMatrix> matrices;
    for (int n : spec.sizes) {
        for (Scheme scheme : spec.schemes) {
            const FactorGenerators gens(make_grid(n, scheme));
            for (int transform : spec.transforms) {
                matrices.emplace(std::make_tuple(transform, n, scheme),
                                 dlct_matrix(gens, transform_params(transform)));
            }
        }
    }

    std::vector<Table1Cell> cells;
    for (SignalId signal : spec.signals) {
        const AnalyticSignal f = signal_by_id(signal);
        for (int transform : spec.transforms) {
            const LctParams p = transform_params(transform);
            for (int n : spec.sizes) {
                for (Scheme scheme : spec.schemes) {
                    const Grid grid = make_grid(n, scheme);
                    const DlctMatrix& c = matrices.at(std::make_tuple(transform, n, scheme));
                    const SignalVector reference = continuous_lct(p, f, grid, spec.quadrature);
                    const SignalVector output = apply(c, sample(f, grid));
                    cells.push_back({signal, transform, n, scheme,
                                     percent_mse(output, reference)});
                }
            }
        }
    }
    return cells;
}

void write_table1_csv(const std::vector<Table1Cell>& cells, std::ostream& out) {
    out << "signal,transform,n,scheme,mse_percent\n";
    for (const Table1Cell& cell : cells) {
        out << signal_name(cell.signal) << ',' << transform_name(cell.transform) << ','
            << cell.n << ',' << scheme_name(cell.scheme) << ','
            << format_double(cell.mse_percent) << '\n';
    }
}

std::vector<Table2Cell> run_table2(const ExperimentSpec& spec) {
    std::vector<Table2Cell> cells;
    for (int n : spec.sizes) {
        const Grid grid = make_grid(n, Scheme::ordinary);
        const FactorGenerators gens(grid);

        std::map<int, DlctMatrix> singles;
        for (int t = 1; t <= 4; ++t) {
            singles.emplace(t, dlct_matrix(gens, transform_params(t)));
        }

        for (SignalId signal : spec.signals) {
            const SignalVector x = sample(signal_by_id(signal), grid);
            for (const Table2Pair& pair : table2_pairs()) {
                const DlctMatrix& first = singles.at(pair.first);
                const AbcdMatrix l1 = to_abcd(first.params);

                SignalVector cascade{Eigen::VectorXcd(), grid};
                SignalVector reference{Eigen::VectorXcd(), grid};
                if (pair.second == 0) {
                    const DlctMatrix inverse = dlct_matrix(gens, from_abcd(invert(l1)));
                    cascade = apply(inverse, apply(first, x));
                    reference = x;
                } else {
                    const DlctMatrix& second = singles.at(pair.second);
                    const LctParams combined =
                        from_abcd(compose(l1, to_abcd(second.params)));
                    cascade = apply(second, apply(first, x));
                    reference = apply(dlct_matrix(gens, combined), x);
                }
                cells.push_back({signal, pair.name, n, percent_mse(cascade, reference)});
            }
        }
    }
    return cells;
}

void write_table2_csv(const std::vector<Table2Cell>& cells, std::ostream& out) {
    out << "signal,pair,n,mse_percent\n";
    for (const Table2Cell& cell : cells) {
        out << signal_name(cell.signal) << ',' << cell.pair << ',' << cell.n << ','
            << format_double(cell.mse_percent) << '\n';
    }
}

std::vector<FigureRow> figure_rows(SignalId signal, const LctParams& p, int n, Scheme scheme,
                                   const QuadratureConfig& cfg) {
    const Grid grid = make_grid(n, scheme);
    const AnalyticSignal f = signal_by_id(signal);
    const SignalVector output = apply(dlct_matrix(grid, p), sample(f, grid));
    const SignalVector reference = continuous_lct(p, f, grid, cfg);

    std::vector<FigureRow> rows;
    rows.reserve(static_cast<unsigned>(n));
    for (int k = 0; k < n; ++k) {
        rows.push_back({grid.indices[static_cast<unsigned>(k)], grid.coordinate(k),
                        output.samples(k), reference.samples(k)});
    }
    return rows;
}

void write_figure_csv(const std::vector<FigureRow>& rows, std::ostream& out) {
    out << "index,u,dlct_re,dlct_im,oracle_re,oracle_im\n";
    for (const FigureRow& row : rows) {
        out << format_double(row.index) << ',' << format_double(row.u) << ','
            << format_double(row.dlct.real()) << ',' << format_double(row.dlct.imag()) << ','
            << format_double(row.oracle.real()) << ',' << format_double(row.oracle.imag())
            << '\n';
    }
}

std::string oracle_cache_name(SignalId signal, const LctParams& p, int n, Scheme scheme,
                              const QuadratureConfig& cfg) {
    const std::string key = signal_name(signal) + '|' + format_double(p.alpha) + '|' +
                            format_double(p.beta) + '|' + format_double(p.gamma) + '|' +
                            std::to_string(n) + '|' + scheme_name(scheme) + '|' +
                            std::to_string(cfg.oversampling) + '|' +
                            format_double(cfg.padding) + '|' + rule_name(cfg.rule);
    // FNV-1a
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char ch : key) {
        hash ^= ch;
        hash *= 1099511628211ULL;
    }
    char hex[17];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(hash));
    return "oracle-" + signal_name(signal) + "-" + hex + ".csv";
}

}  // namespace dlct
