#include <doctest.h>

#include <cmath>
#include <sstream>

#include "dlct/experiments.hpp"

using namespace dlct;

TEST_CASE("transform parameter sets match the experiment definitions") {
    const LctParams t1 = transform_params(1);
    CHECK(t1.alpha == -3.0);
    CHECK(t1.beta == -2.0);
    CHECK(t1.gamma == -1.0);
    const LctParams t4 = transform_by_name("T4");
    CHECK(t4.alpha == 0.3);
    CHECK(t4.beta == -1.6);
    CHECK(t4.gamma == -0.9);
    CHECK_THROWS_AS(transform_by_name("T5"), std::invalid_argument);
    CHECK_THROWS_AS(transform_params(0), std::invalid_argument);
}

TEST_CASE("table2 cells cover the fixed pair list and land near the tabulated scale") {
    ExperimentSpec spec;
    spec.signals = {SignalId::f1, SignalId::f4};
    spec.sizes = {256};
    const auto cells = run_table2(spec);
    REQUIRE(cells.size() == 12);

    double f1_t1t2 = -1.0;
    double f4_t1inv = -1.0;
    for (const auto& cell : cells) {
        CHECK(std::isfinite(cell.mse_percent));
        CHECK(cell.mse_percent >= 0.0);
        if (cell.signal == SignalId::f1 && cell.pair == "T1-T2") f1_t1t2 = cell.mse_percent;
        if (cell.signal == SignalId::f4 && cell.pair == "T1-T1^-1") f4_t1inv = cell.mse_percent;
    }
    // tabulated-scale sanity: 1.32e-2 and 18.37 within a factor of two
    CHECK(f1_t1t2 >= 0.5 * 1.32e-2);
    CHECK(f1_t1t2 <= 2.0 * 1.32e-2);
    CHECK(f4_t1inv >= 0.5 * 18.37);
    CHECK(f4_t1inv <= 2.0 * 18.37);
}

TEST_CASE("table1 cells are finite and nonnegative on a small run") {
    ExperimentSpec spec;
    spec.signals = {SignalId::f2};
    spec.transforms = {1, 3};
    spec.sizes = {32};
    spec.schemes = {Scheme::ordinary, Scheme::centered};
    const auto cells = run_table1(spec);
    REQUIRE(cells.size() == 4);
    for (const auto& cell : cells) {
        CHECK(std::isfinite(cell.mse_percent));
        CHECK(cell.mse_percent >= 0.0);
    }
}

TEST_CASE("table CSV writers emit the documented columns deterministically") {
    std::ostringstream first;
    std::ostringstream second;
    const std::vector<Table1Cell> cells = {
        {SignalId::f1, 1, 256, Scheme::ordinary, 9.82e-4},
        {SignalId::f2, 2, 1024, Scheme::centered, 0.87},
    };
    write_table1_csv(cells, first);
    write_table1_csv(cells, second);
    CHECK(first.str() == second.str());
    CHECK(first.str().rfind("signal,transform,n,scheme,mse_percent\n", 0) == 0);
    CHECK(first.str().find("F1,T1,256,ordinary,") != std::string::npos);
    CHECK(first.str().find("F2,T2,1024,centered,") != std::string::npos);

    std::ostringstream t2;
    write_table2_csv({{SignalId::f3, "T3-T3^-1", 256, 5.31}}, t2);
    CHECK(t2.str().rfind("signal,pair,n,mse_percent\n", 0) == 0);
    CHECK(t2.str().find("F3,T3-T3^-1,256,") != std::string::npos);
}

TEST_CASE("figure rows carry the grid coordinates and both traces") {
    const auto rows = figure_rows(SignalId::f1, transform_params(1), 64, Scheme::ordinary, {});
    REQUIRE(rows.size() == 64);
    const Grid g = make_grid(64, Scheme::ordinary);
    for (unsigned k = 0; k < rows.size(); ++k) {
        CHECK(rows[k].index == g.indices[k]);
        CHECK(rows[k].u == g.indices[k] * g.spacing());
    }
    // traces agree at the Table-I error level, far below 100 percent
    double diff = 0.0;
    double ref = 0.0;
    for (const auto& row : rows) {
        diff += std::norm(row.dlct - row.oracle);
        ref += std::norm(row.oracle);
    }
    CHECK(100.0 * diff / ref < 1.0);

    std::ostringstream out;
    write_figure_csv(rows, out);
    CHECK(out.str().rfind("index,u,dlct_re,dlct_im,oracle_re,oracle_im\n", 0) == 0);
}

TEST_CASE("oracle cache names separate distinct configurations") {
    const QuadratureConfig base;
    QuadratureConfig finer;
    finer.oversampling = 32;
    const std::string a = oracle_cache_name(SignalId::f1, transform_params(1), 256,
                                            Scheme::ordinary, base);
    CHECK(a == oracle_cache_name(SignalId::f1, transform_params(1), 256, Scheme::ordinary,
                                 base));
    CHECK(a != oracle_cache_name(SignalId::f1, transform_params(1), 256, Scheme::ordinary,
                                 finer));
    CHECK(a != oracle_cache_name(SignalId::f2, transform_params(1), 256, Scheme::ordinary,
                                 base));
    CHECK(a.rfind("oracle-F1-", 0) == 0);
}
