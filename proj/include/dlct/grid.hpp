#pragma once

#include <string>
#include <vector>

namespace dlct {

/// Indexing scheme for finite signals: integer indices (ordinary) or
/// half-integer indices (centered).
enum class Scheme : unsigned char {
    ordinary = 0,
    centered = 1,
};

/// Sampling grid: N unit-spaced indices in ascending order, with sample
/// coordinates u = index * h and h = 1/sqrt(N).
struct Grid {
    int n_samples = 0;
    Scheme scheme = Scheme::ordinary;
    std::vector<double> indices;

    double spacing() const;
    double coordinate(int k) const { return indices[static_cast<unsigned>(k)] * spacing(); }
    double max_coordinate() const;

    bool operator==(const Grid&) const = default;
};

Grid make_grid(int n_samples, Scheme scheme);

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

}  // namespace dlct
