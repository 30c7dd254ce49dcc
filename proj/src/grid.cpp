#include "dlct/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace dlct {

double Grid::spacing() const {
    return 1.0 / std::sqrt(static_cast<double>(n_samples));
}

double Grid::max_coordinate() const {
    const double lo = std::abs(indices.front());
    const double hi = std::abs(indices.back());
    return std::max(lo, hi) * spacing();
}

Grid make_grid(int n_samples, Scheme scheme) {
    if (n_samples < 2) {
        throw std::invalid_argument("grid needs at least 2 samples");
    }
    Grid g;
    g.n_samples = n_samples;
    g.scheme = scheme;
    g.indices.resize(static_cast<unsigned>(n_samples));

    const bool even = n_samples % 2 == 0;
    double start = even ? -0.5 * n_samples : -0.5 * (n_samples - 1);
    if (scheme == Scheme::centered) {
        // half-integer shift: symmetric around 0 for even N, and the mirror
        // shift for odd N
        start += even ? 0.5 : -0.5;
    }
    for (int k = 0; k < n_samples; ++k) {
        g.indices[static_cast<unsigned>(k)] = start + k;
    }
    return g;
}

std::string scheme_name(Scheme s) {
    return s == Scheme::ordinary ? "ordinary" : "centered";
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "ordinary") return Scheme::ordinary;
    if (name == "centered") return Scheme::centered;
    throw std::invalid_argument("unknown scheme: " + name);
}

}  // namespace dlct
