#include "dlct/io.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dlct {

static_assert(std::endian::native == std::endian::little,
              "matrix files are little-endian; big-endian hosts need byte swaps");

namespace {

constexpr char kMagic[8] = {'D', 'L', 'C', 'T', 'M', 'A', 'T', '1'};
constexpr int kMaxSamples = 1 << 16;

void write_bytes(std::ofstream& out, const void* data, std::size_t size) {
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
}

void read_bytes(std::ifstream& in, void* data, std::size_t size) {
    in.read(static_cast<char*>(data), static_cast<std::streamsize>(size));
    if (!in) {
        throw std::runtime_error("matrix file truncated");
    }
}

[[noreturn]] void fail_open(const std::filesystem::path& path) {
    throw std::runtime_error("cannot open " + path.string());
}

}  // namespace

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void save_matrix(const OperatorMatrix& m, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail_open(path);

    write_bytes(out, kMagic, sizeof(kMagic));
    const unsigned char role = static_cast<unsigned char>(m.role);
    const unsigned char scheme = static_cast<unsigned char>(m.grid.scheme);
    write_bytes(out, &role, 1);
    write_bytes(out, &scheme, 1);
    const std::uint64_t n = static_cast<std::uint64_t>(m.grid.n_samples);
    write_bytes(out, &n, sizeof(n));

    for (int r = 0; r < m.grid.n_samples; ++r) {
        for (int c = 0; c < m.grid.n_samples; ++c) {
            const double re = m.entries(r, c).real();
            const double im = m.entries(r, c).imag();
            write_bytes(out, &re, sizeof(re));
            write_bytes(out, &im, sizeof(im));
        }
    }
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

OperatorMatrix load_matrix(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail_open(path);

    char magic[8];
    read_bytes(in, magic, sizeof(magic));
    if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
        throw std::runtime_error(path.string() + " is not a DLCT matrix file");
    }
    unsigned char role = 0;
    unsigned char scheme = 0;
    read_bytes(in, &role, 1);
    read_bytes(in, &scheme, 1);
    if (role > static_cast<unsigned char>(MatrixRole::dlct) || scheme > 1) {
        throw std::runtime_error(path.string() + " has an invalid header");
    }
    std::uint64_t n = 0;
    read_bytes(in, &n, sizeof(n));
    if (n < 2 || n > kMaxSamples) {
        throw std::runtime_error(path.string() + " declares an unsupported size");
    }

    OperatorMatrix m;
    m.role = static_cast<MatrixRole>(role);
    m.grid = make_grid(static_cast<int>(n), static_cast<Scheme>(scheme));
    m.entries.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::uint64_t r = 0; r < n; ++r) {
        for (std::uint64_t c = 0; c < n; ++c) {
            double re = 0.0;
            double im = 0.0;
            read_bytes(in, &re, sizeof(re));
            read_bytes(in, &im, sizeof(im));
            m.entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = {re, im};
        }
    }
    return m;
}

void save_matrix_csv(const OperatorMatrix& m, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) fail_open(path);
    for (int r = 0; r < m.grid.n_samples; ++r) {
        for (int c = 0; c < m.grid.n_samples; ++c) {
            if (c > 0) out << ',';
            out << format_double(m.entries(r, c).real()) << ','
                << format_double(m.entries(r, c).imag());
        }
        out << '\n';
    }
}

void save_signal_csv(const SignalVector& x, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) fail_open(path);
    for (int k = 0; k < x.grid.n_samples; ++k) {
        out << format_double(x.grid.indices[static_cast<unsigned>(k)]) << ','
            << format_double(x.samples(k).real()) << ','
            << format_double(x.samples(k).imag()) << '\n';
    }
}

SignalVector load_signal_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail_open(path);

    std::vector<double> indices;
    std::vector<std::complex<double>> samples;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        double values[3];
        for (int k = 0; k < 3; ++k) {
            if (!std::getline(row, field, ',')) {
                throw std::runtime_error(path.string() + ": malformed signal row");
            }
            values[k] = std::stod(field);
        }
        indices.push_back(values[0]);
        samples.emplace_back(values[1], values[2]);
    }
    const int n = static_cast<int>(samples.size());
    if (n < 2) {
        throw std::runtime_error(path.string() + ": signal needs at least 2 samples");
    }

    SignalVector x;
    for (Scheme scheme : {Scheme::ordinary, Scheme::centered}) {
        Grid g = make_grid(n, scheme);
        if (g.indices == indices) {
            x.grid = std::move(g);
            break;
        }
    }
    if (x.grid.n_samples == 0) {
        throw std::runtime_error(path.string() + ": index column matches neither scheme");
    }
    x.samples.resize(n);
    for (int k = 0; k < n; ++k) {
        x.samples(k) = samples[static_cast<unsigned>(k)];
    }
    return x;
}

}  // namespace dlct
