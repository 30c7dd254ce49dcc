#pragma once

#include <filesystem>
#include <string>

#include "dlct/operators.hpp"
#include "dlct/signal.hpp"

namespace dlct {

/// Binary matrix file: magic "DLCTMAT1", role byte, scheme byte, N as
/// little-endian uint64, then N^2 entries as (real, imag) 64-bit floats in
/// row-major ascending-index order.
void save_matrix(const OperatorMatrix& m, const std::filesystem::path& path);
OperatorMatrix load_matrix(const std::filesystem::path& path);

/// One matrix row per line, each entry as a "re,im" pair.
void save_matrix_csv(const OperatorMatrix& m, const std::filesystem::path& path);

/// Signal CSV: one "index,re,im" row per sample.
void save_signal_csv(const SignalVector& x, const std::filesystem::path& path);
SignalVector load_signal_csv(const std::filesystem::path& path);

/// Round-trip-exact decimal formatting (17 significant digits).
std::string format_double(double value);

}  // namespace dlct
