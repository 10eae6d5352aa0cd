#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "qmink/matrix.hpp"

namespace qmink {

/// Shared matrix text format. Line 1 holds N; each of the next N lines holds
/// 2N decimals, alternating real and imaginary parts along the row.
ComplexMatrix read_matrix(std::istream& in);
ComplexMatrix read_matrix_file(const std::filesystem::path& path);

/// Writes with 17 significant digits so every value re-parses exactly.
void write_matrix(std::ostream& out, const ComplexMatrix& m);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m);

/// "%.17g"
std::string format_real(double x);

}  // namespace qmink
