#include "qmink/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "qmink/error.hpp"

namespace qmink {

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ComplexMatrix read_matrix(std::istream& in) {
  long long n = 0;
  if (!(in >> n) || n <= 0) throw Error(ErrorKind::ParseError, "first line must be a positive dimension");
  const auto dim = static_cast<std::size_t>(n);
  std::vector<complex> entries;
  entries.reserve(dim * dim);
  for (std::size_t k = 0; k < dim * dim; ++k) {
    double re = 0.0, im = 0.0;
    if (!(in >> re >> im)) {
      throw Error(ErrorKind::ParseError, "expected " + std::to_string(2 * dim * dim) + " numbers, got " +
                                             std::to_string(2 * k));
    }
    entries.emplace_back(re, im);
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorKind::ParseError, "trailing content '" + extra + "'");
  return ComplexMatrix(dim, std::move(entries));
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
  out << m.dim() << '\n';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) out << ' ';
      out << format_real(m(i, j).real()) << ' ' << format_real(m(i, j).imag());
    }
    out << '\n';
  }
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  write_matrix(out, m);
}

}  // namespace qmink
