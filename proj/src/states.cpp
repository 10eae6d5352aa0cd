#include "qmink/states.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "qmink/error.hpp"
#include "qmink/rng.hpp"

namespace qmink {

namespace {

constexpr double kWernerSlack = 1e-12;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

WernerParameter::WernerParameter(double r) : r_(r) {
  if (!(r >= -1.0 / 3.0 - kWernerSlack && r <= 1.0 + kWernerSlack)) {
    throw Error(ErrorKind::ParameterOutOfRange, "Werner parameter r = " + fmt(r) + " outside [-1/3, 1]");
  }
}

XStateParams werner_as_x_state(WernerParameter param) {
  const double r = param.value();
  return XStateParams{{(1 + r) / 4, (1 - r) / 4, (1 - r) / 4, (1 + r) / 4}, r / 2, 0.0};
}

DensityMatrix werner(WernerParameter param) {
  const double r = param.value();
  const double outer = (1 + r) / 4, inner = (1 - r) / 4, coherence = r / 2;
  ComplexMatrix m{{outer, 0, 0, coherence},
                  {0, inner, 0, 0},
                  {0, 0, inner, 0},
                  {coherence, 0, 0, outer}};
  return validate_density(m);
}

DensityMatrix x_state(const XStateParams& p, double tol) {
  const auto& d = p.diagonal;
  for (std::size_t i = 0; i < 4; ++i) {
    if (d[i] < -tol) throw Error(ErrorKind::NotPositive, "population rho_" + std::to_string(i + 1) +
                                                             std::to_string(i + 1) + " = " + fmt(d[i]));
  }
  const double sum = d[0] + d[1] + d[2] + d[3];
  if (std::abs(sum - 1.0) > tol) throw Error(ErrorKind::TraceNotOne, "populations sum to " + fmt(sum));
  if (std::norm(p.c14) > d[0] * d[3] + tol) {
    throw Error(ErrorKind::NotPositive, "|rho_14|^2 = " + fmt(std::norm(p.c14)) + " exceeds rho_11 rho_44");
  }
  if (std::norm(p.c23) > d[1] * d[2] + tol) {
    throw Error(ErrorKind::NotPositive, "|rho_23|^2 = " + fmt(std::norm(p.c23)) + " exceeds rho_22 rho_33");
  }
  ComplexMatrix m{{d[0], 0, 0, p.c14},
                  {0, d[1], p.c23, 0},
                  {0, std::conj(p.c23), d[2], 0},
                  {std::conj(p.c14), 0, 0, d[3]}};
  return validate_density(m, tol);
}

DensityMatrix embed_qutrit(const DensityMatrix& rho3) {
  if (rho3.dim() != 3) {
    throw Error(ErrorKind::DimensionMismatch, "expected a 3x3 state, got " + std::to_string(rho3.dim()));
  }
  return validate_density(zero_pad(rho3.matrix(), 4), rho3.tol());
}

DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  if (dim < 2) throw Error(ErrorKind::DimensionMismatch, "dimension must be >= 2");
  if (rank < 1 || rank > dim) {
    throw Error(ErrorKind::BadRank, "rank " + std::to_string(rank) + " not in [1, " + std::to_string(dim) + "]");
  }
  Rng rng(seed);
  std::vector<complex> g(dim * rank);
  for (auto& z : g) z = rng.complex_normal();

  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      complex s = 0.0;
      for (std::size_t k = 0; k < rank; ++k) s += g[i * rank + k] * std::conj(g[j * rank + k]);
      m(i, j) = s;
    }
  m *= complex(1.0 / m.trace().real());
  return validate_density(m);
}

DensityMatrix product_state(const DensityMatrix& a, const DensityMatrix& b) {
  return validate_density(kron(a.matrix(), b.matrix()), std::max(a.tol(), b.tol()));
}

}  // namespace qmink
