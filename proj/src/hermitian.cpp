#include "qmink/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "qmink/error.hpp"

namespace qmink {

namespace {

constexpr int kMaxSweeps = 64;
constexpr double kOffDiagonalThreshold = 1e-13;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

double max_abs_entry(const ComplexMatrix& m) {
  double worst = 0.0;
  for (const auto& z : m.entries()) worst = std::max(worst, std::abs(z));
  return worst;
}

void require_hermitian(const ComplexMatrix& m, double tol) {
  const double defect = m.hermiticity_defect();
  if (defect > tol * std::max(1.0, max_abs_entry(m))) {
    throw Error(ErrorKind::NotHermitian, "max |A_jk - conj(A_kj)| = " + fmt(defect));
  }
}

void require_positive_exponent(double alpha) {
  if (!(alpha > 0.0)) throw Error(ErrorKind::NonPositiveExponent, "exponent " + fmt(alpha) + " is not > 0");
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One complex Jacobi rotation annihilating a(p, q). J = Φ·P with Φ the phase
// that makes a(p, q) real and P the classical real rotation.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const complex apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const complex phase = apq / g;
  const double zeta = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
  const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const complex j_qp = -s * std::conj(phase);
  const complex j_qq = c * std::conj(phase);
  const std::size_t n = a.dim();

  for (std::size_t k = 0; k < n; ++k) {
    const complex akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * c + akq * j_qp;
    a(k, q) = akp * s + akq * j_qq;
    const complex vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * c + vkq * j_qp;
    v(k, q) = vkp * s + vkq * j_qq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk + std::conj(j_qp) * aqk;
    a(q, k) = s * apk + std::conj(j_qq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

BlockPartition::BlockPartition(std::size_t blocks, std::size_t block_dim)
    : blocks_(blocks), block_dim_(block_dim) {
  if (blocks == 0 || block_dim == 0) {
    throw Error(ErrorKind::PartitionMismatch, "block count and block dimension must be >= 1");
  }
}

BlockPartition BlockPartition::for_dim(std::size_t dim, std::size_t blocks) {
  if (blocks == 0 || dim % blocks != 0) {
    throw Error(ErrorKind::PartitionMismatch,
                "dimension " + std::to_string(dim) + " is not divisible into " + std::to_string(blocks) + " blocks");
  }
  return BlockPartition(blocks, dim / blocks);
}

void BlockPartition::check(const ComplexMatrix& m) const {
  if (total_dim() != m.dim()) {
    throw Error(ErrorKind::PartitionMismatch, "partition " + std::to_string(blocks_) + "x" +
                                                  std::to_string(block_dim_) + " does not fit dimension " +
                                                  std::to_string(m.dim()));
  }
}

DensityMatrix validate_density(const ComplexMatrix& m, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::ParameterOutOfRange, "tolerance must be > 0");
  const double herm = m.hermiticity_defect();
  if (herm > tol) throw Error(ErrorKind::NotHermitian, "max |rho_jk - conj(rho_kj)| = " + fmt(herm));
  const double trace_defect = std::abs(m.trace() - complex(1.0));
  if (trace_defect > tol) throw Error(ErrorKind::TraceNotOne, "|Tr rho - 1| = " + fmt(trace_defect));
  Spectrum s = eig_hermitian(m);
  const double lmin = s.eigenvalues.empty() ? 0.0 : s.eigenvalues.front();
  if (lmin < -tol) throw Error(ErrorKind::NotPositive, "minimum eigenvalue " + fmt(lmin));
  return DensityMatrix(m, std::move(s), tol);
}

Spectrum eig_hermitian(const ComplexMatrix& m) {
  require_hermitian(m, kDefaultTolerance);
  const std::size_t n = m.dim();
  ComplexMatrix a = (m + m.adjoint()) * complex(0.5);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = kOffDiagonalThreshold * a.frobenius_norm();

  bool converged = false;
  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) {
      converged = true;
      break;
    }
    if (sweep == kMaxSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }
  if (!converged) {
    throw Error(ErrorKind::NoConvergence, "off-diagonal norm " + fmt(off_diagonal_norm(a)) + " after " +
                                              std::to_string(kMaxSweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  Spectrum out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> clamp_nonnegative(std::span<const double> eigenvalues, double clamp_tol) {
  std::vector<double> out(eigenvalues.begin(), eigenvalues.end());
  for (auto& x : out) {
    if (x < -clamp_tol) {
      throw Error(ErrorKind::NegativeEigenvalueBeyondTolerance, "eigenvalue " + fmt(x));
    }
    if (x < 0.0) x = 0.0;
  }
  return out;
}

namespace {

ComplexMatrix spectral_power(const Spectrum& s, double alpha, double clamp_tol) {
  require_positive_exponent(alpha);
  clamp_nonnegative(s.eigenvalues, clamp_tol);
  return s.apply([alpha](double x) { return x <= 0.0 ? 0.0 : std::pow(x, alpha); });
}

}  // namespace

ComplexMatrix mat_power(const DensityMatrix& rho, double alpha) {
  return spectral_power(rho.spectrum(), alpha, kClampTolerance);
}

ComplexMatrix psd_power(const ComplexMatrix& m, double alpha, double clamp_tol) {
  require_positive_exponent(alpha);
  return spectral_power(eig_hermitian(m), alpha, clamp_tol);
}

double trace_power(const ComplexMatrix& m, double alpha, double clamp_tol) {
  require_positive_exponent(alpha);
  const auto lambda = clamp_nonnegative(eig_hermitian(m).eigenvalues, clamp_tol);
  double sum = 0.0;
  for (double x : lambda)
    if (x > 0.0) sum += std::pow(x, alpha);
  return sum;
}

ComplexMatrix block(const ComplexMatrix& m, const BlockPartition& part, std::size_t i, std::size_t j) {
  part.check(m);
  if (i >= part.blocks() || j >= part.blocks()) {
    throw Error(ErrorKind::IndexOutOfRange, "block (" + std::to_string(i) + ", " + std::to_string(j) +
                                                ") outside " + std::to_string(part.blocks()) + " blocks");
  }
  const std::size_t bd = part.block_dim();
  ComplexMatrix out(bd);
  for (std::size_t r = 0; r < bd; ++r)
    for (std::size_t c = 0; c < bd; ++c) out(r, c) = m(i * bd + r, j * bd + c);
  return out;
}

ComplexMatrix partial_trace_first(const ComplexMatrix& m, const BlockPartition& part) {
  part.check(m);
  const std::size_t bd = part.block_dim();
  ComplexMatrix out(bd);
  for (std::size_t i = 0; i < part.blocks(); ++i)
    for (std::size_t r = 0; r < bd; ++r)
      for (std::size_t c = 0; c < bd; ++c) out(r, c) += m(i * bd + r, i * bd + c);
  return out;
}

ComplexMatrix block_trace_matrix(const ComplexMatrix& m, const BlockPartition& part) {
  part.check(m);
  const std::size_t nb = part.blocks(), bd = part.block_dim();
  ComplexMatrix out(nb);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < bd; ++k) out(i, j) += m(i * bd + k, j * bd + k);
  return out;
}

ComplexMatrix partial_transpose_second(const ComplexMatrix& m, const BlockPartition& part) {
  part.check(m);
  const std::size_t nb = part.blocks(), bd = part.block_dim();
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t r = 0; r < bd; ++r)
        for (std::size_t c = 0; c < bd; ++c) out(i * bd + r, j * bd + c) = m(i * bd + c, j * bd + r);
  return out;
}

double trace_norm(const ComplexMatrix& m) {
  const auto s = eig_hermitian(m);
  double sum = 0.0;
  for (double x : s.eigenvalues) sum += std::abs(x);
  return sum;
}

ComplexMatrix zero_pad(const ComplexMatrix& m, std::size_t new_dim) {
  if (new_dim < m.dim()) {
    throw Error(ErrorKind::ShrinkNotAllowed,
                "cannot pad dimension " + std::to_string(m.dim()) + " down to " + std::to_string(new_dim));
  }
  ComplexMatrix out(new_dim);
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(i, j);
  return out;
}

}  // namespace qmink
