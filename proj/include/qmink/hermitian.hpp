#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qmink/matrix.hpp"

namespace qmink {

inline constexpr double kDefaultTolerance = 1e-9;

/// Eigenvalues below zero but within this bound are treated as numerical
/// drift and clamped to zero before taking fractional powers.
inline constexpr double kClampTolerance = 1e-9;

/// Eigen-decomposition of a Hermitian matrix: A = V · diag(λ) · V†.
/// Eigenvalues are ascending; column k of `eigenvectors` belongs to
/// eigenvalues[k].
struct Spectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  /// V · diag(f(λ)) · V†
  template <class F>
  ComplexMatrix apply(F&& f) const {
    const std::size_t n = eigenvalues.size();
    ComplexMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double w = f(eigenvalues[k]);
      if (w == 0.0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        const complex vi = eigenvectors(i, k) * w;
        for (std::size_t j = 0; j < n; ++j) out(i, j) += vi * std::conj(eigenvectors(j, k));
      }
    }
    return out;
  }

  ComplexMatrix reconstruct() const {
    return apply([](double x) { return x; });
  }
};

/// Splits an (n·m)×(n·m) matrix into n×n blocks a_ij of size m×m. Block
/// indices are zero-based throughout the library.
class BlockPartition {
 public:
  /// Requires blocks >= 1 and block_dim >= 1.
  BlockPartition(std::size_t blocks, std::size_t block_dim);

  /// Partition of a dim×dim matrix into `blocks` blocks per side; dim must be
  /// divisible by `blocks`.
  static BlockPartition for_dim(std::size_t dim, std::size_t blocks);

  std::size_t blocks() const noexcept { return blocks_; }
  std::size_t block_dim() const noexcept { return block_dim_; }
  std::size_t total_dim() const noexcept { return blocks_ * block_dim_; }

  /// Throws PartitionMismatch unless total_dim() == m.dim().
  void check(const ComplexMatrix& m) const;

  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;

 private:
  std::size_t blocks_;
  std::size_t block_dim_;
};

/// A Hermitian, unit-trace, positive-semidefinite matrix. Instances only come
/// out of validate_density(), so holding one is proof that the three checks
/// passed at `tol()`. The spectrum computed during validation is kept.
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const Spectrum& spectrum() const noexcept { return spectrum_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }
  double tol() const noexcept { return tol_; }

  friend DensityMatrix validate_density(const ComplexMatrix& m, double tol);

 private:
  DensityMatrix(ComplexMatrix m, Spectrum s, double tol)
      : matrix_(std::move(m)), spectrum_(std::move(s)), tol_(tol) {}

  ComplexMatrix matrix_;
  Spectrum spectrum_;
  double tol_;
};

/// Rejects with NotHermitian, TraceNotOne or NotPositive; the message carries
/// the measured defect.
DensityMatrix validate_density(const ComplexMatrix& m, double tol = kDefaultTolerance);

/// Cyclic complex Jacobi. Converges when the off-diagonal Frobenius norm is
/// at most 1e-13·‖A‖_F; gives up with NoConvergence after 64 sweeps.
Spectrum eig_hermitian(const ComplexMatrix& m);

/// Eigenvalues in [-clamp_tol, 0) become 0; anything lower throws
/// NegativeEigenvalueBeyondTolerance.
std::vector<double> clamp_nonnegative(std::span<const double> eigenvalues,
                                      double clamp_tol = kClampTolerance);

/// ρ^alpha through the stored spectrum. 0^alpha = 0; alpha <= 0 throws.
ComplexMatrix mat_power(const DensityMatrix& rho, double alpha);

/// Same as mat_power for any positive-semidefinite Hermitian matrix.
ComplexMatrix psd_power(const ComplexMatrix& m, double alpha, double clamp_tol = kClampTolerance);

/// Tr(A^alpha) = Σ λ_i^alpha for positive-semidefinite Hermitian A.
double trace_power(const ComplexMatrix& m, double alpha, double clamp_tol = kClampTolerance);

/// The block a_ij (zero-based i, j).
ComplexMatrix block(const ComplexMatrix& m, const BlockPartition& part, std::size_t i, std::size_t j);

/// Σ_i a_ii, an m×m matrix.
ComplexMatrix partial_trace_first(const ComplexMatrix& m, const BlockPartition& part);

/// B with B_ij = Tr a_ij, an n×n matrix.
ComplexMatrix block_trace_matrix(const ComplexMatrix& m, const BlockPartition& part);

/// Transposes every block in place of itself. An involution.
ComplexMatrix partial_transpose_second(const ComplexMatrix& m, const BlockPartition& part);

/// Σ |λ_i| of a Hermitian matrix.
double trace_norm(const ComplexMatrix& m);

/// Embeds m in the top-left corner of a new_dim×new_dim zero matrix.
ComplexMatrix zero_pad(const ComplexMatrix& m, std::size_t new_dim);

}  // namespace qmink
