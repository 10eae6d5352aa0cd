#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "qmink/hermitian.hpp"

namespace qmink {

/// Werner mixing parameter r ∈ [−1/3, 1]; the state is entangled for r > 1/3.
class WernerParameter {
 public:
  /// Throws ParameterOutOfRange outside [−1/3, 1] (1e-12 slack for grid
  /// endpoints computed in floating point).
  explicit WernerParameter(double r);
  double value() const noexcept { return r_; }

 private:
  double r_;
};

/// Two-qubit X state: diagonal populations plus the two anti-diagonal
/// coherences ρ14 and ρ23. The conjugate entries are implied.
struct XStateParams {
  std::array<double, 4> diagonal{};
  complex c14{};
  complex c23{};
};

DensityMatrix werner(WernerParameter r);

/// X-state parameterization that reproduces werner(r) entry for entry.
XStateParams werner_as_x_state(WernerParameter r);

/// Rejects negative populations or coherences exceeding the 2×2 sub-block
/// positivity bound (NotPositive), and populations not summing to one
/// (TraceNotOne).
DensityMatrix x_state(const XStateParams& p, double tol = kDefaultTolerance);

/// Zero-pads a qutrit state to 4×4 so it splits into 2×2 blocks.
DensityMatrix embed_qutrit(const DensityMatrix& rho3);

/// ρ = G·G† / Tr(G·G†) with G a dim×rank matrix of standard complex normals
/// drawn row by row from Rng(seed). Same seed gives a bit-identical matrix.
DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed);

/// ρ_A ⊗ ρ_B
DensityMatrix product_state(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace qmink
