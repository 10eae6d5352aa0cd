#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "qmink/hermitian.hpp"

namespace qmink {

/// Euler-type angles of two local SU(2) rotations, in radians. Construction
/// canonicalizes to θ ∈ [0, π], φ, ψ ∈ [0, 2π) using
///   U(θ + 2π, φ, ψ) = −U(θ, φ, ψ)   and   U(θ, φ, ψ) = U(2π − θ, φ + π, ψ + π),
/// neither of which changes a tomogram.
class TomographyAngles {
 public:
  TomographyAngles() = default;
  TomographyAngles(double theta1, double theta2, double phi1, double phi2, double psi1, double psi2);

  double theta1() const noexcept { return theta_[0]; }
  double theta2() const noexcept { return theta_[1]; }
  double phi1() const noexcept { return phi_[0]; }
  double phi2() const noexcept { return phi_[1]; }
  double psi1() const noexcept { return psi_[0]; }
  double psi2() const noexcept { return psi_[1]; }

 private:
  std::array<double, 2> theta_{};
  std::array<double, 2> phi_{};
  std::array<double, 2> psi_{};
};

/// Joint spin-projection probabilities, basis order (↑↑, ↑↓, ↓↑, ↓↓).
struct Tomogram {
  double uu = 0.0;
  double ud = 0.0;
  double du = 0.0;
  double dd = 0.0;

  std::array<double, 4> as_array() const noexcept { return {uu, ud, du, dd}; }
};

struct Marginals {
  std::array<double, 2> first;   // (W1(↑), W1(↓))
  std::array<double, 2> second;  // (W2(↑), W2(↓))
};

struct QuantumInfo {
  double s1 = 0.0;
  double s2 = 0.0;
  double s12 = 0.0;
  double i_q = 0.0;
};

struct TomographicMax {
  double i_t = 0.0;
  TomographyAngles argmax;
};

/// All entropies in nats.
struct InfoReport {
  double s1 = 0.0;
  double s2 = 0.0;
  double s12 = 0.0;
  double i_q = 0.0;
  double i_t = 0.0;
  double delta_i = 0.0;
  TomographyAngles argmax;
};

struct OptimizerSettings {
  std::size_t grid_n = 12;
  std::size_t refine_evaluations = 400;
};

/// −Σ p ln p with 0 ln 0 = 0. Entries in [−1e-12, 0) are clamped to 0;
/// lower ones throw NegativeProbability, a sum off by more than 1e-9 throws
/// NotNormalized.
double shannon_entropy(std::span<const double> probs);

/// −Tr ρ ln ρ
double von_neumann_entropy(const DensityMatrix& rho);

/// [[cos(θ/2)e^{i(φ+ψ)/2},   sin(θ/2)e^{i(φ−ψ)/2}],
///  [−sin(θ/2)e^{i(ψ−φ)/2},  cos(θ/2)e^{−i(φ+ψ)/2}]]
ComplexMatrix su2(double theta, double phi, double psi);

/// Diagonal of (U1⊗U2)·ρ·(U1⊗U2)† for a 4×4 state.
Tomogram tomogram(const DensityMatrix& rho, const TomographyAngles& angles);

Marginals marginals(const Tomogram& t);

/// s1 from Σ a_ii, s2 from the block-trace matrix, s12 from ρ.
QuantumInfo quantum_mutual_info(const DensityMatrix& rho, const BlockPartition& part);

/// H1 + H2 − H12 of the tomogram at the given angles.
double tomographic_mutual_info(const DensityMatrix& rho, const TomographyAngles& angles);

/// Maximizes tomographic_mutual_info over (θ1, θ2, ψ1, ψ2) with φ1 = φ2 = 0:
/// a grid_n^4 grid (θ over [0, π] endpoints included, ψ over [0, 2π) endpoint
/// excluded), first best point wins ties, then Nelder–Mead from that point
/// with a budget of refine_evaluations and initial edge π/grid_n.
TomographicMax maximize_tomographic_info(const DensityMatrix& rho, const OptimizerSettings& settings = {});

/// I_q − I_t for a two-qubit state with the (2, 2) partition.
InfoReport delta_info(const DensityMatrix& rho, const OptimizerSettings& settings = {});

}  // namespace qmink
