#include "qmink/infotheory.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qmink/error.hpp"
#include "qmink/nelder_mead.hpp"

namespace qmink {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kProbabilitySlack = 1e-12;
constexpr double kTomogramSumTol = 1e-10;

using Mat2 = std::array<complex, 4>;  // row-major 2×2

double wrap_two_pi(double x) {
  double y = std::fmod(x, kTwoPi);
  if (y < 0.0) y += kTwoPi;
  if (y >= kTwoPi) y = 0.0;
  return y;
}

Mat2 rotation(double theta, double phi, double psi) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  const complex i(0.0, 1.0);
  return {c * std::exp(i * ((phi + psi) / 2)), s * std::exp(i * ((phi - psi) / 2)),
          -s * std::exp(i * ((psi - phi) / 2)), c * std::exp(-i * ((phi + psi) / 2))};
}

// Diagonal of (a⊗b)·ρ·(a⊗b)†.
std::array<double, 4> rotated_diagonal(const ComplexMatrix& rho, const Mat2& a, const Mat2& b) {
  std::array<double, 4> w{};
  for (std::size_t m1 = 0; m1 < 2; ++m1)
    for (std::size_t m2 = 0; m2 < 2; ++m2) {
      std::array<complex, 4> row;
      for (std::size_t j1 = 0; j1 < 2; ++j1)
        for (std::size_t j2 = 0; j2 < 2; ++j2) row[j1 * 2 + j2] = a[m1 * 2 + j1] * b[m2 * 2 + j2];
      complex acc = 0.0;
      for (std::size_t j = 0; j < 4; ++j) {
        complex rj = 0.0;
        for (std::size_t k = 0; k < 4; ++k) rj += rho(j, k) * std::conj(row[k]);
        acc += row[j] * rj;
      }
      w[m1 * 2 + m2] = acc.real();
    }
  return w;
}

double mutual_info_of(const std::array<double, 4>& w) {
  const std::array<double, 2> w1{w[0] + w[1], w[2] + w[3]};
  const std::array<double, 2> w2{w[0] + w[2], w[1] + w[3]};
  return shannon_entropy(w1) + shannon_entropy(w2) - shannon_entropy(w);
}

void require_two_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw Error(ErrorKind::DimensionMismatch, "two-qubit quantity needs a 4x4 state, got " + std::to_string(rho.dim()));
  }
}

}  // namespace

TomographyAngles::TomographyAngles(double theta1, double theta2, double phi1, double phi2, double psi1,
                                   double psi2) {
  const std::array<double, 6> all{theta1, theta2, phi1, phi2, psi1, psi2};
  for (double x : all) {
    if (!std::isfinite(x)) throw Error(ErrorKind::ParameterOutOfRange, "tomography angle is not finite");
  }
  const std::array<double, 2> th{theta1, theta2}, ph{phi1, phi2}, ps{psi1, psi2};
  for (std::size_t k = 0; k < 2; ++k) {
    double t = wrap_two_pi(th[k]);
    double f = ph[k], p = ps[k];
    if (t > std::numbers::pi) {
      t = kTwoPi - t;
      f += std::numbers::pi;
      p += std::numbers::pi;
    }
    theta_[k] = t;
    phi_[k] = wrap_two_pi(f);
    psi_[k] = wrap_two_pi(p);
  }
}

double shannon_entropy(std::span<const double> probs) {
  double sum = 0.0;
  for (double x : probs) {
    if (x < -kProbabilitySlack) throw Error(ErrorKind::NegativeProbability, "probability " + std::to_string(x));
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw Error(ErrorKind::NotNormalized, "probabilities sum to " + std::to_string(sum));
  double h = 0.0;
  for (double x : probs)
    if (x > 0.0) h -= x * std::log(x);
  return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double x : clamp_nonnegative(rho.spectrum().eigenvalues))
    if (x > 0.0) s -= x * std::log(x);
  return s;
}

ComplexMatrix su2(double theta, double phi, double psi) {
  const Mat2 u = rotation(theta, phi, psi);
  return ComplexMatrix{{u[0], u[1]}, {u[2], u[3]}};
}

Tomogram tomogram(const DensityMatrix& rho, const TomographyAngles& angles) {
  require_two_qubit(rho);
  const auto w = rotated_diagonal(rho.matrix(), rotation(angles.theta1(), angles.phi1(), angles.psi1()),
                                  rotation(angles.theta2(), angles.phi2(), angles.psi2()));
  double sum = 0.0;
  for (double x : w) {
    if (x < -kProbabilitySlack || x > 1.0 + kProbabilitySlack) {
      throw Error(ErrorKind::NegativeProbability, "tomogram entry " + std::to_string(x));
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > kTomogramSumTol) {
    throw Error(ErrorKind::NotNormalized, "tomogram sums to " + std::to_string(sum));
  }
  return {w[0], w[1], w[2], w[3]};
}

Marginals marginals(const Tomogram& t) {
  return {{t.uu + t.ud, t.du + t.dd}, {t.uu + t.du, t.ud + t.dd}};
}

QuantumInfo quantum_mutual_info(const DensityMatrix& rho, const BlockPartition& part) {
  part.check(rho.matrix());
  const DensityMatrix reduced_a = validate_density(partial_trace_first(rho.matrix(), part), rho.tol());
  const DensityMatrix reduced_b = validate_density(block_trace_matrix(rho.matrix(), part), rho.tol());
  QuantumInfo out;
  out.s1 = von_neumann_entropy(reduced_a);
  out.s2 = von_neumann_entropy(reduced_b);
  out.s12 = von_neumann_entropy(rho);
  out.i_q = out.s1 + out.s2 - out.s12;
  return out;
}

double tomographic_mutual_info(const DensityMatrix& rho, const TomographyAngles& angles) {
  return mutual_info_of(tomogram(rho, angles).as_array());
}

TomographicMax maximize_tomographic_info(const DensityMatrix& rho, const OptimizerSettings& settings) {
  require_two_qubit(rho);
  const std::size_t n = settings.grid_n;
  if (n < 8) throw Error(ErrorKind::ParameterOutOfRange, "grid_n must be >= 8, got " + std::to_string(n));

  std::vector<double> thetas(n), psis(n);
  for (std::size_t k = 0; k < n; ++k) {
    thetas[k] = std::numbers::pi * static_cast<double>(k) / static_cast<double>(n - 1);
    psis[k] = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
  }
  // local rotations indexed [theta][psi], φ = 0
  std::vector<Mat2> local(n * n);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t p = 0; p < n; ++p) local[t * n + p] = rotation(thetas[t], 0.0, psis[p]);

  const ComplexMatrix& m = rho.matrix();
  double best = -1.0;
  std::array<std::size_t, 4> arg{};
  for (std::size_t t1 = 0; t1 < n; ++t1)
    for (std::size_t t2 = 0; t2 < n; ++t2)
      for (std::size_t p1 = 0; p1 < n; ++p1)
        for (std::size_t p2 = 0; p2 < n; ++p2) {
          const double v = mutual_info_of(rotated_diagonal(m, local[t1 * n + p1], local[t2 * n + p2]));
          if (v > best) {
            best = v;
            arg = {t1, t2, p1, p2};
          }
        }

  std::vector<double> x{thetas[arg[0]], thetas[arg[1]], psis[arg[2]], psis[arg[3]]};
  if (settings.refine_evaluations > 0) {
    auto objective = [&](const std::vector<double>& y) {
      return -mutual_info_of(rotated_diagonal(m, rotation(y[0], 0.0, y[2]), rotation(y[1], 0.0, y[3])));
    };
    optim::NelderMeadOptions opt;
    opt.step = std::numbers::pi / static_cast<double>(n);
    opt.max_evaluations = settings.refine_evaluations;
    const auto res = optim::nelder_mead(objective, x, opt);
    if (-res.fx > best) {
      best = -res.fx;
      x = res.x;
    }
  }
  return {best, TomographyAngles(x[0], x[1], 0.0, 0.0, x[2], x[3])};
}

InfoReport delta_info(const DensityMatrix& rho, const OptimizerSettings& settings) {
  require_two_qubit(rho);
  const QuantumInfo q = quantum_mutual_info(rho, BlockPartition(2, 2));
  const TomographicMax t = maximize_tomographic_info(rho, settings);
  return {q.s1, q.s2, q.s12, q.i_q, t.i_t, q.i_q - t.i_t, t.argmax};
}

}  // namespace qmink
