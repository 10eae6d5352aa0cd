#include "qmink/witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "qmink/error.hpp"

namespace qmink {

namespace {

void require_two_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw Error(ErrorKind::DimensionMismatch, "two-qubit witness needs a 4x4 state, got " + std::to_string(rho.dim()));
  }
}

ComplexMatrix spin_flip() {
  // σ_y ⊗ σ_y
  return ComplexMatrix{{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}};
}

}  // namespace

NegativityReport negativity_report(const DensityMatrix& rho) {
  require_two_qubit(rho);
  const double norm = trace_norm(partial_transpose_second(rho.matrix(), BlockPartition(2, 2)));
  return {norm, (norm - 1.0) / 2.0};
}

double concurrence(const DensityMatrix& rho) {
  require_two_qubit(rho);
  const ComplexMatrix root = mat_power(rho, 0.5);
  const ComplexMatrix s = spin_flip();
  const ComplexMatrix flipped = s * rho.matrix().conjugate() * s;
  const auto squares = clamp_nonnegative(eig_hermitian(root * flipped * root).eigenvalues);
  std::vector<double> lambda(squares.size());
  std::transform(squares.begin(), squares.end(), lambda.begin(), [](double x) { return std::sqrt(x); });
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

WitnessReport witness_report(const DensityMatrix& rho) {
  const auto neg = negativity_report(rho);
  return {neg.trace_norm_pt, neg.negativity, concurrence(rho)};
}

WernerWitnesses werner_closed_forms(WernerParameter param) {
  const double r = param.value();
  const double norm = 3.0 * std::abs((r + 1.0) / 4.0) + std::abs((1.0 - 3.0 * r) / 4.0);
  const double c = r > 1.0 / 3.0 ? (3.0 * r - 1.0) / 2.0 : 0.0;
  return {norm, c};
}

}  // namespace qmink
