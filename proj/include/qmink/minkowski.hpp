#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qmink/hermitian.hpp"
#include "qmink/states.hpp"

namespace qmink {

/// One evaluation of a Minkowski-type trace inequality. residual = lhs − rhs,
/// so for the p >= 1 branch "satisfied" means residual <= 0. An absent q marks
/// the one-parameter form (equivalent to q = 1).
struct ResidualReport {
  double p = 0.0;
  std::optional<double> q;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};

/// lhs = (Tr[(Σ a_ii)^p])^{1/p},  rhs = Tr[B(p)^{1/p}],  B(p)_ij = Tr a_ij(p)
/// where a_ij(p) are the blocks of ρ^p.
ResidualReport one_param_residual(const DensityMatrix& rho, const BlockPartition& part, double p);

/// lhs = (Tr[(Σ a_ii(q))^{p/q}])^{1/p},  rhs = (Tr[B(p)^{q/p}])^{1/q}.
ResidualReport two_param_residual(const DensityMatrix& rho, const BlockPartition& part, double p, double q);

/// True when the one-parameter report lies on the expected side: residual <=
/// tol for p >= 1, residual >= −tol for 0 < p < 1 (the reversed branch).
bool one_param_holds(const ResidualReport& report, double tol);

/// The p = 2 polynomial
///   ρ11ρ33 + ρ22ρ44 − ρ13ρ31 + ρ12ρ43 − ρ14ρ41 + ρ21ρ34 − ρ23ρ32 − ρ24ρ42
/// for a 4×4 state. It is real for Hermitian ρ and equals
/// ½(Tr[(a11 + a22)²] − Tr ρ²). It is NOT the p = 2 value of
/// one_param_residual; both are exposed because they differ.
double quadratic_residual_p2(const DensityMatrix& rho);

/// d1·d3 + d2·d4 − |c14|² − |c23|²
double x_state_p2_residual(const XStateParams& p);

/// Closed form of two_param_residual on werner(r), from its spectrum
/// λ1 = (1+3r)/4, λ2,3,4 = (1−r)/4:
///   2^{1/p}·((λ1^q+3λ2^q)/2)^{1/q} − 2^{1/q}·((λ1^p+3λ2^p)/2)^{1/p}.
double werner_two_param_closed_form(WernerParameter r, double p, double q);

/// A (p, q) request; q absent means the one-parameter inequality.
struct ExponentPair {
  double p = 1.0;
  std::optional<double> q;
};

std::string label(const ExponentPair& pq);

struct SweepRow {
  std::optional<double> r;  // absent for fixed (file) states
  double p = 0.0;
  std::optional<double> q;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  std::optional<double> quadratic_p2;
};

/// Where a sampled series crosses zero. Adjacent samples of strictly opposite
/// sign give a linearly interpolated crossing; samples with |v| <= zero_tol
/// count as touching zero (runs of them are reported once, at the first).
std::vector<double> find_sign_changes(std::span<const double> xs, std::span<const double> values,
                                      double zero_tol = 1e-12);

struct SeriesCrossings {
  std::string series;  // "p=2" / "p=2,q=1" / "quadratic_p2"
  std::vector<double> crossings;
};

/// State family walked by a sweep: either the Werner line over an r grid, or
/// one fixed state (loaded from a matrix or X-state file) evaluated once.
class StateFamily {
 public:
  static StateFamily werner_line();
  static StateFamily fixed(DensityMatrix rho, BlockPartition part);

  bool is_werner() const noexcept { return !fixed_.has_value(); }
  DensityMatrix at(double r) const;
  const BlockPartition& partition() const noexcept { return part_; }

 private:
  StateFamily(std::optional<DensityMatrix> fixed, BlockPartition part)
      : fixed_(std::move(fixed)), part_(part) {}

  std::optional<DensityMatrix> fixed_;
  BlockPartition part_;
};

struct SweepOptions {
  /// Adds quadratic_residual_p2 to every row (4×4 states only).
  bool with_quadratic = false;
  double zero_tol = 1e-12;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // r outer, pq inner
  std::vector<SeriesCrossings> crossings;
};

/// Evaluates every (r, pq) combination. Rows come out in input order
/// regardless of how they were computed.
SweepResult sweep(const StateFamily& family, std::span<const double> r_grid,
                  std::span<const ExponentPair> pq_list, const SweepOptions& options = {});

}  // namespace qmink
