#include "qmink/minkowski.hpp"

#include <cmath>
#include <cstdio>

#include "qmink/error.hpp"

namespace qmink {

namespace {

void require_positive(double x, const char* name) {
  if (!(x > 0.0)) {
    throw Error(ErrorKind::NonPositiveExponent, std::string(name) + " must be > 0, got " + std::to_string(x));
  }
}

std::string short_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace

ResidualReport one_param_residual(const DensityMatrix& rho, const BlockPartition& part, double p) {
  require_positive(p, "p");
  part.check(rho.matrix());
  const double lhs = std::pow(trace_power(partial_trace_first(rho.matrix(), part), p), 1.0 / p);
  const double rhs = trace_power(block_trace_matrix(mat_power(rho, p), part), 1.0 / p);
  return {p, std::nullopt, lhs, rhs, lhs - rhs};
}

ResidualReport two_param_residual(const DensityMatrix& rho, const BlockPartition& part, double p, double q) {
  require_positive(p, "p");
  require_positive(q, "q");
  part.check(rho.matrix());
  const double lhs = std::pow(trace_power(partial_trace_first(mat_power(rho, q), part), p / q), 1.0 / p);
  const double rhs = std::pow(trace_power(block_trace_matrix(mat_power(rho, p), part), q / p), 1.0 / q);
  return {p, q, lhs, rhs, lhs - rhs};
}

bool one_param_holds(const ResidualReport& report, double tol) {
  return report.p >= 1.0 ? report.residual <= tol : report.residual >= -tol;
}

double quadratic_residual_p2(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw Error(ErrorKind::DimensionMismatch, "p = 2 polynomial needs a 4x4 state, got " + std::to_string(rho.dim()));
  }
  // one-based names to keep the polynomial readable
  const auto& m = rho.matrix();
  auto e = [&](int i, int j) { return m(i - 1, j - 1); };
  const complex value = e(1, 1) * e(3, 3) + e(2, 2) * e(4, 4) - e(1, 3) * e(3, 1) + e(1, 2) * e(4, 3) -
                        e(1, 4) * e(4, 1) + e(2, 1) * e(3, 4) - e(2, 3) * e(3, 2) - e(2, 4) * e(4, 2);
  return value.real();
}

double x_state_p2_residual(const XStateParams& p) {
  const auto& d = p.diagonal;
  return d[0] * d[2] + d[1] * d[3] - std::norm(p.c14) - std::norm(p.c23);
}

double werner_two_param_closed_form(WernerParameter param, double p, double q) {
  require_positive(p, "p");
  require_positive(q, "q");
  const double r = param.value();
  const double l1 = std::max(0.0, (1 + 3 * r) / 4), l2 = std::max(0.0, (1 - r) / 4);
  auto mean_power = [&](double a) { return (std::pow(l1, a) + 3 * std::pow(l2, a)) / 2; };
  return std::pow(2.0, 1 / p) * std::pow(mean_power(q), 1 / q) -
         std::pow(2.0, 1 / q) * std::pow(mean_power(p), 1 / p);
}

std::string label(const ExponentPair& pq) {
  std::string s = "p=" + short_real(pq.p);
  if (pq.q) s += ",q=" + short_real(*pq.q);
  return s;
}

std::vector<double> find_sign_changes(std::span<const double> xs, std::span<const double> values,
                                      double zero_tol) {
  if (xs.size() != values.size()) throw Error(ErrorKind::DimensionMismatch, "grid and series lengths differ");
  auto sign = [&](double v) { return std::abs(v) <= zero_tol ? 0 : (v > 0 ? 1 : -1); };
  std::vector<double> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int s = sign(values[i]);
    if (s == 0) {
      if (i == 0 || sign(values[i - 1]) != 0) out.push_back(xs[i]);
      continue;
    }
    if (i + 1 < values.size()) {
      const int t = sign(values[i + 1]);
      if (t != 0 && t != s) {
        const double w = values[i] / (values[i] - values[i + 1]);
        out.push_back(xs[i] + w * (xs[i + 1] - xs[i]));
      }
    }
  }
  return out;
}

StateFamily StateFamily::werner_line() { return StateFamily(std::nullopt, BlockPartition(2, 2)); }

StateFamily StateFamily::fixed(DensityMatrix rho, BlockPartition part) {
  part.check(rho.matrix());
  return StateFamily(std::move(rho), part);
}

DensityMatrix StateFamily::at(double r) const {
  if (fixed_) return *fixed_;
  return werner(WernerParameter(r));
}

SweepResult sweep(const StateFamily& family, std::span<const double> r_grid,
                  std::span<const ExponentPair> pq_list, const SweepOptions& options) {
  if (pq_list.empty()) throw Error(ErrorKind::ParameterOutOfRange, "empty (p, q) list");
  if (family.is_werner() && r_grid.empty()) throw Error(ErrorKind::ParameterOutOfRange, "empty r grid");

  std::vector<std::optional<double>> points;
  if (family.is_werner()) {
    points.assign(r_grid.begin(), r_grid.end());
  } else {
    points.push_back(std::nullopt);
  }

  SweepResult result;
  result.rows.reserve(points.size() * pq_list.size());
  std::vector<std::vector<double>> series(pq_list.size());
  std::vector<double> quadratic, xs;
  for (const auto& r : points) {
    const DensityMatrix rho = family.at(r.value_or(0.0));
    std::optional<double> quad;
    if (options.with_quadratic) {
      quad = quadratic_residual_p2(rho);
      quadratic.push_back(*quad);
    }
    xs.push_back(r.value_or(0.0));
    for (std::size_t k = 0; k < pq_list.size(); ++k) {
      const auto& pq = pq_list[k];
      const ResidualReport rep = pq.q ? two_param_residual(rho, family.partition(), pq.p, *pq.q)
                                      : one_param_residual(rho, family.partition(), pq.p);
      result.rows.push_back({r, rep.p, rep.q, rep.lhs, rep.rhs, rep.residual, quad});
      series[k].push_back(rep.residual);
    }
  }

  if (family.is_werner()) {
    for (std::size_t k = 0; k < pq_list.size(); ++k) {
      result.crossings.push_back({label(pq_list[k]), find_sign_changes(xs, series[k], options.zero_tol)});
    }
    if (options.with_quadratic) {
      result.crossings.push_back({"quadratic_p2", find_sign_changes(xs, quadratic, options.zero_tol)});
    }
  }
  return result;
}

}  // namespace qmink
