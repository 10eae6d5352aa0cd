#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include "internal.hpp"
#include "qmink/infotheory.hpp"
#include "qmink/matrix_io.hpp"
#include "qmink/rng.hpp"
#include "qmink/witnesses.hpp"

namespace qmink::cli {

namespace {

constexpr std::uint64_t kSeedStride = 0x9E3779B97F4A7C15ULL;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

std::string short_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

// Values are stored sign-flipped for lower bounds so that a single
// "worst <= bound" comparison covers both directions.
struct Assertion {
  std::string name;
  std::string op;
  double bound = 0.0;
  double worst = -INFINITY;
  bool lower = false;
  bool failed = false;
};

struct Record {
  std::string name;
  double min = INFINITY;
  double max = -INFINITY;
  std::size_t above = 0;
  std::size_t below = 0;
};

class Ledger {
 public:
  void at_most(const std::string& name, double value, double bound, std::size_t sample, const ComplexMatrix& rho) {
    observe(name, "<=", false, value, bound, sample, rho);
  }
  void at_least(const std::string& name, double value, double bound, std::size_t sample, const ComplexMatrix& rho) {
    observe(name, ">=", true, -value, -bound, sample, rho);
  }
  /// Boolean invariant; reported as a violation count bounded by zero.
  void holds(const std::string& name, bool ok, std::size_t sample, const ComplexMatrix& rho) {
    Assertion& a = find(asserts_, name);
    a.op = "<=";
    a.worst = std::max(a.worst, 0.0) + (ok ? 0.0 : 1.0);
    if (!ok) fail(a, sample, rho);
  }
  void record(const std::string& name, double value, double zero_tol) {
    Record& r = find(records_, name);
    r.min = std::min(r.min, value);
    r.max = std::max(r.max, value);
    if (value > zero_tol) ++r.above;
    if (value < -zero_tol) ++r.below;
  }

  bool failed() const { return counterexample_.has_value(); }

  void print(std::ostream& out) const {
    for (const auto& a : asserts_) {
      const double worst = a.lower ? -a.worst : a.worst;
      const double bound = a.lower ? -a.bound : a.bound;
      out << "ASSERT " << a.name << " worst=" << sci(worst + 0.0) << ' ' << a.op << ' ' << sci(bound + 0.0) << ' '
          << (a.failed ? "FAIL" : "ok") << '\n';
    }
    for (const auto& r : records_) {
      out << "RECORD " << r.name << " min=" << sci(r.min) << " max=" << sci(r.max) << " above_zero=" << r.above
          << " below_zero=" << r.below << '\n';
    }
    if (counterexample_) {
      out << "counterexample: " << counterexample_->name << " sample=" << counterexample_->sample << '\n';
      write_matrix(out, counterexample_->matrix);
    }
  }

 private:
  struct Counterexample {
    std::string name;
    std::size_t sample;
    ComplexMatrix matrix;
  };

  template <class T>
  static T& find(std::vector<T>& items, const std::string& name) {
    for (auto& x : items)
      if (x.name == name) return x;
    items.push_back(T{});
    items.back().name = name;
    return items.back();
  }

  void observe(const std::string& name, const char* op, bool lower, double value, double bound, std::size_t sample,
               const ComplexMatrix& rho) {
    Assertion& a = find(asserts_, name);
    a.op = op;
    a.lower = lower;
    a.bound = bound;
    a.worst = std::max(a.worst, value);
    if (!(value <= bound)) fail(a, sample, rho);
  }

  void fail(Assertion& a, std::size_t sample, const ComplexMatrix& rho) {
    a.failed = true;
    if (!counterexample_) counterexample_ = Counterexample{a.name, sample, rho};
  }

  std::vector<Assertion> asserts_;
  std::vector<Record> records_;
  std::optional<Counterexample> counterexample_;
};

TomographyAngles random_angles(Rng& rng) {
  const double two_pi = 2.0 * std::numbers::pi;
  std::array<double, 6> a{};
  for (auto& x : a) x = two_pi * rng.uniform();
  return TomographyAngles(a[0], a[1], a[2], a[3], a[4], a[5]);
}

double max_tomogram_deviation(const Tomogram& a, const Tomogram& b) {
  const auto x = a.as_array(), y = b.as_array();
  double worst = 0.0;
  for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::abs(x[k] - y[k]));
  return worst;
}

}  // namespace

int run_check(const RunConfig& cfg, std::ostream& out) {
  if (cfg.dim < 2) throw UsageError("--dim", "must be >= 2");
  if (cfg.samples < 1) throw UsageError("--samples", "must be >= 1");
  if (cfg.rank > cfg.dim) throw UsageError("--rank", "must not exceed --dim");
  if (cfg.pad != 0 && cfg.pad < cfg.dim) throw UsageError("--pad", "must be >= --dim");
  if (cfg.grid_n < 8) throw UsageError("--grid-n", "must be >= 8");
  const std::size_t work_dim = cfg.pad ? cfg.pad : cfg.dim;
  const BlockPartition part = choose_partition(cfg, work_dim);
  const bool two_qubit = part == BlockPartition(2, 2);
  const double tol = cfg.tol;
  const OptimizerSettings optimizer{cfg.grid_n, cfg.refine};

  const std::vector<double> asserted_p{1.0, 1.25, 1.5, 2.0};
  const std::vector<std::pair<double, double>> asserted_pq{{1.25, 1.0}, {1.5, 1.0}, {2.0, 1.0}};
  const std::vector<double> degenerate_p{0.5, 1.0, 1.5, 2.0, 3.0};

  Ledger ledger;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(i) * kSeedStride;
    const std::size_t rank = cfg.rank ? cfg.rank : 1 + i % cfg.dim;
    const DensityMatrix base = random_density(cfg.dim, rank, seed);
    const DensityMatrix rho = cfg.pad ? validate_density(zero_pad(base.matrix(), cfg.pad), tol) : base;
    const ComplexMatrix& m = rho.matrix();

    if (cfg.pad) {
      std::vector<double> expected = base.spectrum().eigenvalues;
      expected.resize(cfg.pad, 0.0);
      std::sort(expected.begin(), expected.end());
      double worst = 0.0;
      for (std::size_t k = 0; k < expected.size(); ++k)
        worst = std::max(worst, std::abs(expected[k] - rho.spectrum().eigenvalues[k]));
      ledger.at_most("padding_preserves_spectrum", worst, 1e-11, i, m);
    }

    const double tr = m.trace().real();
    ledger.at_most("partial_traces_preserve_trace",
                   std::max(std::abs(partial_trace_first(m, part).trace().real() - tr),
                            std::abs(block_trace_matrix(m, part).trace().real() - tr)),
                   1e-12, i, m);

    for (double p : asserted_p) {
      const auto one = one_param_residual(rho, part, p);
      ledger.at_most("one_param_residual p=" + short_real(p), one.residual, tol, i, m);
      const auto two = two_param_residual(rho, part, p, 1.0);
      ledger.at_most("reduction_q1 p=" + short_real(p), std::abs(two.residual - one.residual), 1e-10, i, m);
    }
    ledger.at_least("one_param_residual_reversed p=0.5", one_param_residual(rho, part, 0.5).residual, -tol, i, m);
    for (const auto& [p, q] : asserted_pq) {
      ledger.at_most("two_param_residual p=" + short_real(p) + ",q=" + short_real(q),
                     two_param_residual(rho, part, p, q).residual, tol, i, m);
    }
    for (double p : degenerate_p) {
      ledger.at_most("p_equals_q p=" + short_real(p), std::abs(two_param_residual(rho, part, p, p).residual), tol,
                     i, m);
    }

    for (double p : cfg.record_p) ledger.record("one_param_residual p=" + short_real(p),
                                                one_param_residual(rho, part, p).residual, tol);
    for (const auto& pq : cfg.record_pq) {
      ledger.record("two_param_residual " + label(pq), two_param_residual(rho, part, pq.p, *pq.q).residual, tol);
    }

    if (!two_qubit) continue;

    const InfoReport info = delta_info(rho, optimizer);
    ledger.at_most("quadratic_p2_identity",
                   std::abs(quadratic_residual_p2(rho) -
                            0.5 * (trace_power(partial_trace_first(m, part), 2.0) - trace_power(m, 2.0))),
                   1e-12, i, m);
    ledger.at_least("subadditivity i_q", info.i_q, -tol, i, m);
    ledger.at_least("delta_i", info.delta_i, -1e-6, i, m);

    Rng angle_rng(seed ^ 0x5DEECE66DULL);
    const TomographyAngles probe = random_angles(angle_rng);
    const Tomogram t = tomogram(rho, probe);
    ledger.at_most("tomogram_normalization", std::abs(t.uu + t.ud + t.du + t.dd - 1.0), 1e-10, i, m);
    ledger.at_least("optimizer_dominates_probe", info.i_t - tomographic_mutual_info(rho, probe), -1e-9, i, m);
    const double two_pi = 2.0 * std::numbers::pi;
    const double phi1 = probe.phi1() + two_pi * angle_rng.uniform();
    const double phi2 = probe.phi2() + two_pi * angle_rng.uniform();
    const TomographyAngles shifted(probe.theta1(), probe.theta2(), phi1, phi2, probe.psi1(), probe.psi2());
    ledger.record("phi_independence_deviation", max_tomogram_deviation(t, tomogram(rho, shifted)), 1e-10);

    const WitnessReport w = witness_report(rho);
    ledger.at_least("trace_norm_pt", w.trace_norm_pt, 1.0 - 1e-10, i, m);
    ledger.at_least("concurrence_lower", w.concurrence, -1e-10, i, m);
    ledger.at_most("concurrence_upper", w.concurrence, 1.0 + 1e-10, i, m);
    const double pt_min = eig_hermitian(partial_transpose_second(m, part)).eigenvalues.front();
    ledger.holds("ppt_consistency", (w.negativity <= 1e-10) == (pt_min >= -1e-9), i, m);
  }

  out << "check dim=" << cfg.dim << " pad=" << cfg.pad << " blocks=" << part.blocks()
      << " rank=" << (cfg.rank ? std::to_string(cfg.rank) : std::string("cycle")) << " samples=" << cfg.samples
      << " seed=" << cfg.seed << " tol=" << sci(tol) << '\n';
  ledger.print(out);
  out << "result: " << (ledger.failed() ? "FAIL" : "PASS") << '\n';
  return ledger.failed() ? 2 : 0;
}

}  // namespace qmink::cli
