#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "internal.hpp"
#include "qmink/error.hpp"
#include "qmink/infotheory.hpp"
#include "qmink/witnesses.hpp"

namespace qmink::cli {

namespace {

// Residual curves grouped by (p, q) against r, with the r = 1/3 marker.
constexpr const char* kSweepPlot = R"PY(import csv, sys
from collections import defaultdict
import matplotlib.pyplot as plt

path = sys.argv[1] if len(sys.argv) > 1 else __file__[:-len(".plot.py")]
series = defaultdict(lambda: ([], []))
with open(path) as f:
    rows = csv.DictReader(line for line in f if not line.startswith("#"))
    for row in rows:
        if not row["r"]:
            continue
        key = "p=" + row["p"] + ("" if not row["q"] else ", q=" + row["q"])
        series[key][0].append(float(row["r"]))
        series[key][1].append(float(row["residual"]))
for key, (r, res) in series.items():
    plt.plot(r, res, label=key)
plt.axvline(1 / 3, linestyle="--", color="gray")
plt.xlabel("r")
plt.ylabel("residual (lhs - rhs)")
plt.legend()
plt.savefig(path + ".png", dpi=150)
)PY";

constexpr const char* kInfoPlot = R"PY(import csv, sys
import matplotlib.pyplot as plt

path = sys.argv[1] if len(sys.argv) > 1 else __file__[:-len(".plot.py")]
with open(path) as f:
    rows = [row for row in csv.DictReader(line for line in f if not line.startswith("#"))]
r = [float(row["r"]) for row in rows]
for column, style in (("delta_i", "k-"), ("C", "-"), ("N", "-")):
    plt.plot(r, [float(row[column]) for row in rows], style, label=column)
plt.xlabel("r")
plt.legend()
plt.savefig(path + ".png", dpi=150)
)PY";

constexpr const char* kWitnessPlot = R"PY(import csv, sys
import matplotlib.pyplot as plt

path = sys.argv[1] if len(sys.argv) > 1 else __file__[:-len(".plot.py")]
with open(path) as f:
    rows = [row for row in csv.DictReader(line for line in f if not line.startswith("#"))]
r = [float(row["r"]) for row in rows]
for column in ("trace_norm_pt", "negativity", "concurrence"):
    plt.plot(r, [float(row[column]) for row in rows], label=column)
plt.axvline(1 / 3, linestyle="--", color="gray")
plt.xlabel("r")
plt.legend()
plt.savefig(path + ".png", dpi=150)
)PY";

void require_werner_grid(const RunConfig& cfg) {
  if (cfg.werner && cfg.r_grid.empty()) throw UsageError("--r", "a Werner run needs an r grid");
  for (double r : cfg.r_grid) {
    try {
      WernerParameter{r};
    } catch (const Error& e) {
      throw UsageError("--r", e.what());
    }
  }
}

bool contains_p2(const std::vector<ExponentPair>& pq) {
  for (const auto& x : pq)
    if (x.p == 2.0 && !x.q) return true;
  return false;
}

std::string join(const std::vector<double>& xs) {
  if (xs.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + csv_real(xs[i]);
  return s;
}

}  // namespace

int run_sweep(const RunConfig& cfg, std::ostream& out) {
  require_single_source(cfg);
  require_werner_grid(cfg);
  if (cfg.pq.empty()) throw UsageError(cfg.command == Command::Sweep1 ? "--p" : "--pq", "empty exponent list");

  std::optional<StateFamily> family;
  if (cfg.werner) {
    family = StateFamily::werner_line();
  } else {
    auto loaded = load_state(cfg);
    family = StateFamily::fixed(std::move(loaded.rho), loaded.part);
  }
  const bool four_by_four = family->partition() == BlockPartition(2, 2);
  SweepOptions options;
  options.with_quadratic = cfg.command == Command::Sweep1 && contains_p2(cfg.pq) && four_by_four;
  const SweepResult result = sweep(*family, cfg.r_grid, cfg.pq, options);

  std::ostringstream csv;
  csv << "r,p,q,lhs,rhs,residual" << (options.with_quadratic ? ",quadratic_p2" : "") << '\n';
  for (const auto& row : result.rows) {
    csv << csv_optional(row.r) << ',' << csv_real(row.p) << ',' << csv_optional(row.q) << ',' << csv_real(row.lhs)
        << ',' << csv_real(row.rhs) << ',' << csv_real(row.residual);
    if (options.with_quadratic) csv << ',' << csv_optional(row.quadratic_p2);
    csv << '\n';
  }
  for (const auto& c : result.crossings) csv << "# sign_changes " << c.series << ": " << join(c.crossings) << '\n';
  for (const auto& pq : cfg.pq) {
    if (!pq.q && pq.p < 1.0) csv << "# " << label(pq) << " reversed=true\n";
  }
  deliver(cfg, csv.str(), out, kSweepPlot);
  return 0;
}

int run_info(const RunConfig& cfg, std::ostream& out) {
  require_single_source(cfg);
  require_werner_grid(cfg);
  if (cfg.grid_n < 8) throw UsageError("--grid-n", "must be >= 8");
  const OptimizerSettings settings{cfg.grid_n, cfg.refine};
  const double scale = cfg.bits ? 1.0 / std::numbers::ln2 : 1.0;

  std::ostringstream csv;
  csv << "r,s1,s2,s12,i_q,i_t,delta_i,N,C\n";
  auto emit = [&](const std::optional<double>& r, const DensityMatrix& rho) {
    if (rho.dim() != 4) throw UsageError("--file", "info needs a 4x4 state");
    const InfoReport info = delta_info(rho, settings);
    const WitnessReport w = witness_report(rho);
    csv << csv_optional(r) << ',' << csv_real(info.s1 * scale) << ',' << csv_real(info.s2 * scale) << ','
        << csv_real(info.s12 * scale) << ',' << csv_real(info.i_q * scale) << ',' << csv_real(info.i_t * scale)
        << ',' << csv_real(info.delta_i * scale) << ',' << csv_real(w.trace_norm_pt) << ','
        << csv_real(w.concurrence) << '\n';
  };
  if (cfg.werner) {
    for (double r : cfg.r_grid) emit(r, werner(WernerParameter(r)));
  } else {
    emit(std::nullopt, load_state(cfg).rho);
  }
  csv << "# units " << (cfg.bits ? "bits" : "nats") << "; N is the partial-transpose trace norm\n";
  deliver(cfg, csv.str(), out, kInfoPlot);
  return 0;
}

int run_witness(const RunConfig& cfg, std::ostream& out) {
  require_single_source(cfg);
  require_werner_grid(cfg);
  std::ostringstream csv;
  csv << "r,trace_norm_pt,negativity,concurrence\n";
  auto emit = [&](const std::optional<double>& r, const DensityMatrix& rho) {
    if (rho.dim() != 4) throw UsageError("--file", "witness needs a 4x4 state");
    const WitnessReport w = witness_report(rho);
    csv << csv_optional(r) << ',' << csv_real(w.trace_norm_pt) << ',' << csv_real(w.negativity) << ','
        << csv_real(w.concurrence) << '\n';
  };
  if (cfg.werner) {
    for (double r : cfg.r_grid) emit(r, werner(WernerParameter(r)));
  } else {
    emit(std::nullopt, load_state(cfg).rho);
  }
  deliver(cfg, csv.str(), out, kWitnessPlot);
  return 0;
}

int run_tomogram(const RunConfig& cfg, std::ostream& out) {
  require_single_source(cfg);
  require_werner_grid(cfg);
  if (cfg.werner && cfg.r_grid.size() != 1) throw UsageError("--r", "tomogram takes a single r value");
  const DensityMatrix rho = cfg.werner ? werner(WernerParameter(cfg.r_grid.front())) : load_state(cfg).rho;
  if (rho.dim() != 4) throw UsageError("--file", "tomogram needs a 4x4 state");
  const auto& a = cfg.angles;
  const TomographyAngles angles(a[0], a[1], a[2], a[3], a[4], a[5]);
  const Tomogram t = tomogram(rho, angles);
  const Marginals m = marginals(t);
  const double scale = cfg.bits ? 1.0 / std::numbers::ln2 : 1.0;
  const double h1 = shannon_entropy(m.first), h2 = shannon_entropy(m.second);
  const double h12 = shannon_entropy(t.as_array());

  std::ostringstream csv;
  csv << "w_uu,w_ud,w_du,w_dd,W1_u,W1_d,W2_u,W2_d,H1,H2,H12,I\n"
      << csv_real(t.uu) << ',' << csv_real(t.ud) << ',' << csv_real(t.du) << ',' << csv_real(t.dd) << ','
      << csv_real(m.first[0]) << ',' << csv_real(m.first[1]) << ',' << csv_real(m.second[0]) << ','
      << csv_real(m.second[1]) << ',' << csv_real(h1 * scale) << ',' << csv_real(h2 * scale) << ','
      << csv_real(h12 * scale) << ',' << csv_real((h1 + h2 - h12) * scale) << '\n';
  deliver(cfg, csv.str(), out, "");
  return 0;
}

}  // namespace qmink::cli
