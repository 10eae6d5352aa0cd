#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "internal.hpp"
#include "qmink/error.hpp"

namespace qmink::cli {

namespace {

// Raw flag text, converted after parsing so errors name the flag.
struct RawFlags {
  std::string r_sweep1 = "-0.3333333333333333:1:201";
  std::string r_sweep2 = "-0.3333333333333333:1:201";
  std::string r_info;
  std::string r_witness;
  std::string r_tomogram;
  std::size_t check_grid_n = 8;
  std::size_t check_refine = 100;
  std::string p;
  std::string pq;
  std::string record_p = "3,5,10,15";
  std::string record_pq = "2:1.5,1.5:2,3:1,5:2";
  std::optional<double> tol;
};

void add_state_source(CLI::App* sub, RunConfig& cfg, std::string& r_text) {
  sub->add_flag("--werner", cfg.werner, "Werner state family over the --r grid");
  sub->add_option("--file", cfg.matrix_file, "state from a matrix text file");
  sub->add_option("--xstate", cfg.xstate_file, "X state from a file: d1 d2 d3 d4 re14 im14 re23 im23");
  sub->add_option("--pad", cfg.pad, "zero-pad a --file state to this dimension");
  sub->add_option("--blocks", cfg.blocks, "blocks per side of the partition (default 2 for even dimensions)");
  sub->add_option("--r", r_text, "Werner grid start:end:count or a single value")->capture_default_str();
}

void add_output(CLI::App* sub, RunConfig& cfg, RawFlags& raw) {
  sub->add_option("--out", cfg.out_path, "write the CSV here instead of stdout");
  sub->add_flag("--emit-plot-script", cfg.emit_plot_script, "also write <out>.plot.py (matplotlib)");
  sub->add_option("--tol", raw.tol, "validation and assertion tolerance (default QMINK_TOL or 1e-9)");
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::Sweep1:
      case Command::Sweep2: return run_sweep(cfg, out);
      case Command::Info: return run_info(cfg, out);
      case Command::Witness: return run_witness(cfg, out);
      case Command::Tomogram: return run_tomogram(cfg, out);
      case Command::Check: {
        if (cfg.out_path.empty()) return run_check(cfg, out);
        std::ostringstream text;
        const int code = run_check(cfg, text);
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) throw UsageError("--out", "cannot write " + cfg.out_path);
        f << text.str();
        out << text.str();
        return code;
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minkowski-type trace inequalities, information and entanglement checks for qudit states", "qmink"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.tol = default_tolerance();
  RawFlags raw;

  auto* sweep1 = app.add_subcommand("sweep1", "one-parameter residual sweep (CSV)");
  add_state_source(sweep1, cfg, raw.r_sweep1);
  sweep1->add_option("--p", raw.p, "comma-separated exponents")->default_val("1,2,3,4,5,6,10,15");
  add_output(sweep1, cfg, raw);

  auto* sweep2 = app.add_subcommand("sweep2", "two-parameter residual sweep (CSV)");
  add_state_source(sweep2, cfg, raw.r_sweep2);
  sweep2->add_option("--pq", raw.pq, "comma-separated p:q pairs")->default_val("1.5:1,2:1,2:1.5");
  add_output(sweep2, cfg, raw);

  auto* info = app.add_subcommand("info", "entropies, I_q, I_t, delta I and witnesses (CSV)");
  add_state_source(info, cfg, raw.r_info);
  info->add_option("--grid-n", cfg.grid_n, "angle grid points per axis")->capture_default_str();
  info->add_option("--refine", cfg.refine, "Nelder-Mead evaluation budget")->capture_default_str();
  info->add_flag("--bits", cfg.bits, "report entropies in bits");
  add_output(info, cfg, raw);

  auto* witness = app.add_subcommand("witness", "partial-transpose trace norm, negativity, concurrence (CSV)");
  add_state_source(witness, cfg, raw.r_witness);
  add_output(witness, cfg, raw);

  auto* tomo = app.add_subcommand("tomogram", "spin tomogram at given angles");
  add_state_source(tomo, cfg, raw.r_tomogram);
  tomo->add_option("--theta1", cfg.angles[0]);
  tomo->add_option("--theta2", cfg.angles[1]);
  tomo->add_option("--phi1", cfg.angles[2]);
  tomo->add_option("--phi2", cfg.angles[3]);
  tomo->add_option("--psi1", cfg.angles[4]);
  tomo->add_option("--psi2", cfg.angles[5]);
  tomo->add_flag("--bits", cfg.bits, "report entropies in bits");
  add_output(tomo, cfg, raw);

  auto* check = app.add_subcommand("check", "property checks over seeded random states");
  check->add_option("--dim", cfg.dim, "state dimension")->capture_default_str();
  check->add_option("--rank", cfg.rank, "state rank (0 cycles 1..dim)")->capture_default_str();
  check->add_option("--samples", cfg.samples)->capture_default_str();
  check->add_option("--seed", cfg.seed)->capture_default_str();
  check->add_option("--pad", cfg.pad, "zero-pad every sample to this dimension");
  check->add_option("--blocks", cfg.blocks, "blocks per side (default 2 for even dimensions)");
  check->add_option("--record-p", raw.record_p, "record-only one-parameter exponents")->capture_default_str();
  check->add_option("--record-pq", raw.record_pq, "record-only p:q pairs")->capture_default_str();
  check->add_option("--grid-n", raw.check_grid_n, "angle grid for the delta I check")->capture_default_str();
  check->add_option("--refine", raw.check_refine, "Nelder-Mead budget for the delta I check")->capture_default_str();
  check->add_option("--out", cfg.out_path, "also write the summary here");
  check->add_option("--tol", raw.tol, "assertion tolerance (default QMINK_TOL or 1e-9)");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (raw.tol) {
      if (!(*raw.tol > 0.0)) throw UsageError("--tol", "must be > 0");
      cfg.tol = *raw.tol;
    }
    std::string r_text;
    if (sweep1->parsed()) {
      cfg.command = Command::Sweep1;
      r_text = raw.r_sweep1;
      for (double p : parse_exponents(raw.p, "--p")) cfg.pq.push_back({p, std::nullopt});
    } else if (sweep2->parsed()) {
      cfg.command = Command::Sweep2;
      r_text = raw.r_sweep2;
      cfg.pq = parse_pairs(raw.pq, "--pq");
    } else if (info->parsed()) {
      cfg.command = Command::Info;
      r_text = raw.r_info;
    } else if (witness->parsed()) {
      cfg.command = Command::Witness;
      r_text = raw.r_witness;
    } else if (tomo->parsed()) {
      cfg.command = Command::Tomogram;
      r_text = raw.r_tomogram;
    } else {
      cfg.command = Command::Check;
      cfg.grid_n = raw.check_grid_n;
      cfg.refine = raw.check_refine;
      cfg.record_p = raw.record_p.empty() ? std::vector<double>{} : parse_exponents(raw.record_p, "--record-p");
      cfg.record_pq = raw.record_pq.empty() ? std::vector<ExponentPair>{} : parse_pairs(raw.record_pq, "--record-pq");
    }
    if (cfg.command != Command::Check && cfg.werner) {
      if (r_text.empty()) throw UsageError("--r", "a Werner run needs an r grid");
      cfg.r_grid = parse_grid(r_text, "--r");
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return run(cfg, out, err);
}

}  // namespace qmink::cli
