#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmink/hermitian.hpp"
#include "qmink/minkowski.hpp"

namespace qmink::cli {

enum class Command { Sweep1, Sweep2, Info, Witness, Check, Tomogram };

/// Thrown for invalid user input; `flag` names the offending option.
class UsageError : public std::runtime_error {
 public:
  UsageError(std::string flag, const std::string& what)
      : std::runtime_error(flag + ": " + what), flag_(std::move(flag)) {}
  const std::string& flag() const noexcept { return flag_; }

 private:
  std::string flag_;
};

struct RunConfig {
  Command command = Command::Sweep1;

  // state source: Werner line, matrix file or X-state file
  bool werner = false;
  std::string matrix_file;
  std::string xstate_file;
  std::size_t pad = 0;
  std::size_t blocks = 0;  // 0: pick 2 when the dimension is even

  std::vector<double> r_grid;
  std::vector<ExponentPair> pq;

  // check
  std::size_t dim = 4;
  std::size_t rank = 0;  // 0: cycle 1..dim across samples
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  std::vector<double> record_p;
  std::vector<ExponentPair> record_pq;

  // info / tomogram
  std::size_t grid_n = 12;
  std::size_t refine = 400;
  std::array<double, 6> angles{};  // θ1 θ2 φ1 φ2 ψ1 ψ2
  bool bits = false;

  std::string out_path;
  bool emit_plot_script = false;
  double tol = kDefaultTolerance;
};

/// `start:end:count`, inclusive endpoints, count >= 1; a bare number is a
/// one-point grid and a comma list is taken verbatim. Endpoints are hit
/// exactly.
std::vector<double> parse_grid(const std::string& text, const std::string& flag);

/// Comma-separated positive decimals.
std::vector<double> parse_exponents(const std::string& text, const std::string& flag);

/// Comma-separated `p:q` pairs of positive decimals.
std::vector<ExponentPair> parse_pairs(const std::string& text, const std::string& flag);

/// QMINK_TOL when set and valid, otherwise the library default.
double default_tolerance();

/// Runs one command. Returns the process exit code: 0 success, 1 invalid
/// input, 2 an asserted invariant failed (check only).
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int run_sweep(const RunConfig& cfg, std::ostream& out);
int run_info(const RunConfig& cfg, std::ostream& out);
int run_witness(const RunConfig& cfg, std::ostream& out);
int run_tomogram(const RunConfig& cfg, std::ostream& out);
int run_check(const RunConfig& cfg, std::ostream& out);

/// Full command line entry point (argv[0] excluded).
int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmink::cli
