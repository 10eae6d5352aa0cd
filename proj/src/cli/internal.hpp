#pragma once

#include <iosfwd>
#include <string>

#include "qmink/cli.hpp"
#include "qmink/states.hpp"

namespace qmink::cli {

/// A file-backed state after optional padding, with its partition.
struct LoadedState {
  DensityMatrix rho;
  BlockPartition part;
};

/// Enforces exactly one of --werner / --file / --xstate.
void require_single_source(const RunConfig& cfg);

LoadedState load_state(const RunConfig& cfg);

BlockPartition choose_partition(const RunConfig& cfg, std::size_t dim);

/// Writes the CSV to --out (or `out` when none) and the optional plot script.
void deliver(const RunConfig& cfg, const std::string& csv, std::ostream& out, const std::string& plot_script);

std::string csv_real(double x);
std::string csv_optional(const std::optional<double>& x);

}  // namespace qmink::cli
