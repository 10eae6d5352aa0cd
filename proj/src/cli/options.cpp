#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "internal.hpp"
#include "qmink/error.hpp"
#include "qmink/matrix_io.hpp"

namespace qmink::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

double parse_real(const std::string& text, const std::string& flag) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw UsageError(flag, "'" + text + "' is not a decimal number");
  }
  return value;
}

double parse_positive(const std::string& text, const std::string& flag) {
  const double v = parse_real(text, flag);
  if (!(v > 0.0)) throw UsageError(flag, "exponent '" + text + "' must be > 0");
  return v;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text, const std::string& flag) {
  if (text.find(',') != std::string::npos) {
    std::vector<double> points;
    for (const auto& part : split(text, ',')) points.push_back(parse_real(part, flag));
    return points;
  }
  const auto parts = split(text, ':');
  if (parts.size() == 1) return {parse_real(parts[0], flag)};
  if (parts.size() != 3) throw UsageError(flag, "grid must be start:end:count, got '" + text + "'");
  const double a = parse_real(parts[0], flag);
  const double b = parse_real(parts[1], flag);
  long long count = 0;
  const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), count);
  if (ec != std::errc() || ptr != parts[2].data() + parts[2].size() || count < 1) {
    throw UsageError(flag, "grid count must be an integer >= 1, got '" + parts[2] + "'");
  }
  if (count == 1) return {a};
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (long long k = 0; k < count; ++k) {
    grid[static_cast<std::size_t>(k)] = a + (b - a) * static_cast<double>(k) / static_cast<double>(count - 1);
  }
  grid.back() = b;
  return grid;
}

std::vector<double> parse_exponents(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_positive(part, flag));
  if (out.empty()) throw UsageError(flag, "empty list");
  return out;
}

std::vector<ExponentPair> parse_pairs(const std::string& text, const std::string& flag) {
  std::vector<ExponentPair> out;
  for (const auto& part : split(text, ',')) {
    const auto pq = split(part, ':');
    if (pq.size() != 2) throw UsageError(flag, "expected p:q, got '" + part + "'");
    out.push_back({parse_positive(pq[0], flag), parse_positive(pq[1], flag)});
  }
  if (out.empty()) throw UsageError(flag, "empty list");
  return out;
}

double default_tolerance() {
  if (const char* env = std::getenv("QMINK_TOL")) {
    try {
      const double v = parse_real(env, "QMINK_TOL");
      if (v > 0.0) return v;
    } catch (const UsageError&) {
    }
  }
  return kDefaultTolerance;
}

void require_single_source(const RunConfig& cfg) {
  const int sources = int(cfg.werner) + int(!cfg.matrix_file.empty()) + int(!cfg.xstate_file.empty());
  if (sources != 1) throw UsageError("--werner/--file/--xstate", "give exactly one state source");
}

BlockPartition choose_partition(const RunConfig& cfg, std::size_t dim) {
  try {
    if (cfg.blocks != 0) return BlockPartition::for_dim(dim, cfg.blocks);
  } catch (const Error& e) {
    throw UsageError("--blocks", e.what());
  }
  if (dim % 2 != 0) {
    throw UsageError("--blocks", "dimension " + std::to_string(dim) + " is odd; give the block count explicitly");
  }
  return BlockPartition::for_dim(dim, 2);
}

LoadedState load_state(const RunConfig& cfg) {
  std::optional<DensityMatrix> rho;
  if (!cfg.matrix_file.empty()) {
    ComplexMatrix m;
    try {
      m = read_matrix_file(cfg.matrix_file);
    } catch (const Error& e) {
      throw UsageError("--file", e.what());
    }
    if (cfg.pad != 0) {
      try {
        m = zero_pad(m, cfg.pad);
      } catch (const Error& e) {
        throw UsageError("--pad", e.what());
      }
    }
    try {
      rho = validate_density(m, cfg.tol);
    } catch (const Error& e) {
      throw UsageError("--file", e.what());
    }
  } else {
    std::ifstream in(cfg.xstate_file);
    if (!in) throw UsageError("--xstate", "cannot open " + cfg.xstate_file);
    std::array<double, 8> v{};
    for (auto& x : v)
      if (!(in >> x)) throw UsageError("--xstate", "expected 8 numbers: d1 d2 d3 d4 re14 im14 re23 im23");
    XStateParams p{{v[0], v[1], v[2], v[3]}, complex(v[4], v[5]), complex(v[6], v[7])};
    try {
      rho = x_state(p, cfg.tol);
    } catch (const Error& e) {
      throw UsageError("--xstate", e.what());
    }
    if (cfg.pad != 0) throw UsageError("--pad", "padding applies to --file states only");
  }
  BlockPartition part = choose_partition(cfg, rho->dim());
  return {std::move(*rho), part};
}

std::string csv_real(double x) { return format_real(x); }

std::string csv_optional(const std::optional<double>& x) { return x ? format_real(*x) : std::string(); }

void deliver(const RunConfig& cfg, const std::string& csv, std::ostream& out, const std::string& plot_script) {
  if (cfg.out_path.empty()) {
    if (cfg.emit_plot_script) throw UsageError("--emit-plot-script", "needs --out");
    out << csv;
    return;
  }
  {
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw UsageError("--out", "cannot write " + cfg.out_path);
    f << csv;
  }
  if (cfg.emit_plot_script && !plot_script.empty()) {
    std::ofstream f(cfg.out_path + ".plot.py", std::ios::binary);
    if (!f) throw UsageError("--out", "cannot write " + cfg.out_path + ".plot.py");
    f << plot_script;
  }
  out << "wrote " << cfg.out_path << '\n';
}

}  // namespace qmink::cli
