#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

namespace qmink::optim {

struct NelderMeadOptions {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  /// Initial simplex: x0 plus one vertex per axis displaced by `step`.
  double step = 0.1;
  /// Hard budget on objective evaluations, including the initial simplex.
  std::size_t max_evaluations = 400;
  /// Stop early once best and worst vertex values differ by at most this.
  double f_tolerance = 1e-15;
};

struct NelderMeadResult {
  std::vector<double> x;
  double fx = 0.0;
  std::size_t evaluations = 0;
};

/// Minimizes f: R^n -> R. Deterministic; ties in vertex ordering keep the
/// earlier vertex first.
template <class F>
NelderMeadResult nelder_mead(F&& f, std::vector<double> x0, const NelderMeadOptions& opt = {}) {
  const std::size_t n = x0.size();
  NelderMeadResult best{x0, 0.0, 0};
  std::size_t evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };

  std::vector<std::vector<double>> pts(n + 1, x0);
  std::vector<double> fv(n + 1);
  fv[0] = eval(x0);
  best.fx = fv[0];
  for (std::size_t i = 0; i < n && evals < opt.max_evaluations; ++i) {
    pts[i + 1][i] += opt.step;
    fv[i + 1] = eval(pts[i + 1]);
  }
  if (evals < n + 1) {
    // budget smaller than the simplex; report the best vertex evaluated
    for (std::size_t i = 1; i < evals; ++i)
      if (fv[i] < best.fx) best = {pts[i], fv[i], 0};
    best.evaluations = evals;
    return best;
  }

  std::vector<std::size_t> order(n + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    std::vector<std::vector<double>> p2(n + 1);
    std::vector<double> f2(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      p2[k] = std::move(pts[order[k]]);
      f2[k] = fv[order[k]];
    }
    pts.swap(p2);
    fv.swap(f2);
  };
  auto affine = [&](const std::vector<double>& base, const std::vector<double>& toward, double t) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = base[i] + t * (toward[i] - base[i]);
    return out;
  };

  while (evals < opt.max_evaluations) {
    sort_simplex();
    if (fv[n] - fv[0] <= opt.f_tolerance) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) centroid[i] += pts[k][i] / static_cast<double>(n);

    const auto xr = affine(centroid, pts[n], -opt.reflection);
    const double fr = eval(xr);
    if (fr < fv[0]) {
      if (evals >= opt.max_evaluations) {
        pts[n] = xr;
        fv[n] = fr;
        break;
      }
      const auto xe = affine(centroid, xr, opt.expansion);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[n] = xe;
        fv[n] = fe;
      } else {
        pts[n] = xr;
        fv[n] = fr;
      }
      continue;
    }
    if (fr < fv[n - 1]) {
      pts[n] = xr;
      fv[n] = fr;
      continue;
    }
    if (evals >= opt.max_evaluations) break;
    const bool outside = fr < fv[n];
    const auto xc = outside ? affine(centroid, xr, opt.contraction) : affine(centroid, pts[n], opt.contraction);
    const double fc = eval(xc);
    if (fc < (outside ? fr : fv[n])) {
      pts[n] = xc;
      fv[n] = fc;
      continue;
    }
    for (std::size_t k = 1; k <= n && evals < opt.max_evaluations; ++k) {
      pts[k] = affine(pts[0], pts[k], opt.shrink);
      fv[k] = eval(pts[k]);
    }
  }

  const auto it = std::min_element(fv.begin(), fv.end());
  const auto k = static_cast<std::size_t>(it - fv.begin());
  return {pts[k], fv[k], evals};
}

}  // namespace qmink::optim
