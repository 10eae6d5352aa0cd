#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qmink/error.hpp"
#include "qmink/minkowski.hpp"
#include "qmink/rng.hpp"
#include "qmink/states.hpp"

using namespace qmink;

namespace {

const BlockPartition kQubits(2, 2);

std::vector<double> r_grid(std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t k = 0; k < n; ++k) g[k] = -1.0 / 3.0 + (4.0 / 3.0) * static_cast<double>(k) / (n - 1);
  g.back() = 1.0;
  return g;
}

DensityMatrix diagonal_state(const std::array<double, 4>& d) {
  ComplexMatrix m(4);
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = d[i];
  return validate_density(m);
}

// ½(Tr[(a00 + a11)²] − Tr ρ²) with plain loops
double quadratic_oracle(const ComplexMatrix& m) {
  complex t1[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) t1[i][j] = m(i, j) + m(i + 2, j + 2);
  complex tr_t1_sq = 0.0, tr_rho_sq = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) tr_t1_sq += t1[i][k] * t1[k][i];
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) tr_rho_sq += m(i, k) * m(k, i);
  return 0.5 * (tr_t1_sq - tr_rho_sq).real();
}

// From λ1 = (1+3r)/4 and a triple λ2 = (1−r)/4:
//   Σ a_ii(q) = ((λ1^q + 3λ2^q)/2)·I₂ and B(p) = ((λ1^p + 3λ2^p)/2)·I₂.
double werner_two_param_oracle(double r, double p, double q) {
  const double l1 = (1 + 3 * r) / 4, l2 = (1 - r) / 4;
  const double sq = (std::pow(l1, q) + 3 * std::pow(l2, q)) / 2;
  const double sp = (std::pow(l1, p) + 3 * std::pow(l2, p)) / 2;
  const double lhs = std::pow(2 * std::pow(sq, p / q), 1 / p);
  const double rhs = std::pow(2 * std::pow(sp, q / p), 1 / q);
  return lhs - rhs;
}

XStateParams random_x_state(std::uint64_t seed) {
  Rng rng(seed);
  std::array<double, 4> d{};
  double sum = 0.0;
  for (auto& x : d) sum += (x = 0.05 + rng.uniform());
  for (auto& x : d) x /= sum;
  XStateParams p;
  p.diagonal = d;
  const double a = 0.99 * std::sqrt(d[0] * d[3]) * rng.uniform();
  const double b = 0.99 * std::sqrt(d[1] * d[2]) * rng.uniform();
  p.c14 = std::polar(a, 2 * std::numbers::pi * rng.uniform());
  p.c23 = std::polar(b, 2 * std::numbers::pi * rng.uniform());
  return p;
}

}  // namespace

TEST_CASE("one_param_residual on a classical (diagonal) state") {
  const std::array<double, 4> d{0.1, 0.2, 0.3, 0.4};
  const DensityMatrix rho = diagonal_state(d);
  for (double p : {0.5, 1.0, 1.5, 2.0, 3.0, 10.0}) {
    const double lhs = std::pow(std::pow(d[0] + d[2], p) + std::pow(d[1] + d[3], p), 1 / p);
    const double rhs = std::pow(std::pow(d[0], p) + std::pow(d[1], p), 1 / p) +
                       std::pow(std::pow(d[2], p) + std::pow(d[3], p), 1 / p);
    const ResidualReport rep = one_param_residual(rho, kQubits, p);
    CHECK(rep.p == p);
    CHECK_FALSE(rep.q.has_value());
    CHECK(rep.lhs == doctest::Approx(lhs).epsilon(1e-13));
    CHECK(rep.rhs == doctest::Approx(rhs).epsilon(1e-13));
    CHECK(rep.residual == doctest::Approx(lhs - rhs).epsilon(1e-12));
  }
}

TEST_CASE("one_param_residual at p = 1 vanishes") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const DensityMatrix rho = random_density(4, 1 + seed % 4, seed);
    CHECK(std::abs(one_param_residual(rho, kQubits, 1.0).residual) <= 1e-12);
  }
}

TEST_CASE("one_param_residual on Werner at p = 2") {
  for (double r : r_grid(201)) {
    const ResidualReport rep = one_param_residual(werner(WernerParameter(r)), kQubits, 2.0);
    CHECK(std::abs(rep.lhs - std::sqrt(0.5)) <= 1e-10);
    CHECK(std::abs(rep.rhs - std::sqrt((1 + 3 * r * r) / 2)) <= 1e-10);
    CHECK(rep.residual <= 1e-12);
  }
  CHECK(std::abs(one_param_residual(werner(WernerParameter(0.0)), kQubits, 2.0).residual) <= 1e-10);
}

TEST_CASE("one_param_holds") {
  CHECK(one_param_holds({2.0, std::nullopt, 1.0, 1.5, -0.5}, 1e-9));
  CHECK_FALSE(one_param_holds({2.0, std::nullopt, 1.5, 1.0, 0.5}, 1e-9));
  CHECK(one_param_holds({0.5, std::nullopt, 1.5, 1.0, 0.5}, 1e-9));
  CHECK_FALSE(one_param_holds({0.5, std::nullopt, 1.0, 1.5, -0.5}, 1e-9));
}

TEST_CASE("exponents must be positive") {
  const DensityMatrix rho = werner(WernerParameter(0.5));
  CHECK_THROWS_AS(one_param_residual(rho, kQubits, 0.0), Error);
  CHECK_THROWS_AS(two_param_residual(rho, kQubits, 2.0, -1.0), Error);
}

TEST_CASE("partition must fit the state") {
  CHECK_THROWS_AS(one_param_residual(random_density(6, 3, 1), kQubits, 2.0), Error);
  CHECK_NOTHROW(one_param_residual(random_density(6, 3, 1), BlockPartition(2, 3), 2.0));
  CHECK_NOTHROW(one_param_residual(random_density(6, 3, 1), BlockPartition(3, 2), 2.0));
}

TEST_CASE("two_param_residual with q = 1 reduces to one_param_residual") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const DensityMatrix rho = random_density(4, 1 + seed % 4, seed);
    for (double p : {1.0, 1.25, 1.5, 2.0}) {
      CHECK(std::abs(two_param_residual(rho, kQubits, p, 1.0).residual -
                     one_param_residual(rho, kQubits, p).residual) <= 1e-10);
    }
  }
}

TEST_CASE("two_param_residual with p = q vanishes") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const DensityMatrix rho = random_density(4, 1 + seed % 4, seed);
    for (double p : {0.5, 1.0, 2.0, 3.0}) CHECK(std::abs(two_param_residual(rho, kQubits, p, p).residual) <= 1e-9);
  }
}

TEST_CASE("two_param_residual on Werner matches the spectral oracle") {
  for (double r : r_grid(201)) {
    const DensityMatrix w = werner(WernerParameter(r));
    for (auto [p, q] : {std::pair{1.5, 1.0}, {2.0, 1.5}, {2.0, 1.0}, {3.0, 2.0}}) {
      const double want = werner_two_param_oracle(r, p, q);
      CHECK(std::abs(two_param_residual(w, kQubits, p, q).residual - want) <= 1e-9);
      CHECK(std::abs(werner_two_param_closed_form(WernerParameter(r), p, q) - want) <= 1e-12);
    }
  }
}

TEST_CASE("quadratic_residual_p2 equals the trace identity on random states") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const DensityMatrix rho = random_density(4, 1 + seed % 4, seed);
    CHECK(std::abs(quadratic_residual_p2(rho) - quadratic_oracle(rho.matrix())) <= 1e-12);
  }
  CHECK_THROWS_AS(quadratic_residual_p2(random_density(3, 3, 1)), Error);
}

TEST_CASE("quadratic_residual_p2 on Werner is (1 - 3r^2)/8") {
  for (double r : r_grid(201)) {
    CHECK(std::abs(quadratic_residual_p2(werner(WernerParameter(r))) - (1 - 3 * r * r) / 8) <= 1e-12);
  }
}

TEST_CASE("x_state_p2_residual") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const XStateParams p = random_x_state(seed);
    const double direct = p.diagonal[0] * p.diagonal[2] + p.diagonal[1] * p.diagonal[3] - std::norm(p.c14) -
                          std::norm(p.c23);
    CHECK(std::abs(x_state_p2_residual(p) - direct) <= 1e-15);
    CHECK(std::abs(x_state_p2_residual(p) - quadratic_residual_p2(x_state(p))) <= 1e-12);
  }
}

TEST_CASE("werner_two_param_closed_form checks its inputs") {
  CHECK_THROWS_AS(werner_two_param_closed_form(WernerParameter(0.2), 0.0, 1.0), Error);
}

TEST_CASE("label") {
  CHECK(label({2.0, std::nullopt}) == "p=2");
  CHECK(label({1.5, 1.0}) == "p=1.5,q=1");
}

TEST_CASE("find_sign_changes") {
  const std::vector<double> xs{0.0, 1.0, 2.0, 3.0, 4.0};

  SUBCASE("interpolated crossing") {
    const std::vector<double> v{1.0, 0.5, -0.5, -1.0, -2.0};
    const auto c = find_sign_changes(xs, v);
    REQUIRE(c.size() == 1);
    CHECK(c[0] == doctest::Approx(1.5));
  }
  SUBCASE("no crossing") {
    const std::vector<double> v{1.0, 2.0, 3.0, 4.0, 5.0};
    CHECK(find_sign_changes(xs, v).empty());
  }
  SUBCASE("two crossings") {
    const std::vector<double> v{1.0, -1.0, -1.0, 3.0, 1.0};
    const auto c = find_sign_changes(xs, v);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == doctest::Approx(0.5));
    CHECK(c[1] == doctest::Approx(2.25));
  }
  SUBCASE("a run of exact zeros is one touch") {
    const std::vector<double> v{1.0, 0.0, 0.0, -1.0, -1.0};
    const auto c = find_sign_changes(xs, v);
    REQUIRE(c.size() == 1);
    CHECK(c[0] == 1.0);
  }
  SUBCASE("length mismatch") {
    const std::vector<double> v{1.0};
    CHECK_THROWS_AS(find_sign_changes(xs, v), Error);
  }
}

TEST_CASE("sweep over the Werner line") {
  const std::vector<double> grid = r_grid(201);
  const std::vector<ExponentPair> pq{{2.0, std::nullopt}, {2.0, 1.0}};
  SweepOptions opt;
  opt.with_quadratic = true;
  const SweepResult res = sweep(StateFamily::werner_line(), grid, pq, opt);
  REQUIRE(res.rows.size() == grid.size() * pq.size());
  CHECK(*res.rows[0].r == grid[0]);
  CHECK_FALSE(res.rows[0].q.has_value());
  CHECK(*res.rows[1].q == 1.0);
  CHECK(*res.rows[2].r == grid[1]);
  for (const auto& row : res.rows) REQUIRE(row.quadratic_p2.has_value());

  const double step = grid[1] - grid[0];
  bool found_quadratic = false;
  for (const auto& s : res.crossings) {
    if (s.series != "quadratic_p2") continue;
    found_quadratic = true;
    REQUIRE(s.crossings.size() == 1);
    CHECK(std::abs(s.crossings[0] - 1 / std::sqrt(3.0)) <= step);
  }
  CHECK(found_quadratic);
}

TEST_CASE("sweep of a fixed state gives one row per exponent and no crossings") {
  const std::vector<ExponentPair> pq{{1.0, std::nullopt}, {2.0, std::nullopt}, {2.0, 1.5}};
  const SweepResult res = sweep(StateFamily::fixed(random_density(4, 2, 3), kQubits), {}, pq);
  REQUIRE(res.rows.size() == 3);
  CHECK_FALSE(res.rows[0].r.has_value());
  CHECK(res.crossings.empty());
}
