#include <algorithm>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "qmink/error.hpp"
#include "qmink/hermitian.hpp"
#include "qmink/matrix_io.hpp"
#include "qmink/rng.hpp"

using namespace qmink;

namespace {

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  ComplexMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
  ComplexMatrix h = g + g.adjoint();
  h *= 0.5;
  return h;
}

ComplexMatrix diag_real(const std::vector<double>& d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

template <class E>
ErrorKind kind_of(E&& thunk) {
  try {
    thunk();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a qmink::Error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("matrix basics") {
  const ComplexMatrix a{{1.0, complex(0, 2)}, {3.0, 4.0}};
  CHECK(a.trace() == complex(5.0, 0.0));
  CHECK(a.adjoint()(0, 1) == complex(3.0, 0.0));
  CHECK(a.adjoint()(1, 0) == complex(0.0, -2.0));
  CHECK(a.transpose()(0, 1) == complex(3.0, 0.0));
  CHECK(a.conjugate()(0, 1) == complex(0.0, -2.0));

  const ComplexMatrix b{{0.0, 1.0}, {1.0, 0.0}};
  const ComplexMatrix ab = a * b;
  CHECK(ab(0, 0) == complex(0.0, 2.0));
  CHECK(ab(0, 1) == complex(1.0, 0.0));
  CHECK(ab(1, 0) == complex(4.0, 0.0));
  CHECK(ab(1, 1) == complex(3.0, 0.0));

  const ComplexMatrix k = kron(ComplexMatrix::identity(2), b);
  CHECK(k.dim() == 4);
  CHECK(k(0, 1) == complex(1.0));
  CHECK(k(2, 3) == complex(1.0));
  CHECK(k(0, 3) == complex(0.0));

  CHECK_THROWS_AS(ComplexMatrix(2, std::vector<complex>(3)), Error);
  CHECK_THROWS_AS(ComplexMatrix(1, std::vector<complex>{complex(NAN, 0)}), Error);
}

TEST_CASE("eig_hermitian matches the closed-form 2x2 spectrum") {
  // [[a, b], [b*, d]]: λ = (a+d)/2 ± sqrt(((a−d)/2)² + |b|²)
  const double a = 0.7, d = -0.2;
  const complex b(0.3, -0.4);
  const ComplexMatrix m{{a, b}, {std::conj(b), d}};
  const Spectrum s = eig_hermitian(m);
  const double mid = (a + d) / 2, rad = std::sqrt((a - d) * (a - d) / 4 + std::norm(b));
  CHECK(s.eigenvalues[0] == doctest::Approx(mid - rad).epsilon(1e-14));
  CHECK(s.eigenvalues[1] == doctest::Approx(mid + rad).epsilon(1e-14));
}

TEST_CASE("eig_hermitian on a diagonal matrix returns sorted entries and permutation vectors") {
  const Spectrum s = eig_hermitian(diag_real({3.0, -1.0, 2.0}));
  CHECK(s.eigenvalues == std::vector<double>{-1.0, 2.0, 3.0});
  CHECK(std::abs(s.eigenvectors(1, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(s.eigenvectors(2, 1)) == doctest::Approx(1.0));
  CHECK(std::abs(s.eigenvectors(0, 2)) == doctest::Approx(1.0));
}

TEST_CASE("eig_hermitian reconstructs random Hermitian matrices with unitary eigenvectors") {
  Rng rng(2024);
  double worst_rec = 0.0, worst_unit = 0.0;
  for (std::size_t n : {2u, 3u, 4u, 6u, 8u}) {
    for (int trial = 0; trial < 200; ++trial) {
      const ComplexMatrix h = random_hermitian(n, rng);
      const Spectrum s = eig_hermitian(h);
      CHECK(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
      worst_rec = std::max(worst_rec, frobenius_distance(s.reconstruct(), h));
      const ComplexMatrix vv = s.eigenvectors.adjoint() * s.eigenvectors;
      worst_unit = std::max(worst_unit, frobenius_distance(vv, ComplexMatrix::identity(n)));
    }
  }
  CHECK(worst_rec <= 1e-11);
  CHECK(worst_unit <= 1e-11);
}

TEST_CASE("eig_hermitian rejects non-Hermitian input") {
  const ComplexMatrix m{{1.0, 1.0}, {0.0, 1.0}};
  CHECK(kind_of([&] { eig_hermitian(m); }) == ErrorKind::NotHermitian);
}

TEST_CASE("validate_density") {
  const ComplexMatrix good{{0.5, 0.5}, {0.5, 0.5}};
  const DensityMatrix rho = validate_density(good);
  CHECK(rho.dim() == 2);
  CHECK(rho.spectrum().eigenvalues[1] == doctest::Approx(1.0));

  CHECK(kind_of([] { validate_density(ComplexMatrix{{0.5, 0.1}, {0.0, 0.5}}); }) == ErrorKind::NotHermitian);
  CHECK(kind_of([] { validate_density(diag_real({0.6, 0.6})); }) == ErrorKind::TraceNotOne);
  CHECK(kind_of([] { validate_density(diag_real({1.2, -0.2})); }) == ErrorKind::NotPositive);

  SUBCASE("drift inside the tolerance is accepted") {
    validate_density(diag_real({1.0 + 5e-10, -5e-10}));
  }
}

TEST_CASE("clamp_nonnegative") {
  const std::vector<double> ok{-5e-10, 0.25, 0.75};
  const auto c = clamp_nonnegative(ok);
  CHECK(c[0] == 0.0);
  CHECK(c[1] == 0.25);
  CHECK(kind_of([] { clamp_nonnegative(std::vector<double>{-1e-6, 1.0}); }) ==
        ErrorKind::NegativeEigenvalueBeyondTolerance);
}

TEST_CASE("mat_power") {
  const DensityMatrix rho = validate_density(diag_real({0.25, 0.75}));
  const ComplexMatrix sq = mat_power(rho, 0.5);
  CHECK(sq(0, 0).real() == doctest::Approx(0.5));
  CHECK(sq(1, 1).real() == doctest::Approx(std::sqrt(0.75)));

  SUBCASE("zero eigenvalue stays zero for fractional exponents") {
    const DensityMatrix pure = validate_density(diag_real({1.0, 0.0}));
    CHECK(mat_power(pure, 0.3)(1, 1) == complex(0.0));
  }
  SUBCASE("non-positive exponents are rejected") {
    CHECK(kind_of([&] { mat_power(rho, 0.0); }) == ErrorKind::NonPositiveExponent);
    CHECK(kind_of([&] { mat_power(rho, -1.0); }) == ErrorKind::NonPositiveExponent);
  }
  SUBCASE("ρ^a · ρ^b = ρ^(a+b) on a generic full-rank state") {
    Rng rng(7);
    ComplexMatrix g(4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) g(i, j) = rng.complex_normal();
    ComplexMatrix m = g * g.adjoint();
    m *= 1.0 / m.trace().real();
    const DensityMatrix r = validate_density(m);
    for (auto [a, b] : {std::pair{0.5, 0.5}, {1.25, 0.75}, {2.0, 1.0}, {0.3, 1.7}}) {
      CHECK(frobenius_distance(mat_power(r, a) * mat_power(r, b), mat_power(r, a + b)) <= 1e-9);
    }
    CHECK(frobenius_distance(mat_power(r, 1.0), m) <= 1e-12);
  }
}

TEST_CASE("trace_power") {
  CHECK(trace_power(diag_real({0.2, 0.3, 0.5}), 2.0) == doctest::Approx(0.04 + 0.09 + 0.25).epsilon(1e-14));
  CHECK(trace_power(diag_real({0.2, 0.3, 0.5}), 1.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("BlockPartition") {
  CHECK(BlockPartition::for_dim(6, 2) == BlockPartition(2, 3));
  CHECK(BlockPartition::for_dim(6, 3) == BlockPartition(3, 2));
  CHECK(kind_of([] { BlockPartition::for_dim(6, 4); }) == ErrorKind::PartitionMismatch);
  CHECK(kind_of([] { BlockPartition(2, 2).check(ComplexMatrix(3)); }) == ErrorKind::PartitionMismatch);
}

TEST_CASE("blocks, partial traces and partial transpose on a labelled 4x4") {
  // entry (i, j) = 10 i + j, one-based, so every block is recognisable
  ComplexMatrix m(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = complex(10.0 * (i + 1) + (j + 1), 0.0);
  const BlockPartition part(2, 2);

  const ComplexMatrix a01 = block(m, part, 0, 1);
  CHECK(a01(0, 0).real() == 13.0);
  CHECK(a01(1, 1).real() == 24.0);
  CHECK(kind_of([&] { block(m, part, 2, 0); }) == ErrorKind::IndexOutOfRange);

  const ComplexMatrix t1 = partial_trace_first(m, part);  // a00 + a11
  CHECK(t1(0, 0).real() == 11.0 + 33.0);
  CHECK(t1(0, 1).real() == 12.0 + 34.0);
  CHECK(t1(1, 0).real() == 21.0 + 43.0);
  CHECK(t1(1, 1).real() == 22.0 + 44.0);

  const ComplexMatrix b = block_trace_matrix(m, part);
  CHECK(b(0, 0).real() == 11.0 + 22.0);
  CHECK(b(0, 1).real() == 13.0 + 24.0);
  CHECK(b(1, 0).real() == 31.0 + 42.0);
  CHECK(b(1, 1).real() == 33.0 + 44.0);

  const ComplexMatrix pt = partial_transpose_second(m, part);
  CHECK(pt(0, 3).real() == 23.0);
  CHECK(pt(1, 2).real() == 14.0);
  CHECK(pt(0, 0).real() == 11.0);
  CHECK(partial_transpose_second(pt, part) == m);
}

TEST_CASE("partial traces of a product state give the factors") {
  const ComplexMatrix a{{0.7, complex(0.1, 0.2)}, {complex(0.1, -0.2), 0.3}};
  const ComplexMatrix b{{0.4, 0.0, 0.1}, {0.0, 0.35, 0.0}, {0.1, 0.0, 0.25}};
  const ComplexMatrix ab = kron(a, b);
  const BlockPartition part(2, 3);
  CHECK(max_abs_difference(partial_trace_first(ab, part), b) <= 1e-15);
  CHECK(max_abs_difference(block_trace_matrix(ab, part), a) <= 1e-15);
}

TEST_CASE("trace_norm") {
  CHECK(trace_norm(diag_real({0.5, -0.25, 0.75})) == doctest::Approx(1.5));
}

TEST_CASE("zero_pad") {
  const ComplexMatrix m{{0.6, complex(0.1, 0.1)}, {complex(0.1, -0.1), 0.4}};
  const ComplexMatrix p = zero_pad(m, 4);
  CHECK(p.dim() == 4);
  CHECK(p(0, 1) == m(0, 1));
  CHECK(p(3, 3) == complex(0.0));
  CHECK(p(2, 0) == complex(0.0));
  CHECK(zero_pad(m, 2) == m);
  CHECK(kind_of([&] { zero_pad(p, 3); }) == ErrorKind::ShrinkNotAllowed);

  const auto before = eig_hermitian(m).eigenvalues;
  auto after = eig_hermitian(p).eigenvalues;
  std::vector<double> expected = before;
  expected.insert(expected.begin(), 2, 0.0);
  for (std::size_t k = 0; k < 4; ++k) CHECK(after[k] == doctest::Approx(expected[k]).epsilon(1e-12));
}

TEST_CASE("matrix text round trip is exact") {
  const ComplexMatrix m{{0.1, complex(1.0 / 3.0, -2e-17)}, {complex(1.0 / 3.0, 2e-17), 0.9}};
  std::stringstream s;
  write_matrix(s, m);
  CHECK(read_matrix(s) == m);
}

TEST_CASE("read_matrix rejects malformed input") {
  std::istringstream bad("2\n1 0 0 0\n0 0 1\n");
  CHECK(kind_of([&] { read_matrix(bad); }) == ErrorKind::ParseError);
  std::istringstream trailing("1\n1 0 junk\n");
  CHECK(kind_of([&] { read_matrix(trailing); }) == ErrorKind::ParseError);
}
