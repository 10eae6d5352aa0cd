#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qmink {

using complex = std::complex<double>;

/// Dense square complex matrix, row-major. Dimensions in this library stay
/// small (N <= 16), so there is no sparsity or blocking machinery.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  /// Takes ownership of `entries`; requires entries.size() == dim * dim and
  /// every entry finite.
  ComplexMatrix(std::size_t dim, std::vector<complex> entries);
  /// Row-wise nested initializer, convenient for literals in tests.
  ComplexMatrix(std::initializer_list<std::initializer_list<complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);

  std::size_t dim() const noexcept { return dim_; }

  complex& operator()(std::size_t row, std::size_t col) noexcept { return data_[row * dim_ + col]; }
  const complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * dim_ + col];
  }

  std::span<const complex> entries() const noexcept { return data_; }

  complex trace() const noexcept;
  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  double frobenius_norm() const noexcept;
  /// max_jk |A_jk - conj(A_kj)|
  double hermiticity_defect() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(complex scalar) noexcept;

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, complex scalar) { return lhs *= scalar; }
  friend ComplexMatrix operator*(complex scalar, ComplexMatrix rhs) { return rhs *= scalar; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<complex> data_;
};

/// Kronecker product a ⊗ b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// ‖a − b‖_F; dimensions must agree.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_jk |a_jk − b_jk|; dimensions must agree.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qmink
