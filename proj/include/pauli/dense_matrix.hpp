#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pauli {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

// Square complex matrix, column-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  static DenseMatrix identity(std::size_t dim);
  static DenseMatrix diagonal(std::span<const Complex> diag);
  // Row-major literal, convenient for small fixed matrices.
  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) noexcept { return entries_[col * dim_ + row]; }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return entries_[col * dim_ + row];
  }

  std::span<const Complex> data() const noexcept { return entries_; }
  std::span<const Complex> column(std::size_t col) const noexcept {
    return {entries_.data() + col * dim_, dim_};
  }

  DenseMatrix adjoint() const;
  Complex trace() const noexcept;
  double frobenius_norm() const noexcept;
  // Max absolute column sum.
  double norm1() const noexcept;

  bool is_hermitian(double tol) const;
  bool is_unitary(double tol) const;

  DenseMatrix& operator+=(const DenseMatrix& other);
  DenseMatrix& operator-=(const DenseMatrix& other);
  DenseMatrix& operator*=(Complex s) noexcept;

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(Complex s, DenseMatrix m);
Vector operator*(const DenseMatrix& m, std::span<const Complex> v);

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix commutator(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix anticommutator(const DenseMatrix& a, const DenseMatrix& b);

double frobenius_distance(const DenseMatrix& a, const DenseMatrix& b);

// <u, v>, conjugate-linear in u.
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
double norm2(std::span<const Complex> v);
Vector kron(std::span<const Complex> u, std::span<const Complex> v);

// One row per line, entries "re+imj" separated by tabs.
std::string dump(const DenseMatrix& m);

}  // namespace pauli
