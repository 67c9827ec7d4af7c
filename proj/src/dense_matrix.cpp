#include "pauli/dense_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "pauli/errors.hpp"
#include "pauli/text.hpp"

namespace pauli {

namespace {

void require_same_dim(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("matrix dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

}  // namespace

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m(dim);
  for (std::size_t k = 0; k < dim; ++k) m(k, k) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const Complex> diag) {
  DenseMatrix m(diag.size());
  for (std::size_t k = 0; k < diag.size(); ++k) m(k, k) = diag[k];
  return m;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  DenseMatrix m(rows.size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw DimensionError("matrix literal is not square");
    std::size_t c = 0;
    for (const auto& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(dim_);
  for (std::size_t c = 0; c < dim_; ++c)
    for (std::size_t r = 0; r < dim_; ++r) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Complex DenseMatrix::trace() const noexcept {
  Complex t{};
  for (std::size_t k = 0; k < dim_; ++k) t += (*this)(k, k);
  return t;
}

double DenseMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (const auto& v : entries_) s += std::norm(v);
  return std::sqrt(s);
}

double DenseMatrix::norm1() const noexcept {
  double best = 0.0;
  for (std::size_t c = 0; c < dim_; ++c) {
    double s = 0.0;
    for (const auto& v : column(c)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

bool DenseMatrix::is_hermitian(double tol) const {
  double s = 0.0;
  for (std::size_t c = 0; c < dim_; ++c)
    for (std::size_t r = 0; r < dim_; ++r) s += std::norm((*this)(r, c) - std::conj((*this)(c, r)));
  return std::sqrt(s) < tol;
}

bool DenseMatrix::is_unitary(double tol) const {
  return frobenius_distance(*this * adjoint(), identity(dim_)) < tol;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(Complex s) noexcept {
  for (auto& v : entries_) v *= s;
  return *this;
}

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }

DenseMatrix operator*(Complex s, DenseMatrix m) { return m *= s; }

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_dim(a, b);
  const std::size_t d = a.dim();
  DenseMatrix out(d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      const Complex bkj = b(k, j);
      if (bkj == Complex{}) continue;
      for (std::size_t i = 0; i < d; ++i) out(i, j) += a(i, k) * bkj;
    }
  }
  return out;
}

Vector operator*(const DenseMatrix& m, std::span<const Complex> v) {
  if (v.size() != m.dim()) throw DimensionError("vector length does not match matrix dimension");
  Vector out(m.dim());
  for (std::size_t k = 0; k < m.dim(); ++k) {
    if (v[k] == Complex{}) continue;
    for (std::size_t i = 0; i < m.dim(); ++i) out[i] += m(i, k) * v[k];
  }
  return out;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  DenseMatrix out(da * db);
  for (std::size_t ca = 0; ca < da; ++ca)
    for (std::size_t ra = 0; ra < da; ++ra) {
      const Complex s = a(ra, ca);
      if (s == Complex{}) continue;
      for (std::size_t cb = 0; cb < db; ++cb)
        for (std::size_t rb = 0; rb < db; ++rb) out(ra * db + rb, ca * db + cb) = s * b(rb, cb);
    }
  return out;
}

DenseMatrix commutator(const DenseMatrix& a, const DenseMatrix& b) { return a * b - b * a; }
DenseMatrix anticommutator(const DenseMatrix& a, const DenseMatrix& b) { return a * b + b * a; }

double frobenius_distance(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_dim(a, b);
  double s = 0.0;
  const auto da = a.data(), db = b.data();
  for (std::size_t k = 0; k < da.size(); ++k) s += std::norm(da[k] - db[k]);
  return std::sqrt(s);
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) throw DimensionError("vector length mismatch");
  Complex s{};
  for (std::size_t k = 0; k < u.size(); ++k) s += std::conj(u[k]) * v[k];
  return s;
}

double norm2(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& c : v) s += std::norm(c);
  return std::sqrt(s);
}

Vector kron(std::span<const Complex> u, std::span<const Complex> v) {
  Vector out;
  out.reserve(u.size() * v.size());
  for (const auto& a : u)
    for (const auto& b : v) out.push_back(a * b);
  return out;
}

std::string dump(const DenseMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (c) out += '\t';
      out += text::dump_entry(m(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace pauli
