#pragma once

// Test-only reference realization of Pauli words. Deliberately shares no code
// with the library: nested-vector matrices, explicit 2x2 Pauli literals, and a
// textbook Kronecker product.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "pauli/dense_matrix.hpp"

namespace oracle {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;  // row-major

inline Mat zeros(std::size_t d) { return Mat(d, std::vector<C>(d)); }

inline Mat eye(std::size_t d) {
  Mat m = zeros(d);
  for (std::size_t k = 0; k < d; ++k) m[k][k] = 1.0;
  return m;
}

inline Mat sigma(char letter) {
  const C i(0, 1);
  switch (letter) {
    case 'I': return {{1, 0}, {0, 1}};
    case 'X': return {{0, 1}, {1, 0}};
    case 'Y': return {{0, -i}, {i, 0}};
    case 'Z': return {{1, 0}, {0, -1}};
  }
  throw std::invalid_argument("bad letter");
}

inline Mat kron(const Mat& a, const Mat& b) {
  const std::size_t ra = a.size(), rb = b.size();
  Mat out = zeros(ra * rb);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ra; ++j)
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < rb; ++l) out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
  return out;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t d = a.size();
  Mat out = zeros(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline Mat scale(C s, Mat m) {
  for (auto& row : m)
    for (auto& v : row) v *= s;
  return m;
}

inline Mat add(Mat a, const Mat& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] += b[i][j];
  return a;
}

inline Mat sub(const Mat& a, const Mat& b) { return add(a, scale(-1.0, b)); }

inline Mat commutator(const Mat& a, const Mat& b) { return sub(mul(a, b), mul(b, a)); }
inline Mat anticommutator(const Mat& a, const Mat& b) { return add(mul(a, b), mul(b, a)); }

inline double frob(const Mat& m) {
  double s = 0.0;
  for (const auto& row : m)
    for (const auto& v : row) s += std::norm(v);
  return std::sqrt(s);
}

// Accepts an optional "", "-", "i", "-i" prefix followed by letters.
inline Mat word(const std::string& text) {
  std::size_t pos = 0;
  C phase = 1.0;
  if (pos < text.size() && text[pos] == '-') {
    phase = -phase;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase *= C(0, 1);
    ++pos;
  }
  Mat m = {{1.0}};
  for (; pos < text.size(); ++pos) m = kron(m, sigma(text[pos]));
  return scale(phase, m);
}

inline Mat from_dense(const pauli::DenseMatrix& d) {
  Mat m = zeros(d.dim());
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < d.dim(); ++j) m[i][j] = d(i, j);
  return m;
}

inline double distance(const pauli::DenseMatrix& d, const Mat& m) {
  if (d.dim() != m.size()) return INFINITY;
  return frob(sub(from_dense(d), m));
}

// Block matrix from a grid of equally sized square blocks.
inline Mat blocks(const std::vector<std::vector<Mat>>& grid) {
  const std::size_t nb = grid.size(), bs = grid[0][0].size();
  Mat out = zeros(nb * bs);
  for (std::size_t I = 0; I < nb; ++I)
    for (std::size_t J = 0; J < nb; ++J)
      for (std::size_t i = 0; i < bs; ++i)
        for (std::size_t j = 0; j < bs; ++j) out[I * bs + i][J * bs + j] = grid[I][J][i][j];
  return out;
}

}  // namespace oracle
