#include "pauli/matrix_engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>

#include "pauli/errors.hpp"

namespace pauli {

namespace {

void require_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw SizeError("dense realization capped at " + std::to_string(cap) + " sites, got " +
                    std::to_string(n));
  }
}

void require_hermitian(const PauliString& p, const char* what) {
  if (!p.is_hermitian()) throw ContractError(std::string(what) + " requires phase +1 or -1");
}

const Complex kPhases[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Accumulates c * P into m. A Pauli word is a signed permutation: column col
// has its single nonzero in row col ^ flip, with value
// i^(q + #Y) * (-1)^popcount(col & zmask).
void accumulate(DenseMatrix& m, const PauliString& p, Complex c) {
  const std::size_t n = p.size();
  std::size_t flip = 0, zmask = 0;
  int ys = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const Letter l = p.letter(t);
    const std::size_t bit = std::size_t{1} << (n - 1 - t);
    if (x_bit(l)) flip |= bit;
    if (z_bit(l)) zmask |= bit;
    if (l == Letter::Y) ++ys;
  }
  const Complex base = c * kPhases[(p.phase().exponent() + ys) % 4];
  const std::size_t dim = std::size_t{1} << n;
  for (std::size_t col = 0; col < dim; ++col) {
    const bool odd = std::popcount(col & zmask) & 1;
    m(col ^ flip, col) += odd ? -base : base;
  }
}

}  // namespace

std::size_t dense_cap_from_env() {
  if (const char* env = std::getenv("PAULI_DENSE_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 31) return static_cast<std::size_t>(v);
  }
  return kDefaultDenseCap;
}

DenseMatrix letter_matrix(Letter l) {
  switch (l) {
    case Letter::I: return DenseMatrix::from_rows({{1, 0}, {0, 1}});
    case Letter::X: return DenseMatrix::from_rows({{0, 1}, {1, 0}});
    case Letter::Y: return DenseMatrix::from_rows({{0, Complex(0, -1)}, {Complex(0, 1), 0}});
    case Letter::Z: return DenseMatrix::from_rows({{1, 0}, {0, -1}});
  }
  return {};
}

DenseMatrix to_matrix(const PauliString& p, std::size_t cap) {
  require_cap(p.size(), cap);
  DenseMatrix m(std::size_t{1} << p.size());
  accumulate(m, p, 1.0);
  return m;
}

DenseMatrix to_matrix(const PauliSum& h, std::size_t cap) {
  require_cap(h.sites(), cap);
  DenseMatrix m(std::size_t{1} << h.sites());
  for (const auto& term : h.terms()) accumulate(m, term.word, term.coefficient);
  return m;
}

DenseMatrix exp_pauli(const PauliString& p, double t, std::size_t cap) {
  require_hermitian(p, "exp_pauli");
  DenseMatrix m = to_matrix(p, cap);
  m *= std::sinh(t);
  const double c = std::cosh(t);
  for (std::size_t k = 0; k < m.dim(); ++k) m(k, k) += c;
  return m;
}

ProjectorPair projectors(const PauliString& p, std::size_t cap) {
  require_hermitian(p, "projectors");
  if (p.is_identity_word()) throw DegenerateError("projectors of +-identity: one of them is zero");
  const DenseMatrix half_p = 0.5 * to_matrix(p, cap);
  const DenseMatrix half_i = 0.5 * DenseMatrix::identity(half_p.dim());
  return {half_i + half_p, half_i - half_p};
}

ShuttleResult eigen_shuttle(const PauliString& a, const PauliString& b, std::span<const Complex> v,
                            double lambda, std::size_t cap) {
  if (!anticommutes(a, b)) throw ContractError("eigen_shuttle requires an anticommuting pair");
  const DenseMatrix am = to_matrix(a, cap);
  const DenseMatrix bm = to_matrix(b, cap);
  if (v.size() != am.dim()) throw DimensionError("vector length does not match 2^n");

  Vector av = am * v;
  for (std::size_t k = 0; k < av.size(); ++k) av[k] -= lambda * v[k];
  if (norm2(av) > kShuttleTolerance) {
    throw ContractError("input vector is not an eigenvector of A for the given eigenvalue");
  }

  Vector w = bm * v;
  const double norm = norm2(w);
  if (norm < kShuttleMinNorm) throw DegenerateError("B v vanishes");
  for (auto& c : w) c /= norm;

  Vector aw = am * w;
  for (std::size_t k = 0; k < aw.size(); ++k) aw[k] += lambda * w[k];
  const double residual = norm2(aw);
  if (residual > kShuttleTolerance) {
    throw NumericalError("shuttled vector fails the eigen-equation, residual " +
                         std::to_string(residual));
  }
  return {-lambda, std::move(w), residual};
}

double ConjugationReport::max_residual() const {
  double r = 0.0;
  for (const auto& v : {identity_residual, left_residual, right_residual})
    if (v) r = std::max(r, *v);
  return r;
}

ConjugationReport verify_conjugation(const PauliString& a, const PauliString& b, std::size_t cap) {
  if (a.size() != b.size()) throw DimensionError("site count mismatch");
  require_cap(a.size(), cap);
  const DenseMatrix am = to_matrix(a, cap);
  const DenseMatrix bm = to_matrix(b, cap);
  const DenseMatrix minus_a = -1.0 * am;
  const DenseMatrix lhs = exp_matrix(am) * bm * exp_matrix(minus_a);

  ConjugationReport report{};
  if (commutes(a, b)) {
    report.relation = Relation::commute;
    report.identity_residual = frobenius_distance(lhs, bm);
  } else {
    report.relation = Relation::anticommute;
    report.left_residual = frobenius_distance(lhs, exp_matrix(2.0 * am) * bm);
    report.right_residual = frobenius_distance(lhs, bm * exp_matrix(-2.0 * am));
  }
  return report;
}

DenseMatrix commutator_series(const DenseMatrix& a, const DenseMatrix& b, int terms) {
  DenseMatrix sum(b.dim());
  DenseMatrix nested = b;
  double factorial = 1.0;
  for (int k = 0; k < terms; ++k) {
    if (k > 0) {
      nested = commutator(a, nested);
      factorial *= k;
    }
    sum += (1.0 / factorial) * nested;
  }
  return sum;
}

DenseMatrix anticommutator_series(const DenseMatrix& a, const DenseMatrix& b, int terms) {
  DenseMatrix sum(b.dim());
  DenseMatrix nested = b;
  double factorial = 1.0;
  for (int k = 0; k < terms; ++k) {
    if (k > 0) {
      nested = anticommutator(a, nested);
      factorial *= k;
    }
    sum += (1.0 / factorial) * nested;
  }
  return sum;
}

}  // namespace pauli
