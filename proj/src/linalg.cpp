#include "pauli/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pauli/errors.hpp"

namespace pauli {

std::vector<double> SpectrumReport::sorted_eigenvalues() const {
  std::vector<double> out = eigenvalues;
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t c = 0; c < a.dim(); ++c)
    for (std::size_t r = 0; r < a.dim(); ++r)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// A <- J^H A J and V <- V J for the unitary J acting on coordinates (p, q)
// that zeroes A(p, q).
void rotate(DenseMatrix& a, DenseMatrix& v, std::size_t p, std::size_t q) {
  const Complex g = a(p, q);
  const double h = std::abs(g);
  if (h == 0.0) return;
  const Complex e = g / h;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double zeta = (aqq - app) / (2.0 * h);
  const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(zeta * zeta + 1.0));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * std::conj(e);
  const Complex jqq = c * std::conj(e);

  const std::size_t d = a.dim();
  for (std::size_t k = 0; k < d; ++k) {
    const Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (std::size_t k = 0; k < d; ++k) {
    const Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < d; ++k) {
    const Complex vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

}  // namespace

SpectrumReport eig_hermitian(const DenseMatrix& m) {
  if (!m.is_hermitian(kHermitianTolerance)) {
    throw ContractError("eig_hermitian requires a hermitian matrix");
  }
  const std::size_t d = m.dim();
  DenseMatrix a = m;
  DenseMatrix v = DenseMatrix::identity(d);
  const double threshold = kJacobiOffDiagonalTolerance * std::max(1.0, m.frobenius_norm());

  int sweep = 0;
  while (off_diagonal_norm(a) >= threshold) {
    if (++sweep > kJacobiMaxSweeps) {
      throw NumericalError("Jacobi eigensolver did not converge in " +
                           std::to_string(kJacobiMaxSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < d; ++p)
      for (std::size_t q = p + 1; q < d; ++q) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  SpectrumReport report;
  report.eigenvalues.resize(d);
  report.eigenvectors = DenseMatrix(d);
  for (std::size_t k = 0; k < d; ++k) {
    report.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < d; ++r) report.eigenvectors(r, k) = v(r, order[k]);
  }

  for (std::size_t k = 0; k < d; ++k) {
    const auto col = report.eigenvectors.column(k);
    Vector mv = m * col;
    for (std::size_t r = 0; r < d; ++r) mv[r] -= report.eigenvalues[k] * col[r];
    report.residual = std::max(report.residual, norm2(mv));
  }
  return report;
}

DenseMatrix exp_matrix(const DenseMatrix& m) {
  const std::size_t d = m.dim();
  const double norm = m.norm1();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const DenseMatrix x = std::ldexp(1.0, -squarings) * m;

  DenseMatrix sum = DenseMatrix::identity(d);
  DenseMatrix term = DenseMatrix::identity(d);
  for (int k = 1; k <= 64; ++k) {
    term = term * x;
    term *= 1.0 / k;
    sum += term;
    if (term.norm1() < 1e-16) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

}  // namespace pauli
