#include "pauli/spin_models.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "pauli/errors.hpp"

namespace pauli {

std::string to_string(BoundaryCondition bc) {
  return bc == BoundaryCondition::open ? "open" : "periodic";
}

BoundaryCondition boundary_from_string(const std::string& s) {
  if (s == "open") return BoundaryCondition::open;
  if (s == "periodic") return BoundaryCondition::periodic;
  throw ContractError("unknown boundary condition '" + s + "'");
}

std::string to_string(SymmetryKind kind) {
  switch (kind) {
    case SymmetryKind::termwise: return "termwise";
    case SymmetryKind::global: return "global";
    case SymmetryKind::none: return "none";
  }
  return {};
}

PauliString EmbeddedOperator::expand() const { return embed(alpha, site, n); }

PauliString embed(Letter alpha, std::size_t j, std::size_t n) {
  if (alpha == Letter::I) throw ContractError("embedded operator must be X, Y or Z");
  if (j < 1 || j > n) {
    throw IndexError("site " + std::to_string(j) + " outside 1.." + std::to_string(n));
  }
  return PauliString(n).with_letter(j - 1, alpha);
}

namespace {

PauliString bond(Letter l, std::size_t a, std::size_t b, std::size_t n) {
  return PauliString(n).with_letter(a, l).with_letter(b, l);
}

}  // namespace

PauliSum build_xxz(std::size_t n, double j12, double j3, BoundaryCondition bc) {
  if (n < 2) throw SizeError("XXZ chain needs at least 2 sites");
  PauliSum h(n);
  const std::size_t bonds = bc == BoundaryCondition::periodic ? n : n - 1;
  for (std::size_t j = 0; j < bonds; ++j) {
    const std::size_t k = (j + 1) % n;
    h.add(j12 / 4.0, bond(Letter::X, j, k, n));
    h.add(j12 / 4.0, bond(Letter::Y, j, k, n));
    h.add(j3 / 4.0, bond(Letter::Z, j, k, n));
  }
  return h;
}

PauliSum build_heisenberg12(std::size_t n, ThreeSiteVariant variant) {
  if (n != 3) throw SizeError("the H and K operators are defined on exactly 3 sites");
  PauliSum h(3);
  for (const char* w : {"XXI", "YYI", "IXX", "IYY"}) h.add(1.0, parse(w));
  if (variant == ThreeSiteVariant::K) {
    for (const char* w : {"XIX", "YIY"}) h.add(1.0, parse(w));
  }
  return h;
}

SymmetryKind is_symmetry(const PauliSum& h, const PauliString& s, std::size_t cap) {
  if (h.sites() != s.size()) throw DimensionError("symmetry and Hamiltonian site counts differ");
  const bool termwise = std::all_of(h.terms().begin(), h.terms().end(),
                                    [&](const PauliSum::Term& t) { return commutes(t.word, s); });
  if (termwise) return SymmetryKind::termwise;
  const DenseMatrix hm = to_matrix(h, cap);
  const DenseMatrix sm = to_matrix(s, cap);
  return commutator(hm, sm).frobenius_norm() < kGlobalSymmetryTolerance ? SymmetryKind::global
                                                                        : SymmetryKind::none;
}

std::vector<Vector> column_basis(const DenseMatrix& m, double drop_tol) {
  const std::size_t d = m.dim();
  std::vector<Vector> residual(d);
  std::vector<double> norms(d);
  for (std::size_t c = 0; c < d; ++c) {
    const auto col = m.column(c);
    residual[c].assign(col.begin(), col.end());
    norms[c] = norm2(residual[c]);
  }
  std::vector<bool> used(d, false);
  std::vector<Vector> basis;
  while (basis.size() < d) {
    std::size_t pivot = d;
    double best = drop_tol;
    for (std::size_t c = 0; c < d; ++c) {
      if (!used[c] && norms[c] >= best) {
        best = norms[c];
        pivot = c;
      }
    }
    if (pivot == d) break;
    used[pivot] = true;

    Vector q = residual[pivot];
    // second orthogonalization pass against the accepted basis
    for (const auto& b : basis) {
      const Complex proj = inner(b, q);
      for (std::size_t k = 0; k < d; ++k) q[k] -= proj * b[k];
    }
    const double qn = norm2(q);
    if (qn < drop_tol) continue;
    for (auto& v : q) v /= qn;

    for (std::size_t c = 0; c < d; ++c) {
      if (used[c]) continue;
      const Complex proj = inner(q, residual[c]);
      for (std::size_t k = 0; k < d; ++k) residual[c][k] -= proj * q[k];
      norms[c] = norm2(residual[c]);
    }
    basis.push_back(std::move(q));
  }
  return basis;
}

namespace {

struct Block {
  DenseMatrix compressed;
  std::vector<Vector> hv;  // H applied to each basis vector
};

Block compress(const DenseMatrix& h, const std::vector<Vector>& basis) {
  Block block{DenseMatrix(basis.size()), {}};
  block.hv.reserve(basis.size());
  for (const auto& v : basis) block.hv.push_back(h * v);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < basis.size(); ++i)
      block.compressed(i, j) = inner(basis[i], block.hv[j]);
  return block;
}

// Eigensolves a compressed block and returns the largest residual of the
// lifted eigenvectors in the full space.
std::pair<SpectrumReport, double> solve_block(const Block& block, const std::vector<Vector>& basis) {
  SpectrumReport r = eig_hermitian(block.compressed);
  const std::size_t k = basis.size();
  const std::size_t d = k ? basis.front().size() : 0;
  double residual = 0.0;
  for (std::size_t e = 0; e < k; ++e) {
    Vector hx(d), x(d);
    for (std::size_t j = 0; j < k; ++j) {
      const Complex u = r.eigenvectors(j, e);
      if (u == Complex{}) continue;
      for (std::size_t t = 0; t < d; ++t) {
        x[t] += u * basis[j][t];
        hx[t] += u * block.hv[j][t];
      }
    }
    for (std::size_t t = 0; t < d; ++t) hx[t] -= r.eigenvalues[e] * x[t];
    residual = std::max(residual, norm2(hx));
  }
  return {std::move(r), residual};
}

}  // namespace

SectorReport sector_decompose(const PauliSum& h, const PauliString& s, std::size_t cap) {
  if (h.sites() != s.size()) throw DimensionError("symmetry and Hamiltonian site counts differ");
  const ProjectorPair proj = projectors(s, cap);
  if (is_symmetry(h, s, cap) == SymmetryKind::none) {
    throw ContractError(format(s) + " is not a symmetry of the Hamiltonian");
  }

  const std::size_t d = proj.plus.dim();
  const std::size_t half = d / 2;
  const auto plus_basis = column_basis(proj.plus);
  const auto minus_basis = column_basis(proj.minus);
  if (plus_basis.size() != half || minus_basis.size() != half) {
    throw NumericalError("sector basis extraction found ranks " + std::to_string(plus_basis.size()) +
                         " and " + std::to_string(minus_basis.size()) + ", expected " +
                         std::to_string(half));
  }

  const DenseMatrix hm = to_matrix(h, cap);
  const DenseMatrix sm = to_matrix(s, cap);

  auto plus_job = std::async(std::launch::async, [&] {
    return solve_block(compress(hm, plus_basis), plus_basis);
  });
  const Block minus_block = compress(hm, minus_basis);
  auto minus_result = solve_block(minus_block, minus_basis);
  auto plus_result = plus_job.get();

  SectorReport report;
  report.plus_dim = plus_basis.size();
  report.minus_dim = minus_basis.size();

  double off = 0.0;
  for (const auto& hv : minus_block.hv)
    for (const auto& v : plus_basis) off += std::norm(inner(v, hv));
  report.off_block_norm = std::sqrt(off);

  auto basis_error = [&](const std::vector<Vector>& basis, double sign) {
    double worst = 0.0;
    for (const auto& v : basis) {
      Vector sv = sm * v;
      for (std::size_t t = 0; t < d; ++t) sv[t] -= sign * v[t];
      worst = std::max(worst, norm2(sv));
    }
    return worst;
  };
  report.basis_residual = std::max(basis_error(plus_basis, 1.0), basis_error(minus_basis, -1.0));

  auto& spec = report.spectrum;
  for (double e : plus_result.first.eigenvalues) {
    spec.eigenvalues.push_back(e);
    spec.sector_labels.push_back(+1);
  }
  for (double e : minus_result.first.eigenvalues) {
    spec.eigenvalues.push_back(e);
    spec.sector_labels.push_back(-1);
  }
  spec.residual = std::max(plus_result.second, minus_result.second);
  return report;
}

}  // namespace pauli
