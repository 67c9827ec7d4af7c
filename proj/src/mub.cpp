#include "pauli/mub.hpp"

#include <cmath>
#include <sstream>

#include "pauli/errors.hpp"
#include "pauli/text.hpp"

namespace pauli {

namespace {

void canonicalize_phase(Vector& v) {
  for (const auto& c : v) {
    if (std::abs(c) > kOrthonormalTolerance) {
      const Complex rot = std::abs(c) / c;
      for (auto& x : v) x *= rot;
      return;
    }
  }
}

void require_same_dim(const Basis& a, const Basis& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("bases live in C^" + std::to_string(a.dim()) + " and C^" +
                         std::to_string(b.dim()));
  }
}

}  // namespace

Basis::Basis(std::vector<Vector> vectors) : vectors_(std::move(vectors)) {
  const std::size_t d = vectors_.size();
  if (d == 0) throw ContractError("a basis needs at least one vector");
  for (auto& v : vectors_) {
    if (v.size() != d) throw ContractError("basis vectors must have length equal to their count");
    canonicalize_phase(v);
  }
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j; k < d; ++k) {
      const Complex g = inner(vectors_[j], vectors_[k]);
      const double expected = j == k ? 1.0 : 0.0;
      if (std::abs(g - expected) > kOrthonormalTolerance) {
        throw ContractError("basis vectors " + std::to_string(j) + " and " + std::to_string(k) +
                            " are not orthonormal");
      }
    }
}

Basis pauli_eigenbasis(Letter alpha) {
  const double h = 1.0 / std::sqrt(2.0);
  const Complex i(0, 1);
  switch (alpha) {
    case Letter::Z: return Basis({{1, 0}, {0, 1}});
    case Letter::X: return Basis({{h, h}, {h, -h}});
    case Letter::Y: return Basis({{h, h * i}, {h, -h * i}});
    case Letter::I: break;
  }
  throw ContractError("the identity has no distinguished eigenbasis");
}

Basis tensor_basis(const Basis& b, std::size_t m) {
  if (m == 0) throw ContractError("tensor power must be at least 1");
  std::vector<Vector> current = b.vectors();
  for (std::size_t k = 1; k < m; ++k) {
    std::vector<Vector> next;
    next.reserve(current.size() * b.dim());
    for (const auto& u : current)
      for (const auto& v : b.vectors()) next.push_back(kron(u, v));
    current = std::move(next);
  }
  return Basis(std::move(current));
}

UnbiasedReport is_unbiased(const Basis& a, const Basis& b, double tol) {
  require_same_dim(a, b);
  const double target = 1.0 / std::sqrt(static_cast<double>(a.dim()));
  double worst = 0.0;
  for (const auto& e : a.vectors())
    for (const auto& f : b.vectors()) worst = std::max(worst, std::abs(std::abs(inner(e, f)) - target));
  return {worst <= tol, worst};
}

FamilyReport mutually_unbiased_family(std::span<const Basis> bases, double tol) {
  FamilyReport report{true, {0, 0}, 0.0};
  for (std::size_t i = 0; i < bases.size(); ++i)
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      const auto r = is_unbiased(bases[i], bases[j], tol);
      if ((i == 0 && j == 1) || r.max_deviation > report.worst_deviation) {
        report.worst_deviation = r.max_deviation;
        report.worst_pair = {i, j};
      }
      report.mutually_unbiased = report.mutually_unbiased && r.unbiased;
    }
  return report;
}

std::string overlap_table_csv(std::span<const Basis> bases) {
  std::ostringstream out;
  out << "a,b,j,k,overlap\n";
  for (std::size_t a = 0; a < bases.size(); ++a)
    for (std::size_t b = a + 1; b < bases.size(); ++b) {
      require_same_dim(bases[a], bases[b]);
      for (std::size_t j = 0; j < bases[a].dim(); ++j)
        for (std::size_t k = 0; k < bases[b].dim(); ++k) {
          out << a << ',' << b << ',' << j << ',' << k << ','
              << text::real(std::abs(inner(bases[a][j], bases[b][k]))) << '\n';
        }
    }
  return out.str();
}

}  // namespace pauli
