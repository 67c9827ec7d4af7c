#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pauli/dense_matrix.hpp"
#include "pauli/pauli_string.hpp"

namespace pauli {

inline constexpr double kOrthonormalTolerance = 1e-12;

// Ordered orthonormal basis of C^d. Each vector is rotated so that its first
// nonzero component is real and positive.
class Basis {
 public:
  // Throws ContractError unless the d vectors of length d are orthonormal.
  explicit Basis(std::vector<Vector> vectors);

  std::size_t dim() const noexcept { return vectors_.size(); }
  const std::vector<Vector>& vectors() const noexcept { return vectors_; }
  const Vector& operator[](std::size_t k) const { return vectors_.at(k); }

 private:
  std::vector<Vector> vectors_;
};

// Eigenvectors of sigma_alpha, +1 eigenvector first.
//   Z: (1,0), (0,1);  X: (1,1)/sqrt2, (1,-1)/sqrt2;  Y: (1,i)/sqrt2, (1,-i)/sqrt2
Basis pauli_eigenbasis(Letter alpha);

// All m-fold Kronecker products of basis vectors, lexicographic in the
// factor indices (first factor slowest).
Basis tensor_basis(const Basis& b, std::size_t m);

struct UnbiasedReport {
  bool unbiased;
  // max_{j,k} | |<e_j, f_k>| - 1/sqrt(d) |
  double max_deviation;
};

UnbiasedReport is_unbiased(const Basis& a, const Basis& b, double tol);

struct FamilyReport {
  bool mutually_unbiased;
  std::pair<std::size_t, std::size_t> worst_pair;
  double worst_deviation;
};

FamilyReport mutually_unbiased_family(std::span<const Basis> bases, double tol);

// CSV "a,b,j,k,overlap" with d^2 rows per unordered pair (a < b).
std::string overlap_table_csv(std::span<const Basis> bases);

}  // namespace pauli
