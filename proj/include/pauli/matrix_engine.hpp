#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "pauli/dense_matrix.hpp"
#include "pauli/linalg.hpp"
#include "pauli/pauli_string.hpp"
#include "pauli/pauli_sum.hpp"

namespace pauli {

// Largest site count realized densely (4096 x 4096).
inline constexpr std::size_t kDefaultDenseCap = 12;

// PAULI_DENSE_CAP if set to a positive integer, else kDefaultDenseCap.
std::size_t dense_cap_from_env();

// The 2x2 matrix of a single letter.
DenseMatrix letter_matrix(Letter l);

// i^q times the Kronecker product of the site matrices, site 1 leftmost.
// Throws SizeError when p.size() > cap.
DenseMatrix to_matrix(const PauliString& p, std::size_t cap = kDefaultDenseCap);
DenseMatrix to_matrix(const PauliSum& h, std::size_t cap = kDefaultDenseCap);

// cosh(t) I + sinh(t) P for hermitian P (phase +-1). ContractError otherwise.
DenseMatrix exp_pauli(const PauliString& p, double t, std::size_t cap = kDefaultDenseCap);

struct ProjectorPair {
  DenseMatrix plus;   // (I + P) / 2
  DenseMatrix minus;  // (I - P) / 2
};

// ContractError for non-hermitian p, DegenerateError for an identity word.
ProjectorPair projectors(const PauliString& p, std::size_t cap = kDefaultDenseCap);

struct ShuttleResult {
  double eigenvalue;
  Vector eigenvector;  // unit norm
  double residual;     // ||A w - eigenvalue w||
};

inline constexpr double kShuttleTolerance = 1e-9;
inline constexpr double kShuttleMinNorm = 1e-12;

// Given A v = lambda v and {A, B} = 0, B v is an eigenvector of A for -lambda.
ShuttleResult eigen_shuttle(const PauliString& a, const PauliString& b, std::span<const Complex> v,
                            double lambda, std::size_t cap = kDefaultDenseCap);

enum class Relation { commute, anticommute };

// L = e^A B e^{-A}. A commuting pair reports ||L - B||; an anticommuting pair
// reports ||L - e^{2A} B|| and ||L - B e^{-2A}||.
struct ConjugationReport {
  Relation relation;
  std::optional<double> identity_residual;
  std::optional<double> left_residual;
  std::optional<double> right_residual;

  double max_residual() const;
  bool passed(double tol = 1e-10) const { return max_residual() < tol; }
};

ConjugationReport verify_conjugation(const PauliString& a, const PauliString& b,
                                     std::size_t cap = kDefaultDenseCap);

// Partial sums of the nested-bracket expansions:
//   e^A B e^{-A} ~ sum_{k<terms} ad_A^k(B) / k!
//   e^A B e^{A}  ~ sum_{k<terms} {A, .}^k(B) / k!
DenseMatrix commutator_series(const DenseMatrix& a, const DenseMatrix& b, int terms);
DenseMatrix anticommutator_series(const DenseMatrix& a, const DenseMatrix& b, int terms);

}  // namespace pauli
