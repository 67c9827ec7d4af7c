#pragma once

#include <cstddef>
#include <vector>

#include "pauli/dense_matrix.hpp"

namespace pauli {

// Eigenvalues with multiplicity. For a plain decomposition the values are
// ascending and eigenvectors holds the matching columns. Sector-resolved
// reports list the +1 sector before the -1 sector, each ascending, with
// sector_labels parallel to eigenvalues and no eigenvectors.
struct SpectrumReport {
  std::vector<double> eigenvalues;
  std::vector<int> sector_labels;
  // max_k ||M v_k - lambda_k v_k||_2
  double residual = 0.0;
  DenseMatrix eigenvectors;

  std::vector<double> sorted_eigenvalues() const;
};

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kJacobiOffDiagonalTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

// Cyclic complex Jacobi. Throws ContractError for non-hermitian input and
// NumericalError if the sweep cap is reached.
SpectrumReport eig_hermitian(const DenseMatrix& m);

// Scaling and squaring with a truncated Taylor series.
DenseMatrix exp_matrix(const DenseMatrix& m);

}  // namespace pauli
