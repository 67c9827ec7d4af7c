#pragma once

#include <cstddef>
#include <string>

#include "pauli/linalg.hpp"
#include "pauli/matrix_engine.hpp"
#include "pauli/pauli_string.hpp"
#include "pauli/pauli_sum.hpp"

namespace pauli {

enum class BoundaryCondition { open, periodic };

std::string to_string(BoundaryCondition bc);
BoundaryCondition boundary_from_string(const std::string& s);

// A non-identity letter placed at a single site of an n-site chain.
struct EmbeddedOperator {
  Letter alpha;
  std::size_t site;  // 1-based
  std::size_t n;

  PauliString expand() const;
};

// Letter alpha at 1-based site j, identity elsewhere.
PauliString embed(Letter alpha, std::size_t j, std::size_t n);

// (j12/4) sum_bonds (X_j X_{j+1} + Y_j Y_{j+1}) + (j3/4) sum_bonds Z_j Z_{j+1}.
// Open chains have n-1 bonds; periodic chains add the bond (n, 1).
PauliSum build_xxz(std::size_t n, double j12, double j3, BoundaryCondition bc);

enum class ThreeSiteVariant { H, K };

// Three-site XY couplings with unit weights. H couples (1,2) and (2,3); K
// additionally couples (1,3).
PauliSum build_heisenberg12(std::size_t n, ThreeSiteVariant variant);

enum class SymmetryKind { termwise, global, none };

std::string to_string(SymmetryKind kind);

inline constexpr double kGlobalSymmetryTolerance = 1e-10;

// termwise: every word commutes with s. global: only the dense commutator
// vanishes (cancellation across terms). none: otherwise.
SymmetryKind is_symmetry(const PauliSum& h, const PauliString& s,
                         std::size_t cap = kDefaultDenseCap);

inline constexpr double kBasisDropTolerance = 1e-10;

struct SectorReport {
  SpectrumReport spectrum;  // sector-labeled, + before -
  std::size_t plus_dim = 0;
  std::size_t minus_dim = 0;
  // ||V+^* H V-||_F
  double off_block_norm = 0.0;
  // max over basis vectors v of ||S v - sign v||
  double basis_residual = 0.0;
};

// Compresses H onto the +-1 eigenspaces of s and eigensolves each block.
// Bases come from pivoted Gram-Schmidt on projector columns.
SectorReport sector_decompose(const PauliSum& h, const PauliString& s,
                              std::size_t cap = kDefaultDenseCap);

// Orthonormal basis (as matrix columns, returned as a vector of columns) for
// the column space of m, by pivoted Gram-Schmidt with the given drop tolerance.
std::vector<Vector> column_basis(const DenseMatrix& m, double drop_tol = kBasisDropTolerance);

}  // namespace pauli
