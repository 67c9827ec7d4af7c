#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pauli/dense_matrix.hpp"

namespace pauli {

// Residual of one operator identity, e.g. "[X1,X2]=2iX3".
// scope is "full" or "sector:k".
struct RelationResidual {
  std::string relation;
  double residual;
  std::string scope;
};

inline constexpr std::size_t kMaxFermionModes = 6;
inline constexpr double kFermionTolerance = 1e-13;

// Fermionic modes realized on 2^n_modes dimensions; mode j is site j.
struct FermionRegister {
  std::size_t n_modes;
  std::vector<DenseMatrix> annihilators;
  std::vector<DenseMatrix> creators;
};

// c_j = Z^(j-1) (X + iY)/2 I^(n-j).
FermionRegister jordan_wigner(std::size_t n_modes);

// {c_j, c_k^+} - delta_jk I and {c_j, c_k} for all j, k.
std::vector<RelationResidual> car_relations(const FermionRegister& reg);

struct Su2Triple {
  DenseMatrix first, second, third;
};

// (c1^+, c2^+) sigma_alpha (c1, c2)^T for alpha = 1, 2, 3.
Su2Triple fermi_bilinears(const FermionRegister& reg);

// Three su(2) commutators and three vanishing anticommutators of the Fermi
// bilinears. ContractError unless reg has exactly 2 modes.
std::vector<RelationResidual> fermi_su2(const FermionRegister& reg);

inline constexpr std::size_t kMaxBosonDim = 4096;

// Truncated oscillators: occupations 0..cutoff per mode; b|k> = sqrt(k)|k-1>,
// b^+|cutoff> = 0. Basis index = n1 (cutoff+1)^(modes-1) + ... + n_last.
struct BosonRegister {
  std::size_t n_modes;
  std::size_t cutoff;
  std::vector<DenseMatrix> annihilators;
  std::vector<DenseMatrix> creators;
};

BosonRegister bose_register(std::size_t n_modes, std::size_t cutoff);

// (b1^+, b2^+) sigma_alpha (b1, b2)^T. ContractError unless 2 modes.
Su2Triple bose_bilinears(const BosonRegister& reg);

inline constexpr double kBoseSectorTolerance = 1e-12;
inline constexpr double kBoseConservationTolerance = 1e-13;

struct BoseSu2Report {
  std::size_t sector_dim;
  // [Y1,Y2]=2iY3 and cyclic, restricted to n1 + n2 = n_total; must vanish.
  std::vector<RelationResidual> sector;
  // Same relations on the whole truncated space; informational.
  std::vector<RelationResidual> full;
  // [Y_k, n1 + n2] on the whole truncated space; must vanish.
  std::vector<RelationResidual> conservation;
  // {Y1, Y2} on the sector; informational only.
  RelationResidual anticommutator;

  bool passed() const;
};

BoseSu2Report bose_su2_sector_check(const BosonRegister& reg, std::size_t n_total);

}  // namespace pauli
