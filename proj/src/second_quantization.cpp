#include "pauli/second_quantization.hpp"

#include <algorithm>
#include <cmath>

#include "pauli/errors.hpp"
#include "pauli/matrix_engine.hpp"
#include "pauli/pauli_sum.hpp"

namespace pauli {

namespace {

const Complex kI(0, 1);

std::string mode_label(const char* op, std::size_t j) { return std::string(op) + std::to_string(j + 1); }

Su2Triple bilinears(const std::vector<DenseMatrix>& up, const std::vector<DenseMatrix>& down) {
  const DenseMatrix hop12 = up[0] * down[1];
  const DenseMatrix hop21 = up[1] * down[0];
  return {hop12 + hop21, -kI * hop12 + kI * hop21, up[0] * down[0] - up[1] * down[1]};
}

// [A,B] - 2i C for the three cyclic orderings.
std::vector<std::pair<std::string, DenseMatrix>> su2_defects(const Su2Triple& t, const char* name) {
  const std::string a = std::string(name) + "1", b = std::string(name) + "2",
                    c = std::string(name) + "3";
  return {
      {"[" + a + "," + b + "]=2i" + c, commutator(t.first, t.second) - 2.0 * kI * t.third},
      {"[" + b + "," + c + "]=2i" + a, commutator(t.second, t.third) - 2.0 * kI * t.first},
      {"[" + c + "," + a + "]=2i" + b, commutator(t.third, t.first) - 2.0 * kI * t.second},
  };
}

DenseMatrix restrict_to(const DenseMatrix& m, const std::vector<std::size_t>& idx) {
  DenseMatrix out(idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c)
    for (std::size_t r = 0; r < idx.size(); ++r) out(r, c) = m(idx[r], idx[c]);
  return out;
}

}  // namespace

FermionRegister jordan_wigner(std::size_t n_modes) {
  if (n_modes == 0) throw ContractError("a fermion register needs at least one mode");
  if (n_modes > kMaxFermionModes) {
    throw SizeError("Jordan-Wigner register capped at " + std::to_string(kMaxFermionModes) +
                    " modes");
  }
  FermionRegister reg{n_modes, {}, {}};
  for (std::size_t j = 0; j < n_modes; ++j) {
    PauliString string(n_modes);
    for (std::size_t k = 0; k < j; ++k) string = string.with_letter(k, Letter::Z);
    PauliSum c(n_modes);
    c.add(0.5, string.with_letter(j, Letter::X));
    c.add(0.5 * kI, string.with_letter(j, Letter::Y));
    reg.annihilators.push_back(to_matrix(c));
    reg.creators.push_back(reg.annihilators.back().adjoint());
  }
  return reg;
}

std::vector<RelationResidual> car_relations(const FermionRegister& reg) {
  std::vector<RelationResidual> out;
  const std::size_t dim = std::size_t{1} << reg.n_modes;
  const DenseMatrix id = DenseMatrix::identity(dim);
  for (std::size_t j = 0; j < reg.n_modes; ++j)
    for (std::size_t k = 0; k < reg.n_modes; ++k) {
      DenseMatrix mixed = anticommutator(reg.annihilators[j], reg.creators[k]);
      if (j == k) mixed -= id;
      out.push_back({"{" + mode_label("c", j) + "," + mode_label("c", k) + "+}=" +
                         (j == k ? "I" : "0"),
                     mixed.frobenius_norm(), "full"});
      out.push_back({"{" + mode_label("c", j) + "," + mode_label("c", k) + "}=0",
                     anticommutator(reg.annihilators[j], reg.annihilators[k]).frobenius_norm(),
                     "full"});
    }
  return out;
}

Su2Triple fermi_bilinears(const FermionRegister& reg) {
  if (reg.n_modes != 2) throw ContractError("Fermi su(2) bilinears need exactly 2 modes");
  return bilinears(reg.creators, reg.annihilators);
}

std::vector<RelationResidual> fermi_su2(const FermionRegister& reg) {
  const Su2Triple x = fermi_bilinears(reg);
  std::vector<RelationResidual> out;
  for (auto& [label, defect] : su2_defects(x, "X")) out.push_back({label, defect.frobenius_norm(), "full"});
  out.push_back({"{X1,X2}=0", anticommutator(x.first, x.second).frobenius_norm(), "full"});
  out.push_back({"{X2,X3}=0", anticommutator(x.second, x.third).frobenius_norm(), "full"});
  out.push_back({"{X3,X1}=0", anticommutator(x.third, x.first).frobenius_norm(), "full"});
  return out;
}

BosonRegister bose_register(std::size_t n_modes, std::size_t cutoff) {
  if (n_modes == 0) throw ContractError("a boson register needs at least one mode");
  if (cutoff == 0) throw ContractError("boson cutoff must be at least 1");
  const std::size_t local = cutoff + 1;
  std::size_t dim = 1;
  for (std::size_t k = 0; k < n_modes; ++k) {
    dim *= local;
    if (dim > kMaxBosonDim) {
      throw SizeError("truncated Fock space exceeds " + std::to_string(kMaxBosonDim) +
                      " dimensions");
    }
  }

  DenseMatrix b(local);
  for (std::size_t k = 1; k < local; ++k) b(k - 1, k) = std::sqrt(static_cast<double>(k));

  BosonRegister reg{n_modes, cutoff, {}, {}};
  for (std::size_t j = 0; j < n_modes; ++j) {
    DenseMatrix op = DenseMatrix::identity(1);
    for (std::size_t k = 0; k < n_modes; ++k) op = kron(op, k == j ? b : DenseMatrix::identity(local));
    reg.creators.push_back(op.adjoint());
    reg.annihilators.push_back(std::move(op));
  }
  return reg;
}

Su2Triple bose_bilinears(const BosonRegister& reg) {
  if (reg.n_modes != 2) throw ContractError("Bose su(2) bilinears need exactly 2 modes");
  return bilinears(reg.creators, reg.annihilators);
}

bool BoseSu2Report::passed() const {
  auto below = [](const std::vector<RelationResidual>& rs, double tol) {
    return std::all_of(rs.begin(), rs.end(), [tol](const auto& r) { return r.residual < tol; });
  };
  return below(sector, kBoseSectorTolerance) && below(conservation, kBoseConservationTolerance);
}

BoseSu2Report bose_su2_sector_check(const BosonRegister& reg, std::size_t n_total) {
  const Su2Triple y = bose_bilinears(reg);
  if (n_total > reg.cutoff) {
    throw ContractError("sector n1 + n2 = " + std::to_string(n_total) + " exceeds the cutoff " +
                        std::to_string(reg.cutoff));
  }
  const std::size_t local = reg.cutoff + 1;
  std::vector<std::size_t> idx;
  for (std::size_t n1 = 0; n1 <= n_total; ++n1) idx.push_back(n1 * local + (n_total - n1));

  const std::string scope = "sector:" + std::to_string(n_total);
  BoseSu2Report report{idx.size(), {}, {}, {}, {}};
  for (auto& [label, defect] : su2_defects(y, "Y")) {
    report.sector.push_back({label, restrict_to(defect, idx).frobenius_norm(), scope});
    report.full.push_back({label, defect.frobenius_norm(), "full"});
  }

  const DenseMatrix number = reg.creators[0] * reg.annihilators[0] + reg.creators[1] * reg.annihilators[1];
  const char* names[] = {"Y1", "Y2", "Y3"};
  const DenseMatrix* ops[] = {&y.first, &y.second, &y.third};
  for (int k = 0; k < 3; ++k) {
    report.conservation.push_back({std::string("[") + names[k] + ",N]=0",
                                   commutator(*ops[k], number).frobenius_norm(), "full"});
  }
  report.anticommutator = {"{Y1,Y2}", restrict_to(anticommutator(y.first, y.second), idx).frobenius_norm(),
                           scope};
  return report;
}

}  // namespace pauli
