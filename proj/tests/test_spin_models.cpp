#include <gtest/gtest.h>

#include <algorithm>

#include "oracle.hpp"
#include "pauli/errors.hpp"
#include "pauli/linalg.hpp"
#include "pauli/spin_models.hpp"

using namespace pauli;

namespace {

PauliString z_string(std::size_t n) { return parse(std::string(n, 'Z')); }

void expect_spectra_match(const SpectrumReport& sectors, const DenseMatrix& h, double tol) {
  const auto full = eig_hermitian(h).eigenvalues;
  const auto merged = sectors.sorted_eigenvalues();
  ASSERT_EQ(merged.size(), full.size());
  for (std::size_t k = 0; k < full.size(); ++k) EXPECT_NEAR(merged[k], full[k], tol) << k;
}

}  // namespace

TEST(Embed, Examples) {
  EXPECT_EQ(format(embed(Letter::X, 2, 3)), "IXI");
  EXPECT_EQ(format(embed(Letter::Z, 1, 1)), "Z");
  EXPECT_EQ((EmbeddedOperator{Letter::Y, 3, 4}.expand()), parse("IIYI"));
  EXPECT_THROW(embed(Letter::X, 0, 3), IndexError);
  EXPECT_THROW(embed(Letter::X, 4, 3), IndexError);
  EXPECT_THROW(embed(Letter::I, 1, 3), ContractError);
}

TEST(Embed, MixedPairsCommuteWithZString) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k) {
        if (j == k) continue;
        const auto xy = embed(Letter::X, j, n) * embed(Letter::Y, k, n);
        EXPECT_TRUE(commutes(xy, z_string(n)));
        EXPECT_TRUE(commutator(xy, z_string(n)).empty());
      }
}

TEST(BuildXxz, SingleBond) {
  const auto h = build_xxz(2, 1.0, 1.0, BoundaryCondition::open);
  ASSERT_EQ(h.size(), 3u);
  EXPECT_EQ(h.coefficient_of(parse("XX")), Complex(0.25));
  EXPECT_EQ(h.coefficient_of(parse("YY")), Complex(0.25));
  EXPECT_EQ(h.coefficient_of(parse("ZZ")), Complex(0.25));
}

TEST(BuildXxz, TermCounts) {
  EXPECT_EQ(build_xxz(3, 1, 1, BoundaryCondition::periodic).size(), 9u);
  EXPECT_EQ(build_xxz(3, 1, 1, BoundaryCondition::open).size(), 6u);
  EXPECT_EQ(build_xxz(8, 1, 0.5, BoundaryCondition::periodic).size(), 24u);
  // the two bonds of a periodic pair coincide
  const auto two = build_xxz(2, 1.0, 2.0, BoundaryCondition::periodic);
  EXPECT_EQ(two.size(), 3u);
  EXPECT_EQ(two.coefficient_of(parse("ZZ")), Complex(1.0));
  // j12 = 0 leaves only the Ising part
  EXPECT_EQ(build_xxz(4, 0, 1, BoundaryCondition::open).size(), 3u);
  EXPECT_THROW(build_xxz(1, 1, 1, BoundaryCondition::open), SizeError);
}

TEST(BuildXxz, MatchesHandBuiltChain) {
  // periodic 3-site ring built term by term with the oracle
  oracle::Mat hand = oracle::zeros(8);
  const char* bonds[] = {"XXI", "IXX", "XIX"};
  for (const char* bond : bonds) {
    std::string b(bond);
    for (char l : {'X', 'Y', 'Z'}) {
      std::string w = b;
      std::replace(w.begin(), w.end(), 'X', l);
      hand = oracle::add(hand, oracle::scale(l == 'Z' ? 0.5 / 4 : 1.0 / 4, oracle::word(w)));
    }
  }
  EXPECT_LT(oracle::distance(to_matrix(build_xxz(3, 1.0, 0.5, BoundaryCondition::periodic)), hand), 1e-15);
}

TEST(BuildHeisenberg12, Terms) {
  const auto h = build_heisenberg12(3, ThreeSiteVariant::H);
  const auto k = build_heisenberg12(3, ThreeSiteVariant::K);
  EXPECT_EQ(h.size(), 4u);
  EXPECT_EQ(k.size(), 6u);
  for (const char* w : {"XXI", "YYI", "IXX", "IYY"}) EXPECT_EQ(h.coefficient_of(parse(w)), Complex(1.0));
  EXPECT_EQ(k.coefficient_of(parse("XIX")), Complex(1.0));
  EXPECT_EQ(k.coefficient_of(parse("YIY")), Complex(1.0));
  EXPECT_TRUE(to_matrix(h).is_hermitian(1e-12));
  EXPECT_THROW(build_heisenberg12(4, ThreeSiteVariant::H), SizeError);
}

TEST(IsSymmetry, Classification) {
  EXPECT_EQ(is_symmetry(build_xxz(4, 1, 1, BoundaryCondition::periodic), z_string(4)), SymmetryKind::termwise);
  EXPECT_EQ(is_symmetry(build_heisenberg12(3, ThreeSiteVariant::K), z_string(3)), SymmetryKind::termwise);
  EXPECT_EQ(is_symmetry(build_heisenberg12(3, ThreeSiteVariant::H), z_string(3)), SymmetryKind::termwise);
  EXPECT_EQ(is_symmetry(build_xxz(4, 1, 1, BoundaryCondition::periodic), parse("XIII")), SymmetryKind::none);
  // distinct words are independent, so only a negligible anticommuting term
  // can leave the dense commutator below tolerance
  PauliSum tiny(3);
  tiny.add(1.0, parse("XII"));
  tiny.add(1e-12, parse("ZII"));
  EXPECT_EQ(is_symmetry(tiny, parse("XII")), SymmetryKind::global);
  EXPECT_EQ(to_string(SymmetryKind::termwise), "termwise");
  EXPECT_EQ(to_string(SymmetryKind::global), "global");
  EXPECT_EQ(to_string(SymmetryKind::none), "none");
  EXPECT_THROW(is_symmetry(build_xxz(3, 1, 1, BoundaryCondition::open), z_string(4)), DimensionError);
}

TEST(SectorDecompose, CompletenessAcrossChains) {
  const std::pair<double, double> couplings[] = {{1, 1}, {1, 0.5}, {0, 1}};
  for (std::size_t n = 3; n <= 8; ++n)
    for (auto bc : {BoundaryCondition::open, BoundaryCondition::periodic})
      for (auto [j12, j3] : couplings) {
        SCOPED_TRACE(testing::Message() << "n=" << n << " bc=" << to_string(bc) << " j12=" << j12 << " j3=" << j3);
        const auto h = build_xxz(n, j12, j3, bc);
        const auto r = sector_decompose(h, z_string(n));
        const std::size_t half = std::size_t{1} << (n - 1);
        EXPECT_EQ(r.plus_dim, half);
        EXPECT_EQ(r.minus_dim, half);
        EXPECT_LT(r.off_block_norm, 1e-10);
        EXPECT_LT(r.basis_residual, 1e-10);
        ASSERT_EQ(r.spectrum.sector_labels.size(), 2 * half);
        EXPECT_TRUE(std::all_of(r.spectrum.sector_labels.begin(), r.spectrum.sector_labels.begin() + half,
                                [](int s) { return s == 1; }));
        EXPECT_TRUE(std::all_of(r.spectrum.sector_labels.begin() + half, r.spectrum.sector_labels.end(),
                                [](int s) { return s == -1; }));
        expect_spectra_match(r.spectrum, to_matrix(h), 1e-9);
      }
}

TEST(SectorDecompose, ThreeSiteOperators) {
  for (auto v : {ThreeSiteVariant::H, ThreeSiteVariant::K}) {
    const auto h = build_heisenberg12(3, v);
    const auto r = sector_decompose(h, z_string(3));
    EXPECT_EQ(r.plus_dim, 4u);
    EXPECT_EQ(r.minus_dim, 4u);
    expect_spectra_match(r.spectrum, to_matrix(h), 1e-9);
  }
}

TEST(SectorDecompose, IdentityScaledSum) {
  PauliSum h(3);
  h.add(2.5, parse("III"));
  const auto r = sector_decompose(h, parse("XYZ"));
  for (double e : r.spectrum.eigenvalues) EXPECT_NEAR(e, 2.5, 1e-12);
}

TEST(SectorDecompose, NonZSymmetry) {
  // XXZ commutes termwise with X on every site too
  const auto h = build_xxz(4, 1.0, 0.5, BoundaryCondition::periodic);
  const auto r = sector_decompose(h, parse("XXXX"));
  expect_spectra_match(r.spectrum, to_matrix(h), 1e-9);
  EXPECT_LT(r.off_block_norm, 1e-10);
}

TEST(SectorDecompose, Errors) {
  const auto h = build_xxz(3, 1, 1, BoundaryCondition::open);
  EXPECT_THROW(sector_decompose(h, parse("XII")), ContractError);
  EXPECT_THROW(sector_decompose(h, parse("III")), DegenerateError);
  EXPECT_THROW(sector_decompose(h, parse("iZZZ")), ContractError);
  EXPECT_THROW(sector_decompose(h, parse("ZZ")), DimensionError);
}

TEST(ColumnBasis, ProjectorRank) {
  const auto p = projectors(parse("ZXZ"));
  const auto basis = column_basis(p.plus);
  ASSERT_EQ(basis.size(), 4u);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b)
      EXPECT_NEAR(std::abs(inner(basis[a], basis[b]) - Complex(a == b ? 1.0 : 0.0)), 0.0, 1e-12);
}

TEST(BoundaryCondition, RoundTrip) {
  EXPECT_EQ(boundary_from_string("open"), BoundaryCondition::open);
  EXPECT_EQ(boundary_from_string(to_string(BoundaryCondition::periodic)), BoundaryCondition::periodic);
  EXPECT_THROW(boundary_from_string("twisted"), ContractError);
}
