#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "pauli/errors.hpp"
#include "pauli/matrix_engine.hpp"
#include "pauli/pauli_sum.hpp"
#include "pauli/serialization.hpp"

using namespace pauli;

namespace {

const Complex kI(0, 1);

void expect_single(const PauliSum& s, Complex coefficient, const std::string& word) {
  ASSERT_EQ(s.size(), 1u) << format(s);
  EXPECT_EQ(s.terms()[0].coefficient, coefficient);
  EXPECT_EQ(format(s.terms()[0].word), word);
}

}  // namespace

TEST(Commutator, Examples) {
  expect_single(commutator(parse("XYZ"), parse("ZXY")), 2.0 * kI, "YZX");
  expect_single(commutator(parse("XXX"), parse("YYY")), -2.0 * kI, "ZZZ");
  EXPECT_TRUE(commutator(parse("XX"), parse("YY")).empty());
}

TEST(Anticommutator, Examples) {
  expect_single(anticommutator(parse("XY"), parse("YZ")), -2.0, "ZX");
  expect_single(anticommutator(parse("XX"), parse("YY")), -2.0, "ZZ");
  EXPECT_TRUE(anticommutator(parse("XYZ"), parse("ZXY")).empty());
}

TEST(Commutator, MatchesDenseBrackets) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + k % 4;
    const auto a = random_string(n, false, rng), b = random_string(n, false, rng);
    const auto ma = oracle::word(format(a)), mb = oracle::word(format(b));
    EXPECT_LT(oracle::distance(to_matrix(commutator(a, b)), oracle::commutator(ma, mb)), 1e-12);
    EXPECT_LT(oracle::distance(to_matrix(anticommutator(a, b)), oracle::anticommutator(ma, mb)), 1e-12);
  }
}

TEST(PauliSum, FoldsPhasesAndMerges) {
  PauliSum s(2);
  s.add(1.0, parse("iXY"));
  EXPECT_EQ(s.terms()[0].coefficient, kI);
  EXPECT_EQ(s.terms()[0].word.phase().exponent(), 0);
  s.add(2.0, parse("XY"));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.coefficient_of(parse("XY")), Complex(2.0, 1.0));
  s.add(1.0, parse("-iXY"));
  s.add(-2.0, parse("XY"));
  EXPECT_TRUE(s.empty());
  s.add(0.0, parse("ZZ"));
  EXPECT_TRUE(s.empty());
}

TEST(PauliSum, KeepsInsertionOrderAfterRemoval) {
  PauliSum s(1);
  s.add(1.0, parse("X"));
  s.add(1.0, parse("Y"));
  s.add(1.0, parse("Z"));
  s.add(-1.0, parse("Y"));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(format(s.terms()[1].word), "Z");
  s.add(1.0, parse("Z"));
  EXPECT_EQ(s.coefficient_of(parse("Z")), Complex(2.0));
}

TEST(PauliSum, ArithmeticAndErrors) {
  PauliSum a(1), b(1);
  a.add(1.0, parse("X"));
  b.add(0.5, parse("Z"));
  const auto c = (a + b).scaled(2.0);
  EXPECT_EQ(c.coefficient_of(parse("X")), Complex(2.0));
  EXPECT_EQ(c.coefficient_of(parse("Z")), Complex(1.0));
  EXPECT_TRUE(c.has_real_coefficients());
  EXPECT_FALSE(c.scaled(kI).has_real_coefficients());
  EXPECT_THROW(a.add(1.0, parse("XX")), DimensionError);
  PauliSum d(2);
  EXPECT_THROW(a += d, DimensionError);
}

TEST(PauliSum, TextFormat) {
  PauliSum s(2);
  EXPECT_EQ(format(s), "0");
  s.add(0.25, parse("XX"));
  s.add(-2.0 * kI, parse("ZZ"));
  EXPECT_EQ(format(s), "(0.25+0i)XX + (0-2i)ZZ");
}

TEST(PauliSum, Json) {
  const auto j = to_json(commutator(parse("XXX"), parse("YYY")));
  EXPECT_EQ(j.at("n"), 3);
  ASSERT_EQ(j.at("terms").size(), 1u);
  EXPECT_EQ(j.at("terms")[0].at("word"), "ZZZ");
  EXPECT_EQ(j.at("terms")[0].at("im"), -2.0);
}
