#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "quokka/census.hpp"
#include "quokka/symmetric.hpp"

using namespace quokka;

namespace {

MatrixGroupInput parse(const std::string& text) {
  std::istringstream is(text);
  return parse_group(is);
}

std::string domain_message(const std::string& text) {
  try {
    parse(text);
  } catch (const domain_error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(FiniteField, PrimeFieldArithmetic) {
  const FiniteField F(7);
  for (FiniteField::Elem a = 0; a < 7; ++a)
    for (FiniteField::Elem b = 0; b < 7; ++b) {
      EXPECT_EQ(F.add(a, b), (a + b) % 7);
      EXPECT_EQ(F.mul(a, b), (a * b) % 7);
    }
  for (FiniteField::Elem a = 1; a < 7; ++a) EXPECT_EQ(F.mul(a, F.inv(a)), 1);
  EXPECT_EQ(F.primitive(), 3);
  EXPECT_THROW(F.inv(0), domain_error);
}

TEST(FiniteField, NineElements) {
  const FiniteField F(3, {1, 0, 1});  // x^2 + 1
  EXPECT_EQ(F.q(), 9u);
  const FiniteField::Elem x = 3;
  EXPECT_EQ(F.mul(x, x), 2);  // x^2 = -1
  int order = 1;
  for (FiniteField::Elem g = F.primitive(); g != 1; g = F.mul(g, F.primitive())) ++order;
  EXPECT_EQ(order, 8);
  for (FiniteField::Elem a = 1; a < 9; ++a) EXPECT_EQ(F.mul(a, F.inv(a)), 1);
  EXPECT_THROW(FiniteField(3, {2, 0, 1}), domain_error);  // x^2 - 1 splits
  EXPECT_THROW(FiniteField(4), domain_error);
  EXPECT_THROW(FiniteField(3, {1, 0, 0, 0, 0, 0, 1}), domain_error);  // x^6 + 1 = (x^2 + 1)^3
  EXPECT_THROW(FiniteField(3, {1, 0, 0, 0, 0, 0, 0, 1}), domain_error);  // 2187 elements
}

TEST(Matrix, InverseAndDeterminant) {
  const FiniteField F(5);
  const Matrix a = {1, 2, 3, 4};  // det = -2 = 3
  EXPECT_EQ(mat_det(F, a, 2), 3);
  EXPECT_EQ(mat_mul(F, a, mat_inverse(F, a, 2), 2), identity_matrix(2));
  EXPECT_THROW(mat_inverse(F, Matrix{1, 2, 2, 4}, 2), domain_error);
  EXPECT_EQ(mat_det(F, Matrix{1, 2, 2, 4}, 2), 0);
}

TEST(Census, OrderFormulas) {
  EXPECT_EQ(gl_order(2, 3), 48u);
  EXPECT_EQ(sl_order(2, 5), 120u);
  EXPECT_EQ(sp_order(4, 3), 51840u);
  for (std::uint32_t p : {3u, 5u, 7u}) EXPECT_EQ(census(builtin_generators("SL", 2, p)).total, p * (p * p - 1));
}

TEST(Census, SL23) {
  const auto c = census(builtin_generators("sl", 2, 3));
  EXPECT_EQ(c.total, 24);
  EXPECT_EQ(c.proportion(1), make_rational(3, 8));
  EXPECT_EQ(c.proportion(2), make_rational(3, 8));
  EXPECT_EQ(c.proportion(4), make_rational(1, 4));
  EXPECT_EQ(c.proportion(8), 0);
}

// Oracle: GL_2(3) has 1 identity, 13 involutions, 8 elements of order 3, 6 of
// order 4, 8 of order 6 and 12 of order 8.
TEST(Census, GL23ByElementOrders) {
  const auto c = census(builtin_generators("gl", 2, 3));
  EXPECT_EQ(c.total, 48);
  EXPECT_EQ(c.by_two_part.at(1), 1 + 8);
  EXPECT_EQ(c.by_two_part.at(2), 13 + 8);
  EXPECT_EQ(c.by_two_part.at(4), 6);
  EXPECT_EQ(c.by_two_part.at(8), 12);
  // P(|x|_2 > |y|_2) = (21*9 + 6*30 + 12*36) / 48^2
  EXPECT_EQ(pm_exact(c, c), make_rational(21 * 9 + 6 * 30 + 12 * 36, 48 * 48));
  EXPECT_EQ(pm_exact(c, c), make_rational(89, 256));
}

TEST(Census, BuiltinGroupsHaveTheirOrders) {
  EXPECT_EQ(enumerate(builtin_generators("gl", 2, 5)).size(), 480u);
  EXPECT_EQ(enumerate(builtin_generators("gl", 3, 3)).size(), 11232u);
  EXPECT_EQ(enumerate(builtin_generators("gl", 1, 7)).size(), 6u);
  EXPECT_EQ(enumerate(builtin_generators("sp", 2, 5)).size(), 120u);
}

TEST(Census, Sp43NoKeyCollisions) {
  const auto in = builtin_generators("sp", 4, 3);
  const auto elems = enumerate(in);
  EXPECT_EQ(elems.size(), 51840u);
  // every element preserves the form
  const FiniteField F(3);
  Matrix J(16, 0);
  for (int i = 0; i < 2; ++i) {
    J[static_cast<std::size_t>(i * 4 + 2 + i)] = 1;
    J[static_cast<std::size_t>((2 + i) * 4 + i)] = 2;
  }
  for (std::size_t i = 0; i < elems.size(); i += 997)
    EXPECT_EQ(mat_mul(F, mat_mul(F, mat_transpose(elems[i], 4), J, 4), elems[i], 4), J);
}

TEST(Census, TwoPartOrderMatchesNaiveOrder) {
  for (auto [fam, dim, p] : {std::tuple{"gl", 2, 5u}, std::tuple{"sp", 4, 3u}, std::tuple{"gl", 3, 3u}}) {
    const auto in = builtin_generators(fam, dim, p);
    const auto elems = enumerate(in);
    const FiniteField F(p);
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (int i = 0; i < 1000; ++i) {
      const auto& g = elems[pick(rng)];
      EXPECT_EQ(two_part_order(F, g, elems.size(), dim), two_part(naive_order(F, g, dim)));
    }
  }
}

// Oracle: S_4 as permutation matrices over F_3 against the symmetric-group census.
TEST(Census, PermutationMatricesMatchSymmetricCensus) {
  MatrixGroupInput in;
  in.p = 3;
  in.dim = 4;
  in.generators.push_back({0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});  // (1 2)
  in.generators.push_back({0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0});  // 4-cycle
  const auto c = census(in);
  EXPECT_EQ(c.total, 24);
  for (const auto& [t, prop] : sn_census(4)) EXPECT_EQ(c.proportion(t), prop);
}

TEST(Census, PmTrichotomy) {
  const auto a = census(builtin_generators("gl", 2, 3));
  const auto b = census(builtin_generators("sl", 2, 5));
  EXPECT_EQ(pm_exact(a, b) + pm_exact(b, a) + tie_probability(a, b), 1);
  MatrixGroupInput odd;
  odd.p = 7;
  odd.dim = 1;
  odd.generators.push_back({2});  // order 3
  const auto o = census(odd);
  EXPECT_EQ(pm_exact(o, o), 0);
}

TEST(Census, EnumerationIsOrderIndependent) {
  auto in = builtin_generators("gl", 2, 3);
  const auto first = enumerate(in);
  std::reverse(in.generators.begin(), in.generators.end());
  EXPECT_EQ(enumerate(in), first);
}

TEST(Census, Budget) {
  EXPECT_THROW(enumerate(builtin_generators("gl", 3, 3), 1000), overflow_error);
  auto in = builtin_generators("sl", 2, 3);
  in.declared_order = 25;
  EXPECT_THROW(enumerate(in), consistency_error);
}

TEST(Census, UnsupportedFamilies) {
  EXPECT_THROW(builtin_generators("SO", 3, 3), unsupported_error);
  EXPECT_THROW(builtin_generators("GU", 2, 3), unsupported_error);
  EXPECT_THROW(builtin_generators("gl", 2, 9), domain_error);
  EXPECT_THROW(builtin_generators("sp", 3, 3), domain_error);
}

TEST(GroupFile, ParsesHeaderPolyAndGenerators) {
  const auto in = parse("# comment\n\n3 2 8   # Q8 in SL_2(9)\npoly 1 0 1\n3 0 0 6\n0 1 2 0\n");
  EXPECT_EQ(in.p, 3u);
  EXPECT_EQ(in.dim, 2);
  EXPECT_EQ(in.poly, (std::vector<std::uint32_t>{1, 0, 1}));
  ASSERT_EQ(in.generators.size(), 2u);
  const auto c = census(in);
  EXPECT_EQ(c.total, 8);
  EXPECT_EQ(c.proportion(4), make_rational(3, 4));
}

TEST(GroupFile, LineNumberedErrors) {
  EXPECT_NE(domain_message("3 2\n1 1 0\n").find("line 2"), std::string::npos);
  EXPECT_NE(domain_message("3 2\n1 1\n0 1\n").find("line 2"), std::string::npos);
  EXPECT_NE(domain_message("3 2\n1 1 0 1\n1 2 2 4x\n").find("line 3"), std::string::npos);
  EXPECT_NE(domain_message("3 2\n1 2 2 1\n").find("not invertible"), std::string::npos);  // det 1 - 4 = 0 mod 3
  EXPECT_NE(domain_message("4 2\n1 0 0 1\n").find("line 1"), std::string::npos);
  EXPECT_NE(domain_message("3 2\n1 0 0 3\n").find("outside"), std::string::npos);
  EXPECT_NE(domain_message("3 2\npoly 2 0 1\n").find("reducible"), std::string::npos);
  EXPECT_NE(domain_message("3 2\n").find("no generators"), std::string::npos);
  EXPECT_NE(domain_message("").find("missing header"), std::string::npos);
}

TEST(GroupFile, BundledSamples) {
  const std::string dir = QUOKKA_SAMPLES_DIR;
  EXPECT_EQ(census(load_group_file(dir + "/sl2_3.txt")).total, 24);
  EXPECT_EQ(census(load_group_file(dir + "/gl2_3.txt")).total, 48);
  EXPECT_EQ(census(load_group_file(dir + "/q8_f9.txt")).total, 8);
  EXPECT_THROW(load_group_file(dir + "/missing.txt"), domain_error);
}

TEST(Sampler, DeterministicAndWithinSupport) {
  const auto in = builtin_generators("sl", 2, 3);
  const auto a = random_word_sample(in, 50, 10000, 7);
  const auto b = random_word_sample(in, 50, 10000, 7);
  EXPECT_EQ(a.table.by_two_part, b.table.by_two_part);
  EXPECT_EQ(a.table.total, 10000);
  const auto exact = census(in);
  for (const auto& [t, n] : a.table.by_two_part) EXPECT_TRUE(exact.by_two_part.count(t)) << t;
  EXPECT_STREQ(SampleResult::kLabel, "APPROXIMATE");
}
