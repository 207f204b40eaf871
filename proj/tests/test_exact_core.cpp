#include "grt2/linalg.hpp"
#include "grt2/poly.hpp"
#include "random_poly.hpp"

#include <gtest/gtest.h>

using namespace grt2;

namespace {

Rational eval2(const Poly2& p, const Rational& x, const Rational& y) {
  Rational s = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (int i = 0; i < m[0]; ++i) t *= x;
    for (int i = 0; i < m[1]; ++i) t *= y;
    s += t;
  }
  return s;
}

const Poly3 X = var3(0), Y = var3(1), Z = var3(2);

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational q = make_rational(6, -4);
  EXPECT_EQ(to_string(q), "-3/2");
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(to_string(make_rational(0, -7)), "0");
  EXPECT_EQ(make_rational(0, 5).get_den(), 1);
}

TEST(Rational, ParseRoundTrip) {
  for (const char* s : {"0", "-3/2", "17", "5/12", "-1"}) EXPECT_EQ(to_string(parse_rational(s)), s);
  EXPECT_EQ(parse_rational("4/6"), make_rational(2, 3));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Poly, AbsorbingZero) {
  Poly2 p = var2(0) + var2(1);
  EXPECT_TRUE((p * Poly2{}).is_zero());
  EXPECT_TRUE((p * Rational(0)).is_zero());
}

TEST(Poly, SquareOfDifference) {
  Poly2 d = var2(0) - var2(1);
  Poly2 expected{{{2, 0}, 1}, {{1, 1}, -2}, {{0, 2}, 1}};
  EXPECT_EQ(d * d, expected);
}

TEST(Poly, NoZeroCoefficientsStored) {
  Poly3 p = X + Y;
  p -= X;
  EXPECT_EQ(p.size(), 1u);
  EXPECT_EQ(p, Y);
}

TEST(Poly, SubstitutePhi) {
  EXPECT_TRUE(substitute_phi(X + Y + Z).is_zero());
  Poly2 z2{{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}};
  EXPECT_EQ(substitute_phi(Z * Z), z2);
  // x^2 y^3 z^4 at (x, y) = (1, 1): z = -2, value 16.
  EXPECT_EQ(eval2(substitute_phi(Poly3::monomial({2, 3, 4})), 1, 1), 16);
}

TEST(Poly, ParityParts) {
  Poly3 p = X + X * X;
  EXPECT_EQ(even_part(p), X * X);
  EXPECT_EQ(odd_part(X * Y * Z), X * Y * Z);
  EXPECT_TRUE(even_part((X + Y + Z) * X * Y).is_zero());
  EXPECT_EQ(even_part(p) + odd_part(p), p);
}

TEST(Poly, ToString) {
  EXPECT_EQ(to_string(Poly2{{{2, 0}, 1}, {{1, 1}, -2}, {{0, 2}, make_rational(1, 2)}}), "1/2*y^2 - 2*x*y + x^2");
  EXPECT_EQ(to_string(Poly3{}), "0");
  EXPECT_EQ(to_string(nc_bracket(letter('x'), letter('y'))), "xy - yx");
}

TEST(NCPoly, Brackets) {
  const NCPoly x = letter('x'), y = letter('y');
  EXPECT_TRUE(nc_bracket(x, x).is_zero());
  NCPoly xy = nc_bracket(x, y);
  EXPECT_EQ(xy.coefficient("xy"), 1);
  EXPECT_EQ(xy.coefficient("yx"), -1);
  NCPoly xxy = nc_bracket(x, xy);
  NCPoly expected{{"xxy", 1}, {"xyx", -2}, {"yxx", 1}};
  EXPECT_EQ(xxy, expected);
  EXPECT_THROW(letter('z'), std::invalid_argument);
}

TEST(NCPoly, DepthOfZeroRejected) {
  EXPECT_THROW(depth(NCPoly{}), std::domain_error);
  EXPECT_EQ(depth(NCPoly{{"xyxy", 1}, {"yyy", 2}}), 2);
}

TEST(PolyProperty, RingAxioms) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Poly3 a = testgen::random_poly3(rng, 4, 4), b = testgen::random_poly3(rng, 4, 4), c = testgen::random_poly3(rng, 4, 4);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b - b, a);
    NCPoly u = testgen::random_lie(rng, 2), v = testgen::random_lie(rng, 2), w = testgen::random_lie(rng, 1);
    EXPECT_EQ((u * v) * w, u * (v * w));
    EXPECT_EQ(u * (v + w), u * v + u * w);
  }
}

TEST(PolyProperty, PhiIsHomomorphismAndKillsIdeal) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    Poly3 p = testgen::random_poly3(rng, 6, 5), q = testgen::random_poly3(rng, 6, 5);
    EXPECT_EQ(substitute_phi(p * q), substitute_phi(p) * substitute_phi(q));
    EXPECT_EQ(substitute_phi(p + q), substitute_phi(p) + substitute_phi(q));
    EXPECT_TRUE(substitute_phi((X + Y + Z) * p).is_zero());
  }
}

TEST(PolyProperty, BracketDepthAdditive) {
  std::mt19937 rng(13);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    NCPoly a = testgen::random_lie(rng, 2), b = testgen::random_lie(rng, 2);
    NCPoly br = nc_bracket(a, b);
    if (a.is_zero() || b.is_zero() || br.is_zero()) continue;
    EXPECT_GE(depth(br), depth(a) + depth(b));
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(Linalg, EchelonAndKernel) {
  std::vector<SparseVec> vs = {{{0, 1}, {1, 2}}, {{1, 1}, {2, 1}}, {{0, 1}, {1, 3}, {2, 1}}};
  EXPECT_EQ(rank_of(vs), 2u);
  auto ker = relation_kernel(vs, EchelonBasis{});
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_EQ(primitive_integer(ker[0]), (DenseVec{1, 1, -1}));
}

TEST(Linalg, KernelModuloSubspace) {
  EchelonBasis mod;
  mod.insert({{0, 1}});
  std::vector<SparseVec> vs = {{{0, 5}, {1, 1}}, {{1, 2}}};
  auto ker = relation_kernel(vs, mod);
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_EQ(primitive_integer(ker[0]), (DenseVec{2, -1}));
}

TEST(Linalg, RandomKernelIsKernel) {
  std::mt19937 rng(14);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<DenseVec> dense(7, DenseVec(5));
    for (auto& r : dense)
      for (auto& c : r) c = val(rng);
    std::vector<SparseVec> vs;
    for (const auto& r : dense) vs.push_back(to_sparse(r));
    auto ker = relation_kernel(vs, EchelonBasis{});
    EXPECT_EQ(ker.size() + rank_of(vs), dense.size());
    for (const auto& k : ker) {
      DenseVec sum(5, Rational(0));
      for (std::size_t i = 0; i < dense.size(); ++i)
        for (std::size_t j = 0; j < 5; ++j) sum[j] += k[i] * dense[i][j];
      EXPECT_TRUE(is_zero(sum));
    }
  }
}

TEST(Linalg, SpanHelpers) {
  std::vector<DenseVec> a = {{1, 2, 0}, {0, 1, 1}};
  std::vector<DenseVec> b = {{1, 3, 1}, {2, 4, 0}};
  EXPECT_TRUE(same_span(a, b));
  EXPECT_TRUE(in_span({1, 1, -1}, a));
  EXPECT_FALSE(in_span({0, 0, 1}, a));
  EXPECT_EQ(primitive_integer({make_rational(-1, 2), make_rational(3, 4)}), (DenseVec{2, -3}));
}
