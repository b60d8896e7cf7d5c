#include <gtest/gtest.h>

#include <random>

#include "equichain/complex.hpp"
#include "equichain/errors.hpp"
#include "equichain/reduction.hpp"
#include "fixtures.hpp"

using namespace equichain;
using namespace equichain::testing;

namespace {

// A deterministic pseudo-random Z-linear map of the given degree on a complex
// with a basis: each cell goes to a small combination of cells one degree up.
LinearMap scramble(ComplexPtr c, int degree, std::uint64_t seed) {
  return LinearMap(degree, [c, degree, seed](const Cell& cell) {
    auto targets = c->basis(cell.degree + degree);
    if (targets.empty()) return Chain();
    std::uint64_t h = CellHash{}(cell) ^ seed;
    std::mt19937_64 rng(h);
    ChainAccumulator acc;
    for (int i = 0; i < 2; ++i)
      acc.add(targets[rng() % targets.size()], Integer(static_cast<long>(rng() % 5) - 2));
    return acc.take();
  });
}

}  // namespace

TEST(FiniteGroup, CyclicAndSymmetricTablesAreGroups) {
  for (int n = 1; n <= 7; ++n) EXPECT_TRUE(check_group_table(FiniteGroup::cyclic(n).table(), 0).ok);
  auto s3 = FiniteGroup::symmetric(3);
  EXPECT_EQ(s3.order(), 6);
  EXPECT_TRUE(check_group_table(s3.table(), s3.identity()).ok);
  // S3 is not abelian.
  bool abelian = true;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) abelian = abelian && s3.mul(a, b) == s3.mul(b, a);
  EXPECT_FALSE(abelian);
  for (int a = 0; a < 6; ++a) EXPECT_EQ(s3.mul(a, s3.inv(a)), s3.identity());
}

TEST(FiniteGroup, BrokenAssociativityNamesTriple) {
  // Latin square with identity 0 that is not associative.
  std::vector<std::vector<int>> mul{{0, 1, 2, 3, 4},
                                    {1, 0, 3, 4, 2},
                                    {2, 4, 0, 1, 3},
                                    {3, 2, 4, 0, 1},
                                    {4, 3, 1, 2, 0}};
  auto check = check_group_table(mul, 0);
  EXPECT_FALSE(check.ok);
  EXPECT_NE(check.message.find("associativity fails for the triple"), std::string::npos);
  EXPECT_THROW(FiniteGroup(mul, 0), InvalidInput);
}

TEST(FiniteGroup, SpecParsing) {
  EXPECT_EQ(group_from_spec("cyclic:5")->order(), 5);
  EXPECT_EQ(group_from_spec("symmetric:3")->order(), 6);
  EXPECT_FALSE(group_from_spec("cyclic:x"));
  EXPECT_FALSE(group_from_spec("dihedral:4"));
}

TEST(Dga, GroupRingAndIntervalSatisfyAxioms) {
  EXPECT_FALSE(zg(3)->check_axioms());
  EXPECT_FALSE(group_ring(symmetric(3))->check_axioms());
  EXPECT_FALSE(interval()->check_axioms());
  EXPECT_TRUE(zg(3)->zero_differential());
  EXPECT_FALSE(interval()->zero_differential());
}

TEST(Dga, BrokenLeibnizIsReported) {
  // Like the interval dga but with du = 1 + e, which breaks d(eu) = 0.
  std::vector<Dga::Generator> gens{{"1", 0}, {"e", 0}, {"u", 1}};
  std::vector<RingElement> diff(3);
  diff[2] = RingElement(0) + RingElement(1);
  std::vector<RingElement> prod(9);
  for (int g = 0; g < 3; ++g) prod[g] = prod[g * 3] = RingElement(g);
  prod[4] = RingElement(1);
  Dga bad(gens, 0, diff, prod, std::nullopt);
  auto problem = bad.check_axioms();
  ASSERT_TRUE(problem);
  EXPECT_NE(problem->find("Leibniz"), std::string::npos);
}

TEST(DegreeSum, Examples) {
  std::vector<int> empty;
  EXPECT_EQ(degree_sum(empty, 0, -1), 0);
  std::vector<int> degs{1, 2, 0};
  EXPECT_EQ(degree_sum(degs, 0, 2), 3);
  EXPECT_EQ(degree_sum(degs, 1, 0), 0);
  auto R = zg(3);
  std::vector<int> gens{0, 1, 2};
  EXPECT_EQ(generator_degree_sum(*R, gens, 0, 2), 0);
}

TEST(LinearCombination, NormalFormIsCanonical) {
  Chain a = Chain::from_terms({{Cell{0, {1}}, 2}, {Cell{0, {0}}, 1}, {Cell{0, {1}}, -2}});
  EXPECT_EQ(a.size(), 1u);
  EXPECT_EQ(a.coefficient(Cell{0, {0}}), 1);
  Chain b(Cell{0, {0}});
  EXPECT_EQ(a, b);
  EXPECT_TRUE((a - b).is_zero());
}

TEST(GradedCommutator, IdentityAndDifferentialGiveZero) {
  auto R = zg(3);
  ComplexPtr c = periodic(R, 4);
  LinearMap d = differential_map(c);
  for (int n = 0; n <= 4; ++n)
    for (const auto& cell : c->basis(n)) {
      EXPECT_TRUE(graded_commutator(LinearMap::identity(), c, c)(cell).is_zero());
      EXPECT_TRUE(graded_commutator(d, c, c)(cell).is_zero());
    }
}

TEST(GradedCommutator, LeibnizRuleOnSamples) {
  auto R = zg(2);
  ComplexPtr c = periodic(R, 6);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    LinearMap f = scramble(c, static_cast<int>(seed % 2), seed);
    LinearMap g = scramble(c, 1, seed * 77);
    LinearMap lhs = graded_commutator(f * g, c, c);
    int count = 0;
    for (int n = 0; n <= 4; ++n)
      for (const auto& x : sample_elements(*c, n, 30, seed)) {
        Chain expected = graded_commutator(f, c, c)(g(x));
        expected.add_scaled(f(graded_commutator(g, c, c)(x)), sign_of(f.degree()));
        EXPECT_EQ(lhs(x), expected);
        ++count;
      }
    EXPECT_EQ(count, 10);  // two cells per degree, sampled exhaustively
  }
}

TEST(TensorMap, KoszulSign) {
  ComplexPtr circle = FiniteZComplex::circle();
  LinearMap g(1, [](const Cell& c) { return c.degree == 0 ? Chain(Cell{1, {0}}) : Chain(); });
  LinearMap id = LinearMap::identity();
  Cell x{1, {0}}, y{0, {0}};
  Chain out = tensor_map(id, g)(TensorComplex::pack(x, y));
  EXPECT_EQ(out, -1 * Chain(TensorComplex::pack(x, Cell{1, {0}})));
  // |g| = 0: no sign on any x.
  Chain same = tensor_map(id, id)(TensorComplex::pack(x, y));
  EXPECT_EQ(same, Chain(TensorComplex::pack(x, y)));
}

TEST(TensorMap, CommutatorIsLeibniz) {
  auto R = zg(2);
  ComplexPtr c = periodic(R, 3);
  auto t = std::make_shared<TensorComplex>(c, c);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    LinearMap f = scramble(c, static_cast<int>(seed % 2), seed);
    LinearMap g = scramble(c, 1, seed + 100);
    LinearMap lhs = graded_commutator(tensor_map(f, g), t, t);
    LinearMap rhs1 = tensor_map(graded_commutator(f, c, c), g);
    LinearMap rhs2 = tensor_map(f, graded_commutator(g, c, c));
    for (int n = 0; n <= 4; ++n)
      for (const auto& x : sample_elements(*t, n, 25, seed)) {
        Chain expected = rhs1(x);
        expected.add_scaled(rhs2(x), sign_of(f.degree()));
        EXPECT_EQ(lhs(x), expected);
      }
  }
  for (int n = 0; n <= 5; ++n)
    for (const auto& x : t->basis(n)) EXPECT_TRUE(t->boundary(t->boundary(x)).is_zero());
}

TEST(Suspension, SignsAndDegrees) {
  auto R = interval();
  std::vector<std::vector<std::vector<RingElement>>> entries(3);
  entries[1] = {{RingElement(1)}};
  entries[2] = {{RingElement(0) - RingElement(1)}};
  auto m = std::make_shared<FreeModuleComplex>(R, std::vector<int>{1, 1, 1}, entries, "m");
  ASSERT_FALSE(m->check_square_zero());
  ComplexPtr s = suspend(m);
  ComplexPtr ss = suspend(s);
  for (int n = 0; n <= 3; ++n)
    for (const auto& x : m->basis(n)) {
      Cell sx = Suspension::suspend(x);
      Chain expected = -1 * suspension_map()(m->boundary(x));
      EXPECT_EQ(s->boundary(sx), expected);
      EXPECT_EQ(ss->basis(n + 2).size(), m->basis(n).size());
      for (int g = 0; g < R->size(); ++g) {
        Chain lhs = s->act(g, sx);
        Chain rhs = suspension_map()(m->act(g, x));
        rhs *= sign_of(R->degree(g));
        EXPECT_EQ(lhs, rhs);
      }
      EXPECT_TRUE(s->boundary(s->boundary(sx)).is_zero());
    }
}

TEST(FreeModuleComplex, PeriodicSquaresToZeroAndBrokenOneDoesNot) {
  auto R = zg(3);
  EXPECT_FALSE(periodic(R, 5)->check_square_zero());
  std::vector<std::vector<std::vector<RingElement>>> entries(3);
  entries[1] = {{RingElement(1) - RingElement(0)}};
  entries[2] = {{RingElement(1) - RingElement(0)}};
  FreeModuleComplex bad(R, {1, 1, 1}, entries, "bad");
  EXPECT_TRUE(bad.check_square_zero());
}

TEST(BarResolution, LowDegreeDifferential) {
  auto R = zg(2);
  auto b = std::make_shared<BarResolution>(R);
  // d(e[g]) = g[] - [].
  Chain d = b->boundary(Cell{1, {0, 1}});
  Chain expected = Chain(Cell{0, {1}}) - Chain(Cell{0, {0}});
  EXPECT_EQ(d, expected);
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(b->basis(n).size(), static_cast<std::size_t>(1) << (n + 1));
    EXPECT_EQ(b->module_basis(n).size(), static_cast<std::size_t>(1) << n);
    for (const auto& x : b->basis(n)) EXPECT_TRUE(b->boundary(b->boundary(x)).is_zero());
  }
}

TEST(ExtendRLinearly, SignRule) {
  auto R = interval();
  std::vector<std::vector<std::vector<RingElement>>> entries(2);
  entries[1] = {{RingElement(1)}};
  auto m = std::make_shared<FreeModuleComplex>(R, std::vector<int>{1, 1}, entries, "m");
  // Degree-one map sending the degree-0 basis element to the degree-1 one.
  LinearMap f = extend_r_linearly(m, m, 1, [R](const Cell& b) -> Chain {
    if (b.code[1] == 0) return Chain(FreeModuleComplex::make_cell(*R, R->unit(), 1, 0));
    return {};
  });
  Cell ub = FreeModuleComplex::make_cell(*R, 2, 0, 0);  // u . b0
  Chain expected = -1 * Chain(FreeModuleComplex::make_cell(*R, 2, 1, 0));
  EXPECT_EQ(f(ub), expected);
}
