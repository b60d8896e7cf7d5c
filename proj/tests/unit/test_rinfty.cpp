#include <gtest/gtest.h>

#include <random>

#include "equichain/errors.hpp"
#include "equichain/rinfty.hpp"
#include "fixtures.hpp"

using namespace equichain;
using namespace equichain::testing;

namespace {

// All tuples over non-unit generators of dimension at most max_dim.
std::vector<Tuple> tuples_up_to(const Dga& R, int max_dim) {
  std::vector<Tuple> out;
  Tuple t;
  auto grow = [&](auto& self) -> void {
    if (!t.empty()) out.push_back(t);
    for (int g = 0; g < R.size(); ++g) {
      if (g == R.unit()) continue;
      t.push_back(g);
      if (tuple_degree(R, t) <= max_dim) self(self);
      t.pop_back();
    }
  };
  grow(grow);
  return out;
}

Chain random_element(const RInfty& rinfty, int degree, std::mt19937_64& rng) {
  auto cells = rinfty.basis(degree);
  ChainAccumulator acc;
  if (cells.empty()) return {};
  for (int i = 0; i < 3; ++i)
    acc.add(cells[rng() % cells.size()], Integer(static_cast<long>(rng() % 5) - 2));
  return acc.take();
}

}  // namespace

TEST(RInfty, GroupElementsAreCycles) {
  auto R = zg(3);
  RInfty rinfty(R);
  for (int g = 0; g < 3; ++g) EXPECT_TRUE(rinfty.boundary(rinfty.tuple({g})).is_zero());
}

TEST(RInfty, BoundaryOfPair) {
  auto G = cyclic(3);
  auto R = group_ring(G);
  RInfty rinfty(R);
  // d(g, h) = (gh) - (g)(h), with (e) the unit.
  for (int g = 1; g < 3; ++g)
    for (int h = 1; h < 3; ++h) {
      Chain expected = rinfty.tuple({G->mul(g, h)});
      expected -= rinfty.word({{g}, {h}});
      EXPECT_EQ(rinfty.boundary(rinfty.tuple({g, h})), expected);
    }
  // 1 + 2 = 0 in Z/3, so (1)(2) and the unit appear.
  Chain d = rinfty.boundary(rinfty.tuple({1, 2}));
  EXPECT_EQ(d.coefficient(RInfty::unit_cell()), 1);
}

TEST(RInfty, UnitRelations) {
  auto R = zg(2);
  RInfty rinfty(R);
  EXPECT_EQ(rinfty.tuple({0}), Chain(RInfty::unit_cell()));
  EXPECT_TRUE(rinfty.tuple({1, 0}).is_zero());
  EXPECT_TRUE(rinfty.tuple({0, 1, 1}).is_zero());
  Chain e = rinfty.tuple({1, 1});
  EXPECT_EQ(rinfty.multiply(Chain(RInfty::unit_cell()), e), e);
  EXPECT_EQ(RInfty::length(rinfty.word({{1}, {1}}).terms().front().first), 2);
}

TEST(RInfty, SquareZeroExhaustive) {
  for (auto R : {zg(2), zg(3), group_ring(symmetric(3)), interval()}) {
    RInfty rinfty(R);
    const int max_dim = R->size() > 4 ? 4 : 5;
    int count = 0;
    for (const auto& t : tuples_up_to(*R, max_dim)) {
      Chain dd = rinfty.boundary(rinfty.tuple_boundary(t));
      EXPECT_TRUE(dd.is_zero()) << "tuple of size " << t.size();
      ++count;
    }
    EXPECT_GT(count, 0);
  }
}

TEST(RInfty, LeibnizAndFiltrationOnRandomProducts) {
  for (auto R : {zg(3), interval()}) {
    RInfty r4(R, 4);
    RInfty r2(R, 2);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      const int da = static_cast<int>(rng() % 3), db = static_cast<int>(rng() % 3);
      Chain a = random_element(r2, da, rng), b = random_element(r2, db, rng);
      Chain ab = r4.multiply(a, b);
      Chain expected = r4.multiply(r4.boundary(a), b);
      expected.add_scaled(r4.multiply(a, r4.boundary(b)), sign_of(da));
      EXPECT_EQ(r4.boundary(ab), expected);
      for (const auto& [cell, c] : ab) EXPECT_LE(RInfty::length(cell), 4);
      for (const auto& [cell, c] : r4.boundary(ab)) EXPECT_LE(RInfty::length(cell), 4);
    }
  }
}

TEST(RInfty, ToRIsAMultiplicativeChainMapAndSectionIsNot) {
  auto G = cyclic(2);
  auto R = group_ring(G);
  RInfty rinfty(R, 3);
  EXPECT_EQ(rinfty.to_r(rinfty.tuple({1})), RingElement(1));
  EXPECT_TRUE(rinfty.to_r(rinfty.tuple({1, 1})).is_zero());
  std::mt19937_64 rng(5);
  RInfty r6(R, 6);
  for (int trial = 0; trial < 30; ++trial) {
    Chain a = random_element(rinfty, static_cast<int>(rng() % 2), rng);
    Chain b = random_element(rinfty, static_cast<int>(rng() % 2), rng);
    EXPECT_EQ(rinfty.to_r(r6.multiply(a, b)), R->multiply(rinfty.to_r(a), rinfty.to_r(b)));
    EXPECT_TRUE(rinfty.to_r(rinfty.boundary(a)).is_zero());
  }
  // (g)(g) != (g g) = (1) = 1.
  Chain product = rinfty.multiply(rinfty.section(RingElement(1)), rinfty.section(RingElement(1)));
  EXPECT_NE(product, rinfty.section(R->product(1, 1)));
}

TEST(FiltrationReduction, LengthOneIsIsomorphism) {
  auto R = zg(3);
  Reduction red = filtration_reduction(R, 1);
  for (const auto& x : red.source->basis(0)) {
    EXPECT_EQ(red.beta(red.alpha(x)), Chain(x));
    EXPECT_TRUE(red.eta(x).is_zero());
  }
  EXPECT_EQ(red.source->basis(0).size(), 3u);
}

TEST(FiltrationReduction, ProjectionValues) {
  auto G = cyclic(3);
  auto R = group_ring(G);
  auto rinfty = std::make_shared<const RInfty>(R, 3);
  LinearMap p3 = filtration_projection(rinfty, 3);
  const int g = 1, h = 1, k = 2;
  // Hand computation of id - [d, eta_3] on (g)(h, k):
  // eta_3 gives -(g, h, k), whose boundary is -(gh, k) + (g, hk) + (g)(h, k) - (g, h)(k);
  // eta_3 d (g)(h, k) = (g, h)(k).
  Chain expected = rinfty->tuple({G->mul(g, h), k}) - rinfty->tuple({g, G->mul(h, k)});
  EXPECT_EQ(p3(rinfty->word({{g}, {h, k}})), expected);
  // Products starting with a pair are killed.
  EXPECT_TRUE(p3(rinfty->word({{g, h}, {k}})).is_zero());
  // Shorter products are fixed.
  Chain shorter = rinfty->word({{g}, {h}});
  EXPECT_EQ(p3(shorter), shorter);
}

TEST(FiltrationReduction, ValidatesUpToLengthFour) {
  for (auto R : {zg(2), zg(3), interval()}) {
    for (int d = 1; d <= 4; ++d) {
      Reduction red = filtration_reduction(R, d);
      auto report = validate_reduction(red, SampleOptions{0, 6, 50, 3});
      EXPECT_TRUE(report.ok()) << "d = " << d << ": " << report.summary();
      // The projection agrees with the map to R on generator tuples.
      const RInfty& rinfty = static_cast<const RInfty&>(*red.source);
      for (int n = 0; n <= 2; ++n)
        for (const auto& cell : rinfty.basis(n)) {
          if (RInfty::factors(cell).size() != 1) continue;
          RingElement image = rinfty.to_r(Chain(cell));
          Chain expected;
          for (const auto& [gen, c] : image)
            expected += c * Chain(FreeModuleComplex::make_cell(*R, gen, 0, 0));
          EXPECT_EQ(red.alpha(cell), expected);
        }
    }
  }
}

TEST(FiltrationReduction, RejectsZero) { EXPECT_THROW(filtration_reduction(zg(2), 0), InvalidInput); }

TEST(RInftyReduction, AgreesWithFiltrationStages) {
  auto R = zg(2);
  Reduction lazy = rinfty_reduction(R);
  Reduction r3 = filtration_reduction(R, 3);
  for (int n = 0; n <= 3; ++n)
    for (const auto& x : r3.source->basis(n)) {
      EXPECT_EQ(lazy.alpha(x), r3.alpha(x));
      EXPECT_EQ(lazy.eta(x), r3.eta(x));
      Chain homotopy = lazy.source->boundary(lazy.eta(x)) + lazy.eta(lazy.source->boundary(x)) -
                       Chain(x) + lazy.beta(lazy.alpha(x));
      EXPECT_TRUE(homotopy.is_zero());
    }
}
