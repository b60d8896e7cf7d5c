#include <gtest/gtest.h>

#include "equichain/errors.hpp"
#include "equichain/reduction.hpp"
#include "fixtures.hpp"

using namespace equichain;
using namespace equichain::testing;

namespace {

// The segment: two vertices v0, v1 and an edge e with de = v1 - v0.
std::shared_ptr<FiniteZComplex> segment() {
  return std::make_shared<FiniteZComplex>(
      std::vector<int>{2, 1},
      std::vector<std::vector<std::vector<Integer>>>{{}, {{Integer(-1)}, {Integer(1)}}},
      "segment");
}

const Cell v0{0, {0}}, v1{0, {1}}, edge{1, {0}}, pt{0, {0}};

Reduction segment_to_point() {
  auto s = segment();
  auto p = FiniteZComplex::point();
  LinearMap alpha(0, [](const Cell& c) { return c.degree == 0 ? Chain(pt) : Chain(); });
  LinearMap beta(0, [](const Cell&) { return Chain(v0); });
  LinearMap eta(1, [](const Cell& c) { return c == v1 ? Chain(edge) : Chain(); });
  return {s, p, alpha, beta, eta, false};
}

Chain fill_segment_kernel(const Chain& z) {
  // Cycles of ker alpha live in degree 0 and have the form b (v1 - v0).
  if (z.is_zero()) return {};
  return z.coefficient(v1) * Chain(edge);
}

}  // namespace

TEST(ValidateReduction, IdentityPasses) {
  auto c = periodic(zg(2), 4);
  auto report = validate_reduction(identity_reduction(c, true));
  EXPECT_TRUE(report.ok()) << report.summary();
  EXPECT_GT(report.checks, 0);
}

TEST(ValidateReduction, SegmentPassesAndDoubledHomotopyFails) {
  Reduction red = segment_to_point();
  EXPECT_TRUE(validate_reduction(red).ok()) << validate_reduction(red).summary();
  Reduction doubled = red;
  doubled.eta = Integer(2) * red.eta;
  auto report = validate_reduction(doubled);
  EXPECT_TRUE(report.violates("homotopy"));
  EXPECT_FALSE(report.violations.front().witness.empty());
}

TEST(NormalizeHomotopy, FixedPointOnValidReduction) {
  Reduction red = segment_to_point();
  Reduction normalized = normalize_homotopy(red, SampleOptions{});
  for (int n = 0; n <= 1; ++n)
    for (const auto& x : red.source->basis(n)) EXPECT_EQ(normalized.eta(x), red.eta(x));
}

TEST(NormalizeHomotopy, RepairsSideConditions) {
  // (segment (x) circle) => circle with eta_raw = eta (x) id + beta tau alpha,
  // tau the degree-one chain map of the circle.
  Reduction base = segment_to_point();
  auto circle = FiniteZComplex::circle();
  auto source = std::make_shared<TensorComplex>(base.source, circle);
  auto target = std::make_shared<TensorComplex>(base.target, circle);
  LinearMap id = LinearMap::identity();
  LinearMap alpha = tensor_map(base.alpha, id);
  LinearMap beta = tensor_map(base.beta, id);
  LinearMap tau(1, [](const Cell& c) {
    auto [x, y] = TensorComplex::unpack(c);
    if (y.degree != 0) return Chain();
    return Chain(TensorComplex::pack(x, Cell{1, {0}}));
  });
  LinearMap eta_raw = tensor_map(base.eta, id) + beta * tau * alpha;
  Reduction raw{source, target, alpha, beta, eta_raw, false};
  auto raw_report = validate_reduction(raw);
  EXPECT_FALSE(raw_report.violates("homotopy"));
  EXPECT_TRUE(raw_report.violates("alpha_eta"));
  Reduction fixed = normalize_homotopy(raw, SampleOptions{});
  auto report = validate_reduction(fixed);
  EXPECT_TRUE(report.ok()) << report.summary();
  Reduction twice = normalize_homotopy(fixed);
  for (int n = 0; n <= 2; ++n)
    for (const auto& x : source->basis(n)) EXPECT_EQ(twice.eta(x), fixed.eta(x));
}

TEST(NormalizeHomotopy, ZeroStaysZero) {
  auto c = periodic(zg(3), 3);
  Reduction red = normalize_homotopy(identity_reduction(c));
  for (int n = 0; n <= 3; ++n)
    for (const auto& x : c->basis(n)) EXPECT_TRUE(red.eta(x).is_zero());
}

TEST(NormalizeHomotopy, RejectsBrokenInput) {
  Reduction red = segment_to_point();
  red.eta = LinearMap::zero(1);
  EXPECT_THROW(normalize_homotopy(red, SampleOptions{}), PreconditionFailed);
}

TEST(ContractionFromFiller, TwoTermIdentityComplex) {
  auto c = std::make_shared<FiniteZComplex>(
      std::vector<int>{1, 1},
      std::vector<std::vector<std::vector<Integer>>>{{}, {{Integer(1)}}}, "Z->Z");
  CycleFiller filler = [](const Chain& z) {
    Chain out;
    for (const auto& [cell, k] : z) {
      if (cell.degree != 0) throw FillerError("unexpected cycle");
      out += k * Chain(Cell{1, {0}});
    }
    return out;
  };
  LinearMap sigma = contraction_from_filler(c, filler);
  for (int n = 0; n <= 1; ++n)
    for (const auto& x : c->basis(n))
      EXPECT_EQ(graded_commutator(sigma, c, c)(x), Chain(x)) << to_string(x);
}

TEST(ContractionFromFiller, NonAcyclicComplexSurfacesFillerError) {
  auto circle = FiniteZComplex::circle();
  CycleFiller lazy = [](const Chain&) { return Chain(); };
  LinearMap sigma = contraction_from_filler(circle, lazy);
  EXPECT_THROW(sigma(Cell{0, {0}}), FillerError);
}

TEST(BuildReduction, ChainMapSectionIsKept) {
  Reduction base = segment_to_point();
  Reduction built = build_reduction(base.source, base.target, base.alpha, base.beta,
                                    fill_segment_kernel, false, SampleOptions{});
  EXPECT_EQ(built.beta(pt), Chain(v0));
  auto report = validate_reduction(built);
  EXPECT_TRUE(report.ok()) << report.summary();
}

TEST(BuildReduction, NonChainSectionIsCorrected) {
  // segment (x) segment => point with beta0 picking the far corner v1 (x) v1.
  Reduction base = segment_to_point();
  auto source = std::make_shared<TensorComplex>(base.source, base.source);
  auto target = base.target;
  LinearMap alpha(0, [](const Cell& c) { return c.degree == 0 ? Chain(pt) : Chain(); });
  LinearMap beta0(0, [](const Cell&) { return Chain(TensorComplex::pack(v1, v1)); });
  CycleFiller filler = [](const Chain& z) {
    // ker alpha in degree 0: combinations with coefficient sum zero; fill each
    // vertex difference along the grid edges v_i (x) v_j -> v0 (x) v0.
    Chain out;
    if (homogeneous_degree(z) == 1) {
      // Degree-one cycles are multiples of the boundary of the square.
      return -z.coefficient(TensorComplex::pack(edge, v1)) * Chain(TensorComplex::pack(edge, edge));
    }
    for (const auto& [cell, k] : z) {
      if (cell.degree != 0) throw FillerError("degree");
      auto [x, y] = TensorComplex::unpack(cell);
      // Path to (v0, v0): first move y, then x.
      if (y == v1) out += k * Chain(TensorComplex::pack(x, edge));
      if (x == v1) out += k * Chain(TensorComplex::pack(edge, v0));
    }
    return out;
  };
  Reduction built = build_reduction(source, target, alpha, beta0, filler, false, SampleOptions{});
  EXPECT_EQ(built.alpha(built.beta(pt)), Chain(pt));
  auto report = validate_reduction(built);
  EXPECT_TRUE(report.ok()) << report.summary();
}

TEST(BuildReduction, RejectsBadSection) {
  Reduction base = segment_to_point();
  LinearMap twice = Integer(2) * base.beta;
  EXPECT_THROW(build_reduction(base.source, base.target, base.alpha, twice, fill_segment_kernel,
                               false, SampleOptions{}),
               PreconditionFailed);
}
