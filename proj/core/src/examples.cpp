#include "equichain/examples.hpp"

#include "equichain/errors.hpp"

namespace equichain {

Reduction bar_resolution_contraction(DgaPtr group_ring) {
  auto source = std::make_shared<const BarResolution>(group_ring);
  auto target = FiniteZComplex::point();
  const int e = group_ring->unit();
  const Cell pt{0, {0}};
  LinearMap alpha(0, [pt](const Cell& c) { return c.degree == 0 ? Chain(pt) : Chain(); });
  LinearMap beta(0, [e](const Cell&) { return Chain(Cell{0, {e}}); });
  LinearMap eta(1, [e](const Cell& c) {
    Cell out{c.degree + 1, {e}};
    out.code.insert(out.code.end(), c.code.begin(), c.code.end());
    return Chain(std::move(out));
  });
  return normalize_homotopy(Reduction{source, target, alpha, beta, eta, false});
}

ExampleInput gen_bar_resolution(GroupPtr group) {
  auto ring = std::make_shared<const Dga>(Dga::group_ring(group));
  Reduction right = bar_resolution_contraction(ring);
  return {right.source, {identity_reduction(right.source, true), right},
          "bar resolution of " + group->name()};
}

std::shared_ptr<FreeModuleComplex> gen_lens_complex(int p, int k) {
  if (p < 2 || k < 1) throw InvalidInput("lens complex needs p >= 2 and k >= 1");
  auto ring = std::make_shared<const Dga>(Dga::group_ring(
      std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(p))));
  const int top = 2 * k - 1;
  std::vector<std::vector<std::vector<RingElement>>> entries(top + 1);
  for (int n = 1; n <= top; ++n) {
    RingElement x;
    if (n % 2 == 1) {
      x = RingElement(1) - RingElement(ring->unit());
    } else {
      for (int g = 0; g < p; ++g) x += RingElement(g);
    }
    entries[n] = {{x}};
  }
  return std::make_shared<FreeModuleComplex>(ring, std::vector<int>(top + 1, 1), entries,
                                             "L(" + std::to_string(p) + ",1)");
}

ExampleInput gen_circle_example(int p) {
  if (p < 2) throw InvalidInput("circle example needs p >= 2");
  auto group = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(p));
  auto ring = std::make_shared<const Dga>(Dga::group_ring(group));
  const int e = ring->unit(), g = 1;
  std::vector<std::vector<std::vector<RingElement>>> entries(2);
  entries[1] = {{RingElement(g) - RingElement(e)}};
  auto m = std::make_shared<FreeModuleComplex>(ring, std::vector<int>{1, 1}, entries,
                                               "Z[Z/" + std::to_string(p) + "] circle");
  auto circle = FiniteZComplex::circle();
  const Dga* R = ring.get();
  LinearMap alpha(0, [e](const Cell& c) -> Chain {
    if (c.degree == 0) return Chain(Cell{0, {0}});
    return c.code[0] == e ? Chain(Cell{1, {0}}) : Chain();
  });
  LinearMap beta0(0, [R, e, p](const Cell& c) -> Chain {
    if (c.degree == 0) return Chain(FreeModuleComplex::make_cell(*R, e, 0, 0));
    ChainAccumulator acc;
    for (int h = 0; h < p; ++h) acc.add(FreeModuleComplex::make_cell(*R, h, 1, 0), 1);
    return acc.take();
  });
  // d(g^i b1) = g^{i+1} b0 - g^i b0; solve on span{g^i b1 : i != 0}.
  CycleFiller filler = [R, group, g, p](const Chain& z) -> Chain {
    if (z.is_zero()) return {};
    if (homogeneous_degree(z) != 0) throw FillerError("circle example: unexpected cycle " + to_string(z));
    ChainAccumulator acc;
    Integer c = 0;
    int power = g;
    for (int i = 1; i < p; ++i) {
      c -= z.coefficient(FreeModuleComplex::make_cell(*R, power, 0, 0));
      acc.add(FreeModuleComplex::make_cell(*R, power, 1, 0), c);
      power = group->mul(power, g);
    }
    return acc.take();
  };
  Reduction right = build_reduction(m, circle, alpha, beta0, filler, false, SampleOptions{});
  return {m, {identity_reduction(m, true), right}, m->name()};
}

StrongEquivalence trivial_equivalence(ComplexPtr module) {
  const bool r_linear = module->ring() != nullptr;
  return {identity_reduction(module, r_linear), identity_reduction(module, r_linear)};
}

ActionPtr augmentation_action(ComplexPtr complex, DgaPtr ring) {
  if (!ring->augmented()) throw PreconditionFailed("augmentation action needs an augmented ring");
  const Dga* R = ring.get();
  return std::make_shared<CallbackAction>(
      complex, ring,
      [R](const Tuple& t, const Cell& x) -> Chain {
        if (t.size() != 1) return {};
        const Integer& e = R->augmentation(t[0]);
        return e == 0 ? Chain() : e * Chain(x);
      },
      "trivial action on " + complex->name());
}

}  // namespace equichain
