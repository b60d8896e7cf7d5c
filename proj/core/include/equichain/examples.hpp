#pragma once

#include <memory>

#include "equichain/action.hpp"
#include "equichain/complex.hpp"
#include "equichain/group.hpp"
#include "equichain/reduction.hpp"

namespace equichain {

/// A G-complex together with a strong equivalence M <= M~ => N.
struct ExampleInput {
  ComplexPtr module;
  StrongEquivalence equivalence;
  std::string name;
};

/// The bar resolution of Z over ZG with its classical contraction to the
/// point: alpha the augmentation, beta(1) = [], eta(g0[g1|...|gn]) = [g0|g1|...|gn],
/// normalized to satisfy the side conditions. The span is M <= M => point.
ExampleInput gen_bar_resolution(GroupPtr group);
Reduction bar_resolution_contraction(DgaPtr group_ring);

/// The free ZG-complex for G = Z/p with C_i = ZG for 0 <= i <= 2k - 1 and
/// differentials alternating (g - 1) and the norm element.
std::shared_ptr<FreeModuleComplex> gen_lens_complex(int p, int k);

/// For G = Z/p: M = (ZG <- ZG) with d = g - 1, reduced to the circle
/// (Z in degrees 0 and 1). The transferred action on the circle has
/// nonzero higher terms. The span is M <= M => circle.
ExampleInput gen_circle_example(int p);

/// M <= M => M with identity reductions.
StrongEquivalence trivial_equivalence(ComplexPtr module);

/// The action of an augmented ring on a Z-complex through the augmentation:
/// (r) x = eps(r) x and longer tuples act by zero.
ActionPtr augmentation_action(ComplexPtr complex, DgaPtr ring);

}  // namespace equichain
