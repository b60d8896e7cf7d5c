#pragma once

#include <memory>

#include "equichain/complex.hpp"
#include "equichain/dga.hpp"
#include "equichain/group.hpp"

namespace equichain::testing {

inline GroupPtr cyclic(int n) { return std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(n)); }
inline GroupPtr symmetric(int n) {
  return std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(n));
}
inline DgaPtr group_ring(GroupPtr g) { return std::make_shared<const Dga>(Dga::group_ring(g)); }
inline DgaPtr zg(int n) { return group_ring(cyclic(n)); }
inline DgaPtr interval() { return std::make_shared<const Dga>(interval_dga()); }

// The periodic resolution of Z over Z[Z/p] truncated at degree top:
// d alternates (g - 1) and the norm element.
inline std::shared_ptr<FreeModuleComplex> periodic(DgaPtr ring, int top) {
  const int p = ring->size();
  std::vector<int> ranks(top + 1, 1);
  std::vector<std::vector<std::vector<RingElement>>> entries(top + 1);
  for (int n = 1; n <= top; ++n) {
    RingElement e;
    if (n % 2 == 1) {
      e = RingElement(1) - RingElement(0);
    } else {
      for (int g = 0; g < p; ++g) e += RingElement(g);
    }
    entries[n] = {{e}};
  }
  return std::make_shared<FreeModuleComplex>(ring, ranks, entries, "periodic");
}

}  // namespace equichain::testing
