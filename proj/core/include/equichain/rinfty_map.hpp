#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "equichain/action.hpp"
#include "equichain/bar.hpp"
#include "equichain/memo.hpp"
#include "equichain/reduction.hpp"
#include "equichain/transfer.hpp"

namespace equichain {

/// An R-infinity map M -> N of degree d, given by its components
/// f_l |r1|...|rl) : M -> N, each of degree d + l + |r1| + ... + |rl|.
/// The induced map BM -> BN is
///   f(r0|...|rm (x) x) = sum_k (-1)^{d(k + |r0..rk|)} r0|...|rk (x) f_{m-k}|r_{k+1}|...|rm) x.
class RInftyMap {
 public:
  using Component = std::function<Chain(const Tuple& r, const Cell& x)>;

  RInftyMap(ActionPtr source, ActionPtr target, int degree, Component component,
            std::string name = "f");

  int degree() const { return degree_; }
  const ActionPtr& source() const { return source_; }
  const ActionPtr& target() const { return target_; }
  const std::string& name() const { return name_; }

  /// f_l |r) x with l = r.size(); memoized.
  Chain component(const Tuple& r, const Cell& x) const;
  Chain component(const Tuple& r, const Chain& x) const;
  Chain component(const std::vector<RingElement>& slots, const Chain& x) const;
  /// f_0 as a linear map.
  LinearMap bottom() const;

 private:
  ActionPtr source_;
  ActionPtr target_;
  int degree_;
  Component component_;
  std::string name_;
  Memo<Cell, Chain, CellHash> memo_;
};

using RInftyMapPtr = std::shared_ptr<const RInftyMap>;

RInftyMapPtr make_rinfty_map(ActionPtr source, ActionPtr target, int degree,
                             RInftyMap::Component component, std::string name = "f");

/// The induced R-linear map of bar complexes.
LinearMap rinfty_map_apply(RInftyMapPtr f, BarPtr source_bar, BarPtr target_bar);

/// f' = [d, f], solved for from the equations
///   [d, f_l] = f'_l + sum_k (-1)^{d(k+|r1..rk|)} (r1..rk) f_{l-k}
///            + sum_k (-1)^{k+d+|r1..rk|} f_{l-1}|..|rk r_{k+1}|..)
///            + sum_k (-1)^{k+1+d+|r1..rk|} f_k (r_{k+1}..rl).
RInftyMapPtr rinfty_map_delta(RInftyMapPtr f);

/// (gf)_l = sum_k (-1)^{|f|(k+|r1..rk|)} g_k|r1..rk) f_{l-k}|r_{k+1}..rl).
RInftyMapPtr rinfty_map_compose(RInftyMapPtr g, RInftyMapPtr f);

RInftyMapPtr rinfty_identity(ActionPtr action);
RInftyMapPtr rinfty_sum(RInftyMapPtr f, RInftyMapPtr g, const Integer& scale = 1);  // f + scale g

/// f_0 extended by zero higher components.
RInftyMapPtr strict_extension(LinearMap f0, ActionPtr source, ActionPtr target);

/// Components of an R-infinity map sampled on random tuples (units
/// included) of length <= max_length and basis cells of the source in
/// degrees <= max_degree; the first nonzero value found is reported.
struct ComponentCheck {
  bool zero = true;
  int checks = 0;
  std::string witness;
};
ComponentCheck check_components_vanish(const RInftyMap& f, int max_length, int max_degree,
                                       int samples, std::uint64_t seed);

/// alpha_l|r) x = (-1)^{l+|r|} alpha_0 Sh(r) eta x and
/// beta_l|r) y = eta Sh(r) beta_0 y, for a reduction M => N with an action on
/// M and the transferred action on N.
struct StrictifiedMaps {
  RInftyMapPtr alpha;
  RInftyMapPtr beta;
  ShufflePtr shuffle;
};
StrictifiedMaps strictify_reduction_maps(const Reduction& reduction, ActionPtr source_action,
                                         ActionPtr target_action);

/// The R-infinity maps eps: BM -> M, zeta: M -> BM and the homotopy eta on BM,
/// BM carrying its strict left action.
struct BarExampleMaps {
  ActionPtr module_action;
  ActionPtr bar_action;
  RInftyMapPtr epsilon;
  RInftyMapPtr zeta;
  RInftyMapPtr eta;
};
BarExampleMaps bar_example_maps(std::shared_ptr<const PerturbedBar> bar);

/// Extends f_0 = [d, eta] to an R-infinity chain map of degree |eta| - 1 with
/// f_l|r1..rl) = (-1)^{d+1} [eta, (r1, ..., rl)].
RInftyMapPtr extend_nullhomotopic(LinearMap eta, ActionPtr source, ActionPtr target);

/// Fills cycles of ker(alpha) in BM by peeling the maximal-length part,
/// lifting it by id (x) contraction, and recursing on shorter words.
/// `contraction` must contract ker alpha_0 and be killed by the higher
/// components (as for strictified reduction maps).
CycleFiller kernel_filler(BarPtr source_bar, RInftyMapPtr alpha, LinearMap contraction);

}  // namespace equichain
