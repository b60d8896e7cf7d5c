#pragma once

#include <optional>
#include <string>

#include "equichain/action.hpp"
#include "equichain/memo.hpp"
#include "equichain/reduction.hpp"

namespace equichain {

/// Sh(r0, ..., rm): the sum over all ways of cutting the tuple into blocks
/// and inserting eta between consecutive blocks,
///   Sh(r0, ..., rm) = (r0, ..., rm) + sum_{k} (r0, ..., r_{k-1}) eta Sh(r_k, ..., rm).
/// Values on (tuple, cell) pairs are memoized.
class ShuffleOperator {
 public:
  ShuffleOperator(ActionPtr action, LinearMap eta);

  Chain apply(const Tuple& t, const Cell& x) const;
  Chain apply(const Tuple& t, const Chain& x) const;
  /// Multilinear extension over ring elements in the slots.
  Chain apply(const std::vector<RingElement>& slots, const Chain& x) const;

  const ActionPtr& action() const { return action_; }
  const LinearMap& eta() const { return eta_; }

 private:
  ActionPtr action_;
  LinearMap eta_;
  Memo<Cell, Chain, CellHash> memo_;
};

using ShufflePtr = std::shared_ptr<const ShuffleOperator>;

/// The action (r0, ..., rm) y = alpha Sh(r0, ..., rm) beta y on the target of
/// a reduction whose source carries an action.
class BasicTransferAction : public RInftyAction {
 public:
  BasicTransferAction(Reduction reduction, ActionPtr source_action);

  std::string name() const override { return "transferred action on " + complex()->name(); }
  const Reduction& reduction() const { return reduction_; }
  const ShufflePtr& shuffle() const { return shuffle_; }

 protected:
  Chain act_normalized(const Tuple& t, const Cell& y) const override;

 private:
  Reduction reduction_;
  ShufflePtr shuffle_;
  Memo<Cell, Chain, CellHash> memo_;
};

/// The action rho x = beta rho alpha x on the source of a reduction whose
/// target carries an action, for rho with entries in the augmentation ideal.
/// On generators: beta rho alpha x for m >= 1 and
/// beta (r) alpha x + eps(r) (x - beta alpha x) for m = 0.
class EasyTransferAction : public RInftyAction {
 public:
  EasyTransferAction(Reduction reduction, ActionPtr target_action);

  std::string name() const override { return "pulled back action on " + complex()->name(); }

 protected:
  Chain act_normalized(const Tuple& t, const Cell& x) const override;

 private:
  Reduction reduction_;
  ActionPtr target_action_;
};

/// [d, Sh(r)] x minus the three families
///   Sh d_tensor(r) + sum_k (-1)^{k-1+|r0..r_{k-1}|} Sh(.., r_{k-1} r_k, ..)
///                  + sum_k (-1)^{k+|r0..r_{k-1}|} Sh(r0..r_{k-1}) beta alpha Sh(r_k..rm),
/// zero whenever the reduction is valid.
Chain differential_sh_defect(const ShuffleOperator& sh, const Reduction& reduction, const Tuple& r,
                             const Cell& x);

/// Both transfers reject reductions failing the six identities on the
/// sampled elements when check is set.
ActionPtr transfer_basic(const Reduction& reduction, ActionPtr source_action,
                         std::optional<SampleOptions> check = SampleOptions{});
ActionPtr transfer_easy(const Reduction& reduction, ActionPtr target_action,
                        std::optional<SampleOptions> check = SampleOptions{});

}  // namespace equichain
