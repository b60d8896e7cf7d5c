#include "equichain/transfer.hpp"

#include "equichain/errors.hpp"

namespace equichain {

namespace {

void require_valid(const Reduction& reduction, const std::optional<SampleOptions>& check,
                   const char* what) {
  if (!check) return;
  auto report = validate_reduction(reduction, *check);
  if (!report.ok())
    throw PreconditionFailed(std::string(what) + ": reduction rejected: " + report.summary());
}

}  // namespace

ShuffleOperator::ShuffleOperator(ActionPtr action, LinearMap eta)
    : action_(std::move(action)), eta_(std::move(eta)) {}

Chain ShuffleOperator::apply(const Tuple& t, const Cell& x) const {
  if (t.empty()) return Chain(x);
  return memo_.get_or_compute(tuple_key(t, x), [&] {
    ChainAccumulator acc;
    acc.add(action_->act(t, x), 1);
    for (std::size_t k = 1; k < t.size(); ++k) {
      Tuple head(t.begin(), t.begin() + k), tail(t.begin() + k, t.end());
      Chain inner = eta_(apply(tail, x));
      if (!inner.is_zero()) acc.add(action_->act(head, inner), 1);
    }
    return acc.take();
  });
}

Chain ShuffleOperator::apply(const Tuple& t, const Chain& x) const {
  ChainAccumulator acc;
  for (const auto& [cell, c] : x) acc.add(apply(t, cell), c);
  return acc.take();
}

Chain ShuffleOperator::apply(const std::vector<RingElement>& slots, const Chain& x) const {
  ChainAccumulator acc;
  for (const auto& [t, c] : expand_slots(slots)) acc.add(apply(t, x), c);
  return acc.take();
}

BasicTransferAction::BasicTransferAction(Reduction reduction, ActionPtr source_action)
    : RInftyAction(reduction.target, source_action->ring_ptr()),
      reduction_(std::move(reduction)),
      shuffle_(std::make_shared<ShuffleOperator>(std::move(source_action), reduction_.eta)) {
  if (shuffle_->action()->complex() != reduction_.source)
    throw PreconditionFailed("basic transfer: the action does not live on the reduction source");
}

Chain BasicTransferAction::act_normalized(const Tuple& t, const Cell& y) const {
  return memo_.get_or_compute(tuple_key(t, y), [&] {
    return reduction_.alpha(shuffle_->apply(t, reduction_.beta(y)));
  });
}

EasyTransferAction::EasyTransferAction(Reduction reduction, ActionPtr target_action)
    : RInftyAction(reduction.source, target_action->ring_ptr()),
      reduction_(std::move(reduction)),
      target_action_(std::move(target_action)) {
  if (!ring().augmented()) throw PreconditionFailed("easy transfer needs an augmented ring");
  if (target_action_->complex() != reduction_.target)
    throw PreconditionFailed("easy transfer: the action does not live on the reduction target");
}

Chain EasyTransferAction::act_normalized(const Tuple& t, const Cell& x) const {
  Chain ax = reduction_.alpha(x);
  Chain out = reduction_.beta(target_action_->act(t, ax));
  if (t.size() == 1) {
    const Integer& e = ring().augmentation(t[0]);
    if (e != 0) {
      Chain rest = Chain(x) - reduction_.beta(ax);
      out.add_scaled(rest, e);
    }
  }
  return out;
}

Chain differential_sh_defect(const ShuffleOperator& sh, const Reduction& reduction, const Tuple& r,
                             const Cell& x) {
  const Dga& R = sh.action()->ring();
  const ChainComplex& M = *sh.action()->complex();
  const int m = static_cast<int>(r.size()) - 1;
  int total = m;
  for (int g : r) total += R.degree(g);
  ChainAccumulator acc;
  acc.add(M.boundary(sh.apply(r, x)), 1);
  acc.add(sh.apply(r, M.boundary(x)), -sign_of(total));
  int prefix = 0;
  for (int k = 0; k <= m; ++k) {
    const RingElement& dr = R.diff(r[k]);
    if (!dr.is_zero()) {
      std::vector<RingElement> slots;
      for (int i = 0; i <= m; ++i) slots.push_back(i == k ? dr : RingElement(r[i]));
      acc.add(sh.apply(slots, Chain(x)), -sign_of(k + prefix));
    }
    prefix += R.degree(r[k]);
  }
  prefix = R.degree(r[0]);
  for (int k = 1; k <= m; ++k) {
    std::vector<RingElement> merged;
    for (int i = 0; i <= m; ++i) {
      if (i == k - 1) continue;
      merged.push_back(i == k ? R.product(r[k - 1], r[k]) : RingElement(r[i]));
    }
    acc.add(sh.apply(merged, Chain(x)), -sign_of(k - 1 + prefix));
    Tuple head(r.begin(), r.begin() + k), tail(r.begin() + k, r.end());
    Chain inner = reduction.beta(reduction.alpha(sh.apply(tail, x)));
    if (!inner.is_zero()) acc.add(sh.apply(head, inner), -sign_of(k + prefix));
    prefix += R.degree(r[k]);
  }
  return acc.take();
}

ActionPtr transfer_basic(const Reduction& reduction, ActionPtr source_action,
                         std::optional<SampleOptions> check) {
  require_valid(reduction, check, "basic transfer");
  return std::make_shared<BasicTransferAction>(reduction, std::move(source_action));
}

ActionPtr transfer_easy(const Reduction& reduction, ActionPtr target_action,
                        std::optional<SampleOptions> check) {
  require_valid(reduction, check, "easy transfer");
  return std::make_shared<EasyTransferAction>(reduction, std::move(target_action));
}

}  // namespace equichain
