#include "equichain/action.hpp"

#include <algorithm>

#include "equichain/errors.hpp"

namespace equichain {

RInftyAction::RInftyAction(ComplexPtr complex, DgaPtr ring)
    : complex_(std::move(complex)), ring_(std::move(ring)) {}

Chain RInftyAction::act(const Tuple& t, const Cell& x) const {
  const int unit = ring_->unit();
  if (t.size() == 1 && t[0] == unit) return Chain(x);
  if (t.size() > 1 && std::find(t.begin(), t.end(), unit) != t.end()) return {};
  return act_normalized(t, x);
}

Chain RInftyAction::act(const Tuple& t, const Chain& x) const {
  const int unit = ring_->unit();
  if (t.size() == 1 && t[0] == unit) return x;
  if (t.size() > 1 && std::find(t.begin(), t.end(), unit) != t.end()) return {};
  ChainAccumulator acc;
  for (const auto& [cell, c] : x) acc.add(act_normalized(t, cell), c);
  return acc.take();
}

Chain RInftyAction::act_element(const Chain& element, const Chain& x) const {
  ChainAccumulator acc;
  for (const auto& [word, c] : element) {
    auto fs = RInfty::factors(word);
    Chain y = x;
    for (auto it = fs.rbegin(); it != fs.rend() && !y.is_zero(); ++it) y = act(*it, y);
    acc.add(y, c);
  }
  return acc.take();
}

StrictAction::StrictAction(ComplexPtr module, DgaPtr ring)
    : RInftyAction(std::move(module), std::move(ring)) {
  if (complex()->ring() != &this->ring())
    throw PreconditionFailed("strict action: " + complex()->name() + " is not a module over this ring");
}

Chain StrictAction::act_normalized(const Tuple& t, const Cell& x) const {
  if (t.size() != 1) return {};
  return complex()->act(t[0], x);
}

ActionPtr strict_action(ComplexPtr module, DgaPtr ring) {
  return std::make_shared<StrictAction>(std::move(module), std::move(ring));
}

CallbackAction::CallbackAction(ComplexPtr complex, DgaPtr ring, Function function, std::string name)
    : RInftyAction(std::move(complex), std::move(ring)),
      function_(std::move(function)),
      name_(std::move(name)) {}

Chain CallbackAction::act_normalized(const Tuple& t, const Cell& x) const { return function_(t, x); }

Chain action_leibniz_defect(const RInftyAction& action, const RInfty& rinfty, const Tuple& t,
                            const Chain& x) {
  const ChainComplex& m = *action.complex();
  Chain out = m.boundary(action.act(t, x));
  out -= action.act_element(rinfty.tuple_boundary(t), x);
  out.add_scaled(action.act(t, m.boundary(x)), -sign_of(tuple_degree(action.ring(), t)));
  return out;
}

}  // namespace equichain
