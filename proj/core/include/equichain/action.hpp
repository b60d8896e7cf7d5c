#pragma once

#include <functional>
#include <memory>
#include <string>

#include "equichain/complex.hpp"
#include "equichain/rinfty.hpp"

namespace equichain {

/// An action of R-infinity on a chain complex M: every generator tuple
/// (r0, ..., rm) acts by a map of degree m + |r0| + ... + |rm|. The unit
/// relations are applied here: (1) acts as the identity and a tuple of
/// length at least two containing 1 acts as zero.
class RInftyAction {
 public:
  RInftyAction(ComplexPtr complex, DgaPtr ring);
  virtual ~RInftyAction() = default;

  const ComplexPtr& complex() const { return complex_; }
  const Dga& ring() const { return *ring_; }
  const DgaPtr& ring_ptr() const { return ring_; }

  Chain act(const Tuple& t, const Cell& x) const;
  Chain act(const Tuple& t, const Chain& x) const;
  /// Action of an element of R-infinity (products act by composition).
  Chain act_element(const Chain& element, const Chain& x) const;

  virtual std::string name() const = 0;

 protected:
  /// Called only for tuples in normal form (no unit entries unless m = 0 and
  /// the entry is not the unit either).
  virtual Chain act_normalized(const Tuple& t, const Cell& x) const = 0;

 private:
  ComplexPtr complex_;
  DgaPtr ring_;
};

using ActionPtr = std::shared_ptr<const RInftyAction>;

/// The action of a strict module: (r) acts by r, longer tuples by zero.
class StrictAction : public RInftyAction {
 public:
  StrictAction(ComplexPtr module, DgaPtr ring);
  std::string name() const override { return "strict action on " + complex()->name(); }

 protected:
  Chain act_normalized(const Tuple& t, const Cell& x) const override;
};

/// An action given by a function on normalized tuples and cells.
class CallbackAction : public RInftyAction {
 public:
  using Function = std::function<Chain(const Tuple&, const Cell&)>;
  CallbackAction(ComplexPtr complex, DgaPtr ring, Function function, std::string name);
  std::string name() const override { return name_; }

 protected:
  Chain act_normalized(const Tuple& t, const Cell& x) const override;

 private:
  Function function_;
  std::string name_;
};

ActionPtr strict_action(ComplexPtr module, DgaPtr ring);

/// d(rho x) - (d rho) x - (-1)^{|rho|} rho (dx); zero for a genuine action.
Chain action_leibniz_defect(const RInftyAction& action, const RInfty& rinfty, const Tuple& t,
                            const Chain& x);

}  // namespace equichain
