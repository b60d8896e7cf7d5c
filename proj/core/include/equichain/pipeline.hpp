#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "equichain/action.hpp"
#include "equichain/bar.hpp"
#include "equichain/homology.hpp"
#include "equichain/reduction.hpp"

namespace equichain {

/// Forwards to another complex up to degree `top` and raises
/// TruncationError for anything above.
class TruncatedComplex : public ChainComplex {
 public:
  TruncatedComplex(ComplexPtr inner, int top);

  std::string name() const override { return inner_->name(); }
  using ChainComplex::boundary;
  Chain boundary(const Cell& cell) const override;
  bool has_basis() const override { return inner_->has_basis(); }
  std::vector<Cell> basis(int degree) const override;
  const Dga* ring() const override { return inner_->ring(); }
  Chain act(int generator, const Cell& cell) const override;
  ModuleSplit split(const Cell& cell) const override;
  std::vector<Cell> module_basis(int degree) const override;

  const ComplexPtr& inner() const { return inner_; }
  int top() const { return top_; }

 private:
  void guard(int degree) const;

  ComplexPtr inner_;
  int top_;
};

/// The G-linear span M <= BM <= BM~ => BN built from M <= M~ => N.
struct PipelineResult {
  Reduction left;    // BM => M
  Reduction middle;  // BM~ => BM
  Reduction right;   // BM~ => BN
  ComplexPtr target; // BN

  ActionPtr module_action;  // strict action on M
  ActionPtr tilde_action;   // pulled back to M~
  ActionPtr target_action;  // transferred to N
  std::shared_ptr<const PerturbedBar> bm, bm_tilde, bn;
  int max_degree = 0;
};

/// M must be the target of se.left, and M~ a free complex over the same
/// group ring. When `check` is set, both input reductions are validated on
/// samples (degrees clipped to max_degree) and PreconditionFailed is raised
/// on a violation. All complexes and maps of the result are truncated at
/// max_degree + 1, so the legs can be validated in degrees below max_degree
/// (eta eta on degree n reaches degree n + 2).
PipelineResult equivariant_strong_equivalence(ComplexPtr module, const StrongEquivalence& se, int max_degree,
                                              std::optional<SampleOptions> check = SampleOptions{});

/// sum_{m=0}^{n} |G|^m rk N_{n-m}.
Integer bn_rank(int n, const std::vector<int>& ranks, int group_order);

/// The target BN modulo G in degrees 0..max_degree+1.
ChainMatrices pipeline_quotient(const PipelineResult& result);

}  // namespace equichain
