#pragma once

#include <memory>
#include <string>
#include <vector>

#include "equichain/action.hpp"
#include "equichain/complex.hpp"
#include "equichain/reduction.hpp"

namespace equichain {

/// Words r0|r1|...|rm (x) x over ring generators and cells x of an inner
/// complex, with the left R-action on the r0 slot. Cell code:
/// [m, r0, ..., rm, code of x]; degree m + |r0| + ... + |rm| + |x|.
/// Unit entries are kept (the construction is not normalized).
class BarBase : public ChainComplex {
 public:
  struct Word {
    Tuple r;
    Cell x;
  };

  BarBase(DgaPtr ring, ComplexPtr inner);

  Cell encode(const Tuple& r, const Cell& x) const;
  Word decode(const Cell& cell) const;
  static int length(const Cell& cell) { return cell.code[0]; }
  /// Multilinear word with ring elements in the slots.
  Chain word(const std::vector<RingElement>& slots, const Chain& x) const;
  Chain word(const Tuple& r, const Chain& x) const;

  /// epsilon_0(r0|...|rm (x) x) = (r0, ..., rm) x.
  virtual Chain epsilon0(const Cell& cell) const = 0;

  using ChainComplex::act;
  using ChainComplex::boundary;
  bool has_basis() const override { return inner_->has_basis(); }
  std::vector<Cell> basis(int degree) const override;
  const Dga* ring() const override { return ring_.get(); }
  Chain act(int generator, const Cell& cell) const override;
  ModuleSplit split(const Cell& cell) const override;
  std::vector<Cell> module_basis(int degree) const override;

  const DgaPtr& ring_ptr() const { return ring_; }
  const ComplexPtr& inner() const { return inner_; }

 protected:
  /// The tensor differential on all slots (including x).
  void add_tensor_boundary(const Word& w, ChainAccumulator& acc) const;
  /// Merges r_{k-1} r_k, k = 1..m.
  void add_merges(const Word& w, ChainAccumulator& acc) const;

 private:
  std::vector<Cell> enumerate(int degree, bool unit_first) const;

  DgaPtr ring_;
  ComplexPtr inner_;
  Memo<int, std::vector<Cell>> basis_memo_;
  Memo<int, std::vector<Cell>> module_basis_memo_;
};

using BarPtr = std::shared_ptr<const BarBase>;

/// The two-sided bar construction B(R, R, M) of a strict module M with
/// d = d_tensor + d_alg.
class BarComplex : public BarBase {
 public:
  BarComplex(DgaPtr ring, ComplexPtr module);

  std::string name() const override { return "B(R,R," + inner()->name() + ")"; }
  using ChainComplex::boundary;
  Chain boundary(const Cell& cell) const override;
  Chain epsilon0(const Cell& cell) const override;
};

/// The perturbed bar construction BM of an R-infinity module with
/// d = d_tensor + d_plus + d_minus.
class PerturbedBar : public BarBase {
 public:
  explicit PerturbedBar(ActionPtr action);

  std::string name() const override { return "B(" + inner()->name() + ")"; }
  using ChainComplex::boundary;
  Chain boundary(const Cell& cell) const override;
  Chain epsilon0(const Cell& cell) const override;

  const ActionPtr& action() const { return action_; }

 private:
  ActionPtr action_;
  Memo<Cell, Chain, CellHash> boundary_memo_;
};

std::shared_ptr<const BarComplex> bar_complex(DgaPtr ring, ComplexPtr module);
std::shared_ptr<const PerturbedBar> perturbed_bar(ActionPtr action);

/// epsilon_0, zeta_0 and the homotopy eta_0 prepending "1|", exhibiting M as a
/// deformation retract of BM (none of them R-linear in general).
struct RetractData {
  LinearMap epsilon0;
  LinearMap zeta0;
  LinearMap eta0;
};

RetractData bm_retract_data(BarPtr bar);

/// The R-linear reduction B(R, R, M) => M for a strict module M with a basis;
/// epsilon is the augmentation, built from the section zeta_0 and the
/// contraction eta_0 of ker epsilon. Works for any bar whose epsilon_0 is
/// R-linear (a perturbed bar of a strict action included).
Reduction bar_reduction(BarPtr bar);
Reduction bar_reduction(DgaPtr ring, ComplexPtr module);

}  // namespace equichain
