#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "equichain/cell.hpp"
#include "equichain/dga.hpp"
#include "equichain/memo.hpp"

namespace equichain {

/// A Z-cell written as sign * (generator . basis), where `basis` is a
/// cell of the chosen R-basis.
struct ModuleSplit {
  int generator = 0;
  Cell basis;
  int sign = 1;
};

/// A locally effective chain complex of free abelian groups on cells.
/// Complexes that are free graded modules over a dga additionally expose
/// a left action and a decomposition of cells over an R-basis.
class ChainComplex {
 public:
  virtual ~ChainComplex() = default;

  virtual std::string name() const = 0;
  virtual Chain boundary(const Cell& cell) const = 0;
  Chain boundary(const Chain& chain) const;

  /// Per-degree Z-basis enumeration. Throws InvalidInput when the complex
  /// is not locally finite.
  virtual bool has_basis() const { return false; }
  virtual std::vector<Cell> basis(int degree) const;

  virtual const Dga* ring() const { return nullptr; }
  /// Left action of a ring generator on a cell.
  virtual Chain act(int generator, const Cell& cell) const;
  Chain act(const RingElement& r, const Chain& chain) const;
  virtual ModuleSplit split(const Cell& cell) const;
  virtual std::vector<Cell> module_basis(int degree) const;
};

using ComplexPtr = std::shared_ptr<const ChainComplex>;

/// A degree-homogeneous additive map given on cells and extended linearly.
class LinearMap {
 public:
  using CellFunction = std::function<Chain(const Cell&)>;

  LinearMap();
  LinearMap(int degree, CellFunction on_cell);

  static LinearMap identity();
  static LinearMap zero(int degree);

  int degree() const { return degree_; }
  Chain operator()(const Cell& cell) const;
  Chain operator()(const Chain& chain) const;

  /// Memoizes values on cells; observationally transparent.
  LinearMap cached() const;

  friend LinearMap operator*(const LinearMap& f, const LinearMap& g);  // f o g
  friend LinearMap operator+(const LinearMap& f, const LinearMap& g);
  friend LinearMap operator-(const LinearMap& f, const LinearMap& g);
  friend LinearMap operator*(const Integer& scale, const LinearMap& f);

 private:
  int degree_ = 0;
  std::shared_ptr<const CellFunction> on_cell_;
};

/// [d, f] = d f - (-1)^{|f|} f d.
LinearMap graded_commutator(const LinearMap& f, ComplexPtr source, ComplexPtr target);

/// The complex's own differential as a degree -1 map.
LinearMap differential_map(ComplexPtr complex);

/// Extends values on R-basis cells to an R-linear map of the given degree:
/// f(r b) = (-1)^{|f||r|} r f(b). Values on basis cells are memoized.
LinearMap extend_r_linearly(ComplexPtr source, ComplexPtr target, int degree,
                            LinearMap::CellFunction on_basis);

/// Left multiplication by a ring generator on a module complex.
LinearMap action_map(ComplexPtr complex, int generator);

/// Tensor product C (x) D with the Koszul differential d(x) id + id (x) d.
class TensorComplex : public ChainComplex {
 public:
  TensorComplex(ComplexPtr left, ComplexPtr right);

  static Cell pack(const Cell& x, const Cell& y);
  static std::pair<Cell, Cell> unpack(const Cell& cell);
  static Chain tensor(const Chain& x, const Chain& y);

  std::string name() const override;
  using ChainComplex::boundary;
  using ChainComplex::act;
  Chain boundary(const Cell& cell) const override;
  bool has_basis() const override;
  std::vector<Cell> basis(int degree) const override;

  const ComplexPtr& left() const { return left_; }
  const ComplexPtr& right() const { return right_; }

 private:
  ComplexPtr left_, right_;
};

/// (f (x) g)(x (x) y) = (-1)^{|g||x|} f(x) (x) g(y).
LinearMap tensor_map(const LinearMap& f, const LinearMap& g);

/// Suspension sC: (sC)_n = C_{n-1}, d(sx) = -s(dx), r.sx = (-1)^{|r|} s(rx).
class Suspension : public ChainComplex {
 public:
  explicit Suspension(ComplexPtr inner);

  static Cell suspend(const Cell& cell) { return {cell.degree + 1, cell.code}; }
  static Cell desuspend(const Cell& cell) { return {cell.degree - 1, cell.code}; }

  std::string name() const override;
  using ChainComplex::boundary;
  using ChainComplex::act;
  Chain boundary(const Cell& cell) const override;
  bool has_basis() const override { return inner_->has_basis(); }
  std::vector<Cell> basis(int degree) const override;
  const Dga* ring() const override { return inner_->ring(); }
  Chain act(int generator, const Cell& cell) const override;
  ModuleSplit split(const Cell& cell) const override;
  std::vector<Cell> module_basis(int degree) const override;

  const ComplexPtr& inner() const { return inner_; }

 private:
  ComplexPtr inner_;
};

ComplexPtr suspend(ComplexPtr complex);
LinearMap suspension_map(int times = 1);

/// Finite Z-complex from integer matrices. boundaries[n] has shape
/// ranks[n-1] x ranks[n]; cells are (n, [j]).
class FiniteZComplex : public ChainComplex {
 public:
  FiniteZComplex(std::vector<int> ranks, std::vector<std::vector<std::vector<Integer>>> boundaries,
                 std::string name = "Z-complex");

  static std::shared_ptr<FiniteZComplex> point();
  /// Z in degrees 0 and 1 with zero differential.
  static std::shared_ptr<FiniteZComplex> circle();

  std::string name() const override { return name_; }
  using ChainComplex::boundary;
  using ChainComplex::act;
  Chain boundary(const Cell& cell) const override;
  bool has_basis() const override { return true; }
  std::vector<Cell> basis(int degree) const override;
  int rank(int degree) const;
  int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }

 private:
  std::vector<int> ranks_;
  std::vector<std::vector<std::vector<Integer>>> boundaries_;
  std::string name_;
};

/// Complex of free graded modules over a dga with a finite basis in each
/// degree. entries[n][i][j] is the coefficient of e_{n-1,i} in d e_{n,j}.
/// Cells are (|g| + n, [g, n, j]) for the term g e_{n,j}.
class FreeModuleComplex : public ChainComplex {
 public:
  FreeModuleComplex(DgaPtr ring, std::vector<int> ranks,
                    std::vector<std::vector<std::vector<RingElement>>> entries,
                    std::string name = "free complex");

  /// R itself, as a rank-one free module concentrated in basis degree 0.
  static std::shared_ptr<FreeModuleComplex> ring_as_module(DgaPtr ring);

  static Cell make_cell(const Dga& ring, int generator, int basis_degree, int index);

  std::string name() const override { return name_; }
  using ChainComplex::boundary;
  using ChainComplex::act;
  Chain boundary(const Cell& cell) const override;
  bool has_basis() const override { return true; }
  std::vector<Cell> basis(int degree) const override;
  const Dga* ring() const override { return ring_.get(); }
  Chain act(int generator, const Cell& cell) const override;
  ModuleSplit split(const Cell& cell) const override;
  std::vector<Cell> module_basis(int degree) const override;

  const DgaPtr& ring_ptr() const { return ring_; }
  int rank(int basis_degree) const;
  int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
  const RingElement& entry(int n, int i, int j) const { return entries_[n][i][j]; }

  /// d^2 = 0 computed over R on every basis element; nullopt when it holds.
  std::optional<std::string> check_square_zero() const;

 private:
  DgaPtr ring_;
  std::vector<int> ranks_;
  std::vector<std::vector<std::vector<RingElement>>> entries_;
  std::string name_;
};

/// The standard (unnormalized) bar resolution of Z over ZG: in degree n the
/// free ZG-module on n-tuples [g1|...|gn]. Cells are (n, [g0, g1, ..., gn])
/// standing for g0[g1|...|gn].
class BarResolution : public ChainComplex {
 public:
  explicit BarResolution(DgaPtr group_ring);

  std::string name() const override { return "bar resolution of " + group_->name(); }
  using ChainComplex::boundary;
  using ChainComplex::act;
  Chain boundary(const Cell& cell) const override;
  bool has_basis() const override { return true; }
  std::vector<Cell> basis(int degree) const override;
  const Dga* ring() const override { return ring_.get(); }
  Chain act(int generator, const Cell& cell) const override;
  ModuleSplit split(const Cell& cell) const override;
  std::vector<Cell> module_basis(int degree) const override;

 private:
  DgaPtr ring_;
  GroupPtr group_;
};

}  // namespace equichain
