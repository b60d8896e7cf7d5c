#pragma once

#include <utility>
#include <vector>

#include "equichain/complex.hpp"
#include "equichain/reduction.hpp"

namespace equichain {

/// A tuple (r0, ..., rm) of ring generator indices.
using Tuple = std::vector<int>;

/// Dimension m + |r0| + ... + |rm| of a generator tuple.
int tuple_degree(const Dga& ring, const Tuple& tuple);

/// Multilinear expansion of a tuple whose slots hold ring elements into
/// integer combinations of generator tuples (zero terms dropped).
std::vector<std::pair<Tuple, Integer>> expand_slots(const std::vector<RingElement>& slots);

/// A hashable key for a (tuple, cell) pair.
Cell tuple_key(const Tuple& t, const Cell& x);

/// The replacement dga R-infinity = Omega B R. Cells are products of
/// generator tuples in normal form: the tuple (1) is the empty product, and
/// a tuple of length at least two containing the unit is zero. A cell code is
/// the concatenation of [m + 1, r0, ..., rm] over the factors.
/// With `max_length` d > 0 the complex is the filtration stage R^d, which is
/// locally finite and enumerates a basis.
class RInfty : public ChainComplex {
 public:
  explicit RInfty(DgaPtr ring, int max_length = 0);

  static Cell unit_cell() { return Cell{0, {}}; }
  static std::vector<Tuple> factors(const Cell& cell);
  static int length(const Cell& cell);

  /// The tuple as an element of R-infinity, with unit relations applied.
  Chain tuple(const Tuple& t) const;
  Chain word(const std::vector<Tuple>& factors) const;
  Chain multiply(const Chain& a, const Chain& b) const;

  using ChainComplex::act;
  using ChainComplex::boundary;
  std::string name() const override;
  Chain boundary(const Cell& cell) const override;
  /// Differential of a single generator tuple, in normal form.
  Chain tuple_boundary(const Tuple& t) const;
  bool has_basis() const override { return max_length_ > 0; }
  std::vector<Cell> basis(int degree) const override;

  /// The dga map sending (r) to r and all longer tuples to zero.
  RingElement to_r(const Chain& element) const;
  /// The section r -> (r); a chain map that is not multiplicative.
  Chain section(const RingElement& r) const;

  const DgaPtr& ring_ptr() const { return ring_; }
  int max_length() const { return max_length_; }

 private:
  DgaPtr ring_;
  int max_length_;
  Memo<Cell, Chain, CellHash> boundary_memo_;
};

/// R as a chain complex, realized as the rank-one free module.
std::shared_ptr<FreeModuleComplex> ring_complex(DgaPtr ring);

/// The contraction eta_d of the filtration quotient R^d / R^{d-1}, extended by
/// zero to shorter products: (r)(r0, ..., rm) rho -> (-1)^{|r|+1} (r, r0, ..., rm) rho
/// when the product has length exactly d and begins with a length-one factor
/// that is not the sole factor; zero otherwise.
LinearMap filtration_homotopy(std::shared_ptr<const RInfty> rinfty, int d);

/// p_d = id - [d, eta_d]: R^d -> R^{d-1}.
LinearMap filtration_projection(std::shared_ptr<const RInfty> rinfty, int d);

/// The reduction R^d => R with projection p_2 ... p_d followed by R^1 = R and
/// homotopy eta_d + eta_{d-1} p_d + ... + eta_2 p_3 ... p_d.
Reduction filtration_reduction(DgaPtr ring, int d);

/// R-infinity => R, with the homotopy evaluated per term by the filtration
/// reduction of the term's length.
Reduction rinfty_reduction(DgaPtr ring);

}  // namespace equichain
