#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "equichain/group.hpp"
#include "equichain/linear_combination.hpp"

namespace equichain {

/// Integer combination of dga generators (by index).
using RingElement = LinearCombination<int>;

/// A non-negatively graded dga that is free as a graded abelian group, with
/// the unit among its generators. Structure constants are stored per
/// generator (differential) and per ordered pair (product).
class Dga {
 public:
  struct Generator {
    std::string name;
    int degree = 0;
  };

  Dga(std::vector<Generator> generators, int unit, std::vector<RingElement> differential,
      std::vector<RingElement> products, std::optional<std::vector<Integer>> augmentation,
      GroupPtr group = nullptr);

  /// ZG: generators are the group elements in degree 0, zero differential,
  /// product from the group table, augmentation g -> 1.
  static Dga group_ring(GroupPtr group);

  int size() const { return static_cast<int>(generators_.size()); }
  int unit() const { return unit_; }
  int degree(int g) const { return generators_[g].degree; }
  const std::string& name(int g) const { return generators_[g].name; }
  int max_degree() const { return max_degree_; }
  const std::vector<int>& generators_of_degree(int d) const;

  const RingElement& diff(int g) const { return diff_[g]; }
  const RingElement& product(int a, int b) const { return prod_[a * size() + b]; }
  RingElement multiply(const RingElement& a, const RingElement& b) const;
  RingElement differential(const RingElement& a) const;

  bool augmented() const { return augmentation_.has_value(); }
  /// Augmentation of a generator; zero in positive degrees.
  const Integer& augmentation(int g) const;
  Integer augment(const RingElement& r) const;

  /// True when every generator has zero differential (the case of ZG).
  bool zero_differential() const { return zero_differential_; }
  const GroupPtr& group() const { return group_; }

  /// First violated axiom (Leibniz, d^2 = 0, associativity, unit,
  /// augmentation), or nullopt when all hold. Exhaustive over generators.
  std::optional<std::string> check_axioms() const;

 private:
  std::vector<Generator> generators_;
  int unit_;
  std::vector<RingElement> diff_;
  std::vector<RingElement> prod_;
  std::optional<std::vector<Integer>> augmentation_;
  GroupPtr group_;
  int max_degree_ = 0;
  bool zero_differential_ = true;
  std::vector<std::vector<int>> by_degree_;
};

using DgaPtr = std::shared_ptr<const Dga>;

/// |x_i| + ... + |x_j| over a list of degrees; an empty range (i = j + 1) is 0.
int degree_sum(std::span<const int> degrees, int i, int j);

/// Same abbreviation for a list of generator indices of `ring`.
int generator_degree_sum(const Dga& ring, std::span<const int> generators, int i, int j);

/// Small dga with a nonzero differential used to exercise the sign
/// conventions: generators 1, e, u with e idempotent, u of degree 1,
/// du = 1 - e, eu = ue = uu = 0, augmented by e -> 1.
Dga interval_dga();

}  // namespace equichain
