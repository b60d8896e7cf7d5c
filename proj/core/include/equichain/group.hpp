#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace equichain {

/// Outcome of checking a candidate group table; `message` names the first
/// violated invariant (e.g. the non-associative triple).
struct GroupTableCheck {
  bool ok = true;
  std::string message;
};

GroupTableCheck check_group_table(const std::vector<std::vector<int>>& mul, int identity);

/// A finite group given by its multiplication table on element indices
/// 0..order-1. The inverse table is derived and verified on construction.
class FiniteGroup {
 public:
  /// Throws InvalidInput naming the first violated group axiom.
  FiniteGroup(std::vector<std::vector<int>> mul, int identity, std::string name = {});

  static FiniteGroup cyclic(int n);
  /// Symmetric group on n letters, elements ordered lexicographically as
  /// permutations (index 0 is the identity).
  static FiniteGroup symmetric(int n);

  int order() const { return static_cast<int>(mul_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  const std::vector<std::vector<int>>& table() const { return mul_; }
  const std::string& name() const { return name_; }

 private:
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  int identity_ = 0;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Parses "cyclic:n" or "symmetric:n".
std::optional<FiniteGroup> group_from_spec(const std::string& spec);

}  // namespace equichain
