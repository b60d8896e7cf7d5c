#include "equichain/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "equichain/errors.hpp"

namespace equichain {

GroupTableCheck check_group_table(const std::vector<std::vector<int>>& mul, int identity) {
  const int n = static_cast<int>(mul.size());
  auto fail = [](std::string msg) { return GroupTableCheck{false, std::move(msg)}; };
  if (n == 0) return fail("order must be positive");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mul[a].size()) != n)
      return fail("row " + std::to_string(a) + " of mul has length " +
                  std::to_string(mul[a].size()) + ", expected " + std::to_string(n));
    for (int b = 0; b < n; ++b)
      if (mul[a][b] < 0 || mul[a][b] >= n)
        return fail("mul[" + std::to_string(a) + "][" + std::to_string(b) + "] = " +
                    std::to_string(mul[a][b]) + " is not an element index");
  }
  if (identity < 0 || identity >= n) return fail("identity index out of range");
  for (int a = 0; a < n; ++a) {
    if (mul[identity][a] != a || mul[a][identity] != a)
      return fail("identity " + std::to_string(identity) + " is not two-sided at element " +
                  std::to_string(a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
          std::ostringstream msg;
          msg << "associativity fails for the triple (" << a << ", " << b << ", " << c << ")";
          return fail(msg.str());
        }
  for (int a = 0; a < n; ++a) {
    int right = -1;
    for (int b = 0; b < n; ++b)
      if (mul[a][b] == identity) right = b;
    if (right < 0 || mul[right][a] != identity)
      return fail("element " + std::to_string(a) + " has no two-sided inverse");
  }
  return {};
}

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> mul, int identity, std::string name)
    : mul_(std::move(mul)), identity_(identity), name_(std::move(name)) {
  auto check = check_group_table(mul_, identity_);
  if (!check.ok) throw InvalidInput("invalid group table: " + check.message);
  const int n = order();
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul_[a][b] == identity_) inv_[a] = b;
  if (name_.empty()) name_ = "group of order " + std::to_string(n);
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw InvalidInput("cyclic group order must be positive");
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  return FiniteGroup(std::move(mul), 0, "Z/" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 4) throw InvalidInput("symmetric group supported for 1 <= n <= 4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int order = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> mul(order, std::vector<int>(order));
  std::vector<int> composite(n);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      // (ab)(i) = a(b(i))
      for (int i = 0; i < n; ++i) composite[i] = perms[a][perms[b][i]];
      mul[a][b] = index_of(composite);
    }
  return FiniteGroup(std::move(mul), 0, "S" + std::to_string(n));
}

std::optional<FiniteGroup> group_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) return std::nullopt;
  std::string kind = spec.substr(0, colon);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(spec.substr(colon + 1), &used);
    if (used != spec.size() - colon - 1) return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (kind == "cyclic" && n >= 1) return FiniteGroup::cyclic(n);
  if (kind == "symmetric" && n >= 1 && n <= 4) return FiniteGroup::symmetric(n);
  return std::nullopt;
}

}  // namespace equichain
