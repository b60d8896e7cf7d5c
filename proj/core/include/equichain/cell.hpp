#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "equichain/linear_combination.hpp"

namespace equichain {

/// A basis element of some chain complex. The meaning of `code` belongs to
/// the complex that produced the cell; ordering is (degree, code).
struct Cell {
  int degree = 0;
  std::vector<int> code;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept {
    std::size_t h = std::hash<int>{}(c.degree) * 0x9e3779b97f4a7c15ULL;
    for (int v : c.code) h = (h ^ static_cast<std::size_t>(v + 0x51)) * 0x100000001b3ULL;
    return h;
  }
};

using Chain = LinearCombination<Cell>;
using ChainAccumulator = Accumulator<Cell>;

/// The common degree of all terms, or nullopt for zero / mixed-degree chains.
inline std::optional<int> homogeneous_degree(const Chain& chain) {
  if (chain.is_zero()) return std::nullopt;
  int d = chain.terms().front().first.degree;
  for (const auto& t : chain)
    if (t.first.degree != d) return std::nullopt;
  return d;
}

std::string to_string(const Cell& cell);
std::string to_string(const Chain& chain);

}  // namespace equichain
