#include "equichain/cell.hpp"

#include <sstream>

namespace equichain {

std::string to_string(const Cell& cell) {
  std::ostringstream out;
  out << "<" << cell.degree << ":";
  for (std::size_t i = 0; i < cell.code.size(); ++i) out << (i ? "," : "") << cell.code[i];
  out << ">";
  return out.str();
}

std::string to_string(const Chain& chain) {
  if (chain.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [cell, c] : chain) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    Integer a = abs(c);
    if (a != 1) out << a.get_str() << "*";
    out << to_string(cell);
    first = false;
  }
  return out.str();
}

}  // namespace equichain
