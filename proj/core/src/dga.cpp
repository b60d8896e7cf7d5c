#include "equichain/dga.hpp"

#include <sstream>

#include "equichain/errors.hpp"

namespace equichain {

namespace {

std::string describe(const Dga& ring, const RingElement& r) {
  if (r.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [g, c] : r) {
    if (!first) out << " + ";
    out << c.get_str() << "*" << ring.name(g);
    first = false;
  }
  return out.str();
}

}  // namespace

Dga::Dga(std::vector<Generator> generators, int unit, std::vector<RingElement> differential,
         std::vector<RingElement> products, std::optional<std::vector<Integer>> augmentation,
         GroupPtr group)
    : generators_(std::move(generators)),
      unit_(unit),
      diff_(std::move(differential)),
      prod_(std::move(products)),
      augmentation_(std::move(augmentation)),
      group_(std::move(group)) {
  const int n = size();
  if (n == 0) throw InvalidInput("dga needs at least one generator");
  if (unit_ < 0 || unit_ >= n) throw InvalidInput("dga unit index out of range");
  if (generators_[unit_].degree != 0) throw InvalidInput("dga unit must have degree 0");
  if (static_cast<int>(diff_.size()) != n) throw InvalidInput("dga differential table has wrong size");
  if (static_cast<int>(prod_.size()) != n * n) throw InvalidInput("dga product table has wrong size");
  if (augmentation_ && static_cast<int>(augmentation_->size()) != n)
    throw InvalidInput("dga augmentation has wrong size");
  for (const auto& g : generators_) {
    if (g.degree < 0) throw InvalidInput("dga generators must have non-negative degree");
    max_degree_ = std::max(max_degree_, g.degree);
  }
  by_degree_.assign(max_degree_ + 1, {});
  for (int g = 0; g < n; ++g) by_degree_[generators_[g].degree].push_back(g);
  auto check_terms = [&](const RingElement& r, int expected, const std::string& what) {
    for (const auto& [h, c] : r) {
      if (h < 0 || h >= n) throw InvalidInput(what + " refers to an unknown generator");
      if (generators_[h].degree != expected) throw InvalidInput(what + " is not homogeneous");
    }
  };
  for (int g = 0; g < n; ++g) {
    check_terms(diff_[g], generators_[g].degree - 1, "differential of " + generators_[g].name);
    if (!diff_[g].is_zero()) zero_differential_ = false;
    for (int h = 0; h < n; ++h)
      check_terms(prod_[g * n + h], generators_[g].degree + generators_[h].degree,
                  "product " + generators_[g].name + "*" + generators_[h].name);
  }
  if (augmentation_) {
    for (int g = 0; g < n; ++g)
      if (generators_[g].degree > 0 && (*augmentation_)[g] != 0)
        throw InvalidInput("augmentation must vanish in positive degrees");
  }
}

Dga Dga::group_ring(GroupPtr group) {
  const int n = group->order();
  std::vector<Generator> gens(n);
  for (int g = 0; g < n; ++g) gens[g] = {"g" + std::to_string(g), 0};
  std::vector<RingElement> diff(n);
  std::vector<RingElement> prod(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) prod[a * n + b] = RingElement(group->mul(a, b));
  std::vector<Integer> aug(n, Integer(1));
  int unit = group->identity();
  return Dga(std::move(gens), unit, std::move(diff), std::move(prod), std::move(aug),
             std::move(group));
}

const std::vector<int>& Dga::generators_of_degree(int d) const {
  static const std::vector<int> empty;
  if (d < 0 || d > max_degree_) return empty;
  return by_degree_[d];
}

RingElement Dga::multiply(const RingElement& a, const RingElement& b) const {
  Accumulator<int> acc;
  for (const auto& [x, c] : a)
    for (const auto& [y, e] : b) acc.add(product(x, y), c * e);
  return acc.take();
}

RingElement Dga::differential(const RingElement& a) const {
  Accumulator<int> acc;
  for (const auto& [x, c] : a) acc.add(diff(x), c);
  return acc.take();
}

const Integer& Dga::augmentation(int g) const {
  static const Integer zero(0);
  if (!augmentation_) return zero;
  return (*augmentation_)[g];
}

Integer Dga::augment(const RingElement& r) const {
  Integer total = 0;
  for (const auto& [g, c] : r) total += c * augmentation(g);
  return total;
}

std::optional<std::string> Dga::check_axioms() const {
  const int n = size();
  for (int g = 0; g < n; ++g) {
    RingElement u(unit_), x(g);
    if (!(multiply(u, x) == x) || !(multiply(x, u) == x))
      return "unit fails on " + name(g);
    if (!differential(diff(g)).is_zero()) return "d^2 != 0 on " + name(g);
  }
  if (!diff(unit_).is_zero()) return std::string("d(1) != 0");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      RingElement x(a), y(b);
      RingElement lhs = differential(product(a, b));
      RingElement rhs = multiply(diff(a), y);
      rhs.add_scaled(multiply(x, diff(b)), sign_of(degree(a)));
      if (!(lhs == rhs))
        return "Leibniz rule fails on " + name(a) + "*" + name(b) + ": " + describe(*this, lhs) +
               " vs " + describe(*this, rhs);
      for (int c = 0; c < n; ++c) {
        RingElement z(c);
        if (!(multiply(product(a, b), z) == multiply(x, product(b, c))))
          return "associativity fails on (" + name(a) + ", " + name(b) + ", " + name(c) + ")";
      }
      if (augmented() && augment(product(a, b)) != augmentation(a) * augmentation(b))
        return "augmentation is not multiplicative on " + name(a) + "*" + name(b);
    }
  if (augmented()) {
    if (augmentation(unit_) != 1) return std::string("augmentation of the unit is not 1");
    for (int g = 0; g < n; ++g)
      if (augment(diff(g)) != 0) return "augmentation does not kill d(" + name(g) + ")";
  }
  return std::nullopt;
}

int degree_sum(std::span<const int> degrees, int i, int j) {
  int total = 0;
  for (int k = i; k <= j; ++k) total += degrees[k];
  return total;
}

int generator_degree_sum(const Dga& ring, std::span<const int> generators, int i, int j) {
  int total = 0;
  for (int k = i; k <= j; ++k) total += ring.degree(generators[k]);
  return total;
}

Dga interval_dga() {
  std::vector<Dga::Generator> gens{{"1", 0}, {"e", 0}, {"u", 1}};
  const int one = 0, e = 1, u = 2;
  std::vector<RingElement> diff(3);
  diff[u] = RingElement(one) - RingElement(e);
  std::vector<RingElement> prod(9);
  for (int g = 0; g < 3; ++g) {
    prod[one * 3 + g] = RingElement(g);
    prod[g * 3 + one] = RingElement(g);
  }
  prod[e * 3 + e] = RingElement(e);
  std::vector<Integer> aug{1, 1, 0};
  return Dga(std::move(gens), one, std::move(diff), std::move(prod), std::move(aug));
}

}  // namespace equichain
