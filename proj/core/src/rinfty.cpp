#include "equichain/rinfty.hpp"

#include <algorithm>

#include "equichain/errors.hpp"

namespace equichain {

int tuple_degree(const Dga& ring, const Tuple& tuple) {
  int total = static_cast<int>(tuple.size()) - 1;
  for (int g : tuple) total += ring.degree(g);
  return total;
}

std::vector<std::pair<Tuple, Integer>> expand_slots(const std::vector<RingElement>& slots) {
  std::vector<std::pair<Tuple, Integer>> out{{Tuple{}, Integer(1)}};
  for (const auto& slot : slots) {
    if (slot.is_zero()) return {};
    std::vector<std::pair<Tuple, Integer>> next;
    next.reserve(out.size() * slot.size());
    for (const auto& [prefix, c] : out)
      for (const auto& [g, a] : slot) {
        Tuple t = prefix;
        t.push_back(g);
        next.emplace_back(std::move(t), c * a);
      }
    out = std::move(next);
  }
  return out;
}

RInfty::RInfty(DgaPtr ring, int max_length) : ring_(std::move(ring)), max_length_(max_length) {
  if (max_length_ < 0) throw InvalidInput("filtration length must be non-negative");
}

std::string RInfty::name() const {
  if (max_length_ > 0) return "R^" + std::to_string(max_length_);
  return "R-infinity";
}

std::vector<Tuple> RInfty::factors(const Cell& cell) {
  std::vector<Tuple> out;
  std::size_t i = 0;
  while (i < cell.code.size()) {
    const int len = cell.code[i];
    out.emplace_back(cell.code.begin() + i + 1, cell.code.begin() + i + 1 + len);
    i += 1 + len;
  }
  return out;
}

int RInfty::length(const Cell& cell) {
  int total = 0;
  std::size_t i = 0;
  while (i < cell.code.size()) {
    total += cell.code[i];
    i += 1 + cell.code[i];
  }
  return total;
}

Chain RInfty::tuple(const Tuple& t) const {
  const int unit = ring_->unit();
  if (t.size() == 1 && t[0] == unit) return Chain(unit_cell());
  if (t.size() > 1 && std::find(t.begin(), t.end(), unit) != t.end()) return {};
  Cell cell{tuple_degree(*ring_, t), {}};
  cell.code.reserve(t.size() + 1);
  cell.code.push_back(static_cast<int>(t.size()));
  cell.code.insert(cell.code.end(), t.begin(), t.end());
  return Chain(std::move(cell));
}

Chain RInfty::word(const std::vector<Tuple>& fs) const {
  Chain out(unit_cell());
  for (const auto& t : fs) out = multiply(out, tuple(t));
  return out;
}

Chain RInfty::multiply(const Chain& a, const Chain& b) const {
  ChainAccumulator acc;
  for (const auto& [x, c] : a)
    for (const auto& [y, e] : b) {
      Cell z{x.degree + y.degree, x.code};
      z.code.insert(z.code.end(), y.code.begin(), y.code.end());
      acc.add(std::move(z), c * e);
    }
  return acc.take();
}

Chain RInfty::tuple_boundary(const Tuple& t) const {
  const Dga& R = *ring_;
  const int m = static_cast<int>(t.size()) - 1;
  ChainAccumulator acc;
  int prefix = 0;  // |r0| + ... + |r_{k-1}|
  for (int k = 0; k <= m; ++k) {
    const RingElement& dr = R.diff(t[k]);
    if (!dr.is_zero()) {
      std::vector<RingElement> slots;
      for (int i = 0; i <= m; ++i) slots.push_back(i == k ? dr : RingElement(t[i]));
      const int sign = sign_of(k + prefix);
      for (const auto& [u, c] : expand_slots(slots)) acc.add(tuple(u), c * sign);
    }
    if (k >= 1) {
      std::vector<RingElement> slots;
      for (int i = 0; i <= m; ++i) {
        if (i == k - 1) continue;
        slots.push_back(i == k ? R.product(t[k - 1], t[k]) : RingElement(t[i]));
      }
      const int plus_sign = sign_of(k - 1 + prefix);
      for (const auto& [u, c] : expand_slots(slots)) acc.add(tuple(u), c * plus_sign);
      Tuple head(t.begin(), t.begin() + k), tail(t.begin() + k, t.end());
      acc.add(multiply(tuple(head), tuple(tail)), sign_of(k + prefix));
    }
    prefix += R.degree(t[k]);
  }
  return acc.take();
}

Chain RInfty::boundary(const Cell& cell) const {
  return boundary_memo_.get_or_compute(cell, [&] {
    auto fs = factors(cell);
    ChainAccumulator acc;
    int prefix_degree = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      Chain d = tuple_boundary(fs[i]);
      if (!d.is_zero()) {
        Cell before{prefix_degree, {}};
        Cell after{0, {}};
        for (std::size_t j = 0; j < fs.size(); ++j) {
          if (j == i) continue;
          Cell& side = j < i ? before : after;
          side.code.push_back(static_cast<int>(fs[j].size()));
          side.code.insert(side.code.end(), fs[j].begin(), fs[j].end());
          if (j > i) side.degree += tuple_degree(*ring_, fs[j]);
        }
        acc.add(multiply(multiply(Chain(before), d), Chain(after)), sign_of(prefix_degree));
      }
      prefix_degree += tuple_degree(*ring_, fs[i]);
    }
    return acc.take();
  });
}

std::vector<Cell> RInfty::basis(int degree) const {
  if (max_length_ <= 0) return ChainComplex::basis(degree);
  std::vector<Cell> out;
  if (degree < 0) return out;
  const Dga& R = *ring_;
  const int unit = R.unit();
  // Generator tuples in normal form of a given length and at most the given degree.
  std::vector<Tuple> tuples;
  std::vector<int> current;
  auto grow = [&](auto& self, int len, int budget) -> void {
    if (static_cast<int>(current.size()) == len) {
      tuples.push_back(current);
      return;
    }
    for (int g = 0; g < R.size(); ++g) {
      if (g == unit || R.degree(g) > budget) continue;
      current.push_back(g);
      self(self, len, budget - R.degree(g));
      current.pop_back();
    }
  };
  for (int len = 1; len <= max_length_ && len - 1 <= degree; ++len) grow(grow, len, degree - len + 1);
  Cell word{0, {}};
  auto extend = [&](auto& self, int remaining_length) -> void {
    if (word.degree == degree) out.push_back(word);
    for (const auto& t : tuples) {
      const int len = static_cast<int>(t.size());
      const int d = tuple_degree(R, t);
      if (len > remaining_length || word.degree + d > degree) continue;
      // Degree-zero factors of length one could otherwise repeat forever;
      // the length bound keeps the recursion finite.
      const std::size_t mark = word.code.size();
      word.code.push_back(len);
      word.code.insert(word.code.end(), t.begin(), t.end());
      word.degree += d;
      self(self, remaining_length - len);
      word.degree -= d;
      word.code.resize(mark);
    }
  };
  extend(extend, max_length_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Cell tuple_key(const Tuple& t, const Cell& x) {
  Cell key{x.degree, {}};
  key.code.reserve(t.size() + 1 + x.code.size());
  key.code.push_back(static_cast<int>(t.size()));
  key.code.insert(key.code.end(), t.begin(), t.end());
  key.code.insert(key.code.end(), x.code.begin(), x.code.end());
  return key;
}

RingElement RInfty::to_r(const Chain& element) const {
  Accumulator<int> acc;
  for (const auto& [cell, c] : element) {
    RingElement value(ring_->unit());
    bool ok = true;
    for (const auto& f : factors(cell)) {
      if (f.size() != 1) {
        ok = false;
        break;
      }
      value = ring_->multiply(value, RingElement(f[0]));
    }
    if (!ok) continue;
    for (const auto& [g, k] : value) acc.add(g, c * k);
  }
  return acc.take();
}

Chain RInfty::section(const RingElement& r) const {
  ChainAccumulator acc;
  for (const auto& [g, c] : r) acc.add(tuple(Tuple{g}), c);
  return acc.take();
}

std::shared_ptr<FreeModuleComplex> ring_complex(DgaPtr ring) {
  return FreeModuleComplex::ring_as_module(std::move(ring));
}

LinearMap filtration_homotopy(std::shared_ptr<const RInfty> rinfty, int d) {
  return LinearMap(1, [rinfty, d](const Cell& cell) -> Chain {
    if (RInfty::length(cell) != d) return {};
    auto fs = RInfty::factors(cell);
    if (fs.size() < 2 || fs[0].size() != 1) return {};
    const Dga& R = *rinfty->ring_ptr();
    const int r = fs[0][0];
    Tuple merged{r};
    merged.insert(merged.end(), fs[1].begin(), fs[1].end());
    std::vector<Tuple> rest{merged};
    rest.insert(rest.end(), fs.begin() + 2, fs.end());
    Chain out = rinfty->word(rest);
    if (sign_of(R.degree(r) + 1) < 0) out *= -1;
    return out;
  });
}

LinearMap filtration_projection(std::shared_ptr<const RInfty> rinfty, int d) {
  LinearMap eta = filtration_homotopy(rinfty, d);
  return LinearMap(0, [rinfty, eta, d](const Cell& cell) -> Chain {
    if (RInfty::length(cell) < d) return Chain(cell);
    Chain out(cell);
    out -= rinfty->boundary(eta(cell));
    out -= eta(rinfty->boundary(cell));
    return out;
  }).cached();
}

namespace {

struct FiltrationMaps {
  LinearMap alpha;
  LinearMap eta;
};

// alpha = a1 p_2 ... p_d and the homotopy eta_d + eta_{d-1} p_d + ... + eta_2 p_3 ... p_d.
FiltrationMaps filtration_maps(std::shared_ptr<const RInfty> rinfty, int d) {
  DgaPtr ring = rinfty->ring_ptr();
  LinearMap alpha1(0, [ring](const Cell& cell) -> Chain {
    if (cell.code.empty()) return Chain(FreeModuleComplex::make_cell(*ring, ring->unit(), 0, 0));
    if (cell.code.size() == 2 && cell.code[0] == 1)
      return Chain(FreeModuleComplex::make_cell(*ring, cell.code[1], 0, 0));
    return {};
  });
  LinearMap projection = LinearMap::identity();
  LinearMap eta = LinearMap::zero(1);
  for (int k = d; k >= 2; --k) {
    eta = eta + filtration_homotopy(rinfty, k) * projection;
    projection = (filtration_projection(rinfty, k) * projection).cached();
  }
  return {(alpha1 * projection).cached(), eta.cached()};
}

LinearMap filtration_section(std::shared_ptr<const RInfty> rinfty) {
  return LinearMap(0, [rinfty](const Cell& cell) {
    return rinfty->tuple(Tuple{cell.code[0]});
  });
}

}  // namespace

Reduction filtration_reduction(DgaPtr ring, int d) {
  if (d < 1) throw InvalidInput("filtration reduction needs d >= 1");
  auto rinfty = std::make_shared<const RInfty>(ring, d);
  auto maps = filtration_maps(rinfty, d);
  return {rinfty, ring_complex(ring), maps.alpha, filtration_section(rinfty), maps.eta, false};
}

Reduction rinfty_reduction(DgaPtr ring) {
  auto rinfty = std::make_shared<const RInfty>(ring, 0);
  auto per_length = std::make_shared<Memo<int, FiltrationMaps>>();
  auto maps_for = [rinfty, per_length](int len) {
    const int d = std::max(len, 1);
    return per_length->get_or_compute(d, [&] { return filtration_maps(rinfty, d); });
  };
  LinearMap alpha(0, [maps_for](const Cell& cell) {
    return maps_for(RInfty::length(cell)).alpha(cell);
  });
  LinearMap eta(1, [maps_for](const Cell& cell) {
    return maps_for(RInfty::length(cell)).eta(cell);
  });
  return {rinfty, ring_complex(ring), alpha, filtration_section(rinfty), eta, false};
}

}  // namespace equichain
