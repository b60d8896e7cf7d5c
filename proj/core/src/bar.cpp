#include "equichain/bar.hpp"

#include <algorithm>

#include "equichain/errors.hpp"

namespace equichain {

BarBase::BarBase(DgaPtr ring, ComplexPtr inner) : ring_(std::move(ring)), inner_(std::move(inner)) {
  if (!ring_) throw PreconditionFailed("bar construction needs a ring");
}

Cell BarBase::encode(const Tuple& r, const Cell& x) const {
  Cell out;
  const int m = static_cast<int>(r.size()) - 1;
  out.degree = m + x.degree;
  out.code.reserve(r.size() + 1 + x.code.size());
  out.code.push_back(m);
  for (int g : r) {
    out.code.push_back(g);
    out.degree += ring_->degree(g);
  }
  out.code.insert(out.code.end(), x.code.begin(), x.code.end());
  return out;
}

BarBase::Word BarBase::decode(const Cell& cell) const {
  Word w;
  const int m = cell.code[0];
  w.r.assign(cell.code.begin() + 1, cell.code.begin() + 2 + m);
  w.x.degree = cell.degree - m;
  for (int g : w.r) w.x.degree -= ring_->degree(g);
  w.x.code.assign(cell.code.begin() + 2 + m, cell.code.end());
  return w;
}

Chain BarBase::word(const std::vector<RingElement>& slots, const Chain& x) const {
  ChainAccumulator acc;
  for (const auto& [t, c] : expand_slots(slots))
    for (const auto& [cell, e] : x) acc.add(encode(t, cell), c * e);
  return acc.take();
}

Chain BarBase::word(const Tuple& r, const Chain& x) const {
  ChainAccumulator acc;
  for (const auto& [cell, e] : x) acc.add(encode(r, cell), e);
  return acc.take();
}

void BarBase::add_tensor_boundary(const Word& w, ChainAccumulator& acc) const {
  const int m = static_cast<int>(w.r.size()) - 1;
  int prefix = 0;
  for (int k = 0; k <= m; ++k) {
    const RingElement& dr = ring_->diff(w.r[k]);
    if (!dr.is_zero()) {
      std::vector<RingElement> slots;
      for (int i = 0; i <= m; ++i) slots.push_back(i == k ? dr : RingElement(w.r[i]));
      acc.add(word(slots, Chain(w.x)), sign_of(k + prefix));
    }
    prefix += ring_->degree(w.r[k]);
  }
  Chain dx = inner_->boundary(w.x);
  if (!dx.is_zero()) acc.add(word(w.r, dx), sign_of(m + prefix));
}

void BarBase::add_merges(const Word& w, ChainAccumulator& acc) const {
  const int m = static_cast<int>(w.r.size()) - 1;
  int prefix = ring_->degree(w.r[0]);
  for (int k = 1; k <= m; ++k) {
    std::vector<RingElement> slots;
    for (int i = 0; i <= m; ++i) {
      if (i == k - 1) continue;
      slots.push_back(i == k ? ring_->product(w.r[k - 1], w.r[k]) : RingElement(w.r[i]));
    }
    acc.add(word(slots, Chain(w.x)), sign_of(k - 1 + prefix));
    prefix += ring_->degree(w.r[k]);
  }
}

std::vector<Cell> BarBase::enumerate(int degree, bool unit_first) const {
  std::vector<Cell> out;
  if (degree < 0) return out;
  Tuple r;
  for (int m = 0; m <= degree; ++m) {
    auto fill = [&](auto& self, int slot, int budget) -> void {
      if (slot == m + 1) {
        for (const Cell& x : inner_->basis(budget)) out.push_back(encode(r, x));
        return;
      }
      for (int g = 0; g < ring_->size(); ++g) {
        if (slot == 0 && unit_first && g != ring_->unit()) continue;
        if (ring_->degree(g) > budget) continue;
        r.push_back(g);
        self(self, slot + 1, budget - ring_->degree(g));
        r.pop_back();
      }
    };
    fill(fill, 0, degree - m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cell> BarBase::basis(int degree) const {
  return basis_memo_.get_or_compute(degree, [&] { return enumerate(degree, false); });
}

std::vector<Cell> BarBase::module_basis(int degree) const {
  return module_basis_memo_.get_or_compute(degree, [&] { return enumerate(degree, true); });
}

Chain BarBase::act(int generator, const Cell& cell) const {
  Word w = decode(cell);
  ChainAccumulator acc;
  for (const auto& [h, a] : ring_->product(generator, w.r[0])) {
    w.r[0] = h;
    acc.add(encode(w.r, w.x), a);
  }
  return acc.take();
}

ModuleSplit BarBase::split(const Cell& cell) const {
  Cell basis = cell;
  const int generator = cell.code[1];
  basis.code[1] = ring_->unit();
  basis.degree -= ring_->degree(generator);
  return {generator, std::move(basis), 1};
}

BarComplex::BarComplex(DgaPtr ring, ComplexPtr module) : BarBase(ring, std::move(module)) {
  if (inner()->ring() != ring.get())
    throw PreconditionFailed("B(R,R,M) needs M to be a module over R");
}

Chain BarComplex::boundary(const Cell& cell) const {
  Word w = decode(cell);
  ChainAccumulator acc;
  add_tensor_boundary(w, acc);
  add_merges(w, acc);
  const int m = static_cast<int>(w.r.size()) - 1;
  if (m >= 1) {
    const int sign = sign_of(m + generator_degree_sum(*ring_ptr(), w.r, 0, m - 1));
    Tuple head(w.r.begin(), w.r.end() - 1);
    acc.add(word(head, inner()->act(w.r[m], w.x)), sign);
  }
  return acc.take();
}

Chain BarComplex::epsilon0(const Cell& cell) const {
  Word w = decode(cell);
  if (w.r.size() != 1) return {};
  return inner()->act(w.r[0], w.x);
}

PerturbedBar::PerturbedBar(ActionPtr action)
    : BarBase(action->ring_ptr(), action->complex()), action_(std::move(action)) {}

Chain PerturbedBar::boundary(const Cell& cell) const {
  return boundary_memo_.get_or_compute(cell, [&] {
    Word w = decode(cell);
    ChainAccumulator acc;
    add_tensor_boundary(w, acc);
    add_merges(w, acc);
    const int m = static_cast<int>(w.r.size()) - 1;
    int prefix = 0;
    for (int k = 1; k <= m; ++k) {
      prefix += ring_ptr()->degree(w.r[k - 1]);
      Tuple head(w.r.begin(), w.r.begin() + k), tail(w.r.begin() + k, w.r.end());
      Chain y = action_->act(tail, w.x);
      if (!y.is_zero()) acc.add(word(head, y), sign_of(k + prefix));
    }
    return acc.take();
  });
}

Chain PerturbedBar::epsilon0(const Cell& cell) const {
  Word w = decode(cell);
  return action_->act(w.r, w.x);
}

std::shared_ptr<const BarComplex> bar_complex(DgaPtr ring, ComplexPtr module) {
  return std::make_shared<const BarComplex>(std::move(ring), std::move(module));
}

std::shared_ptr<const PerturbedBar> perturbed_bar(ActionPtr action) {
  return std::make_shared<const PerturbedBar>(std::move(action));
}

RetractData bm_retract_data(BarPtr bar) {
  const int unit = bar->ring_ptr()->unit();
  LinearMap epsilon0(0, [bar](const Cell& c) { return bar->epsilon0(c); });
  LinearMap zeta0(0, [bar, unit](const Cell& x) { return Chain(bar->encode(Tuple{unit}, x)); });
  LinearMap eta0(1, [bar, unit](const Cell& c) {
    Cell out = c;
    out.code[0] += 1;
    out.code.insert(out.code.begin() + 1, unit);
    out.degree += 1;
    return Chain(std::move(out));
  });
  return {epsilon0, zeta0, eta0};
}

Reduction bar_reduction(BarPtr bar) {
  ComplexPtr module = bar->inner();
  if (!module->ring() || !module->has_basis())
    throw PreconditionFailed("bar reduction needs a module with a basis");
  RetractData data = bm_retract_data(bar);
  LinearMap zeta0 = data.zeta0;
  LinearMap beta0 =
      extend_r_linearly(module, bar, 0, [zeta0](const Cell& x) { return zeta0(x); });
  LinearMap eta0 = data.eta0;
  CycleFiller filler = [eta0](const Chain& z) { return eta0(z); };
  return build_reduction(bar, module, data.epsilon0, beta0, filler, true);
}

Reduction bar_reduction(DgaPtr ring, ComplexPtr module) {
  return bar_reduction(bar_complex(std::move(ring), std::move(module)));
}

}  // namespace equichain
