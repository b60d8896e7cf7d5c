#include "equichain/complex.hpp"

#include <algorithm>

#include "equichain/errors.hpp"

namespace equichain {

Chain ChainComplex::boundary(const Chain& chain) const {
  ChainAccumulator acc;
  for (const auto& [cell, c] : chain) acc.add(boundary(cell), c);
  return acc.take();
}

std::vector<Cell> ChainComplex::basis(int) const {
  throw InvalidInput(name() + " does not enumerate a finite basis per degree");
}

Chain ChainComplex::act(int, const Cell&) const {
  throw PreconditionFailed(name() + " is not a module over a dga");
}

Chain ChainComplex::act(const RingElement& r, const Chain& chain) const {
  ChainAccumulator acc;
  for (const auto& [g, a] : r)
    for (const auto& [cell, c] : chain) acc.add(act(g, cell), a * c);
  return acc.take();
}

ModuleSplit ChainComplex::split(const Cell&) const {
  throw PreconditionFailed(name() + " is not a module over a dga");
}

std::vector<Cell> ChainComplex::module_basis(int) const {
  throw PreconditionFailed(name() + " is not a module over a dga");
}

// LinearMap

LinearMap::LinearMap() : LinearMap(0, [](const Cell&) { return Chain(); }) {}

LinearMap::LinearMap(int degree, CellFunction on_cell)
    : degree_(degree), on_cell_(std::make_shared<const CellFunction>(std::move(on_cell))) {}

LinearMap LinearMap::identity() {
  return LinearMap(0, [](const Cell& c) { return Chain(c); });
}

LinearMap LinearMap::zero(int degree) {
  return LinearMap(degree, [](const Cell&) { return Chain(); });
}

Chain LinearMap::operator()(const Cell& cell) const { return (*on_cell_)(cell); }

Chain LinearMap::operator()(const Chain& chain) const {
  if (chain.size() == 1) {
    const auto& [cell, c] = chain.terms().front();
    return c * (*on_cell_)(cell);
  }
  ChainAccumulator acc;
  for (const auto& [cell, c] : chain) acc.add((*on_cell_)(cell), c);
  return acc.take();
}

LinearMap LinearMap::cached() const {
  auto memo = std::make_shared<Memo<Cell, Chain, CellHash>>();
  auto inner = on_cell_;
  return LinearMap(degree_, [memo, inner](const Cell& c) {
    return memo->get_or_compute(c, [&] { return (*inner)(c); });
  });
}

LinearMap operator*(const LinearMap& f, const LinearMap& g) {
  return LinearMap(f.degree_ + g.degree_, [f, g](const Cell& c) { return f(g(c)); });
}

LinearMap operator+(const LinearMap& f, const LinearMap& g) {
  return LinearMap(f.degree_, [f, g](const Cell& c) { return f(c) + g(c); });
}

LinearMap operator-(const LinearMap& f, const LinearMap& g) {
  return LinearMap(f.degree_, [f, g](const Cell& c) { return f(c) - g(c); });
}

LinearMap operator*(const Integer& scale, const LinearMap& f) {
  return LinearMap(f.degree_, [scale, f](const Cell& c) { return scale * f(c); });
}

LinearMap graded_commutator(const LinearMap& f, ComplexPtr source, ComplexPtr target) {
  const int sign = sign_of(f.degree());
  return LinearMap(f.degree() - 1, [f, source, target, sign](const Cell& c) {
    Chain out = target->boundary(f(c));
    out.add_scaled(f(source->boundary(c)), -sign);
    return out;
  });
}

LinearMap differential_map(ComplexPtr complex) {
  return LinearMap(-1, [complex](const Cell& c) { return complex->boundary(c); });
}

LinearMap extend_r_linearly(ComplexPtr source, ComplexPtr target, int degree,
                            LinearMap::CellFunction on_basis) {
  auto base = LinearMap(degree, std::move(on_basis)).cached();
  const Dga* ring = source->ring();
  if (!ring) throw PreconditionFailed("R-linear extension needs a module source");
  return LinearMap(degree, [source, target, base, degree, ring](const Cell& c) {
    ModuleSplit s = source->split(c);
    Chain value = base(s.basis);
    int sign = s.sign * sign_of(static_cast<long long>(degree) * ring->degree(s.generator));
    if (s.generator == ring->unit()) return sign == 1 ? value : -value;
    return Integer(sign) * target->act(RingElement(s.generator), value);
  });
}

LinearMap action_map(ComplexPtr complex, int generator) {
  const Dga* ring = complex->ring();
  if (!ring) throw PreconditionFailed("action needs a module complex");
  return LinearMap(ring->degree(generator),
                   [complex, generator](const Cell& c) { return complex->act(generator, c); });
}

// TensorComplex

TensorComplex::TensorComplex(ComplexPtr left, ComplexPtr right)
    : left_(std::move(left)), right_(std::move(right)) {}

Cell TensorComplex::pack(const Cell& x, const Cell& y) {
  Cell out;
  out.degree = x.degree + y.degree;
  out.code.reserve(2 + x.code.size() + y.code.size());
  out.code.push_back(x.degree);
  out.code.push_back(static_cast<int>(x.code.size()));
  out.code.insert(out.code.end(), x.code.begin(), x.code.end());
  out.code.insert(out.code.end(), y.code.begin(), y.code.end());
  return out;
}

std::pair<Cell, Cell> TensorComplex::unpack(const Cell& cell) {
  Cell x, y;
  x.degree = cell.code[0];
  const int len = cell.code[1];
  x.code.assign(cell.code.begin() + 2, cell.code.begin() + 2 + len);
  y.degree = cell.degree - x.degree;
  y.code.assign(cell.code.begin() + 2 + len, cell.code.end());
  return {std::move(x), std::move(y)};
}

Chain TensorComplex::tensor(const Chain& x, const Chain& y) {
  ChainAccumulator acc;
  for (const auto& [a, c] : x)
    for (const auto& [b, e] : y) acc.add(pack(a, b), c * e);
  return acc.take();
}

std::string TensorComplex::name() const { return left_->name() + " (x) " + right_->name(); }

Chain TensorComplex::boundary(const Cell& cell) const {
  auto [x, y] = unpack(cell);
  Chain out = tensor(left_->boundary(x), Chain(y));
  out.add_scaled(tensor(Chain(x), right_->boundary(y)), sign_of(x.degree));
  return out;
}

bool TensorComplex::has_basis() const { return left_->has_basis() && right_->has_basis(); }

std::vector<Cell> TensorComplex::basis(int degree) const {
  std::vector<Cell> out;
  for (int p = 0; p <= degree; ++p) {
    auto xs = left_->basis(p);
    if (xs.empty()) continue;
    auto ys = right_->basis(degree - p);
    for (const auto& x : xs)
      for (const auto& y : ys) out.push_back(pack(x, y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

LinearMap tensor_map(const LinearMap& f, const LinearMap& g) {
  const int gd = g.degree();
  return LinearMap(f.degree() + gd, [f, g, gd](const Cell& c) {
    auto [x, y] = TensorComplex::unpack(c);
    Chain out = TensorComplex::tensor(f(x), g(y));
    if (sign_of(static_cast<long long>(gd) * x.degree) < 0) out *= -1;
    return out;
  });
}

// Suspension

namespace {

Chain shift(const Chain& chain, int by, int sign = 1) {
  std::vector<Chain::Term> terms;
  terms.reserve(chain.size());
  for (const auto& [cell, c] : chain)
    terms.emplace_back(Cell{cell.degree + by, cell.code}, sign == 1 ? c : Integer(-c));
  return Chain::from_terms(std::move(terms));
}

}  // namespace

Suspension::Suspension(ComplexPtr inner) : inner_(std::move(inner)) {}

std::string Suspension::name() const { return "s(" + inner_->name() + ")"; }

Chain Suspension::boundary(const Cell& cell) const {
  return shift(inner_->boundary(desuspend(cell)), 1, -1);
}

std::vector<Cell> Suspension::basis(int degree) const {
  auto cells = inner_->basis(degree - 1);
  for (auto& c : cells) c = suspend(c);
  return cells;
}

Chain Suspension::act(int generator, const Cell& cell) const {
  int sign = sign_of(inner_->ring()->degree(generator));
  return shift(inner_->act(generator, desuspend(cell)), 1, sign);
}

ModuleSplit Suspension::split(const Cell& cell) const {
  ModuleSplit s = inner_->split(desuspend(cell));
  s.basis = suspend(s.basis);
  s.sign *= sign_of(inner_->ring()->degree(s.generator));
  return s;
}

std::vector<Cell> Suspension::module_basis(int degree) const {
  auto cells = inner_->module_basis(degree - 1);
  for (auto& c : cells) c = suspend(c);
  return cells;
}

ComplexPtr suspend(ComplexPtr complex) { return std::make_shared<Suspension>(std::move(complex)); }

LinearMap suspension_map(int times) {
  return LinearMap(times, [times](const Cell& c) { return Chain(Cell{c.degree + times, c.code}); });
}

// FiniteZComplex

FiniteZComplex::FiniteZComplex(std::vector<int> ranks,
                               std::vector<std::vector<std::vector<Integer>>> boundaries,
                               std::string name)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)), name_(std::move(name)) {
  if (boundaries_.size() < ranks_.size()) boundaries_.resize(ranks_.size());
  for (std::size_t n = 0; n < ranks_.size(); ++n) {
    if (ranks_[n] < 0) throw InvalidInput("negative rank in degree " + std::to_string(n));
    if (n == 0) continue;
    auto& m = boundaries_[n];
    if (m.empty() && (ranks_[n - 1] == 0 || ranks_[n] == 0)) continue;
    if (m.empty()) m.assign(ranks_[n - 1], std::vector<Integer>(ranks_[n], Integer(0)));
    if (static_cast<int>(m.size()) != ranks_[n - 1])
      throw InvalidInput("boundary matrix in degree " + std::to_string(n) + " has wrong row count");
    for (const auto& row : m)
      if (static_cast<int>(row.size()) != ranks_[n])
        throw InvalidInput("boundary matrix in degree " + std::to_string(n) +
                           " has wrong column count");
  }
  for (std::size_t n = 2; n < ranks_.size(); ++n)
    for (int j = 0; j < ranks_[n]; ++j) {
      Chain dd = boundary(boundary(Cell{static_cast<int>(n), {j}}));
      if (!dd.is_zero())
        throw InvalidInput("d^2 != 0 on generator " + std::to_string(j) + " of degree " +
                           std::to_string(n));
    }
}

std::shared_ptr<FiniteZComplex> FiniteZComplex::point() {
  return std::make_shared<FiniteZComplex>(std::vector<int>{1},
                                          std::vector<std::vector<std::vector<Integer>>>{},
                                          "point");
}

std::shared_ptr<FiniteZComplex> FiniteZComplex::circle() {
  return std::make_shared<FiniteZComplex>(std::vector<int>{1, 1},
                                          std::vector<std::vector<std::vector<Integer>>>{},
                                          "circle");
}

int FiniteZComplex::rank(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(ranks_.size())) return 0;
  return ranks_[degree];
}

Chain FiniteZComplex::boundary(const Cell& cell) const {
  const int n = cell.degree;
  if (n <= 0 || n >= static_cast<int>(ranks_.size()) || boundaries_[n].empty()) return {};
  const int j = cell.code[0];
  std::vector<Chain::Term> terms;
  for (int i = 0; i < ranks_[n - 1]; ++i)
    if (boundaries_[n][i][j] != 0) terms.emplace_back(Cell{n - 1, {i}}, boundaries_[n][i][j]);
  return Chain::from_terms(std::move(terms));
}

std::vector<Cell> FiniteZComplex::basis(int degree) const {
  std::vector<Cell> out;
  for (int j = 0; j < rank(degree); ++j) out.push_back(Cell{degree, {j}});
  return out;
}

// FreeModuleComplex

FreeModuleComplex::FreeModuleComplex(DgaPtr ring, std::vector<int> ranks,
                                     std::vector<std::vector<std::vector<RingElement>>> entries,
                                     std::string name)
    : ring_(std::move(ring)), ranks_(std::move(ranks)), entries_(std::move(entries)),
      name_(std::move(name)) {
  if (entries_.size() < ranks_.size()) entries_.resize(ranks_.size());
  for (std::size_t n = 0; n < ranks_.size(); ++n) {
    if (ranks_[n] < 0) throw InvalidInput("negative rank in degree " + std::to_string(n));
    if (n == 0) continue;
    auto& m = entries_[n];
    if (m.empty()) m.assign(ranks_[n - 1], std::vector<RingElement>(ranks_[n]));
    if (static_cast<int>(m.size()) != ranks_[n - 1])
      throw InvalidInput("differential in degree " + std::to_string(n) + " has wrong row count");
    for (const auto& row : m) {
      if (static_cast<int>(row.size()) != ranks_[n])
        throw InvalidInput("differential in degree " + std::to_string(n) +
                           " has wrong column count");
      for (const auto& r : row)
        for (const auto& [g, c] : r) {
          if (g < 0 || g >= ring_->size())
            throw InvalidInput("differential in degree " + std::to_string(n) +
                               " uses an unknown ring element");
          if (ring_->degree(g) != 0)
            throw InvalidInput("differential coefficients must have ring degree 0");
        }
    }
  }
}

std::shared_ptr<FreeModuleComplex> FreeModuleComplex::ring_as_module(DgaPtr ring) {
  return std::make_shared<FreeModuleComplex>(std::move(ring), std::vector<int>{1},
                                             std::vector<std::vector<std::vector<RingElement>>>{},
                                             "R");
}

Cell FreeModuleComplex::make_cell(const Dga& ring, int generator, int basis_degree, int index) {
  return Cell{ring.degree(generator) + basis_degree, {generator, basis_degree, index}};
}

int FreeModuleComplex::rank(int basis_degree) const {
  if (basis_degree < 0 || basis_degree >= static_cast<int>(ranks_.size())) return 0;
  return ranks_[basis_degree];
}

Chain FreeModuleComplex::boundary(const Cell& cell) const {
  const int g = cell.code[0], n = cell.code[1], j = cell.code[2];
  ChainAccumulator acc;
  for (const auto& [h, c] : ring_->diff(g)) acc.add(make_cell(*ring_, h, n, j), c);
  if (n > 0 && n < static_cast<int>(ranks_.size())) {
    const int sign = sign_of(ring_->degree(g));
    for (int i = 0; i < ranks_[n - 1]; ++i) {
      const RingElement& e = entries_[n][i][j];
      if (e.is_zero()) continue;
      for (const auto& [h, c] : e)
        for (const auto& [k, a] : ring_->product(g, h))
          acc.add(make_cell(*ring_, k, n - 1, i), c * a * sign);
    }
  }
  return acc.take();
}

std::vector<Cell> FreeModuleComplex::basis(int degree) const {
  std::vector<Cell> out;
  for (int n = 0; n <= degree && n < static_cast<int>(ranks_.size()); ++n)
    for (int g : ring_->generators_of_degree(degree - n))
      for (int j = 0; j < ranks_[n]; ++j) out.push_back(make_cell(*ring_, g, n, j));
  std::sort(out.begin(), out.end());
  return out;
}

Chain FreeModuleComplex::act(int generator, const Cell& cell) const {
  const int g = cell.code[0], n = cell.code[1], j = cell.code[2];
  ChainAccumulator acc;
  for (const auto& [k, a] : ring_->product(generator, g)) acc.add(make_cell(*ring_, k, n, j), a);
  return acc.take();
}

ModuleSplit FreeModuleComplex::split(const Cell& cell) const {
  return {cell.code[0], make_cell(*ring_, ring_->unit(), cell.code[1], cell.code[2]), 1};
}

std::vector<Cell> FreeModuleComplex::module_basis(int degree) const {
  std::vector<Cell> out;
  for (int j = 0; j < rank(degree); ++j) out.push_back(make_cell(*ring_, ring_->unit(), degree, j));
  return out;
}

std::optional<std::string> FreeModuleComplex::check_square_zero() const {
  for (int n = 0; n < static_cast<int>(ranks_.size()); ++n)
    for (const auto& cell : module_basis(n)) {
      Chain dd = boundary(boundary(cell));
      if (!dd.is_zero())
        return "d^2 != 0 on basis element " + std::to_string(cell.code[2]) + " of degree " +
               std::to_string(n) + ": " + to_string(dd);
    }
  return std::nullopt;
}

// BarResolution

BarResolution::BarResolution(DgaPtr group_ring)
    : ring_(std::move(group_ring)), group_(ring_->group()) {
  if (!group_) throw PreconditionFailed("bar resolution needs a group ring");
}

Chain BarResolution::boundary(const Cell& cell) const {
  const int n = cell.degree;
  if (n == 0) return {};
  const auto& g = cell.code;
  ChainAccumulator acc;
  for (int i = 0; i <= n; ++i) {
    Cell face{n - 1, {}};
    face.code.reserve(n);
    if (i == 0) {
      face.code.push_back(group_->mul(g[0], g[1]));
      face.code.insert(face.code.end(), g.begin() + 2, g.end());
    } else if (i == n) {
      face.code.assign(g.begin(), g.end() - 1);
    } else {
      face.code.assign(g.begin(), g.begin() + i);
      face.code.push_back(group_->mul(g[i], g[i + 1]));
      face.code.insert(face.code.end(), g.begin() + i + 2, g.end());
    }
    acc.add(std::move(face), Integer(sign_of(i)));
  }
  return acc.take();
}

std::vector<Cell> BarResolution::basis(int degree) const {
  std::vector<Cell> out;
  if (degree < 0) return out;
  const int order = group_->order();
  std::vector<int> code(degree + 1, 0);
  while (true) {
    out.push_back(Cell{degree, code});
    int k = degree;
    while (k >= 0 && ++code[k] == order) code[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

Chain BarResolution::act(int generator, const Cell& cell) const {
  Cell out = cell;
  out.code[0] = group_->mul(generator, cell.code[0]);
  return Chain(std::move(out));
}

ModuleSplit BarResolution::split(const Cell& cell) const {
  Cell basis = cell;
  basis.code[0] = group_->identity();
  return {cell.code[0], std::move(basis), 1};
}

std::vector<Cell> BarResolution::module_basis(int degree) const {
  std::vector<Cell> out;
  if (degree < 0) return out;
  const int order = group_->order();
  std::vector<int> code(degree + 1, 0);
  code[0] = group_->identity();
  if (degree == 0) return {Cell{0, code}};
  while (true) {
    out.push_back(Cell{degree, code});
    int k = degree;
    while (k >= 1 && ++code[k] == order) code[k--] = 0;
    if (k < 1) break;
  }
  return out;
}

}  // namespace equichain
