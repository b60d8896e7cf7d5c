#include "equichain/reduction.hpp"

#include <random>
#include <sstream>

#include "equichain/errors.hpp"

namespace equichain {

namespace {

// A map whose definition on cells refers back to the map itself; the inner
// closure holds a weak reference so the result does not own a cycle.
template <class Builder>
LinearMap recursive_map(int degree, Builder build) {
  auto slot = std::make_shared<LinearMap>();
  std::weak_ptr<LinearMap> weak = slot;
  auto self = [weak](const Chain& c) { return (*weak.lock())(c); };
  *slot = build(std::function<Chain(const Chain&)>(self));
  return LinearMap(degree, [slot](const Cell& c) { return (*slot)(c); });
}

std::vector<Cell> basis_for(const ChainComplex& complex, int degree, bool r_linear) {
  if (r_linear && complex.ring()) return complex.module_basis(degree);
  return complex.basis(degree);
}

}  // namespace

Reduction identity_reduction(ComplexPtr complex, bool r_linear) {
  return {complex, complex, LinearMap::identity(), LinearMap::identity(), LinearMap::zero(1),
          r_linear};
}

std::vector<Chain> sample_elements(const ChainComplex& complex, int degree, int samples,
                                   std::uint64_t seed) {
  std::vector<Cell> cells = complex.basis(degree);
  std::vector<Chain> out;
  if (cells.empty()) return out;
  if (static_cast<int>(cells.size()) <= samples) {
    for (auto& c : cells) out.emplace_back(std::move(c));
    return out;
  }
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(degree) + 1);
  for (int s = 0; s < samples; ++s) {
    ChainAccumulator acc;
    const int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
      const Cell& cell = cells[rng() % cells.size()];
      long coefficient = 1 + static_cast<long>(rng() % 3);
      if (rng() % 2) coefficient = -coefficient;
      acc.add(cell, Integer(coefficient));
    }
    Chain chain = acc.take();
    if (chain.is_zero()) chain = Chain(cells[rng() % cells.size()]);
    out.push_back(std::move(chain));
  }
  return out;
}

bool ValidationReport::violates(const std::string& identity) const {
  for (const auto& v : violations)
    if (v.identity == identity) return true;
  return false;
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  if (ok()) {
    out << "ok (" << checks << " checks)";
    return out.str();
  }
  out << violations.size() << " violation(s) in " << checks << " checks";
  for (const auto& v : violations)
    out << "\n  " << v.identity << " in degree " << v.degree << " at " << v.witness << ": "
        << v.value;
  return out.str();
}

ValidationReport validate_reduction(const Reduction& red, const SampleOptions& options) {
  ValidationReport report;
  const ChainComplex& src = *red.source;
  const ChainComplex& tgt = *red.target;
  auto record = [&](const char* identity, int degree, const Chain& witness, const Chain& value) {
    ++report.checks;
    if (value.is_zero()) return;
    // Keep the report short: one witness per identity.
    if (report.violates(identity)) return;
    report.violations.push_back({identity, degree, to_string(witness), to_string(value)});
  };
  const Dga* ring = red.r_linear ? src.ring() : nullptr;
  if (red.r_linear && (!ring || !tgt.ring()))
    throw PreconditionFailed("R-linear reduction between complexes without a ring action");

  for (int n = options.min_degree; n <= options.max_degree; ++n) {
    auto xs = sample_elements(src, n, options.samples, options.seed);
    for (const auto& x : xs) {
      Chain ax = red.alpha(x);
      record("alpha_chain", n, x, tgt.boundary(ax) - red.alpha(src.boundary(x)));
      Chain ex = red.eta(x);
      Chain homotopy = src.boundary(ex) + red.eta(src.boundary(x)) - x + red.beta(ax);
      record("homotopy", n, x, homotopy);
      record("alpha_eta", n, x, red.alpha(ex));
      record("eta_eta", n, x, red.eta(ex));
    }
    auto ys = sample_elements(tgt, n, options.samples, options.seed ^ 0xb7e15162ULL);
    for (const auto& y : ys) {
      Chain by = red.beta(y);
      record("beta_chain", n, y, src.boundary(by) - red.beta(tgt.boundary(y)));
      record("alpha_beta", n, y, red.alpha(by) - y);
      record("eta_beta", n, y, red.eta(by));
    }
    if (!ring) continue;
    const std::size_t probes = std::min<std::size_t>(xs.size(), 5);
    for (int g = 0; g < ring->size(); ++g) {
      const RingElement r(g);
      const int eta_sign = sign_of(ring->degree(g));
      for (std::size_t i = 0; i < probes; ++i) {
        const Chain& x = xs[i];
        Chain gx = src.act(r, x);
        record("alpha_r_linear", n, x, red.alpha(gx) - tgt.act(r, red.alpha(x)));
        Chain lhs = red.eta(gx);
        lhs.add_scaled(src.act(r, red.eta(x)), -eta_sign);
        record("eta_r_linear", n, x, lhs);
      }
      for (std::size_t i = 0; i < std::min<std::size_t>(ys.size(), 5); ++i) {
        const Chain& y = ys[i];
        record("beta_r_linear", n, y, red.beta(tgt.act(r, y)) - src.act(r, red.beta(y)));
      }
    }
  }
  return report;
}

Reduction normalize_homotopy(const Reduction& raw, const std::optional<SampleOptions>& check) {
  if (check) {
    ValidationReport report = validate_reduction(
        Reduction{raw.source, raw.target, raw.alpha, raw.beta, raw.eta, false}, *check);
    for (const char* identity : {"alpha_beta", "homotopy", "alpha_chain", "beta_chain"})
      if (report.violates(identity))
        throw PreconditionFailed("normalize_homotopy: input violates " + std::string(identity) +
                                 "\n" + report.summary());
  }
  ComplexPtr source = raw.source;
  LinearMap alpha = raw.alpha, beta = raw.beta, eta_raw = raw.eta;
  auto project = [alpha, beta](const Chain& x) { return x - beta(alpha(x)); };
  LinearMap h = LinearMap(1, [eta_raw, project](const Cell& c) {
                  return project(eta_raw(project(Chain(c))));
                }).cached();
  LinearMap eta = LinearMap(1, [h, source](const Cell& c) {
                    return h(source->boundary(h(c)));
                  }).cached();
  return {raw.source, raw.target, raw.alpha, raw.beta, eta, raw.r_linear};
}

LinearMap contraction_from_filler(ComplexPtr complex, CycleFiller filler,
                                  std::optional<LinearMap> projector, bool r_linear) {
  const bool module = r_linear && complex->ring() != nullptr;
  return recursive_map(1, [&](std::function<Chain(const Chain&)> sigma) {
    auto on_basis = [complex, filler, projector, sigma](const Cell& b) {
      Chain pb = projector ? (*projector)(b) : Chain(b);
      Chain z = pb - sigma(complex->boundary(b));
      if (z.is_zero()) return Chain();
      Chain c = filler(z);
      Chain dc = complex->boundary(c);
      if (!(dc == z))
        throw FillerError("filler returned a chain with the wrong boundary for " + to_string(z) +
                          ": d(" + to_string(c) + ") = " + to_string(dc));
      return c;
    };
    if (module) return extend_r_linearly(complex, complex, 1, on_basis);
    return LinearMap(1, on_basis).cached();
  });
}

Reduction build_reduction(ComplexPtr source, ComplexPtr target, LinearMap alpha, LinearMap beta0,
                          CycleFiller kernel_filler, bool r_linear,
                          const std::optional<SampleOptions>& check) {
  if (check) {
    for (int n = check->min_degree; n <= check->max_degree; ++n)
      for (const Cell& y : basis_for(*target, n, r_linear)) {
        Chain diff = alpha(beta0(y)) - Chain(y);
        if (!diff.is_zero())
          throw PreconditionFailed("build_reduction: alpha beta0 != id on " + to_string(y) +
                                   " (difference " + to_string(diff) + ")");
      }
  }
  const bool module = r_linear && target->ring() != nullptr;
  LinearMap beta = recursive_map(0, [&](std::function<Chain(const Chain&)> self) {
    auto on_basis = [source, target, beta0, kernel_filler, self](const Cell& y) {
      Chain b0 = beta0(y);
      Chain z = self(target->boundary(y)) - source->boundary(b0);
      if (z.is_zero()) return b0;
      Chain c = kernel_filler(z);
      Chain dc = source->boundary(c);
      if (!(dc == z))
        throw FillerError("kernel filler returned a chain with the wrong boundary for " +
                          to_string(z) + ": d(" + to_string(c) + ") = " + to_string(dc));
      return b0 + c;
    };
    if (module) return extend_r_linearly(target, source, 0, on_basis);
    return LinearMap(0, on_basis).cached();
  });
  LinearMap projector(0, [alpha, beta](const Cell& c) { return Chain(c) - beta(alpha(c)); });
  LinearMap eta_raw = contraction_from_filler(source, kernel_filler, projector, r_linear);
  return normalize_homotopy(Reduction{source, target, alpha, beta, eta_raw, r_linear});
}

}  // namespace equichain
