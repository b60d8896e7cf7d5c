#include "equichain/rinfty_map.hpp"

#include <climits>
#include <map>
#include <random>

#include "equichain/errors.hpp"

namespace equichain {

namespace {

int prefix_degree(const Dga& R, const Tuple& r, std::size_t count) {
  int s = 0;
  for (std::size_t i = 0; i < count; ++i) s += R.degree(r[i]);
  return s;
}

Tuple slice(const Tuple& r, std::size_t begin, std::size_t end) {
  return Tuple(r.begin() + static_cast<std::ptrdiff_t>(begin), r.begin() + static_cast<std::ptrdiff_t>(end));
}

}  // namespace

RInftyMap::RInftyMap(ActionPtr source, ActionPtr target, int degree, Component component,
                     std::string name)
    : source_(std::move(source)),
      target_(std::move(target)),
      degree_(degree),
      component_(std::move(component)),
      name_(std::move(name)) {
  if (source_->ring_ptr() != target_->ring_ptr())
    throw PreconditionFailed("R-infinity map between modules over different rings");
}

Chain RInftyMap::component(const Tuple& r, const Cell& x) const {
  return memo_.get_or_compute(tuple_key(r, x), [&] { return component_(r, x); });
}

Chain RInftyMap::component(const Tuple& r, const Chain& x) const {
  ChainAccumulator acc;
  for (const auto& [cell, c] : x) acc.add(component(r, cell), c);
  return acc.take();
}

Chain RInftyMap::component(const std::vector<RingElement>& slots, const Chain& x) const {
  ChainAccumulator acc;
  for (const auto& [t, c] : expand_slots(slots)) acc.add(component(t, x), c);
  return acc.take();
}

LinearMap RInftyMap::bottom() const {
  return LinearMap(degree_, [this](const Cell& x) { return component(Tuple{}, x); });
}

RInftyMapPtr make_rinfty_map(ActionPtr source, ActionPtr target, int degree,
                             RInftyMap::Component component, std::string name) {
  return std::make_shared<const RInftyMap>(std::move(source), std::move(target), degree,
                                           std::move(component), std::move(name));
}

LinearMap rinfty_map_apply(RInftyMapPtr f, BarPtr source_bar, BarPtr target_bar) {
  const int d = f->degree();
  return LinearMap(d, [f, source_bar, target_bar, d](const Cell& cell) {
    auto w = source_bar->decode(cell);
    const Dga& R = f->source()->ring();
    const std::size_t m = w.r.size() - 1;
    ChainAccumulator acc;
    int prefix = 0;
    for (std::size_t k = 0; k <= m; ++k) {
      prefix += R.degree(w.r[k]);
      Chain y = f->component(slice(w.r, k + 1, m + 1), w.x);
      if (y.is_zero()) continue;
      acc.add(target_bar->word(slice(w.r, 0, k + 1), y), sign_of(d * (static_cast<int>(k) + prefix)));
    }
    return acc.take();
  });
}

RInftyMapPtr rinfty_map_delta(RInftyMapPtr f) {
  const int d = f->degree();
  auto component = [f, d](const Tuple& r, const Cell& x) -> Chain {
    const Dga& R = f->source()->ring();
    const ChainComplex& N = *f->target()->complex();
    const ChainComplex& M = *f->source()->complex();
    const int l = static_cast<int>(r.size());
    ChainAccumulator acc;
    // [d, f_l] |r) x.
    acc.add(N.boundary(f->component(r, x)), 1);
    int prefix = 0;
    for (int j = 0; j < l; ++j) {
      const RingElement& dr = R.diff(r[j]);
      if (!dr.is_zero()) {
        std::vector<RingElement> slots;
        for (int i = 0; i < l; ++i) slots.push_back(i == j ? dr : RingElement(r[i]));
        acc.add(f->component(slots, Chain(x)), sign_of(d + j + prefix));
      }
      prefix += R.degree(r[j]);
    }
    acc.add(f->component(r, M.boundary(x)), sign_of(d + l - 1 + prefix));
    // Minus the three families of the equations.
    for (int k = 1; k <= l; ++k) {
      Chain inner = f->component(slice(r, k, l), x);
      if (inner.is_zero()) continue;
      const int s = d * (k + prefix_degree(R, r, k));
      acc.add(f->target()->act(slice(r, 0, k), inner), -sign_of(s));
    }
    for (int k = 1; k <= l - 1; ++k) {
      std::vector<RingElement> slots;
      for (int i = 0; i < l; ++i) {
        if (i == k - 1) continue;
        slots.push_back(i == k ? R.product(r[k - 1], r[k]) : RingElement(r[i]));
      }
      acc.add(f->component(slots, Chain(x)), -sign_of(k + d + prefix_degree(R, r, k)));
    }
    for (int k = 0; k <= l - 1; ++k) {
      Chain inner = f->source()->act(slice(r, k, l), x);
      if (inner.is_zero()) continue;
      acc.add(f->component(slice(r, 0, k), inner), -sign_of(k + 1 + d + prefix_degree(R, r, k)));
    }
    return acc.take();
  };
  return make_rinfty_map(f->source(), f->target(), d - 1, component, "[d," + f->name() + "]");
}

RInftyMapPtr rinfty_map_compose(RInftyMapPtr g, RInftyMapPtr f) {
  if (g->source()->complex() != f->target()->complex())
    throw PreconditionFailed("compose: " + g->name() + " does not start where " + f->name() + " ends");
  const int df = f->degree();
  auto component = [g, f, df](const Tuple& r, const Cell& x) -> Chain {
    const Dga& R = f->source()->ring();
    const int l = static_cast<int>(r.size());
    ChainAccumulator acc;
    for (int k = 0; k <= l; ++k) {
      Chain inner = f->component(slice(r, k, l), x);
      if (inner.is_zero()) continue;
      acc.add(g->component(slice(r, 0, k), inner), sign_of(df * (k + prefix_degree(R, r, k))));
    }
    return acc.take();
  };
  return make_rinfty_map(f->source(), g->target(), g->degree() + df, component,
                         g->name() + f->name());
}

RInftyMapPtr rinfty_identity(ActionPtr action) {
  return strict_extension(LinearMap::identity(), action, action);
}

RInftyMapPtr rinfty_sum(RInftyMapPtr f, RInftyMapPtr g, const Integer& scale) {
  if (f->degree() != g->degree()) throw PreconditionFailed("sum of maps of different degrees");
  auto component = [f, g, scale](const Tuple& r, const Cell& x) {
    Chain out = f->component(r, x);
    out.add_scaled(g->component(r, x), scale);
    return out;
  };
  return make_rinfty_map(f->source(), f->target(), f->degree(), component,
                         f->name() + "+" + g->name());
}

RInftyMapPtr strict_extension(LinearMap f0, ActionPtr source, ActionPtr target) {
  const int d = f0.degree();
  return make_rinfty_map(std::move(source), std::move(target), d,
                         [f0](const Tuple& r, const Cell& x) {
                           return r.empty() ? f0(x) : Chain();
                         });
}

ComponentCheck check_components_vanish(const RInftyMap& f, int max_length, int max_degree,
                                       int samples, std::uint64_t seed) {
  ComponentCheck out;
  const ChainComplex& M = *f.source()->complex();
  const Dga& R = f.source()->ring();
  std::mt19937_64 rng(seed);
  for (int l = 0; l <= max_length; ++l)
    for (int n = 0; n <= max_degree; ++n) {
      auto cells = M.basis(n);
      if (cells.empty()) continue;
      for (int s = 0; s < samples; ++s) {
        Tuple r(static_cast<std::size_t>(l));
        for (auto& g : r) g = static_cast<int>(rng() % static_cast<std::uint64_t>(R.size()));
        const Cell& x = cells[rng() % cells.size()];
        Chain value = f.component(r, x);
        ++out.checks;
        if (!value.is_zero()) {
          out.zero = false;
          std::string t;
          for (int g : r) t += (t.empty() ? "" : ",") + R.name(g);
          out.witness = f.name() + "_" + std::to_string(l) + "|" + t + ") " + to_string(x) +
                        " = " + to_string(value);
          return out;
        }
      }
    }
  return out;
}

StrictifiedMaps strictify_reduction_maps(const Reduction& reduction, ActionPtr source_action,
                                         ActionPtr target_action) {
  if (source_action->complex() != reduction.source || target_action->complex() != reduction.target)
    throw PreconditionFailed("strictify: actions do not live on the reduction ends");
  auto shuffle = std::make_shared<const ShuffleOperator>(source_action, reduction.eta);
  LinearMap alpha0 = reduction.alpha, beta0 = reduction.beta, eta = reduction.eta;
  auto alpha = make_rinfty_map(
      source_action, target_action, 0,
      [shuffle, alpha0, eta](const Tuple& r, const Cell& x) -> Chain {
        if (r.empty()) return alpha0(x);
        Chain ex = eta(x);
        if (ex.is_zero()) return {};
        const Dga& R = shuffle->action()->ring();
        const int s = static_cast<int>(r.size()) + prefix_degree(R, r, r.size());
        Chain out = alpha0(shuffle->apply(r, ex));
        out *= sign_of(s);
        return out;
      },
      "alpha");
  auto beta = make_rinfty_map(
      target_action, source_action, 0,
      [shuffle, beta0, eta](const Tuple& r, const Cell& y) -> Chain {
        if (r.empty()) return beta0(y);
        return eta(shuffle->apply(r, beta0(y)));
      },
      "beta");
  return {alpha, beta, shuffle};
}

BarExampleMaps bar_example_maps(std::shared_ptr<const PerturbedBar> bar) {
  ActionPtr module_action = bar->action();
  ActionPtr bar_action = strict_action(bar, bar->ring_ptr());
  const int unit = bar->ring_ptr()->unit();
  auto tuple_sign = [](const Dga& R, const Tuple& r) {
    return sign_of(static_cast<int>(r.size()) + prefix_degree(R, r, r.size()));
  };
  auto epsilon = make_rinfty_map(
      bar_action, module_action, 0,
      [bar, module_action, tuple_sign](const Tuple& r, const Cell& w) -> Chain {
        auto word = bar->decode(w);
        Tuple all = r;
        all.insert(all.end(), word.r.begin(), word.r.end());
        Chain out = module_action->act(all, word.x);
        out *= tuple_sign(*bar->ring_ptr(), r);
        return out;
      },
      "eps");
  auto zeta = make_rinfty_map(
      module_action, bar_action, 0,
      [bar, unit](const Tuple& r, const Cell& x) -> Chain {
        Tuple all{unit};
        all.insert(all.end(), r.begin(), r.end());
        return Chain(bar->encode(all, x));
      },
      "zeta");
  auto eta = make_rinfty_map(
      bar_action, bar_action, 1,
      [bar, unit, tuple_sign](const Tuple& r, const Cell& w) -> Chain {
        auto word = bar->decode(w);
        Tuple all{unit};
        all.insert(all.end(), r.begin(), r.end());
        all.insert(all.end(), word.r.begin(), word.r.end());
        Chain out(bar->encode(all, word.x));
        out *= tuple_sign(*bar->ring_ptr(), r);
        return out;
      },
      "eta");
  return {module_action, bar_action, epsilon, zeta, eta};
}

RInftyMapPtr extend_nullhomotopic(LinearMap eta, ActionPtr source, ActionPtr target) {
  const int d = eta.degree() - 1;
  ComplexPtr m = source->complex(), n = target->complex();
  LinearMap f0 = graded_commutator(eta, m, n);
  return make_rinfty_map(
      source, target, d,
      [eta, f0, source, target, d](const Tuple& r, const Cell& x) -> Chain {
        if (r.empty()) return f0(x);
        const Dga& R = source->ring();
        const int rho = static_cast<int>(r.size()) - 1 + prefix_degree(R, r, r.size());
        Chain out = eta(source->act(r, x));
        out.add_scaled(target->act(r, eta(x)), -sign_of(eta.degree() * rho));
        out *= sign_of(d + 1);
        return out;
      },
      "ext");
}

CycleFiller kernel_filler(BarPtr source_bar, RInftyMapPtr alpha, LinearMap contraction) {
  return [source_bar, alpha, contraction](const Chain& z0) -> Chain {
    if (z0.is_zero()) return {};
    Chain dz = source_bar->boundary(z0);
    if (!dz.is_zero()) throw FillerError("kernel filler: not a cycle, boundary " + to_string(dz));
    const Dga& R = *source_bar->ring_ptr();
    LinearMap alpha0 = alpha->bottom();
    Chain z = z0;
    ChainAccumulator filler;
    int last = INT_MAX;
    while (!z.is_zero()) {
      int m = -1;
      for (const auto& [cell, c] : z) m = std::max(m, BarBase::length(cell));
      if (m >= last)
        throw FillerError("kernel filler: word length did not decrease, remainder " + to_string(z));
      last = m;
      std::map<Tuple, Chain> groups;
      for (const auto& [cell, c] : z) {
        if (BarBase::length(cell) != m) continue;
        auto w = source_bar->decode(cell);
        groups[w.r].add_scaled(Chain(w.x), c);
      }
      ChainAccumulator lift;
      for (const auto& [r, xi] : groups) {
        Chain image = alpha0(xi);
        if (!image.is_zero())
          throw FillerError("kernel filler: maximal component leaves ker alpha_0: " + to_string(xi));
        const int s = m + prefix_degree(R, r, r.size());
        lift.add(source_bar->word(r, contraction(xi)), sign_of(s));
      }
      Chain c = lift.take();
      filler.add(c, 1);
      z -= source_bar->boundary(c);
    }
    return filler.take();
  };
}

}  // namespace equichain
