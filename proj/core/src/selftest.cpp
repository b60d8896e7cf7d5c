#include "equichain/selftest.hpp"

#include <random>
#include <sstream>

#include "equichain/errors.hpp"
#include "equichain/examples.hpp"
#include "equichain/pipeline.hpp"
#include "equichain/rinfty.hpp"
#include "equichain/transfer.hpp"

namespace equichain {

std::string CheckResult::line() const {
  std::ostringstream out;
  out << name << ": " << (ok ? "PASS" : "FAIL") << " (" << checks << " checks)";
  if (!ok) out << " " << witness;
  return out.str();
}

namespace {

std::vector<Tuple> tuples_of_length(int size, int length) {
  std::vector<Tuple> out{{}};
  for (int i = 0; i < length; ++i) {
    std::vector<Tuple> next;
    next.reserve(out.size() * size);
    for (const auto& t : out)
      for (int g = 0; g < size; ++g) {
        next.push_back(t);
        next.back().push_back(g);
      }
    out = std::move(next);
  }
  return out;
}

std::string show(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

}  // namespace

CheckResult check_rinfty_square_zero(const std::string& name, DgaPtr ring, int max_dimension) {
  CheckResult res{name};
  RInfty rinfty(ring);
  for (int m = 0; m <= max_dimension; ++m)
    for (const auto& t : tuples_of_length(ring->size(), m + 1)) {
      ++res.checks;
      Chain dd = rinfty.boundary(rinfty.tuple_boundary(t));
      if (!dd.is_zero()) res.fail("d d " + show(t) + " = " + to_string(dd));
    }
  return res;
}

CheckResult check_bar_square_zero(const std::string& name, const BarBase& bar, int words, int max_length,
                                  int max_degree, std::uint64_t seed) {
  CheckResult res{name};
  std::mt19937_64 rng(seed);
  const Dga& R = *bar.ring_ptr();
  const int gens = R.size();
  int attempts = 0;
  while (res.checks < words && attempts < 50 * words) {
    ++attempts;
    const int m = static_cast<int>(rng() % (max_length + 1));
    Tuple r(m + 1);
    int ring_degree = 0;
    for (auto& g : r) {
      g = static_cast<int>(rng() % gens);
      ring_degree += R.degree(g);
    }
    const int room = max_degree - m - ring_degree;
    if (room < 0) continue;
    const int n = static_cast<int>(rng() % (room + 1));
    auto cells = bar.inner()->basis(n);
    if (cells.empty()) continue;
    const Cell w = bar.encode(r, cells[rng() % cells.size()]);
    ++res.checks;
    Chain dd = bar.boundary(bar.boundary(w));
    if (!dd.is_zero()) res.fail("d d " + to_string(w) + " = " + to_string(dd));
  }
  return res;
}

CheckResult check_reduction(const std::string& name, const Reduction& red, const SampleOptions& options) {
  CheckResult res{name};
  ValidationReport report = validate_reduction(red, options);
  res.checks = report.checks;
  if (!report.ok()) res.fail(report.summary());
  return res;
}

CheckResult check_shuffle_lemma(const std::string& name, const Reduction& red, ActionPtr action, int max_m,
                                int max_degree) {
  CheckResult res{name};
  ShuffleOperator sh(action, red.eta);
  const int gens = action->ring().size();
  for (int m = 0; m <= max_m; ++m)
    for (const auto& t : tuples_of_length(gens, m + 1))
      for (int n = 0; n <= max_degree; ++n)
        for (const auto& x : red.source->basis(n)) {
          ++res.checks;
          Chain defect = differential_sh_defect(sh, red, t, x);
          if (!defect.is_zero()) res.fail("Sh" + show(t) + " on " + to_string(x) + ": " + to_string(defect));
        }
  return res;
}

CheckResult check_chain_map(const std::string& name, const RInftyMapPtr& f, int max_length, int max_degree,
                            int samples, std::uint64_t seed) {
  CheckResult res{name};
  ComponentCheck c = check_components_vanish(*rinfty_map_delta(f), max_length, max_degree, samples, seed);
  res.checks = c.checks;
  if (!c.zero) res.fail(c.witness);
  return res;
}

CheckResult check_equal_maps(const std::string& name, const RInftyMapPtr& f, const RInftyMapPtr& g, int max_length,
                             int max_degree, int samples, std::uint64_t seed) {
  CheckResult res{name};
  ComponentCheck c = check_components_vanish(*rinfty_sum(f, g, -1), max_length, max_degree, samples, seed);
  res.checks = c.checks;
  if (!c.zero) res.fail(c.witness);
  return res;
}

CheckResult check_rank_formula(const std::string& name, const BarBase& bn, const ChainComplex& n_complex,
                               int group_order, int max_degree) {
  CheckResult res{name};
  std::vector<int> ranks;
  for (int k = 0; k <= max_degree; ++k) ranks.push_back(static_cast<int>(n_complex.basis(k).size()));
  for (int n = 0; n <= max_degree; ++n) {
    ++res.checks;
    const Integer got(static_cast<long>(bn.module_basis(n).size()));
    const Integer want = bn_rank(n, ranks, group_order);
    if (got != want)
      res.fail("degree " + std::to_string(n) + ": " + got.get_str() + " basis elements, formula " + want.get_str());
  }
  return res;
}

CheckResult check_groups(const std::string& name, const std::vector<AbelianGroup>& got,
                         const std::vector<AbelianGroup>& expected) {
  CheckResult res{name};
  if (got.size() != expected.size()) {
    res.fail("computed " + std::to_string(got.size()) + " degrees, expected " + std::to_string(expected.size()));
    return res;
  }
  for (std::size_t k = 0; k < got.size(); ++k) {
    ++res.checks;
    if (got[k] != expected[k])
      res.fail("degree " + std::to_string(k) + ": " + got[k].to_string() + " != " + expected[k].to_string());
  }
  return res;
}

bool SelftestReport::ok() const {
  for (const auto& r : results)
    if (!r.ok) return false;
  return true;
}

std::string SelftestReport::text() const {
  std::string out;
  int failed = 0;
  for (const auto& r : results) {
    out += r.line() + "\n";
    if (!r.ok) ++failed;
  }
  out += "summary: " + std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) + " passed\n";
  return out;
}

namespace {

// Runs one check, turning an exception into a failure.
template <class F>
void run(SelftestReport& report, const std::string& name, F&& f) {
  try {
    report.results.push_back(f());
  } catch (const std::exception& e) {
    CheckResult res{name};
    res.fail(std::string("exception: ") + e.what());
    report.results.push_back(res);
  }
}

DgaPtr ring_of(const ComplexPtr& c) { return DgaPtr(c, c->ring()); }

}  // namespace

SelftestReport run_selftest(std::uint64_t seed, int max_degree) {
  if (max_degree < 1) throw InvalidInput("selftest needs max degree >= 1");
  SelftestReport report;
  const int D = max_degree;
  SampleOptions samples;
  samples.max_degree = D;
  samples.samples = 20;
  samples.seed = seed;

  run(report, "group axioms", [] {
    CheckResult res{"group axioms"};
    for (const auto& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(5),
                          FiniteGroup::symmetric(3)}) {
      ++res.checks;
      auto c = check_group_table(g.table(), g.identity());
      if (!c.ok) res.fail(g.name() + ": " + c.message);
    }
    return res;
  });

  for (const auto& spec : {"cyclic:2", "cyclic:3", "symmetric:3"}) {
    const std::string name = std::string("rinfty d^2 ") + spec;
    run(report, name, [&] {
      auto g = std::make_shared<const FiniteGroup>(*group_from_spec(spec));
      const int dim = g->order() > 3 ? std::min(D, 3) : std::min(D, 5);
      return check_rinfty_square_zero(name, std::make_shared<const Dga>(Dga::group_ring(g)), dim);
    });
  }

  run(report, "bar d^2", [&] {
    auto ex = gen_circle_example(2);
    auto R = ring_of(ex.module);
    auto n_action = transfer_basic(ex.equivalence.right, strict_action(ex.module, R));
    auto bn = perturbed_bar(n_action);
    CheckResult a = check_bar_square_zero("bar d^2", *bn, 100, 3, D + 1, seed);
    CheckResult b = check_bar_square_zero("bar d^2", *bar_complex(R, ex.module), 100, 3, D + 1, seed + 1);
    a.checks += b.checks;
    if (!b.ok) a.fail(b.witness);
    return a;
  });

  run(report, "reduction bar resolution contraction", [&] {
    auto ex = gen_bar_resolution(std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2)));
    return check_reduction("reduction bar resolution contraction", ex.equivalence.right, samples);
  });
  run(report, "reduction bar reduction", [&] {
    auto lens = gen_lens_complex(3, 2);
    return check_reduction("reduction bar reduction", bar_reduction(ring_of(lens), lens), samples);
  });
  run(report, "reduction filtration", [&] {
    CheckResult res{"reduction filtration"};
    auto R = std::make_shared<const Dga>(Dga::group_ring(std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2))));
    SampleOptions o = samples;
    o.max_degree = std::min(D, 4);
    for (int d = 1; d <= std::min(D, 4); ++d) {
      CheckResult c = check_reduction("filtration", filtration_reduction(R, d), o);
      res.checks += c.checks;
      if (!c.ok) res.fail("d = " + std::to_string(d) + ": " + c.witness);
    }
    return res;
  });
  run(report, "reduction pipeline legs", [&] {
    CheckResult res{"reduction pipeline legs"};
    auto ex = gen_circle_example(3);
    auto result = equivariant_strong_equivalence(ex.module, ex.equivalence, D + 1, samples);
    for (const auto* leg : {&result.left, &result.middle, &result.right}) {
      CheckResult c = check_reduction("leg", *leg, samples);
      res.checks += c.checks;
      if (!c.ok) res.fail(c.witness);
    }
    return res;
  });

  run(report, "shuffle lemma", [&] {
    auto ex = gen_bar_resolution(std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2)));
    auto action = strict_action(ex.module, ring_of(ex.module));
    return check_shuffle_lemma("shuffle lemma", ex.equivalence.right, action, 3, std::min(D, 2));
  });

  run(report, "r-infinity maps", [&] {
    CheckResult res{"r-infinity maps"};
    auto merge = [&res](const CheckResult& c) {
      res.checks += c.checks;
      if (!c.ok) res.fail(c.name + ": " + c.witness);
    };
    auto ex = gen_circle_example(2);
    auto R = ring_of(ex.module);
    auto m_action = strict_action(ex.module, R);
    auto n_action = transfer_basic(ex.equivalence.right, m_action);
    auto maps = strictify_reduction_maps(ex.equivalence.right, m_action, n_action);
    const int len = 3, deg = std::min(D, 3);
    merge(check_chain_map("alpha", maps.alpha, len, 1, 20, seed));
    merge(check_chain_map("beta", maps.beta, len, 1, 20, seed + 1));
    auto bex = bar_example_maps(perturbed_bar(n_action));
    merge(check_chain_map("epsilon", bex.epsilon, len, deg, 20, seed + 2));
    merge(check_chain_map("zeta", bex.zeta, len, 0, 20, seed + 3));
    auto retract = rinfty_sum(rinfty_identity(bex.bar_action), rinfty_map_compose(bex.zeta, bex.epsilon), -1);
    merge(check_equal_maps("eta", rinfty_map_delta(bex.eta), retract, len, deg, 20, seed + 4));
    merge(check_chain_map("extension",
                          extend_nullhomotopic(ex.equivalence.right.eta, m_action, m_action), len, 1, 20, seed + 5));
    return res;
  });

  for (int p : {2, 3}) {
    const std::string name = "rank formula cyclic:" + std::to_string(p);
    run(report, name, [&] {
      CheckResult res{name};
      for (auto ex : {gen_bar_resolution(std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(p))),
                      gen_circle_example(p)}) {
        auto result = equivariant_strong_equivalence(ex.module, ex.equivalence, D, std::nullopt);
        CheckResult c = check_rank_formula(name, *result.bn, *ex.equivalence.right.target, p, D);
        res.checks += c.checks;
        if (!c.ok) res.fail(c.witness);
      }
      return res;
    });
  }

  for (int p : {2, 3}) {
    const std::string name = "group homology cyclic:" + std::to_string(p);
    run(report, name, [&] {
      CheckResult res{name};
      auto ex = gen_bar_resolution(std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(p)));
      auto result = equivariant_strong_equivalence(ex.module, ex.equivalence, D, samples);
      ChainMatrices q = pipeline_quotient(result);
      // Oracle: the periodic resolution, long enough to be exact up to D + 1.
      ChainMatrices oracle = quotient_by_group(*gen_lens_complex(p, D / 2 + 2), D);
      for (bool co : {false, true}) {
        CheckResult c = check_groups(name, co ? cohomology_groups(q, D) : homology_groups(q, D),
                                     co ? cohomology_groups(oracle, D) : homology_groups(oracle, D));
        res.checks += c.checks;
        if (!c.ok) res.fail((co ? "cohomology " : "homology ") + c.witness);
      }
      return res;
    });
  }

  for (int p : {2, 3, 5}) {
    const std::string name = "lens trivial equivalence p=" + std::to_string(p);
    run(report, name, [&] {
      auto lens = gen_lens_complex(p, 2);
      const int top = std::min(D, 3);
      auto result = equivariant_strong_equivalence(lens, trivial_equivalence(lens), top, samples);
      return check_groups(name, homology_groups(pipeline_quotient(result), top),
                          homology_groups(quotient_by_group(*lens, top), top));
    });
  }
  return report;
}

}  // namespace equichain
