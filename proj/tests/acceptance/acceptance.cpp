// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "equichain/errors.hpp"
#include "equichain/examples.hpp"
#include "equichain/pipeline.hpp"
#include "equichain/rinfty.hpp"
#include "equichain/selftest.hpp"
#include "equichain/transfer.hpp"

using namespace equichain;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  long checks = 0;
  bool ok = true;
  std::string witness;

  void absorb(const CheckResult& r) {
    checks += r.checks;
    if (!r.ok && ok) witness = r.name + ": " + r.witness;
    ok = ok && r.ok;
  }
};

GroupPtr cyclic(int p) { return std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(p)); }
DgaPtr ring_of(const ComplexPtr& c) { return DgaPtr(c, c->ring()); }
DgaPtr group_ring(GroupPtr g) { return std::make_shared<const Dga>(Dga::group_ring(std::move(g))); }

SampleOptions samples_up_to(int max_degree, int samples) {
  SampleOptions o;
  o.max_degree = max_degree;
  o.samples = samples;
  o.seed = kSeed;
  return o;
}

// Differential laws on R-infinity and on bar constructions.
Outcome differential_laws() {
  Outcome out;
  for (GroupPtr g : {cyclic(2), cyclic(3), std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(3))})
    out.absorb(check_rinfty_square_zero("rinfty " + g->name(), group_ring(g), 5));
  for (int p : {2, 3}) {
    auto lens = gen_lens_complex(p, 4);
    auto R = ring_of(lens);
    out.absorb(check_bar_square_zero("B(R,R,M)", *bar_complex(R, lens), 200, 3, 6, kSeed + p));
    out.absorb(check_bar_square_zero("BM strict", *perturbed_bar(strict_action(lens, R)), 200, 3, 6, kSeed + 10 + p));
    auto ex = gen_circle_example(p);
    auto n_action = transfer_basic(ex.equivalence.right, strict_action(ex.module, ring_of(ex.module)));
    out.absorb(check_bar_square_zero("BN circle", *perturbed_bar(n_action), 200, 3, 6, kSeed + 20 + p));
  }
  return out;
}

// The six identities for every kind of reduction the library builds.
Outcome reduction_identities() {
  Outcome out;
  const SampleOptions o = samples_up_to(6, 50);
  auto z2 = group_ring(cyclic(2));
  for (int d = 1; d <= 4; ++d) out.absorb(check_reduction("filtration d=" + std::to_string(d), filtration_reduction(z2, d), o));
  for (int p : {2, 3}) {
    auto bar_res = gen_bar_resolution(cyclic(p));
    out.absorb(check_reduction("bar resolution contraction", bar_res.equivalence.right, o));
    auto circle = gen_circle_example(p);
    out.absorb(check_reduction("circle reduction", circle.equivalence.right, o));
    auto lens = gen_lens_complex(p, 4);
    out.absorb(check_reduction("bar reduction", bar_reduction(ring_of(lens), lens), o));
  }
  // Pipeline legs, truncated one degree above the checked range plus the
  // extra degree eta eta needs.
  for (auto ex : {gen_bar_resolution(cyclic(2)), gen_circle_example(3)}) {
    auto result = equivariant_strong_equivalence(ex.module, ex.equivalence, 7, o);
    out.absorb(check_reduction(ex.name + " left", result.left, o));
    out.absorb(check_reduction(ex.name + " middle", result.middle, o));
    out.absorb(check_reduction(ex.name + " right", result.right, o));
  }
  return out;
}

Outcome shuffle_lemma() {
  Outcome out;
  auto ex = gen_bar_resolution(cyclic(2));
  out.absorb(check_shuffle_lemma("Sh", ex.equivalence.right, strict_action(ex.module, ring_of(ex.module)), 3, 3));
  return out;
}

Outcome triangle_equations() {
  Outcome out;
  for (auto ex : {gen_circle_example(2), gen_circle_example(3), gen_bar_resolution(cyclic(2))}) {
    auto m_action = strict_action(ex.module, ring_of(ex.module));
    auto n_action = transfer_basic(ex.equivalence.right, m_action);
    auto maps = strictify_reduction_maps(ex.equivalence.right, m_action, n_action);
    out.absorb(check_chain_map(ex.name + " alpha*", maps.alpha, 3, 2, 30, kSeed));
    out.absorb(check_chain_map(ex.name + " beta*", maps.beta, 3, 1, 30, kSeed + 1));
    out.absorb(check_chain_map(ex.name + " extension", extend_nullhomotopic(ex.equivalence.right.eta, m_action, m_action),
                               3, 2, 30, kSeed + 2));
    auto bex = bar_example_maps(perturbed_bar(n_action));
    out.absorb(check_chain_map(ex.name + " eps*", bex.epsilon, 3, 3, 30, kSeed + 3));
    out.absorb(check_chain_map(ex.name + " zeta*", bex.zeta, 3, 1, 30, kSeed + 4));
    // [d, eta*] = id - zeta* eps*, the sign forced by eta_0 = 1|(-).
    auto retract = rinfty_sum(rinfty_identity(bex.bar_action), rinfty_map_compose(bex.zeta, bex.epsilon), -1);
    out.absorb(check_equal_maps(ex.name + " eta*", rinfty_map_delta(bex.eta), retract, 3, 3, 30, kSeed + 5));
  }
  return out;
}

Outcome rank_formula() {
  Outcome out;
  for (int p : {2, 3})
    for (auto ex : {gen_bar_resolution(cyclic(p)), gen_circle_example(p)}) {
      auto result = equivariant_strong_equivalence(ex.module, ex.equivalence, 5, std::nullopt);
      out.absorb(check_rank_formula(ex.name, *result.bn, *ex.equivalence.right.target, p, 5));
    }
  return out;
}

// The periodic resolution Z[Z/p] <- Z[Z/p] <- ... with alternating g - 1 and
// the norm, built independently of the library's examples.
std::shared_ptr<FreeModuleComplex> periodic_resolution(int p, int top) {
  auto R = group_ring(cyclic(p));
  std::vector<std::vector<std::vector<RingElement>>> entries(top + 1);
  for (int n = 1; n <= top; ++n) {
    RingElement e;
    if (n % 2 == 1) {
      e = RingElement(1) - RingElement(0);
    } else {
      for (int g = 0; g < p; ++g) e += RingElement(g);
    }
    entries[n] = {{e}};
  }
  return std::make_shared<FreeModuleComplex>(R, std::vector<int>(top + 1, 1), entries, "periodic");
}

Outcome group_homology() {
  Outcome out;
  for (int p : {2, 3}) {
    const AbelianGroup Zp = cyclic_group(p), Z = free_group(1), zero{};
    auto ex = gen_bar_resolution(cyclic(p));
    auto result = equivariant_strong_equivalence(ex.module, ex.equivalence, 5, samples_up_to(5, 20));
    ChainMatrices q = pipeline_quotient(result);
    ChainMatrices oracle = quotient_by_group(*periodic_resolution(p, 8), 5);
    const std::string tag = "Z/" + std::to_string(p);
    out.absorb(check_groups(tag + " homology", homology_groups(q, 5), {Z, Zp, zero, Zp, zero, Zp}));
    out.absorb(check_groups(tag + " cohomology", cohomology_groups(q, 5), {Z, zero, Zp, zero, Zp, zero}));
    out.absorb(check_groups(tag + " homology oracle", homology_groups(q, 5), homology_groups(oracle, 5)));
    out.absorb(check_groups(tag + " cohomology oracle", cohomology_groups(q, 5), cohomology_groups(oracle, 5)));
  }
  return out;
}

Outcome lens_consistency() {
  Outcome out;
  for (int p : {2, 3, 5}) {
    auto lens = gen_lens_complex(p, 2);
    auto result = equivariant_strong_equivalence(lens, trivial_equivalence(lens), 3, samples_up_to(3, 20));
    auto via_pipeline = homology_groups(pipeline_quotient(result), 3);
    const std::string tag = "L(" + std::to_string(p) + ",1)";
    out.absorb(check_groups(tag + " direct", via_pipeline, homology_groups(quotient_by_group(*lens, 3), 3)));
    out.absorb(check_groups(tag, via_pipeline, {free_group(1), cyclic_group(p), {}, free_group(1)}));
  }
  return out;
}

Outcome determinism() {
  Outcome out;
  const std::string a = run_selftest(kSeed, 4).text();
  const std::string b = run_selftest(kSeed, 4).text();
  out.checks = 1;
  if (a != b) {
    out.ok = false;
    out.witness = "selftest reports differ";
  }
  return out;
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "differential laws", 60, differential_laws},
      {2, "reduction identities", 120, reduction_identities},
      {3, "Sh differential lemma", 60, shuffle_lemma},
      {4, "R-infinity map equations", 120, triangle_equations},
      {5, "bar rank formula", 10, rank_formula},
      {6, "group homology end to end", 300, group_homology},
      {7, "trivial equivalence consistency", 120, lens_consistency},
      {8, "selftest determinism", 300, determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.witness = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.ok && in_time && o.checks > 0;
    all = all && pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, c.limit_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << o.checks
              << " checks, " << timing << ")";
    if (!o.ok) std::cout << " " << o.witness;
    if (!in_time) std::cout << " time limit exceeded";
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
