#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equichain/bar.hpp"
#include "equichain/homology.hpp"
#include "equichain/reduction.hpp"
#include "equichain/rinfty_map.hpp"

namespace equichain {

/// One property check: how many individual identities were evaluated and
/// the first counterexample, if any.
struct CheckResult {
  std::string name;
  long checks = 0;
  bool ok = true;
  std::string witness;

  void fail(std::string w) {
    if (ok) witness = std::move(w);
    ok = false;
  }
  std::string line() const;  // "name: PASS (n checks)" or "name: FAIL (...) witness"
};

/// d^2 = 0 on every generator tuple (r0, ..., rm) with m <= max_dimension.
CheckResult check_rinfty_square_zero(const std::string& name, DgaPtr ring, int max_dimension);

/// d^2 = 0 on random words r0|...|rm (x) x with m <= max_length and total
/// degree <= max_degree.
CheckResult check_bar_square_zero(const std::string& name, const BarBase& bar, int words, int max_length,
                                  int max_degree, std::uint64_t seed);

/// The six reduction identities (plus R-linearity when flagged).
CheckResult check_reduction(const std::string& name, const Reduction& red, const SampleOptions& options);

/// The three-family identity for [d, Sh] on all tuples with m <= max_m over
/// basis cells of degree <= max_degree.
CheckResult check_shuffle_lemma(const std::string& name, const Reduction& red, ActionPtr action, int max_m,
                                int max_degree);

/// f is an R-infinity chain map: every component of [d, f] vanishes.
CheckResult check_chain_map(const std::string& name, const RInftyMapPtr& f, int max_length, int max_degree,
                            int samples, std::uint64_t seed);

/// Componentwise equality f = g.
CheckResult check_equal_maps(const std::string& name, const RInftyMapPtr& f, const RInftyMapPtr& g, int max_length,
                             int max_degree, int samples, std::uint64_t seed);

/// |module basis of (BN)_n| = bn_rank(n) for n <= max_degree.
CheckResult check_rank_formula(const std::string& name, const BarBase& bn, const ChainComplex& n_complex,
                               int group_order, int max_degree);

CheckResult check_groups(const std::string& name, const std::vector<AbelianGroup>& got,
                         const std::vector<AbelianGroup>& expected);

struct SelftestReport {
  std::vector<CheckResult> results;
  bool ok() const;
  std::string text() const;
};

/// The property suite at a fixed seed and degree bound; the report contains
/// no timings and is byte-deterministic in (seed, max_degree).
SelftestReport run_selftest(std::uint64_t seed, int max_degree);

}  // namespace equichain
