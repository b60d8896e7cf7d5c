#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "equichain/complex.hpp"

namespace equichain {

/// A reduction C => D: alpha: C -> D, beta: D -> C of degree 0 and a
/// homotopy eta on C of degree +1 with alpha beta = id, [d, eta] = id - beta alpha
/// and the side conditions alpha eta = 0, eta beta = 0, eta eta = 0.
struct Reduction {
  ComplexPtr source;
  ComplexPtr target;
  LinearMap alpha;
  LinearMap beta;
  LinearMap eta;
  bool r_linear = false;
};

/// A span of reductions C <= C~ => D sharing the source C~.
struct StrongEquivalence {
  Reduction left;
  Reduction right;
};

Reduction identity_reduction(ComplexPtr complex, bool r_linear = false);

struct SampleOptions {
  int min_degree = 0;
  int max_degree = 6;
  int samples = 50;
  std::uint64_t seed = 0x5eedULL;
};

/// Homogeneous test elements of one degree: every basis cell when the basis
/// has at most `samples` cells, otherwise `samples` random combinations of one
/// to three cells with coefficients in +-1..3. Deterministic in `seed`.
std::vector<Chain> sample_elements(const ChainComplex& complex, int degree, int samples,
                                   std::uint64_t seed);

struct Violation {
  std::string identity;
  int degree = 0;
  std::string witness;
  std::string value;
};

struct ValidationReport {
  std::vector<Violation> violations;
  long checks = 0;

  bool ok() const { return violations.empty(); }
  bool violates(const std::string& identity) const;
  std::string summary() const;
};

/// Checks alpha and beta are chain maps, alpha beta = id, [d, eta] = id - beta alpha,
/// alpha eta = 0, eta beta = 0, eta eta = 0 and, for R-linear reductions,
/// compatibility of all three maps with the action of ring generators.
ValidationReport validate_reduction(const Reduction& red, const SampleOptions& options = {});

/// Replaces an arbitrary homotopy by h d h with h = (id - beta alpha) eta_raw (id - beta alpha),
/// which satisfies all side conditions. When `check` is given, alpha beta = id and
/// [d, eta_raw] = id - beta alpha are sampled first and PreconditionFailed is thrown
/// on a violation.
Reduction normalize_homotopy(const Reduction& raw,
                             const std::optional<SampleOptions>& check = std::nullopt);

/// Computes c with dc = z for cycles z of a designated subcomplex.
using CycleFiller = std::function<Chain(const Chain&)>;

/// Contraction sigma with [d, sigma] = projector (identity when absent), built
/// recursively on basis cells: sigma(b) = fill(pi b - sigma d b). The values are
/// computed on the R-basis and extended R-linearly when `r_linear` is set and the
/// complex is a module, otherwise on the Z-basis. Each filler result is checked
/// and FillerError is thrown with a witness when dc != z.
LinearMap contraction_from_filler(ComplexPtr complex, CycleFiller filler,
                                  std::optional<LinearMap> projector = std::nullopt,
                                  bool r_linear = false);

/// Builds a reduction from a chain map alpha, a section beta0 (alpha beta0 = id,
/// not necessarily a chain map) and a filler for cycles of ker alpha whose
/// values lie in ker alpha. beta is corrected recursively on basis cells of the
/// target, the homotopy is obtained from the filler and then normalized.
Reduction build_reduction(ComplexPtr source, ComplexPtr target, LinearMap alpha, LinearMap beta0,
                          CycleFiller kernel_filler, bool r_linear,
                          const std::optional<SampleOptions>& check = std::nullopt);

}  // namespace equichain
