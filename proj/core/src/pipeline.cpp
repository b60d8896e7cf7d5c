#include "equichain/pipeline.hpp"

#include "equichain/errors.hpp"
#include "equichain/rinfty_map.hpp"
#include "equichain/transfer.hpp"

namespace equichain {

TruncatedComplex::TruncatedComplex(ComplexPtr inner, int top) : inner_(std::move(inner)), top_(top) {
  if (!inner_) throw InvalidInput("null complex");
}

void TruncatedComplex::guard(int degree) const {
  if (degree > top_)
    throw TruncationError(inner_->name() + " is truncated at degree " + std::to_string(top_) + ", requested " +
                          std::to_string(degree));
}

Chain TruncatedComplex::boundary(const Cell& cell) const {
  guard(cell.degree);
  return inner_->boundary(cell);
}

std::vector<Cell> TruncatedComplex::basis(int degree) const {
  guard(degree);
  return inner_->basis(degree);
}

Chain TruncatedComplex::act(int generator, const Cell& cell) const {
  guard(cell.degree);
  return inner_->act(generator, cell);
}

ModuleSplit TruncatedComplex::split(const Cell& cell) const {
  guard(cell.degree);
  return inner_->split(cell);
}

std::vector<Cell> TruncatedComplex::module_basis(int degree) const {
  guard(degree);
  return inner_->module_basis(degree);
}

namespace {

LinearMap guarded(const LinearMap& f, int top) {
  const int d = f.degree();
  return LinearMap(d, [f, top, d](const Cell& cell) {
    if (cell.degree > top || cell.degree + d > top)
      throw TruncationError("map evaluated beyond truncation degree " + std::to_string(top));
    return f(cell);
  });
}

Reduction truncate(const Reduction& red, int top) {
  Reduction out;
  out.source = std::make_shared<TruncatedComplex>(red.source, top);
  out.target = std::make_shared<TruncatedComplex>(red.target, top);
  out.alpha = guarded(red.alpha, top);
  out.beta = guarded(red.beta, top);
  out.eta = guarded(red.eta, top);
  out.r_linear = red.r_linear;
  return out;
}

void require_valid(const Reduction& red, const char* which, const SampleOptions& options) {
  ValidationReport report = validate_reduction(red, options);
  if (!report.ok()) throw PreconditionFailed(std::string(which) + " reduction is invalid: " + report.summary());
}

}  // namespace

PipelineResult equivariant_strong_equivalence(ComplexPtr module, const StrongEquivalence& se, int max_degree,
                                              std::optional<SampleOptions> check) {
  if (max_degree < 0) throw InvalidInput("max degree must be non-negative");
  if (!module || module->ring() == nullptr) throw InvalidInput("M must be a complex of free modules over a group ring");
  if (se.left.target != module) throw InvalidInput("the left reduction must end in M");
  if (se.left.source != se.right.source) throw InvalidInput("the two reductions must share their source");
  const ComplexPtr& tilde = se.left.source;
  if (tilde->ring() != module->ring()) throw InvalidInput("M~ must be a complex over the same group ring as M");
  if (!module->ring()->augmented()) throw InvalidInput("the ring must be augmented");

  std::optional<SampleOptions> clipped = check;
  if (clipped) clipped->max_degree = std::min(clipped->max_degree, max_degree);
  if (clipped) {
    require_valid(se.left, "left", *clipped);
    require_valid(se.right, "right", *clipped);
  }

  // The ring is owned by the module; share ownership through it.
  DgaPtr ring(module, module->ring());
  PipelineResult out;
  out.max_degree = max_degree;
  out.module_action = strict_action(module, ring);
  out.tilde_action = transfer_easy(se.left, out.module_action, std::nullopt);
  out.target_action = transfer_basic(se.right, out.tilde_action, std::nullopt);
  out.bm = perturbed_bar(out.module_action);
  out.bm_tilde = perturbed_bar(out.tilde_action);
  out.bn = perturbed_bar(out.target_action);

  const int top = max_degree + 1;
  out.left = truncate(bar_reduction(out.bm), top);

  auto leg = [&](const Reduction& red, ActionPtr target_action, BarPtr target_bar) {
    StrictifiedMaps maps = strictify_reduction_maps(red, out.tilde_action, target_action);
    LinearMap alpha = rinfty_map_apply(maps.alpha, out.bm_tilde, target_bar);
    LinearMap beta = rinfty_map_apply(maps.beta, target_bar, out.bm_tilde);
    CycleFiller fill = kernel_filler(out.bm_tilde, maps.alpha, red.eta);
    return truncate(build_reduction(out.bm_tilde, target_bar, alpha, beta, fill, true), top);
  };
  out.middle = leg(se.left, out.module_action, out.bm);
  out.right = leg(se.right, out.target_action, out.bn);
  out.target = out.right.target;
  return out;
}

Integer bn_rank(int n, const std::vector<int>& ranks, int group_order) {
  if (n < 0) return 0;
  if (static_cast<int>(ranks.size()) <= n) throw InvalidInput("ranks of N needed up to degree " + std::to_string(n));
  Integer total = 0, power = 1;
  for (int m = 0; m <= n; ++m) {
    total += power * ranks[n - m];
    power *= group_order;
  }
  return total;
}

ChainMatrices pipeline_quotient(const PipelineResult& result) {
  return quotient_by_group(*result.target, result.max_degree);
}

}  // namespace equichain
