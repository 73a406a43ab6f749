#include "metlie/verify.hpp"

#include <algorithm>

#include "metlie/error.hpp"
#include "metlie/linalg.hpp"
#include "metlie/reduction.hpp"
#include "metlie/structure.hpp"

namespace metlie {

namespace {

class Checks {
 public:
  void add(std::string name, bool ok, std::string detail = "") {
    out_.push_back({std::move(name), ok ? CheckResult::Status::Pass : CheckResult::Status::Fail, std::move(detail)});
  }
  void skip(std::string name, std::string reason) {
    out_.push_back({std::move(name), CheckResult::Status::Skip, std::move(reason)});
  }
  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::vector<CheckResult> out_;
};

bool is_nilpotent_matrix(const Matrix& a) { return a.rows() == 0 || a.power(a.rows()).is_zero(); }

bool brackets_vanish(const LieAlgebra& g, const Subspace& u, const Subspace& v) {
  return bracket_subspaces(g, u, v).is_zero();
}

bool orthogonal(const MetricLieAlgebra& m, const Subspace& u, const Subspace& v) {
  for (const auto& x : u.vectors())
    for (const auto& y : v.vectors())
      if (m.form()(x, y) != 0) return false;
  return true;
}

// Recomputes the Jordan parts of ad(x) and confirms both the decomposition and
// the failure of skewness.
bool counterexample_holds(const MetricLieAlgebra& m, const Vector& x) {
  const Matrix a = m.algebra().ad(x);
  const auto jc = jordan_chevalley(a);
  if (!(jc.semisimple + jc.nilpotent == a)) return false;
  if (!(jc.semisimple * jc.nilpotent == jc.nilpotent * jc.semisimple)) return false;
  if (!is_nilpotent_matrix(jc.nilpotent)) return false;
  if (!is_squarefree(minimal_polynomial(jc.semisimple))) return false;
  return !is_skew(jc.nilpotent, m.gram());
}

std::string sig_text(const Signature& s) {
  return "(" + std::to_string(s.plus) + "," + std::to_string(s.minus) + "," + std::to_string(s.null) + ")";
}

void structural_checks(const LieAlgebra& g, bool solvable, bool nilpotent, Checks& checks) {
  checks.add("nilpotent_implies_solvable", !nilpotent || solvable);
  const Subspace z = center(g);
  checks.add("center_is_ideal", is_ideal(g, z) && brackets_vanish(g, Subspace::full(g.dim()), z));
  if (!solvable) {
    checks.skip("nilradical", "algebra is not solvable");
    return;
  }
  const Subspace n = nilradical(g);
  bool ok = is_ideal(g, n) && n.contains(z) && n.contains(bracket_subspaces(g, Subspace::full(g.dim()),
                                                                           Subspace::full(g.dim())));
  for (const auto& v : n.vectors()) ok = ok && is_nilpotent_matrix(g.ad(v));
  checks.add("nilradical", ok, "dim " + std::to_string(n.dim()));
}

void reduction_checks(const MetricLieAlgebra& m, Checks& checks) {
  const auto sig = signature(m);
  const std::size_t s = std::min(sig.plus, sig.minus);
  const std::size_t expected = m.dim() - sig.null - 2 * s;
  const ReductionChain chain = complete_reduction(m);
  std::size_t isotropic_steps = 0;
  bool steps_ok = true;
  std::string failure;
  for (std::size_t k = 0; k < chain.steps.size(); ++k) {
    const ReductionStep& step = chain.steps[k];
    if (step.kind != ReductionStep::Kind::IsotropicCentral) continue;
    ++isotropic_steps;
    const LieAlgebra& g = step.input.algebra();
    const Subspace whole = Subspace::full(g.dim());
    const std::vector<std::pair<const char*, bool>> parts{
        {"cocycle_derivation_identity", verify_cocycle_derivation_identity(step)},
        {"xi_vanishes", verify_xi_vanishes(step)},
        {"omega_cocycle", verify_omega_cocycle(step)},
        {"abar_derivations", verify_abar_derivations(step)},
        {"bracket_reconstruction", verify_bracket_reconstruction(step)},
        {"j_central", brackets_vanish(g, whole, step.j)},
        {"j_isotropic", is_totally_isotropic(step.input, step.j)},
        {"j_meets_radical_trivially", step.j.intersect(metric_radical(step.input)).is_zero()},
        {"j_perp_ideal", is_ideal(g, orthogonal_complement(step.input, step.j))},
        {"splitting", step.a.dim() + step.w.dim() + step.j.dim() == g.dim() &&
                          (step.a + step.w + step.j).is_full()},
    };
    for (const auto& [name, ok] : parts)
      if (!ok && steps_ok) {
        steps_ok = false;
        failure = "step " + std::to_string(k) + ": " + name;
      }
  }
  checks.add("reduction_steps", steps_ok, steps_ok ? std::to_string(chain.steps.size()) + " steps" : failure);
  const bool terminal_ok = chain.terminal_abelian && chain.terminal_positive_definite &&
                           chain.terminal.dim() == expected && isotropic_steps <= s;
  checks.add("reduction_terminal", terminal_ok,
             "terminal dim " + std::to_string(chain.terminal.dim()) + ", expected " + std::to_string(expected) +
                 ", witt index " + std::to_string(s));

  const ReductionChain other = complete_reduction(m, LineChoice::Last);
  checks.add("reduction_terminal_unique",
             other.terminal.dim() == chain.terminal.dim() &&
                 signature(other.terminal) == signature(chain.terminal),
             "terminal signature " + sig_text(signature(chain.terminal)));
}

void radical_lemma_checks(const MetricLieAlgebra& m, Checks& checks) {
  const LieAlgebra& g = m.algebra();
  const Subspace whole = Subspace::full(g.dim());
  const Subspace r = metric_radical(m);
  const Subspace n = nilradical(g);
  const Subspace zn = center_of(g, n);
  const Subspace gn = bracket_subspaces(g, whole, n);
  const Subspace j = j0(m);
  checks.add("radical_is_ideal", is_ideal(g, r));
  checks.add("gn_perp_zn", orthogonal(m, gn, zn));
  checks.add("j0_totally_isotropic", is_totally_isotropic(m, j));
  if (!is_reduced(m)) {
    checks.skip("reduced_lemmas", "reduced_core is nonzero");
    return;
  }
  checks.add("reduced_nondegenerate", r.is_zero());
  checks.add("n_r_commute", brackets_vanish(g, n, r));
  checks.add("radical_in_center_of_nilradical", zn.contains(r));
  checks.add("g_r_in_j0", j.contains(bracket_subspaces(g, whole, r)));
  checks.add("j0_perp_annihilates", brackets_vanish(g, orthogonal_complement(m, j), j + r));
  checks.add("center_of_nilradical_central", brackets_vanish(g, whole, zn));
  checks.add("center_of_nilradical_equals_center", zn == center(g));
  checks.add("j0_meets_center", g.is_abelian() || !j.intersect(center(g)).is_zero());
  checks.add("j0_zero_iff_abelian", j.is_zero() == g.is_abelian(), "dim j0 " + std::to_string(j.dim()));
}

}  // namespace

std::string to_string(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::Pass: return "pass";
    case CheckResult::Status::Fail: return "fail";
    case CheckResult::Status::Skip: return "skip";
  }
  return "unknown";
}

std::vector<CheckResult> verify_instance(const MetricLieAlgebra& m, std::size_t samples, std::uint64_t seed) {
  Checks checks;
  const LieAlgebra& g = m.algebra();
  checks.add("jacobi", jacobi_holds(g));
  checks.add("form_symmetric", m.gram().is_symmetric());
  const bool solvable = is_solvable(g);
  const bool nilpotent = is_nilpotent(g);
  structural_checks(g, solvable, nilpotent, checks);

  const Subspace r = metric_radical(m);
  const Subspace core = reduced_core(m);
  checks.add("reduced_core_in_radical", r.contains(core) && is_ideal(g, core));
  const auto sig = signature(m);
  checks.add("signature_dimension", sig.plus + sig.minus + sig.null == m.dim() && sig.null == r.dim(),
             sig_text(sig));

  const bool invariant = is_invariant(m);
  const auto witness = invariance_witness(m);
  checks.add("invariance_witness_consistent", invariant == !witness.has_value());
  if (!solvable) {
    checks.skip("main_equivalence", "algebra is not solvable");
    return checks.take();
  }
  const NilInvarianceReport report = nil_invariance_check(m, samples, seed);
  checks.add("main_equivalence", invariant == report.certified,
             std::string("invariant ") + (invariant ? "yes" : "no") + ", sampler " +
                 (report.certified ? "certificate" : "counterexample"));
  if (report.counterexample)
    checks.add("counterexample_recheck", counterexample_holds(m, *report.counterexample));
  if (!invariant) {
    checks.skip("radical_lemmas", "form is not invariant");
    checks.skip("reduction", "form is not invariant");
    return checks.take();
  }
  radical_lemma_checks(m, checks);
  reduction_checks(m, checks);
  return checks.take();
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckResult::Status::Fail; });
}

}  // namespace metlie
