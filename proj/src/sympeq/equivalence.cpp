#include "kscyc/sympeq.hpp"

namespace kscyc {

namespace {

int oneform_parity(const Basis& b, const Vec& alpha) {
  int p = -1;
  for (const auto& [m, c] : alpha) {
    int q = 0;
    for (Letter l : m.w) q ^= b.letter_parity(l);
    if (p >= 0 && q != p) throw PreconditionError("equivalence: eta is not homogeneous");
    p = q;
  }
  return p;
}

}  // namespace

EquivalenceCertificate equivalence_automorphism(const AInftyStructure& a,
                                                const ConstantTwoForm& w, const Cochain& eta) {
  const Basis& b = a.basis();
  const Truncation& t = a.trunc();
  if (!a.minimal()) throw PreconditionError("equivalence: algebra is not minimal");
  if (!is_graded_skew(b, w) || !is_nondegenerate(w))
    throw PreconditionError("equivalence: pairing is not a nondegenerate skew form");
  const Vec w0 = to_form(b, w);
  const VectorField q = q_from_structure(a);
  if (!truncate(lie_derivative(b, q, w0), t).empty())
    throw PreconditionError("equivalence: pairing is not cyclic for the algebra");

  EquivalenceCertificate cert;
  cert.automorphism = identity_cohomomorphism(b);
  Vec alpha = truncate(oneform_from_cochain(b, eta), t);
  const int pa = oneform_parity(b, alpha);
  const Word& w0w = w0.begin()->first.w;
  const int p0 = b.letter_parity(w0w[0]) ^ b.letter_parity(w0w[1]);
  if (pa >= 0 && pa != (p0 ^ 1))
    throw PreconditionError("equivalence: eta has the wrong parity (the flow would be odd)");

  cert.perturbation = truncate(d_cyc(b, truncate(lie_derivative(b, q, alpha), t)), t);
  for (const auto& [m, c] : cert.perturbation)
    if (m.w.size() == 2 && is_zero(m.e))
      throw PreconditionError("equivalence: perturbation has a constant part");

  Truncation t1 = t;
  t1.order = t.order - 1;
  std::optional<int> last;
  for (int step = 0;; ++step) {
    const Vec beta = truncate(lie_derivative(b, q, alpha), t);
    const auto lo = min_order(beta, t);
    if (!lo) break;
    if (step > 2 * t.order || (last && *lo <= *last))
      throw InvariantViolation("equivalence: order did not increase");
    last = lo;
    const VectorField v = solve_contraction(b, w, scaled(beta, -1));
    if (!is_zero_field(truncate(vf_bracket(b, q, v), t1)))
      throw InvariantViolation("equivalence: flow does not commute with Q");
    const Cohomomorphism f = exp_coderivation(b, v, t);
    // two routes to exp(L_v): substitution by f and the Lie series
    const Vec probe = plus(w0, cert.perturbation);
    if (truncate(pullback_by_cohom(b, f, probe, t), t) != exp_lie(b, v, probe, t))
      throw InvariantViolation("equivalence: pullback and Lie series disagree");
    // alpha <- sum_k (1/k! - 1/(k+1)!) L_v^k alpha
    Vec next, pow = alpha;
    Rational fact(1);
    for (int k = 1;; ++k) {
      pow = truncate(lie_derivative(b, v, pow), t);
      if (pow.empty()) break;
      if (k > 2 * t.order + 2) throw InvariantViolation("equivalence: series did not terminate");
      fact *= k;
      add_scaled(next, pow, Rational(1 / fact - 1 / (fact * (k + 1))));
    }
    alpha = std::move(next);
    cert.automorphism = compose(b, cert.automorphism, f, t);
    cert.steps.push_back({*lo, v});
  }

  cert.residual = truncate(
      minus(pullback_by_cohom(b, cert.automorphism, plus(w0, cert.perturbation), t), w0), t);

  // Exact at order N: the arity-N components of v are not computed, but on a
  // minimal algebra they only meet m_1.
  cert.homomorphism_ok = homomorphism_defect(cert.automorphism, a, a).empty();
  cert.diagram = diagram_check(b, t, cert.automorphism, bimodmap_from_twoform(b, w0),
                               bimodmap_from_twoform(b, plus(w0, cert.perturbation)), t.order);
  return cert;
}

}  // namespace kscyc
