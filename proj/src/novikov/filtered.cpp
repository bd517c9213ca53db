#include "kscyc/novikov.hpp"

namespace kscyc {

std::map<Word, Vec> filtered_ainfty_defect(const GappedMonoid& g, const AInftyStructure& a) {
  const Report r = gapped_validate(g, a);
  if (!r.pass) throw PreconditionError("filtered_ainfty_defect: " + r.witnesses.front());
  return ainfty_defect(a);
}

CyclicityReport filtered_cyclicity(const AInftyStructure& a, const ConstantTwoForm& w) {
  // energies ride along in the defect keys, so each beta slice is checked
  return cyclicity_defect(a, w);
}

DarbouxOutcome filtered_darboux(const Basis& b, const Vec& omega, const Truncation& t) {
  DarbouxOutcome out;
  for (const auto& [m, c] : omega) {
    if (m.e >= 0 || m.w.empty()) continue;
    if (!out.offending || m.e < out.offending->first.e) out.offending = {m, c};
  }
  if (out.offending) {
    const auto& [m, c] = *out.offending;
    out.obstruction = "term " + format_form(b, Vec{{m, c}}) + " has negative energy " +
                      format_rational(m.e) +
                      "; filtered isomorphisms preserve the minimal negative exponent, so no "
                      "filtered isomorphism makes this form constant";
    return out;
  }
  for (const auto& [m, c] : omega) (void)order(t, m.e, m.w.size());
  out.result = darboux(b, omega, t);
  return out;
}

WeakFiltration weakly_filtered_check(const AInftyStructure& a, const BimodMap& psi,
                                     int max_slots) {
  WeakFiltration wf;
  wf.c = 0;
  for (const auto& [k, c] : psi)
    if (-k.e > wf.c) wf.c = -k.e;
  const Basis& b = a.basis();
  for (const auto& [k, c] : bimodule_defect(a, psi, max_slots))
    wf.equation.fail("bimodule equation fails: " + format_bimod(b, BimodMap{{k, c}}));
  return wf;
}

EquivalenceCertificate filtered_equivalence(const AInftyStructure& a, const ConstantTwoForm& w,
                                            const Cochain& eta) {
  if (a.ops().count(Word{}))
    throw PreconditionError("filtered_equivalence: structure has m0 and is not canonical");
  if (!a.minimal())
    throw PreconditionError("filtered_equivalence: m1 has an energy-zero part (not canonical)");
  for (const auto& [m, c] : eta) {
    if (m.e < 0)
      throw PreconditionError("filtered_equivalence: eta has a term with negative energy " +
                              format_rational(m.e) + "; only non-negative energies are allowed");
    (void)order(a.trunc(), m.e, m.w.size());
  }
  return equivalence_automorphism(a, w, eta);
}

}  // namespace kscyc
