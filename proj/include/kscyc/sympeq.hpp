#pragma once

#include <set>
#include <vector>

#include "kscyc/hochcyc.hpp"
#include "kscyc/linalg.hpp"
#include "kscyc/ncgeom.hpp"

namespace kscyc {

// Gram matrix g[a][b] = <e_a, e_b> of a pairing on A[1].
struct ConstantTwoForm {
  Matrix g;
};

// 1/2 sum g_ab (dx_a dx_b)_c
Vec to_form(const Basis& b, const ConstantTwoForm& w);
// Energy-zero length-two part of a 2-form, read back as a Gram matrix.
ConstantTwoForm constant_part(const Basis& b, const Vec& omega);
// <a,b> = -(-1)^{|a|'|b|'} <b,a>
bool is_graded_skew(const Basis& b, const ConstantTwoForm& w);
bool is_nondegenerate(const ConstantTwoForm& w);

// Basis-index words of the terms, up to rotation (x and dx forgotten).
std::set<Word> cyclic_classes(const Vec& v);

struct CyclicityReport {
  Vec equation_defect;  // keyed by (x_1..x_{k+1}), energy tagged
  Vec lie_defect;       // L_Q omega, truncated
  // same verdict and the same witness words up to rotation
  bool agree() const {
    return cyclic_classes(equation_defect) == cyclic_classes(lie_defect);
  }
  bool pass() const { return equation_defect.empty() && lie_defect.empty(); }
};

// <m_k(x_1..x_k), x_{k+1}> = (-1)^{|x_1|'(|x_2|'+..+|x_{k+1}|')} <m_k(x_2..x_{k+1}), x_1>
// for all k+1 <= N, and independently L_Q omega = 0.
CyclicityReport cyclicity_defect(const AInftyStructure& a, const ConstantTwoForm& w);

// Three-term closedness identity checked on every linear word of length
// <= max_len with three marked positions.  Returns the failing words.
std::vector<Word> closedness_failures(const Basis& b, const BimodMap& psi, int max_len);

struct ShipReport {
  Report skew;
  Report closed_direct;
  Report closed_form;   // d_cyc omega_psi = 0
  Report nondegenerate;
  Matrix gram;          // psi_{0,0}(e_i)(e_j), energy zero
  bool closed_routes_agree() const { return closed_direct.pass == closed_form.pass; }
  bool pass() const {
    return skew.pass && closed_direct.pass && closed_form.pass && nondegenerate.pass;
  }
};

// Skew symmetry, closedness (both routes) and homological nondegeneracy.
// The last one needs a minimal algebra.
ShipReport ship_check(const AInftyStructure& a, const BimodMap& psi, int max_slots);

// v with i_v omega = beta, word by word.  beta has one dx per word.
VectorField solve_contraction(const Basis& b, const ConstantTwoForm& w, const Vec& beta);

// f = pi o exp(v-hat); v even of order >= 2.
Cohomomorphism exp_coderivation(const Basis& b, const VectorField& v, const Truncation& t);

// x_i -> x_i + f_i as a cohomomorphism.
Cohomomorphism shift_cohomomorphism(const Basis& b, const VectorField& f);

struct DarbouxResult {
  Cohomomorphism transform;
  ConstantTwoForm constant;
  std::vector<int> levels;  // order handled at each step
};

// Normalizes a closed 2-form with nondegenerate constant part to its
// constant part, order by order.  Verified by recomputation.
DarbouxResult darboux(const Basis& b, const Vec& omega, const Truncation& t);

struct EquivalenceStep {
  int order = 0;  // lowest order of the 1-form handled in this step
  VectorField v;
};

struct EquivalenceCertificate {
  Cohomomorphism automorphism;
  Vec perturbation;  // d L_Q alpha_eta
  Vec residual;      // pullback(F, omega + perturbation) - omega
  std::vector<EquivalenceStep> steps;
  bool homomorphism_ok = false;
  Report diagram;
  bool ok() const { return residual.empty() && homomorphism_ok && diagram.pass; }
};

// Order-by-order automorphism F with F^*(omega + d L_Q alpha_eta) = omega.
EquivalenceCertificate equivalence_automorphism(const AInftyStructure& a,
                                                const ConstantTwoForm& w, const Cochain& eta);

// phi = F^* o phi' o F~ as bimodule maps, on all slots <= max_slots; the
// form route omega_phi = F^* omega_phi' is evaluated as a cross-check and a
// disagreement is reported as a failure.
Report diagram_check(const Basis& b, const Truncation& t, const Cohomomorphism& f,
                     const BimodMap& phi, const BimodMap& phi_prime, int max_slots);

struct KajiuraReport {
  Report preserves;   // h_1 preserves the pairing
  Report vanishing;   // sum_{i+j=k} <h_i, h_j> = 0, k >= 3
  Report pullback;    // h^* omega_B = omega_A
  bool pass() const { return preserves.pass && vanishing.pass; }
  bool routes_agree() const { return pass() == pullback.pass; }
};

KajiuraReport cyclic_homomorphism_check(const Basis& b, const Cohomomorphism& h,
                                        const ConstantTwoForm& wa, const ConstantTwoForm& wb,
                                        const Truncation& t);

std::string format_field(const Basis& b, const VectorField& v);

}  // namespace kscyc
