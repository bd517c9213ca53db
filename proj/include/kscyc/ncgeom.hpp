#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kscyc/barcx.hpp"
#include "kscyc/linalg.hpp"
#include "kscyc/stores.hpp"

namespace kscyc {

// Form letters.  dx_i sorts before every x_j, which fixes the canonical
// cyclic representative.
inline Letter x_letter(int i) { return static_cast<Letter>(0x80 | i); }
inline Letter dx_letter(int i) { return static_cast<Letter>(i); }
inline bool is_dx(Letter l) { return (l & 0x80) == 0; }

int word_sharp(const Word& w);  // number of dx letters
Word x_word(const Word& indices);

// Forms and noncommutative polynomials are Vecs over form letters.  A cyclic
// form stores canonical representatives only.
struct VectorField {
  int parity = 0;
  std::vector<Vec> comp;  // comp[i] is the coefficient of d/dx_i, x letters only
};

VectorField zero_field(const Basis& b, int parity);
bool operator==(const VectorField& a, const VectorField& b);
bool is_zero_field(const VectorField& v);
VectorField truncate(const VectorField& v, const Truncation& t);

// (canonical word, s) with w = s * canonical in the cyclic quotient, or
// nullopt when w vanishes there.  Throws PreconditionError on the empty word.
std::optional<std::pair<Word, int>> canonicalize_cyclic(const Basis& b, const Word& w);

// Projection of a linear form to canonical cyclic words.  Constants pass.
Vec cyc(const Basis& b, const Vec& v);

// Derivation of bidegree (dp, ds) given by letter images; letters with no
// image (nullptr) are killed.  Sign (-1)^{dp*|prefix|' + ds*sharp(prefix)}.
Vec derivation(const Basis& b, const Vec& v,
               const std::function<const Vec*(Letter)>& image, int dp, int ds);

// Linear versions act on words as written; the plain names project with cyc.
Vec d_lin(const Basis& b, const Vec& v);
Vec contract_lin(const Basis& b, const VectorField& xi, const Vec& v);
Vec lie_lin(const Basis& b, const VectorField& xi, const Vec& v);

Vec d_cyc(const Basis& b, const Vec& v);
Vec contract(const Basis& b, const VectorField& xi, const Vec& v);
Vec lie_derivative(const Basis& b, const VectorField& xi, const Vec& v);

// xi acting on a noncommutative polynomial (x letters only).
Vec vf_apply(const Basis& b, const VectorField& xi, const Vec& f);
VectorField vf_bracket(const Basis& b, const VectorField& xi, const VectorField& eta);

VectorField q_from_structure(const AInftyStructure& a);

// Poincare homotopy; dH + Hd = Id on constant-free forms.
Vec poincare_H(const Basis& b, const Vec& v);

// Cochain f  <->  alpha_f = sum f(e_I)(e_j) (x^I dx^j)_c.
Vec oneform_from_cochain(const Basis& b, const Cochain& f);
Cochain cochain_from_oneform(const Basis& b, const Vec& alpha);

// Witnesses where psi(L,v,R)(w) != -(-1)^{(|L|'+|v|')(|R|'+|w|')} psi(R,w,L)(v).
std::vector<BKey> skew_failures(const Basis& b, const BimodMap& psi);

// omega_psi = 1/2 sum psi(L,v,R)(w) (x^L dx^v x^R dx^w)_c.  psi must be skew.
Vec twoform_from_bimodmap(const Basis& b, const BimodMap& psi);
// Inverse on 2-forms: the unique skew psi with omega_psi = omega.
BimodMap bimodmap_from_twoform(const Basis& b, const Vec& omega);

// 1/2 sum G_ab (dx_a dx_b)_c.
Vec constant_twoform(const Basis& b, const Matrix& g);

// Substitution x_j -> sum_I F^j_I x^I, dx_j -> d(that).
Vec pullback_by_cohom(const Basis& b, const Cohomomorphism& f, const Vec& form,
                      const Truncation& t, bool cyclic = true);

// sum_k (L_v)^k / k!, truncated; v must have order >= 2.
Vec exp_lie(const Basis& b, const VectorField& v, const Vec& form, const Truncation& t);

std::string format_letter(const Basis& b, Letter l);
std::string format_form(const Basis& b, const Vec& v);

}  // namespace kscyc
