#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kscyc/sympeq.hpp"

namespace kscyc {

// Finite sum c_i T^{lambda_i}, all exponents below the cutoff E.
class NovikovScalar {
 public:
  explicit NovikovScalar(Rational cutoff) : cutoff_(std::move(cutoff)) {}
  static NovikovScalar monomial(const Rational& c, const Rational& lambda,
                                const Rational& cutoff);

  const Series& terms() const { return terms_; }
  const Rational& cutoff() const { return cutoff_; }
  bool is_zero() const { return terms_.empty(); }
  // Smallest exponent; nullopt for 0.
  std::optional<Rational> valuation() const;

  void add(const Rational& lambda, const Rational& c);
  NovikovScalar operator+(const NovikovScalar& o) const;
  NovikovScalar operator-(const NovikovScalar& o) const;
  NovikovScalar operator*(const NovikovScalar& o) const;
  bool operator==(const NovikovScalar& o) const { return terms_ == o.terms_; }

 private:
  Series terms_;
  Rational cutoff_;
};

struct MonoidElement {
  Rational energy;
  int mu = 0;
};
inline bool operator<(const MonoidElement& a, const MonoidElement& b) {
  return a.energy != b.energy ? a.energy < b.energy : a.mu < b.mu;
}
inline bool operator==(const MonoidElement& a, const MonoidElement& b) {
  return a.energy == b.energy && a.mu == b.mu;
}

// Monoid generated by finitely many (lambda, mu), enumerated below a cutoff.
class GappedMonoid {
 public:
  GappedMonoid() : GappedMonoid({}, std::nullopt) {}
  GappedMonoid(std::vector<MonoidElement> generators, std::optional<Rational> cutoff);

  const std::vector<MonoidElement>& generators() const { return gens_; }
  const std::optional<Rational>& cutoff() const { return cutoff_; }
  // Elements with energy below the cutoff (all of them if there is none and
  // every generator has energy 0).
  const std::vector<MonoidElement>& elements() const { return elems_; }
  // Sorted distinct energies: the lattice lambda_0 = 0 < lambda_1 < ...
  std::vector<Rational> energies() const;
  bool contains(const MonoidElement& e) const;
  // Gapped conditions: discrete energies, G meets {0} x 2Z only in (0,0),
  // finite fibres.  Also rejects negative energies and odd mu.
  Report validate() const;
  Truncation truncation(int order) const;

 private:
  std::vector<MonoidElement> gens_;
  std::optional<Rational> cutoff_;
  std::vector<MonoidElement> elems_;
  Report problems_;
};

// Tags in G, gapped conditions, and no m_0 of energy 0.
Report gapped_validate(const GappedMonoid& g, const AInftyStructure& a);

// 2j + length with lambda_j = e; throws InputError off the lattice.
int order(const Truncation& t, const Rational& e, std::size_t length);
// 2j + (number of x letters): the order under which i_Q raises order by 2
// on canonical structures.
int x_order(const Truncation& t, const Mono& form_term);

// d-hat o d-hat at all words of order <= N, curvature included.
std::map<Word, Vec> filtered_ainfty_defect(const GappedMonoid& g, const AInftyStructure& a);
// Cyclicity per energy, both routes.
CyclicityReport filtered_cyclicity(const AInftyStructure& a, const ConstantTwoForm& w);

struct DarbouxOutcome {
  std::optional<DarbouxResult> result;
  // set when a negative-energy term blocks normalization
  std::optional<std::pair<Mono, Rational>> offending;
  std::string obstruction;
};

DarbouxOutcome filtered_darboux(const Basis& b, const Vec& omega, const Truncation& t);

struct WeakFiltration {
  Rational c;         // largest energy drop, >= 0
  Report equation;    // bimodule equation
  bool ok() const { return equation.pass; }
};

WeakFiltration weakly_filtered_check(const AInftyStructure& a, const BimodMap& psi,
                                     int max_slots);

// Canonical structure, eta with non-negative energies on the lattice.
EquivalenceCertificate filtered_equivalence(const AInftyStructure& a, const ConstantTwoForm& w,
                                            const Cochain& eta);

}  // namespace kscyc
