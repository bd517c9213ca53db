#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "kscyc/signcore.hpp"
#include "kscyc/truncation.hpp"

namespace kscyc {

// A multilinear family: input word -> combination of one-letter words
// (the output basis index), energy tagged.  Used for A-infinity operations,
// cohomomorphism components and coderivations coming from vector fields.
using Family = std::map<Word, Vec>;

struct OpEntry {
  Word inputs;
  int output = 0;
  Rational coeff;
  Rational energy;  // lambda(beta)
  int mu = 0;       // mu(beta)
};

class AInftyStructure {
 public:
  AInftyStructure() = default;
  AInftyStructure(Basis basis, Truncation trunc, bool filtered = false);

  // Adds c * T^energy e_out to m(inputs).  Validates ids, degree and arity.
  void add_op(const Word& inputs, int output, const Rational& c,
              const Rational& energy = 0, int mu = 0);

  const Basis& basis() const { return basis_; }
  const Truncation& trunc() const { return trunc_; }
  void set_trunc(Truncation t) { trunc_ = std::move(t); }
  // Check op degrees mod 2 only, as for filtered structures.  Used to feed
  // deliberately broken structures to the defect checks.
  void relax_degree_check() { parity_only_ = true; }
  bool filtered() const { return filtered_; }

  const std::vector<OpEntry>& entries() const { return entries_; }
  const Family& ops() const { return ops_; }
  int max_arity() const { return max_arity_; }
  // m_1 has no energy-zero part.
  bool minimal() const;

 private:
  Basis basis_;
  Truncation trunc_;
  bool filtered_ = false;
  bool parity_only_ = false;
  std::vector<OpEntry> entries_;
  Family ops_;
  int max_arity_ = 0;
};

// Coderivation extension of a family of parity `parity`: on x_1...x_n,
//   sum_i (-1)^{parity*(|x_1|'+...+|x_{i-1}|')} x_<i (x) m(window) (x) rest.
// If `arity` is set only windows of that length are used.  Terms whose energy
// reaches the cutoff of `t` are dropped; nothing else is truncated.
Vec coderivation(const Basis& b, const Family& m, int parity, const Vec& x,
                 const Truncation& t, std::optional<int> arity = std::nullopt);

// Single arity m_k extended to the bar construction.
Vec hat_extend(const AInftyStructure& a, int k, const Vec& x);
// d-hat = sum_k m-hat_k.
Vec dhat(const AInftyStructure& a, const Vec& x);

// d-hat o d-hat on every word of order <= N.  Empty iff A-infinity to order N.
std::map<Word, Vec> ainfty_defect(const AInftyStructure& a);

Report unit_check(const AInftyStructure& a);

// Even cohomomorphism, given by its components.
struct Cohomomorphism {
  Family comp;
};

Cohomomorphism identity_cohomomorphism(const Basis& b);

// f-hat on x: sum over splittings of each word into consecutive nonempty
// blocks of f(block_1) ... f(block_r).  Truncated at the window of t.
Vec cohom_extend(const Basis& b, const Cohomomorphism& f, const Vec& x,
                 const Truncation& t);

// d-hat_B f-hat - f-hat d-hat_A on all words of A of order <= N.
std::map<Word, Vec> homomorphism_defect(const Cohomomorphism& f,
                                        const AInftyStructure& a,
                                        const AInftyStructure& b);

// Components of f-hat o g-hat, all arities up to the order of t.
Cohomomorphism compose(const Basis& b, const Cohomomorphism& f,
                       const Cohomomorphism& g, const Truncation& t);

// exp of the coderivation of an even family: sum_k (m-hat)^k / k!.
Vec exp_coderivation_apply(const Basis& b, const Family& v, const Vec& x,
                           const Truncation& t);

// Coalgebra checks on words of order <= N, for an arbitrary linear map on the
// bar construction.  Return the words where the identity fails.
//   coderivation:     Delta D = (D (x) 1 + 1 (x) D) Delta   (with sign)
//   cohomomorphism:   Delta F = (F (x) F) Delta
std::vector<Word> coderivation_property_failures(
    const Basis& b, int parity, const std::function<Vec(const Vec&)>& d,
    const Truncation& t);
std::vector<Word> cohomomorphism_property_failures(
    const Basis& b, const std::function<Vec(const Vec&)>& f, const Truncation& t);

std::string format_vec(const Basis& b, const Vec& v);

}  // namespace kscyc
