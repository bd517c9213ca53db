#pragma once

#include <optional>
#include <vector>

#include "kscyc/signcore.hpp"

namespace kscyc {

// Truncation window shared by every module.
//
// order(e, len) = 2*j + len where j indexes e in the energy lattice
// lambda_0 = 0 < lambda_1 < ... .  Unfiltered structures have lattice {0}
// and no cutoff, so order is plain word length.
struct Truncation {
  int order = 8;
  std::optional<Rational> cutoff;
  std::vector<Rational> levels{Rational(0)};

  // Number of lattice values strictly below e.  Agrees with the lattice
  // index on lattice points; used for intermediate energies.
  int level(const Rational& e) const;
  // Lattice index; nullopt off the lattice.
  std::optional<int> exact_level(const Rational& e) const;

  int order_of(const Rational& e, std::size_t len) const {
    return 2 * level(e) + static_cast<int>(len);
  }
  bool below_cutoff(const Rational& e) const { return !cutoff || e < *cutoff; }
  bool keep(const Rational& e, std::size_t len) const {
    return below_cutoff(e) && order_of(e, len) <= order;
  }
};

Vec truncate(const Vec& v, const Truncation& t);

// Smallest order among the terms; nullopt for 0.
std::optional<int> min_order(const Vec& v, const Truncation& t);

// All words over `letters` of length lo..hi, shortest first.
std::vector<Word> all_words(const std::vector<Letter>& letters, int lo, int hi);

}  // namespace kscyc
