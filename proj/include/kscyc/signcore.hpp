#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kscyc/errors.hpp"
#include "kscyc/rational.hpp"

namespace kscyc {

// ---------------------------------------------------------------------------
// Sign engine.  Every sign in the library is produced from parities by the
// helpers below; callers only add up parities.

// (-1)^e
inline int sign_of(long e) { return (e & 1) ? -1 : 1; }

inline int parity_of(int d) { return d & 1; }

// Exponent picked up when a block of parity pa / form degree sa moves past a
// block of parity pb / form degree sb.
inline int swap_exponent(int pa, int pb, int sa = 0, int sb = 0) {
  return (pa * pb + sa * sb) & 1;
}

struct GradedSymbol {
  int shifted_degree = 0;  // |.|'
  int sharp = 0;           // form degree: x -> 0, dx -> 1, d/dx -> -1
};

// Sign for moving the whole left block past the whole right block.
int koszul_sign(std::span<const GradedSymbol> left,
                std::span<const GradedSymbol> right);

// ---------------------------------------------------------------------------
// Basis

struct BasisElement {
  std::string id;
  int degree = 0;  // unshifted |e|
  bool is_unit = false;

  int shifted() const { return degree - 1; }
};

int shifted_degree_of_word(std::span<const BasisElement> word);

// Letters are small integers.  Bar words use the basis index directly; form
// words (ncgeom) set the high bit for plain x letters, so the low seven bits
// are always the basis index.  Hence at most 127 basis elements.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

inline int letter_index(Letter l) { return l & 0x7f; }

class Basis {
 public:
  Basis() = default;
  explicit Basis(std::vector<BasisElement> elems);

  std::size_t size() const { return elems_.size(); }
  const BasisElement& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<BasisElement>& elements() const { return elems_; }

  int index_of(std::string_view id) const;  // throws InputError
  std::optional<int> unit() const { return unit_; }

  // parity of |e_i|'
  int parity(int i) const { return par_[i]; }
  int letter_parity(Letter l) const { return par_[letter_index(l)]; }
  int word_parity(const Word& w) const;
  int word_parity(const Word& w, std::size_t from, std::size_t to) const;
  int shifted_degree(const Word& w) const;

  std::string format_word(const Word& w) const;

  bool operator==(const Basis& o) const;

 private:
  std::vector<BasisElement> elems_;
  std::vector<int> par_;
  std::optional<int> unit_;
};

// ---------------------------------------------------------------------------
// Sparse linear combinations.  Zero coefficients are never stored.

template <class K>
using Sparse = std::map<K, Rational>;

template <class K>
void add_term(Sparse<K>& s, const K& k, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, fresh] = s.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (is_zero(it->second)) s.erase(it);
  }
}

template <class K>
void add_scaled(Sparse<K>& out, const Sparse<K>& in, const Rational& s) {
  if (is_zero(s)) return;
  for (const auto& [k, c] : in) add_term(out, k, Rational(c * s));
}

template <class K>
Sparse<K> scaled(const Sparse<K>& in, const Rational& s) {
  Sparse<K> out;
  add_scaled(out, in, s);
  return out;
}

template <class K>
Sparse<K> plus(const Sparse<K>& a, const Sparse<K>& b) {
  Sparse<K> out = a;
  add_scaled(out, b, Rational(1));
  return out;
}

template <class K>
Sparse<K> minus(const Sparse<K>& a, const Sparse<K>& b) {
  Sparse<K> out = a;
  add_scaled(out, b, Rational(-1));
  return out;
}

// Energy-tagged word.  Energy is the Novikov exponent; 0 in unfiltered mode.
struct Mono {
  Rational e;
  Word w;
};

inline bool operator<(const Mono& a, const Mono& b) {
  if (a.w != b.w) return a.w < b.w;
  return a.e < b.e;
}
inline bool operator==(const Mono& a, const Mono& b) {
  return a.w == b.w && a.e == b.e;
}

using Vec = Sparse<Mono>;
using Series = Sparse<Rational>;  // energy -> coefficient

inline Vec single(Word w, const Rational& c = 1, const Rational& e = 0) {
  Vec v;
  add_term(v, Mono{e, std::move(w)}, c);
  return v;
}

// Words are grouped by word, ignoring energy.
std::map<Word, Series> index_by_word(const Vec& v);

}  // namespace kscyc
