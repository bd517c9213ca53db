#include <set>

#include "kscyc/ncgeom.hpp"

namespace kscyc {

namespace {

// Rotate a word with exactly one marked dx position q to end at q:
// returns (w[q+1..] w[..q], s) with w = s * rotated in the cyclic quotient.
std::pair<Word, int> rotate_to_end(const Basis& b, const Word& w, std::size_t q) {
  Word head(w.begin(), w.begin() + q + 1), tail(w.begin() + q + 1, w.end());
  const int sg = sign_of(swap_exponent(b.word_parity(head), b.word_parity(tail),
                                       word_sharp(head) & 1, word_sharp(tail) & 1));
  Word r = tail;
  r.insert(r.end(), head.begin(), head.end());
  return {r, sg};
}

Word indices_of(const Word& w) {
  Word r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[i] = static_cast<Letter>(letter_index(w[i]));
  return r;
}

int bkey_skew_exponent(const Basis& b, const BKey& k) {
  const std::size_t n = k.w.size();
  const int lv = b.word_parity(k.w, 0, k.pos + 1);
  const int rw = b.word_parity(k.w, k.pos + 1, n);
  return swap_exponent(lv, rw);
}

// (L,v,R,w) -> (R,w,L,v)
BKey skew_partner(const BKey& k) {
  const std::size_t n = k.w.size();
  BKey p{k.e, {}, static_cast<int>(n - k.pos - 2)};
  p.w.insert(p.w.end(), k.w.begin() + k.pos + 1, k.w.end() - 1);  // R
  p.w.push_back(k.w.back());                                      // w
  p.w.insert(p.w.end(), k.w.begin(), k.w.begin() + k.pos);        // L
  p.w.push_back(k.w[k.pos]);                                      // v
  return p;
}

}  // namespace

Vec oneform_from_cochain(const Basis& b, const Cochain& f) {
  Vec lin;
  for (const auto& [m, c] : f) {
    if (m.w.empty()) throw InputError("cochain entry without a probe index");
    Word w = x_word(Word(m.w.begin(), m.w.end() - 1));
    w.push_back(dx_letter(m.w.back()));
    add_term(lin, Mono{m.e, std::move(w)}, c);
  }
  return cyc(b, lin);
}

Cochain cochain_from_oneform(const Basis& b, const Vec& alpha) {
  Cochain f;
  for (const auto& [m, c] : alpha) {
    if (word_sharp(m.w) != 1)
      throw InputError("cochain_from_oneform: term " + format_form(b, Vec{{m, c}}) +
                       " does not have exactly one dx");
    std::size_t q = 0;
    while (!is_dx(m.w[q])) ++q;
    auto [r, sg] = rotate_to_end(b, m.w, q);
    add_term(f, Mono{m.e, indices_of(r)}, Rational(c * sg));
  }
  return f;
}

std::vector<BKey> skew_failures(const Basis& b, const BimodMap& psi) {
  std::vector<BKey> bad;
  for (const auto& [k, c] : psi) {
    BKey p = skew_partner(k);
    auto it = psi.find(p);
    Rational want = -c * sign_of(bkey_skew_exponent(b, k));
    if (it == psi.end() ? !is_zero(want) : it->second != want) bad.push_back(k);
  }
  return bad;
}

Vec twoform_from_bimodmap(const Basis& b, const BimodMap& psi) {
  auto bad = skew_failures(b, psi);
  if (!bad.empty())
    throw PreconditionError("twoform_from_bimodmap: map is not skew at " +
                            b.format_word(bad.front().w) + " pos " +
                            std::to_string(bad.front().pos));
  Vec lin;
  const Rational half(1, 2);
  for (const auto& [k, c] : psi) {
    Word w;
    for (std::size_t i = 0; i < k.w.size(); ++i) {
      const bool d = static_cast<int>(i) == k.pos || i + 1 == k.w.size();
      w.push_back(d ? dx_letter(k.w[i]) : x_letter(k.w[i]));
    }
    add_term(lin, Mono{k.e, std::move(w)}, Rational(c * half));
  }
  return cyc(b, lin);
}

BimodMap bimodmap_from_twoform(const Basis& b, const Vec& omega) {
  BimodMap psi;
  for (const auto& [m, c] : omega) {
    if (word_sharp(m.w) != 2)
      throw InputError("bimodmap_from_twoform: term " + format_form(b, Vec{{m, c}}) +
                       " is not a 2-form");
    std::map<BKey, int> keys;  // distinct rotations ending in dx, with sign
    for (std::size_t q = 0; q < m.w.size(); ++q) {
      if (!is_dx(m.w[q])) continue;
      auto [r, sg] = rotate_to_end(b, m.w, q);
      std::size_t pos = 0;
      while (!is_dx(r[pos])) ++pos;
      keys.emplace(BKey{m.e, indices_of(r), static_cast<int>(pos)}, sg);
    }
    const Rational share = 2 * c / Rational(static_cast<long>(keys.size()));
    for (const auto& [k, sg] : keys) add_term(psi, k, Rational(share * sg));
  }
  return psi;
}

Vec constant_twoform(const Basis& b, const Matrix& g) {
  Vec lin;
  const Rational half(1, 2);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g[i].size(); ++j)
      add_term(lin, Mono{0, {dx_letter(static_cast<int>(i)), dx_letter(static_cast<int>(j))}},
               Rational(g[i][j] * half));
  return cyc(b, lin);
}

}  // namespace kscyc
