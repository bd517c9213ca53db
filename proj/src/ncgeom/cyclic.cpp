#include "kscyc/ncgeom.hpp"

namespace kscyc {

int word_sharp(const Word& w) {
  int s = 0;
  for (Letter l : w) s += is_dx(l);
  return s;
}

Word x_word(const Word& indices) {
  Word w(indices.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = x_letter(indices[i]);
  return w;
}

std::optional<std::pair<Word, int>> canonicalize_cyclic(const Basis& b, const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) throw PreconditionError("canonicalize_cyclic: empty word");
  const int ptot = b.word_parity(w), stot = word_sharp(w) & 1;
  Word best = w;
  int best_sign = 1;
  int p = 0, s = 0;  // parity and sharp of w[0..r)
  Word rot(n);
  for (std::size_t r = 1; r < n; ++r) {
    p ^= b.letter_parity(w[r - 1]);
    s ^= is_dx(w[r - 1]);
    // moving w[0..r) past w[r..n)
    const int sg = sign_of(swap_exponent(p, ptot ^ p, s, stot ^ s));
    std::copy(w.begin() + r, w.end(), rot.begin());
    std::copy(w.begin(), w.begin() + r, rot.begin() + (n - r));
    if (rot == w) {
      if (sg < 0) return std::nullopt;
      continue;
    }
    if (rot < best) {
      best = rot;
      best_sign = sg;
    }
  }
  return std::make_pair(std::move(best), best_sign);
}

Vec cyc(const Basis& b, const Vec& v) {
  Vec out;
  for (const auto& [m, c] : v) {
    if (m.w.empty()) {
      add_term(out, m, c);
      continue;
    }
    auto r = canonicalize_cyclic(b, m.w);
    if (!r) continue;
    add_term(out, Mono{m.e, std::move(r->first)}, Rational(c * r->second));
  }
  return out;
}

std::string format_letter(const Basis& b, Letter l) {
  return (is_dx(l) ? "dx:" : "x:") + b[letter_index(l)].id;
}

std::string format_form(const Basis& b, const Vec& v) {
  if (v.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : v) {
    if (!first) s += " + ";
    first = false;
    s += format_rational(c);
    if (!is_zero(m.e)) s += "*T^" + format_rational(m.e);
    s += "(";
    for (std::size_t i = 0; i < m.w.size(); ++i) {
      if (i) s += " ";
      s += format_letter(b, m.w[i]);
    }
    s += ")";
  }
  return s;
}

}  // namespace kscyc
