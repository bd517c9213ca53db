#include "internal.hpp"

namespace kscyc {

BimodMap tilde(const Basis& b, const Cochain& phi0) {
  BimodMap out;
  for (const auto& [m, c] : phi0) {
    const Word t(m.w.begin(), m.w.end() - 1);
    const Letter w = m.w.back();
    for (std::size_t p = 0; p < t.size(); ++p) {
      // phi(L v R)(w) with v = t[p]
      add_term(out, BKey{m.e, m.w, static_cast<int>(p)}, c);
      // the same entry read as phi(R' w' L')(v') with R' = t[..p), w' = t[p],
      // L' = t(p..], v' = w feeds phi~(L', v', R')(w')
      const Word Lp(t.begin() + p + 1, t.end()), Rp(t.begin(), t.begin() + p);
      const Letter wp = t[p];
      Word k = Lp;
      k.push_back(w);
      k.insert(k.end(), Rp.begin(), Rp.end());
      k.push_back(wp);
      const int e = swap_exponent(b.word_parity(Lp) ^ b.letter_parity(w),
                                  b.word_parity(Rp) ^ b.letter_parity(wp));
      add_term(out, BKey{m.e, std::move(k), static_cast<int>(Lp.size())},
               Rational(-c * sign_of(e)));
    }
  }
  return out;
}

BimodMap bimodule_defect(const AInftyStructure& a, const BimodMap& psi, int max_slots) {
  require_uncurved(a, "bimodule_defect");
  const Basis& b = a.basis();
  const Family& m = a.ops();
  const int n = static_cast<int>(b.size());
  BimodMap out;
  if (psi.empty()) return out;

  int dpsi = -1;
  std::map<std::pair<Word, int>, Series> idx;
  for (const auto& [k, c] : psi) {
    const int q = b.word_parity(k.w);
    if (dpsi >= 0 && q != dpsi) throw PreconditionError("bimodule map is not homogeneous");
    dpsi = q;
    add_term(idx[{k.w, k.pos}], k.e, c);
  }
  auto lookup = [&](const Word& w, int pos) -> const Series* {
    auto it = idx.find({w, pos});
    return it == idx.end() ? nullptr : &it->second;
  };

  std::vector<Letter> letters(n);
  for (int i = 0; i < n; ++i) letters[i] = static_cast<Letter>(i);
  Word key;
  for (const auto& full : all_words(letters, 1, max_slots - 1)) {
    const std::size_t len = full.size();
    for (std::size_t pos = 0; pos < len; ++pos) {
      for (int w = 0; w < n; ++w) {
        Series s;
        // psi(d-hat(L v R))(w); the window containing v becomes the new slot
        for (std::size_t i = 0; i < len; ++i) {
          const int sg = sign_of(b.word_parity(full, 0, i));
          for (std::size_t k = 1; i + k <= len; ++k) {
            auto it = m.find(Word(full.begin() + i, full.begin() + i + k));
            if (it == m.end()) continue;
            std::size_t npos = pos;
            if (i <= pos && pos < i + k) npos = i;
            else if (pos >= i + k) npos = pos - k + 1;
            for (const auto& [o, co] : it->second) {
              key.assign(full.begin(), full.begin() + i);
              key.push_back(o.w[0]);
              key.insert(key.end(), full.begin() + i + k, full.end());
              key.push_back(static_cast<Letter>(w));
              if (const Series* ps = lookup(key, static_cast<int>(npos)))
                for (const auto& [e, v] : *ps) add_term(s, Rational(e + o.e), Rational(v * co * sg));
            }
          }
        }
        // d*(L0, psi(L1 v R1), R0)(w), suffix sign (-1)^{|psi| |R0|'}
        for (std::size_t i = 0; i <= pos; ++i) {
          const Word L0(full.begin(), full.begin() + i);
          for (std::size_t j = pos + 1; j <= len; ++j) {
            const Word R0(full.begin() + j, full.end());
            const int sg = sign_of(dpsi * b.word_parity(R0));
            key.assign(full.begin() + i, full.begin() + j);
            key.push_back(0);
            for (int jj = 0; jj < n; ++jj) {
              key.back() = static_cast<Letter>(jj);
              const Series* ps = lookup(key, static_cast<int>(pos - i));
              if (!ps) continue;
              Series ds = dual_action(a, L0, jj, R0, w);
              for (const auto& [e1, v1] : *ps)
                for (const auto& [e2, v2] : ds)
                  add_term(s, Rational(e1 + e2), Rational(-v1 * v2 * sg));
            }
          }
        }
        for (const auto& [e, c] : s) {
          if (!a.trunc().below_cutoff(e)) continue;
          Word kw = full;
          kw.push_back(static_cast<Letter>(w));
          add_term(out, BKey{e, std::move(kw), static_cast<int>(pos)}, c);
        }
      }
    }
  }
  return out;
}

std::string format_bimod(const Basis& b, const BimodMap& psi) {
  if (psi.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : psi) {
    if (!first) s += " + ";
    first = false;
    s += format_rational(c);
    if (!is_zero(k.e)) s += "*T^" + format_rational(k.e);
    s += "*psi(";
    for (std::size_t i = 0; i + 1 < k.w.size(); ++i) {
      if (i) s += ",";
      s += static_cast<int>(i) == k.pos ? "_" + b[k.w[i]].id + "_" : b[k.w[i]].id;
    }
    s += ")(" + b[k.w.back()].id + ")";
  }
  return s;
}

}  // namespace kscyc
