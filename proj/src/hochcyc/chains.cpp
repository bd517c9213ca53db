#include "internal.hpp"

namespace kscyc {

void require_uncurved(const AInftyStructure& a, const char* what) {
  if (a.ops().count(Word{}))
    throw PreconditionError(std::string(what) + ": structures with m0 are not supported");
}

Chain b_chain(const AInftyStructure& a, const Chain& c) {
  require_uncurved(a, "b_chain");
  const Basis& b = a.basis();
  const Family& m = a.ops();
  Chain out;
  for (const auto& [term, coef] : c) {
    if (term.w.empty()) throw InputError("b_chain: chain without module slot");
    const Letter v = term.w[0];
    const Word x(term.w.begin() + 1, term.w.end());
    const std::size_t k = x.size();
    const int pv = b.letter_parity(v);
    // interior insertions, the module slot stays in front
    for (std::size_t i = 0; i < k; ++i) {
      const int sg = sign_of(pv + b.word_parity(x, 0, i));
      for (std::size_t j = 1; i + j <= k; ++j) {
        auto it = m.find(Word(x.begin() + i, x.begin() + i + j));
        if (it == m.end()) continue;
        for (const auto& [o, co] : it->second) {
          Word nw{v};
          nw.insert(nw.end(), x.begin(), x.begin() + i);
          nw.push_back(o.w[0]);
          nw.insert(nw.end(), x.begin() + i + j, x.end());
          add_term(out, Mono{term.e + o.e, std::move(nw)}, Rational(coef * co * sg));
        }
      }
    }
    // wrap-around: m(x_{k-i+1..k}, v, x_{1..j}) becomes the new module slot
    for (std::size_t i = 0; i <= k; ++i) {
      const int wrapped_tail = b.word_parity(x, k - i, k);
      for (std::size_t j = 0; j + i <= k; ++j) {
        Word win(x.begin() + (k - i), x.end());
        win.push_back(v);
        win.insert(win.end(), x.begin(), x.begin() + j);
        auto it = m.find(win);
        if (it == m.end()) continue;
        // the wrapped tail moves past v and the untouched middle
        const int sg = sign_of(swap_exponent(wrapped_tail, pv ^ b.word_parity(x, 0, k - i)));
        for (const auto& [o, co] : it->second) {
          Word nw{o.w[0]};
          nw.insert(nw.end(), x.begin() + j, x.begin() + (k - i));
          add_term(out, Mono{term.e + o.e, std::move(nw)}, Rational(coef * co * sg));
        }
      }
    }
  }
  return out;
}

Series dual_action(const AInftyStructure& a, const Word& L, int j, const Word& R, int w) {
  const Basis& b = a.basis();
  Word in = R;
  in.push_back(static_cast<Letter>(w));
  in.insert(in.end(), L.begin(), L.end());
  Series s;
  auto it = a.ops().find(in);
  if (it == a.ops().end()) return s;
  const int pw = b.parity(w);
  const int e = 1 + b.word_parity(L) + b.word_parity(R) + pw + pw * b.parity(j);
  for (const auto& [o, co] : it->second)
    if (o.w[0] == j) add_term(s, o.e, Rational(co * sign_of(e)));
  return s;
}

Series pairing(const Cochain& f, const Chain& c) {
  auto fi = index_by_word(f);
  Series s;
  for (const auto& [m, cc] : c) {
    Word key(m.w.begin() + 1, m.w.end());
    key.push_back(m.w[0]);
    auto it = fi.find(key);
    if (it == fi.end()) continue;
    for (const auto& [e, v] : it->second) add_term(s, Rational(e + m.e), Rational(v * cc));
  }
  return s;
}

}  // namespace kscyc
