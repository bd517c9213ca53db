#include <algorithm>

#include "kscyc/barcx.hpp"

namespace kscyc {

namespace {

int family_max_arity(const Family& m) {
  int k = 0;
  for (const auto& [in, out] : m) k = std::max(k, static_cast<int>(in.size()));
  return k;
}

Word splice(const Word& w, std::size_t i, std::size_t k, const Word& mid) {
  Word r;
  r.reserve(w.size() - k + mid.size());
  r.insert(r.end(), w.begin(), w.begin() + i);
  r.insert(r.end(), mid.begin(), mid.end());
  r.insert(r.end(), w.begin() + i + k, w.end());
  return r;
}

// Tensor of two words; the energy is carried by the pair.
struct Split {
  Rational e;
  Word a, b;
};
bool operator<(const Split& x, const Split& y) {
  if (x.a != y.a) return x.a < y.a;
  if (x.b != y.b) return x.b < y.b;
  return x.e < y.e;
}
bool operator==(const Split& x, const Split& y) {
  return x.a == y.a && x.b == y.b && x.e == y.e;
}

Sparse<Split> deconcatenate(const Vec& v) {
  Sparse<Split> out;
  for (const auto& [m, c] : v)
    for (std::size_t i = 0; i <= m.w.size(); ++i)
      add_term(out, Split{m.e, Word(m.w.begin(), m.w.begin() + i),
                          Word(m.w.begin() + i, m.w.end())},
               c);
  return out;
}

std::vector<Letter> letters_of(const Basis& b) {
  std::vector<Letter> l(b.size());
  for (std::size_t i = 0; i < l.size(); ++i) l[i] = static_cast<Letter>(i);
  return l;
}

}  // namespace

Vec coderivation(const Basis& b, const Family& m, int parity, const Vec& x,
                 const Truncation& t, std::optional<int> arity) {
  Vec out;
  if (m.empty()) return out;
  const int kmax = family_max_arity(m);
  const bool has_m0 = m.count(Word{}) > 0;
  for (const auto& [term, c] : x) {
    const Word& w = term.w;
    const std::size_t n = w.size();
    int pre = 0;  // parity of w[0..i)
    for (std::size_t i = 0; i <= n; ++i) {
      const int sg = sign_of(parity * pre);
      std::size_t klo = has_m0 ? 0 : 1;
      std::size_t khi = std::min<std::size_t>(kmax, n - i);
      if (arity) klo = khi = static_cast<std::size_t>(*arity);
      for (std::size_t k = klo; k <= khi && i + k <= n; ++k) {
        auto it = m.find(Word(w.begin() + i, w.begin() + i + k));
        if (it == m.end()) continue;
        for (const auto& [o, a] : it->second) {
          Rational e = term.e + o.e;
          if (!t.below_cutoff(e)) continue;
          add_term(out, Mono{e, splice(w, i, k, o.w)}, Rational(c * a * sg));
        }
      }
      if (i < n) pre ^= b.letter_parity(w[i]);
    }
  }
  return out;
}

Cohomomorphism identity_cohomomorphism(const Basis& b) {
  Cohomomorphism f;
  for (std::size_t i = 0; i < b.size(); ++i)
    f.comp[Word{static_cast<Letter>(i)}] = single(Word{static_cast<Letter>(i)});
  return f;
}

Vec cohom_extend(const Basis& b, const Cohomomorphism& f, const Vec& x,
                 const Truncation& t) {
  (void)b;
  if (f.comp.count(Word{})) throw InputError("cohomomorphism with an arity-0 component");
  const int kmax = family_max_arity(f.comp);
  Vec out;
  for (const auto& [term, c] : x) {
    const Word& w = term.w;
    const std::size_t n = w.size();
    Word acc;
    // depth-first over splittings into consecutive blocks
    auto rec = [&](auto&& self, std::size_t pos, const Rational& e,
                   const Rational& coef) -> void {
      if (pos == n) {
        if (t.keep(e, acc.size())) add_term(out, Mono{e, acc}, coef);
        return;
      }
      if (t.order_of(e, acc.size() + 1) > t.order) return;
      for (std::size_t k = 1; k <= static_cast<std::size_t>(kmax) && pos + k <= n; ++k) {
        auto it = f.comp.find(Word(w.begin() + pos, w.begin() + pos + k));
        if (it == f.comp.end()) continue;
        for (const auto& [o, a] : it->second) {
          Rational e2 = e + o.e;
          if (!t.below_cutoff(e2)) continue;
          acc.push_back(o.w[0]);
          self(self, pos + k, e2, Rational(coef * a));
          acc.pop_back();
        }
      }
    };
    rec(rec, 0, term.e, c);
  }
  return out;
}

std::map<Word, Vec> homomorphism_defect(const Cohomomorphism& f,
                                        const AInftyStructure& a,
                                        const AInftyStructure& b) {
  const int na = static_cast<int>(a.basis().size());
  const int nb = static_cast<int>(b.basis().size());
  for (const auto& [in, out] : f.comp) {
    for (Letter l : in)
      if (l >= na) throw InputError("cohomomorphism input outside the source basis");
    for (const auto& [o, c] : out)
      if (o.w.size() != 1 || o.w[0] >= nb)
        throw InputError("cohomomorphism output outside the target basis");
  }
  const Truncation& t = a.trunc();
  std::map<Word, Vec> res;
  const int lo = (a.filtered() || b.filtered()) ? 0 : 1;
  for (auto& w : all_words(letters_of(a.basis()), lo, t.order)) {
    Vec x = single(w);
    Vec lhs = dhat(b, cohom_extend(b.basis(), f, x, t));
    Vec rhs = cohom_extend(b.basis(), f, dhat(a, x), t);
    // Keep a term when its energy plus the input length is in the window:
    // exactly the terms that only use components of order <= N.
    Vec d;
    for (const auto& [m, c] : minus(lhs, rhs))
      if (t.keep(m.e, w.size())) add_term(d, m, c);
    if (!d.empty()) res.emplace(std::move(w), std::move(d));
  }
  return res;
}

Cohomomorphism compose(const Basis& b, const Cohomomorphism& f,
                       const Cohomomorphism& g, const Truncation& t) {
  Cohomomorphism h;
  for (auto& w : all_words(letters_of(b), 1, t.order)) {
    Vec gw = cohom_extend(b, g, single(w), t);
    Vec comp;
    for (const auto& [u, c] : gw) {
      auto it = f.comp.find(u.w);
      if (it == f.comp.end()) continue;
      for (const auto& [o, a] : it->second) {
        Rational e = u.e + o.e;
        if (t.below_cutoff(e)) add_term(comp, Mono{e, o.w}, Rational(c * a));
      }
    }
    if (!comp.empty()) h.comp.emplace(std::move(w), std::move(comp));
  }
  return h;
}

Vec exp_coderivation_apply(const Basis& b, const Family& v, const Vec& x,
                           const Truncation& t) {
  Vec total = x, cur = x;
  for (int k = 1; !cur.empty(); ++k) {
    if (k > 4 * t.order + 64)
      throw InvariantViolation("exp of coderivation did not terminate");
    cur = scaled(coderivation(b, v, 0, cur, t), Rational(1, k));
    add_scaled(total, cur, Rational(1));
  }
  return total;
}

std::vector<Word> coderivation_property_failures(
    const Basis& b, int parity, const std::function<Vec(const Vec&)>& d,
    const Truncation& t) {
  std::vector<Word> bad;
  for (const auto& w : all_words(letters_of(b), 0, t.order)) {
    Sparse<Split> lhs = deconcatenate(d(single(w)));
    Sparse<Split> rhs;
    for (std::size_t i = 0; i <= w.size(); ++i) {
      Word l(w.begin(), w.begin() + i), r(w.begin() + i, w.end());
      for (const auto& [m, c] : d(single(l))) add_term(rhs, Split{m.e, m.w, r}, c);
      const int sg = sign_of(parity * b.word_parity(l));
      for (const auto& [m, c] : d(single(r)))
        add_term(rhs, Split{m.e, l, m.w}, Rational(c * sg));
    }
    if (lhs != rhs) bad.push_back(w);
  }
  return bad;
}

std::vector<Word> cohomomorphism_property_failures(
    const Basis& b, const std::function<Vec(const Vec&)>& f, const Truncation& t) {
  std::vector<Word> bad;
  for (const auto& w : all_words(letters_of(b), 0, t.order)) {
    Sparse<Split> lhs = deconcatenate(f(single(w)));
    Sparse<Split> rhs;
    for (std::size_t i = 0; i <= w.size(); ++i) {
      Vec fl = f(single(Word(w.begin(), w.begin() + i)));
      Vec fr = f(single(Word(w.begin() + i, w.end())));
      for (const auto& [ml, cl] : fl)
        for (const auto& [mr, cr] : fr)
          add_term(rhs, Split{ml.e + mr.e, ml.w, mr.w}, Rational(cl * cr));
    }
    if (lhs != rhs) bad.push_back(w);
  }
  return bad;
}

}  // namespace kscyc
