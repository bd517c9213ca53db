#include "kscyc/sympeq.hpp"

namespace kscyc {

namespace {

using BimodIndex = std::map<std::pair<Word, int>, Series>;

std::vector<Letter> index_letters(const Basis& b) {
  std::vector<Letter> l(b.size());
  for (std::size_t i = 0; i < l.size(); ++i) l[i] = static_cast<Letter>(i);
  return l;
}

BimodMap window_of(const BimodMap& psi, const Truncation& t) {
  BimodMap out;
  for (const auto& [k, c] : psi)
    if (t.keep(k.e, k.w.size())) add_term(out, k, c);
  return out;
}

// (F^* o phi' o F~)(L, v, R)(w) for one key.  The block feeding the output
// slot may wrap around: it is R_tail w L_head, and moving L_head to the back
// costs (-1)^{|L_head|' |rest|'}.  The remaining letters are cut into
// consecutive blocks, one of which holds v.
Series composed_entry(const Basis& b, const Truncation& t, const Cohomomorphism& f,
                      const BimodIndex& phi, const Word& W, int pos) {
  const int n = static_cast<int>(W.size());
  const int rlen = n - 2 - pos;
  Series out;
  Word acc;
  for (int h = 0; h <= pos; ++h) {
    const int sg = sign_of(swap_exponent(b.word_parity(W, 0, h), b.word_parity(W, h, n)));
    for (int a = 0; a <= rlen; ++a) {
      Word wb(W.begin() + (n - 1 - a), W.end());
      wb.insert(wb.end(), W.begin(), W.begin() + h);
      auto fw = f.comp.find(wb);
      if (fw == f.comp.end()) continue;
      const int mid_end = n - 1 - a;  // middle is W[h, mid_end)
      auto rec = [&](auto&& self, int p, int vpos, const Rational& e,
                     const Rational& c) -> void {
        if (p == mid_end) {
          for (const auto& [o, cw] : fw->second) {
            acc.push_back(o.w[0]);
            auto it = phi.find({acc, vpos});
            if (it != phi.end())
              for (const auto& [e2, c2] : it->second) {
                Rational et = e + o.e + e2;
                if (t.below_cutoff(et)) add_term(out, et, Rational(sg * c * cw * c2));
              }
            acc.pop_back();
          }
          return;
        }
        for (int k = 1; p + k <= mid_end; ++k) {
          auto it = f.comp.find(Word(W.begin() + p, W.begin() + p + k));
          if (it == f.comp.end()) continue;
          const bool holds_v = p <= pos && pos < p + k;
          if (!holds_v && vpos < 0 && p + k > pos) continue;
          for (const auto& [o, co] : it->second) {
            const Rational e2 = e + o.e;
            if (!t.below_cutoff(e2)) continue;
            const int vp = holds_v ? static_cast<int>(acc.size()) : vpos;
            acc.push_back(o.w[0]);
            self(self, p + k, vp, e2, Rational(c * co));
            acc.pop_back();
          }
        }
      };
      rec(rec, h, -1, Rational(0), Rational(1));
    }
  }
  return out;
}

}  // namespace

Report diagram_check(const Basis& b, const Truncation& t_in, const Cohomomorphism& f,
                     const BimodMap& phi, const BimodMap& phi_prime, int max_slots) {
  Truncation t = t_in;
  t.order = max_slots;
  const BimodMap target = window_of(phi, t);
  BimodIndex idx;
  for (const auto& [k, c] : phi_prime) add_term(idx[{k.w, k.pos}], k.e, c);

  BimodMap composed;
  for (const auto& W : all_words(index_letters(b), 2, max_slots))
    for (int pos = 0; pos + 2 <= static_cast<int>(W.size()); ++pos)
      for (const auto& [e, c] : composed_entry(b, t, f, idx, W, pos))
        if (t.keep(e, W.size())) add_term(composed, BKey{e, W, pos}, c);

  Report rep;
  const BimodMap diff = minus(target, composed);
  for (const auto& [k, c] : diff)
    rep.fail("phi - F^* phi' F~ = " + format_bimod(b, BimodMap{{k, c}}));

  // same statement on forms
  const Vec lhs = truncate(twoform_from_bimodmap(b, target), t);
  const Vec rhs = truncate(pullback_by_cohom(b, f, twoform_from_bimodmap(b, phi_prime), t), t);
  if ((lhs == rhs) != rep.pass)
    throw InvariantViolation("diagram_check: bimodule and form routes disagree");
  return rep;
}

KajiuraReport cyclic_homomorphism_check(const Basis& b, const Cohomomorphism& h,
                                        const ConstantTwoForm& wa, const ConstantTwoForm& wb,
                                        const Truncation& t) {
  KajiuraReport rep;
  const std::size_t n = b.size();
  auto pair_blocks = [&](const Word& x, const Word& y) {
    Series s;
    auto hx = h.comp.find(x), hy = h.comp.find(y);
    if (hx == h.comp.end() || hy == h.comp.end()) return s;
    for (const auto& [ox, cx] : hx->second)
      for (const auto& [oy, cy] : hy->second)
        add_term(s, Rational(ox.e + oy.e), Rational(cx * cy * wb.g[ox.w[0]][oy.w[0]]));
    return s;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Series s = pair_blocks({static_cast<Letter>(i)}, {static_cast<Letter>(j)});
      add_term(s, Rational(0), Rational(-wa.g[i][j]));
      for (const auto& [e, c] : s)
        if (t.keep(e, 2))
          rep.preserves.fail("<h(" + b[i].id + "),h(" + b[j].id + ")> - <" + b[i].id + "," +
                             b[j].id + "> = " + format_rational(c) +
                             (is_zero(e) ? "" : " T^" + format_rational(e)));
    }
  for (const auto& w : all_words(index_letters(b), 3, t.order)) {
    Series s;
    for (std::size_t i = 1; i < w.size(); ++i)
      add_scaled(s, pair_blocks(Word(w.begin(), w.begin() + i), Word(w.begin() + i, w.end())),
                 Rational(1));
    for (const auto& [e, c] : s)
      if (t.keep(e, w.size()))
        rep.vanishing.fail("sum <h,h> on " + b.format_word(w) + " = " + format_rational(c) +
                           (is_zero(e) ? "" : " T^" + format_rational(e)));
  }
  const Vec lhs = truncate(pullback_by_cohom(b, h, to_form(b, wb), t), t);
  const Vec rhs = truncate(to_form(b, wa), t);
  for (const auto& [m, c] : minus(lhs, rhs))
    rep.pullback.fail("h^* omega_B - omega_A has " + format_form(b, Vec{{m, c}}));
  return rep;
}

}  // namespace kscyc
