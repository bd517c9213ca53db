#include "kscyc/sympeq.hpp"

namespace kscyc {

namespace {

Word indices_of(const Word& w) {
  Word r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[i] = static_cast<Letter>(letter_index(w[i]));
  return r;
}

Family field_family(const VectorField& v) {
  Family f;
  for (std::size_t a = 0; a < v.comp.size(); ++a)
    for (const auto& [m, c] : v.comp[a])
      add_term(f[indices_of(m.w)], Mono{m.e, {static_cast<Letter>(a)}}, c);
  return f;
}

}  // namespace

Cohomomorphism exp_coderivation(const Basis& b, const VectorField& v, const Truncation& t) {
  if (is_zero_field(v)) return identity_cohomomorphism(b);
  if (v.parity != 0) throw PreconditionError("exp_coderivation: vector field is odd");
  for (const auto& c : v.comp)
    for (const auto& [m, a] : c)
      if (m.w.empty() || t.order_of(m.e, m.w.size()) < 2)
        throw PreconditionError("exp_coderivation: vector field has a term of order < 2");
  const Family fam = field_family(v);

  std::vector<Letter> letters(b.size());
  for (std::size_t i = 0; i < letters.size(); ++i) letters[i] = static_cast<Letter>(i);
  Cohomomorphism f;
  for (auto& w : all_words(letters, 1, t.order)) {
    // An output of the component at w has order 2*level(e) + |w|; terms
    // past the window can only gain energy, so they are dropped early.
    auto in_window = [&](const Rational& e) {
      return t.below_cutoff(e) && t.order_of(e, w.size()) <= t.order;
    };
    Vec cur = single(w), out;
    for (int k = 1; !cur.empty(); ++k) {
      if (k > static_cast<int>(w.size()) + 2 * t.order + 2)
        throw InvariantViolation("exp_coderivation: series did not terminate");
      Vec next;
      for (const auto& [m, c] : coderivation(b, fam, 0, cur, t))
        if (in_window(m.e)) add_term(next, m, Rational(c / k));
      cur = std::move(next);
      for (const auto& [m, c] : cur)
        if (m.w.size() == 1) add_term(out, m, c);
    }
    if (w.size() == 1) add_term(out, Mono{0, w}, Rational(1));
    if (!out.empty()) f.comp.emplace(std::move(w), std::move(out));
  }
  return f;
}

Cohomomorphism shift_cohomomorphism(const Basis& b, const VectorField& f) {
  Cohomomorphism h = identity_cohomomorphism(b);
  for (std::size_t a = 0; a < f.comp.size(); ++a)
    for (const auto& [m, c] : f.comp[a]) {
      if (m.w.empty()) throw PreconditionError("shift_cohomomorphism: constant component");
      Vec& slot = h.comp[indices_of(m.w)];
      add_term(slot, Mono{m.e, {static_cast<Letter>(a)}}, c);
      if (slot.empty()) h.comp.erase(indices_of(m.w));
    }
  return h;
}

}  // namespace kscyc
