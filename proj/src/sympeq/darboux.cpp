#include "kscyc/sympeq.hpp"

namespace kscyc {

namespace {

int form_parity(const Basis& b, const Mono& m) {
  int p = 0;
  for (Letter l : m.w) p ^= b.letter_parity(l);
  return p;
}

}  // namespace

DarbouxResult darboux(const Basis& b, const Vec& omega_in, const Truncation& t) {
  const Vec omega = truncate(cyc(b, omega_in), t);
  for (const auto& [m, c] : omega) {
    if (word_sharp(m.w) != 2) throw InputError("darboux: input is not a 2-form");
    if (m.e < 0) throw PreconditionError("darboux: negative energy term");
  }
  if (!truncate(d_cyc(b, omega), t).empty())
    throw PreconditionError("darboux: form is not closed");

  DarbouxResult res;
  res.constant = constant_part(b, omega);
  if (!is_nondegenerate(res.constant))
    throw PreconditionError("darboux: constant part is degenerate");
  const Vec w0 = to_form(b, res.constant);
  const int p0 = form_parity(b, w0.begin()->first);
  for (const auto& [m, c] : omega)
    if (form_parity(b, m) != p0) throw PreconditionError("darboux: form is not homogeneous");

  res.transform = identity_cohomomorphism(b);
  Vec cur = omega;
  std::optional<int> last;
  for (int step = 0;; ++step) {
    const Vec rest = truncate(minus(cur, w0), t);
    const auto lo = min_order(rest, t);
    if (!lo) break;
    if (step > 2 * t.order || (last && *lo <= *last))
      throw InvariantViolation("darboux: order did not increase");
    last = lo;
    Vec lowest;
    for (const auto& [m, c] : rest)
      if (t.order_of(m.e, m.w.size()) == *lo) add_term(lowest, m, c);
    // rest is closed, so its lowest part is exact: lowest = d H lowest
    const VectorField f = solve_contraction(b, res.constant, scaled(poincare_H(b, lowest), -1));
    if (!is_zero_field(f) && f.parity != 0)
      throw InvariantViolation("darboux: odd correction field");
    const Cohomomorphism step_map = shift_cohomomorphism(b, f);
    cur = truncate(pullback_by_cohom(b, step_map, cur, t), t);
    res.transform = compose(b, res.transform, step_map, t);
    res.levels.push_back(*lo);
  }
  if (truncate(pullback_by_cohom(b, res.transform, omega, t), t) != truncate(w0, t))
    throw InvariantViolation("darboux: recomputed pullback differs from the constant form");
  return res;
}

}  // namespace kscyc
