#include "kscyc/ncgeom.hpp"

namespace kscyc {

VectorField zero_field(const Basis& b, int parity) {
  return VectorField{parity, std::vector<Vec>(b.size())};
}

bool operator==(const VectorField& a, const VectorField& b) {
  if (a.comp.size() != b.comp.size()) return false;
  for (std::size_t i = 0; i < a.comp.size(); ++i)
    if (a.comp[i] != b.comp[i]) return false;
  return is_zero_field(a) || a.parity == b.parity;
}

bool is_zero_field(const VectorField& v) {
  for (const auto& c : v.comp)
    if (!c.empty()) return false;
  return true;
}

VectorField truncate(const VectorField& v, const Truncation& t) {
  VectorField r{v.parity, {}};
  for (const auto& c : v.comp) r.comp.push_back(truncate(c, t));
  return r;
}

Vec derivation(const Basis& b, const Vec& v,
               const std::function<const Vec*(Letter)>& image, int dp, int ds) {
  Vec out;
  for (const auto& [m, c] : v) {
    const Word& w = m.w;
    int p = 0, s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (const Vec* img = image(w[i])) {
        const int sg = sign_of(dp * p + ds * s);
        for (const auto& [u, a] : *img) {
          Word nw;
          nw.reserve(w.size() + u.w.size());
          nw.insert(nw.end(), w.begin(), w.begin() + i);
          nw.insert(nw.end(), u.w.begin(), u.w.end());
          nw.insert(nw.end(), w.begin() + i + 1, w.end());
          add_term(out, Mono{m.e + u.e, std::move(nw)}, Rational(c * a * sg));
        }
      }
      p ^= b.letter_parity(w[i]);
      s ^= is_dx(w[i]);
    }
  }
  return out;
}

Vec d_lin(const Basis& b, const Vec& v) {
  std::vector<Vec> img(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) img[i] = single({dx_letter(static_cast<int>(i))});
  return derivation(
      b, v, [&](Letter l) { return is_dx(l) ? nullptr : &img[letter_index(l)]; }, 0, 1);
}

Vec contract_lin(const Basis& b, const VectorField& xi, const Vec& v) {
  return derivation(
      b, v, [&](Letter l) { return is_dx(l) ? &xi.comp[letter_index(l)] : nullptr; },
      xi.parity, 1);
}

Vec lie_lin(const Basis& b, const VectorField& xi, const Vec& v) {
  return plus(d_lin(b, contract_lin(b, xi, v)), contract_lin(b, xi, d_lin(b, v)));
}

Vec d_cyc(const Basis& b, const Vec& v) { return cyc(b, d_lin(b, v)); }
Vec contract(const Basis& b, const VectorField& xi, const Vec& v) {
  return cyc(b, contract_lin(b, xi, v));
}
Vec lie_derivative(const Basis& b, const VectorField& xi, const Vec& v) {
  return cyc(b, lie_lin(b, xi, v));
}

Vec vf_apply(const Basis& b, const VectorField& xi, const Vec& f) {
  return derivation(
      b, f, [&](Letter l) { return is_dx(l) ? nullptr : &xi.comp[letter_index(l)]; },
      xi.parity, 0);
}

VectorField vf_bracket(const Basis& b, const VectorField& xi, const VectorField& eta) {
  VectorField r = zero_field(b, xi.parity ^ eta.parity);
  const int sg = sign_of(swap_exponent(xi.parity, eta.parity));
  for (std::size_t i = 0; i < b.size(); ++i) {
    r.comp[i] = vf_apply(b, xi, eta.comp[i]);
    add_scaled(r.comp[i], vf_apply(b, eta, xi.comp[i]), Rational(-sg));
  }
  return r;
}

VectorField q_from_structure(const AInftyStructure& a) {
  VectorField q = zero_field(a.basis(), 1);
  for (const auto& [in, out] : a.ops()) {
    Word x = x_word(in);
    for (const auto& [o, c] : out) add_term(q.comp[o.w[0]], Mono{o.e, x}, c);
  }
  return q;
}

Vec poincare_H(const Basis& b, const Vec& v) {
  Vec out;
  for (const auto& [m, c] : v) {
    const Word& w = m.w;
    if (w.empty()) throw PreconditionError("poincare_H: constant term present");
    const Rational avg = c / Rational(static_cast<long>(w.size()));
    int s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (is_dx(w[i])) {
        Word nw = w;
        nw[i] = x_letter(letter_index(w[i]));
        add_term(out, Mono{m.e, std::move(nw)}, Rational(avg * sign_of(s)));
        s ^= 1;
      }
    }
  }
  return cyc(b, out);
}

Vec exp_lie(const Basis& b, const VectorField& v, const Vec& form, const Truncation& t) {
  for (const auto& c : v.comp)
    for (const auto& [m, a] : c)
      if (t.order_of(m.e, m.w.size()) < 2)
        throw PreconditionError("exp_lie: vector field has a term of order < 2");
  Vec total = truncate(form, t), cur = total;
  for (int k = 1; !cur.empty(); ++k) {
    if (k > 2 * t.order + 2) throw InvariantViolation("exp_lie: series did not terminate");
    cur = scaled(truncate(lie_derivative(b, v, cur), t), Rational(1, k));
    add_scaled(total, cur, Rational(1));
  }
  return total;
}

Vec pullback_by_cohom(const Basis& b, const Cohomomorphism& f, const Vec& form,
                      const Truncation& t, bool cyclic) {
  const std::size_t n = b.size();
  std::vector<Vec> sub(n), dsub(n);
  for (const auto& [in, out] : f.comp) {
    Word x = x_word(in);
    for (const auto& [o, c] : out) add_term(sub[o.w[0]], Mono{o.e, x}, c);
  }
  for (std::size_t j = 0; j < n; ++j) dsub[j] = d_lin(b, sub[j]);

  Vec out;
  for (const auto& [m, c] : form) {
    Vec acc = single({}, c, m.e);
    for (std::size_t i = 0; i < m.w.size() && !acc.empty(); ++i) {
      const Letter l = m.w[i];
      const Vec& img = is_dx(l) ? dsub[letter_index(l)] : sub[letter_index(l)];
      const std::size_t rest = m.w.size() - i - 1;
      Vec next;
      for (const auto& [u, cu] : acc)
        for (const auto& [g, cg] : img) {
          Rational e = u.e + g.e;
          if (!t.keep(e, u.w.size() + g.w.size() + rest)) continue;
          Word w = u.w;
          w.insert(w.end(), g.w.begin(), g.w.end());
          add_term(next, Mono{e, std::move(w)}, Rational(cu * cg));
        }
      acc = std::move(next);
    }
    add_scaled(out, acc, Rational(1));
  }
  return cyclic ? cyc(b, out) : out;
}

}  // namespace kscyc
