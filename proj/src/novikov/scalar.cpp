#include "kscyc/novikov.hpp"

namespace kscyc {

NovikovScalar NovikovScalar::monomial(const Rational& c, const Rational& lambda,
                                      const Rational& cutoff) {
  NovikovScalar s(cutoff);
  s.add(lambda, c);
  return s;
}

std::optional<Rational> NovikovScalar::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

void NovikovScalar::add(const Rational& lambda, const Rational& c) {
  if (lambda < cutoff_) add_term(terms_, lambda, c);
}

NovikovScalar NovikovScalar::operator+(const NovikovScalar& o) const {
  NovikovScalar r(std::min(cutoff_, o.cutoff_));
  for (const auto& [e, c] : terms_) r.add(e, c);
  for (const auto& [e, c] : o.terms_) r.add(e, c);
  return r;
}

NovikovScalar NovikovScalar::operator-(const NovikovScalar& o) const {
  NovikovScalar r(std::min(cutoff_, o.cutoff_));
  for (const auto& [e, c] : terms_) r.add(e, c);
  for (const auto& [e, c] : o.terms_) r.add(e, Rational(-c));
  return r;
}

NovikovScalar NovikovScalar::operator*(const NovikovScalar& o) const {
  NovikovScalar r(std::min(cutoff_, o.cutoff_));
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add(Rational(e1 + e2), Rational(c1 * c2));
  return r;
}

}  // namespace kscyc
