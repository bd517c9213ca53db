#include <algorithm>
#include <set>

#include "kscyc/novikov.hpp"

namespace kscyc {

namespace {

std::string show(const MonoidElement& e) {
  return "(" + format_rational(e.energy) + "," + std::to_string(e.mu) + ")";
}

}  // namespace

GappedMonoid::GappedMonoid(std::vector<MonoidElement> generators,
                           std::optional<Rational> cutoff)
    : gens_(std::move(generators)), cutoff_(std::move(cutoff)) {
  std::vector<MonoidElement> step;
  for (const auto& g : gens_) {
    if (g.energy < 0) {
      problems_.fail("generator " + show(g) + " has negative energy");
    } else if (g.energy == 0) {
      if (g.mu != 0)
        problems_.fail("generator " + show(g) + " lies in {0} x 2Z but is not (0,0)");
    } else {
      if (g.mu % 2 != 0) problems_.fail("generator " + show(g) + " has odd mu");
      step.push_back(g);
    }
  }
  if (!step.empty() && !cutoff_)
    throw InputError("a monoid with positive energies needs an energy cutoff");

  std::set<MonoidElement> seen{{Rational(0), 0}};
  std::vector<MonoidElement> frontier{{Rational(0), 0}};
  while (!frontier.empty()) {
    std::vector<MonoidElement> next;
    for (const auto& x : frontier)
      for (const auto& g : step) {
        MonoidElement y{Rational(x.energy + g.energy), x.mu + g.mu};
        if (y.energy < *cutoff_ && seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  elems_.assign(seen.begin(), seen.end());
}

std::vector<Rational> GappedMonoid::energies() const {
  std::vector<Rational> out;
  for (const auto& e : elems_)
    if (out.empty() || out.back() != e.energy) out.push_back(e.energy);
  return out;
}

bool GappedMonoid::contains(const MonoidElement& e) const {
  return std::binary_search(elems_.begin(), elems_.end(), e);
}

Report GappedMonoid::validate() const { return problems_; }

Truncation GappedMonoid::truncation(int order) const {
  Truncation t;
  t.order = order;
  t.cutoff = cutoff_;
  t.levels = energies();
  return t;
}

Report gapped_validate(const GappedMonoid& g, const AInftyStructure& a) {
  Report rep = g.validate();
  const Basis& b = a.basis();
  for (const auto& op : a.entries()) {
    const std::string name = "m" + std::to_string(op.inputs.size()) + b.format_word(op.inputs);
    if (g.cutoff() && op.energy >= *g.cutoff()) continue;  // truncated away
    if (!g.contains({op.energy, op.mu}))
      rep.fail(name + " has tag " + show({op.energy, op.mu}) + " outside G");
    if (op.inputs.empty() && op.energy == 0)
      rep.fail("m0 has an energy-zero part");
  }
  return rep;
}

int order(const Truncation& t, const Rational& e, std::size_t length) {
  auto j = t.exact_level(e);
  if (!j) throw InputError("energy " + format_rational(e) + " is not in the energy lattice");
  return 2 * *j + static_cast<int>(length);
}

int x_order(const Truncation& t, const Mono& m) {
  std::size_t xs = 0;
  for (Letter l : m.w) xs += !is_dx(l);
  return order(t, m.e, xs);
}

}  // namespace kscyc
