#include <doctest.h>

#include "gen.hpp"

using namespace kscyc;

namespace {

// v = X_H with i_v omega0 = dH for an x-only cyclic word H; nullopt when
// the flow would be odd.
std::optional<VectorField> hamiltonian(gen::Rng& rng, const fx::Fixture& f) {
  const Basis& b = f.a.basis();
  const Vec h = cyc(b, single(x_word(gen::random_indices(rng, b, gen::uniform(rng, 3, 4)))));
  if (h.empty()) return std::nullopt;
  const Vec dh = d_cyc(b, h);
  if (dh.empty()) return std::nullopt;
  const VectorField v = solve_contraction(b, f.pairing, dh);
  if (v.parity != 0) return std::nullopt;
  return v;
}

Cohomomorphism random_higher(gen::Rng& rng, const Basis& b) {
  Cohomomorphism g = identity_cohomomorphism(b);
  for (auto& w : all_words(gen::basis_letters(b), 2, 3))
    for (std::size_t o = 0; o < b.size(); ++o)
      if (b.word_parity(w) == b.parity(o) && gen::uniform(rng, 0, 2) == 0)
        add_term(g.comp[w], Mono{0, {static_cast<Letter>(o)}}, fx::small_rational(rng));
  return g;
}

}  // namespace

TEST_CASE("cyclicity of the fixtures by both routes") {
  for (auto f : {fx::s2(8), fx::cp2(8)}) {
    const CyclicityReport r = cyclicity_defect(f.a, f.pairing);
    CHECK(r.pass());
    CHECK(r.agree());
  }
  auto bad = fx::s2(6);
  bad.a.relax_degree_check();
  bad.a.add_op({1, 1}, 1, 1);  // m2(t,t) = t
  const CyclicityReport r = cyclicity_defect(bad.a, bad.pairing);
  CHECK_FALSE(r.equation_defect.empty());
  CHECK_FALSE(r.lie_defect.empty());
  CHECK(r.agree());
  CHECK(cyclic_classes(r.equation_defect).count(Word{0, 1, 1}) == 1);

  ConstantTwoForm sym;
  sym.g = {{0, 1}, {-1, 0}};  // wrong symmetry for two odd letters
  CHECK_FALSE(is_graded_skew(bad.a.basis(), sym));
  CHECK_THROWS_AS(cyclicity_defect(bad.a, sym), PreconditionError);
}

TEST_CASE("pairing forms") {
  auto f = fx::cp2();
  const Basis& b = f.a.basis();
  CHECK(is_graded_skew(b, f.pairing));
  CHECK(is_nondegenerate(f.pairing));
  CHECK(constant_part(b, to_form(b, f.pairing)).g == f.pairing.g);
  ConstantTwoForm deg;
  deg.g = {{0, 0, 0}, {0, 1, 0}, {0, 0, 0}};
  CHECK_FALSE(is_nondegenerate(deg));
}

TEST_CASE("shipping checks on bimodule maps") {
  auto f = fx::s2(6);
  BimodMap gram;
  gram[BKey{0, {0, 1}, 0}] = 1;
  gram[BKey{0, {1, 0}, 0}] = 1;
  const ShipReport ok = ship_check(f.a, gram, 5);
  CHECK(ok.pass());
  CHECK(ok.gram == Matrix{{0, 1}, {1, 0}});

  const ShipReport zero = ship_check(f.a, BimodMap{}, 5);
  CHECK(zero.skew.pass);
  CHECK(zero.closed_direct.pass);
  CHECK(zero.closed_form.pass);
  CHECK_FALSE(zero.nondegenerate.pass);

  Basis b({{"u", 0, true}, {"t", 2, false}, {"s", 1, false}});
  AInftyStructure nonmin(b, fx::plain(5));
  fx::add_unit_products(nonmin);
  nonmin.add_op({2}, 1, 1);  // m1(s) = t
  CHECK_THROWS_AS(ship_check(nonmin, gram, 5), PreconditionError);
}

TEST_CASE("contraction solver") {
  auto f = fx::s2(6);
  const Basis& b = f.a.basis();
  const Vec beta = cyc(b, single({x_letter(1), x_letter(1), dx_letter(1)}));
  REQUIRE_FALSE(beta.empty());
  const VectorField v = solve_contraction(b, f.pairing, beta);
  CHECK(v.parity == 1);  // two odd inputs, odd output
  CHECK(v.comp[0] == single(x_word({1, 1})));
  CHECK(v.comp[1].empty());
  CHECK(contract(b, v, to_form(b, f.pairing)) == beta);
}

TEST_CASE("exponential of an even field") {
  auto f = fx::cp2(6);
  const Basis& b = f.a.basis();
  const Truncation& t = f.a.trunc();
  CHECK(exp_coderivation(b, zero_field(b, 0), t).comp == identity_cohomomorphism(b).comp);

  VectorField odd = zero_field(b, 1);
  add_term(odd.comp[0], Mono{0, x_word({1, 1})}, 1);
  CHECK_THROWS_AS(exp_coderivation(b, odd, t), PreconditionError);
  VectorField linear = zero_field(b, 0);
  add_term(linear.comp[1], Mono{0, x_word({1})}, 1);
  CHECK_THROWS_AS(exp_coderivation(b, linear, t), PreconditionError);

  // a flow commuting with Q is an A-infinity automorphism
  gen::Rng rng(51);
  const VectorField q = q_from_structure(f.a);
  int found = 0;
  for (int k = 0; k < 200 && found < 3; ++k) {
    const VectorField v = gen::degree_zero_field(rng, b, 2);
    if (is_zero_field(v) || !is_zero_field(truncate(vf_bracket(b, q, v), t))) continue;
    CHECK(homomorphism_defect(exp_coderivation(b, v, t), f.a, f.a).empty());
    ++found;
  }
  CHECK(found > 0);
}

TEST_CASE("Darboux normalization") {
  auto f = fx::s2(6);
  const Basis& b = f.a.basis();
  const Truncation& t = f.a.trunc();
  const Vec w0 = to_form(b, f.pairing);

  const DarbouxResult id = darboux(b, w0, t);
  CHECK(id.transform.comp == identity_cohomomorphism(b).comp);
  CHECK(id.constant.g == f.pairing.g);

  gen::Rng rng(52);
  for (int k = 0; k < 10; ++k) {
    const Vec alpha = gen::random_cyclic_form(rng, b, 2, 3, 4, 1);
    const Vec omega = plus(w0, d_cyc(b, alpha));
    try {
      const DarbouxResult r = darboux(b, omega, t);
      CHECK(truncate(pullback_by_cohom(b, r.transform, omega, t), t) == w0);
    } catch (const PreconditionError&) {
      // inhomogeneous perturbations are refused; nothing else is
      bool homogeneous = true;
      for (const auto& [m, c] : d_cyc(b, alpha))
        homogeneous = homogeneous && (b.word_parity(m.w) + word_sharp(m.w)) % 2 == 0;
      CHECK_FALSE(homogeneous);
    }
  }

  const Vec open = plus(w0, cyc(b, single({x_letter(1), dx_letter(1), dx_letter(0)})));
  REQUIRE_FALSE(d_cyc(b, open).empty());
  CHECK_THROWS_AS(darboux(b, open, t), PreconditionError);

  // exact with no constant part
  const Vec degenerate = d_cyc(b, cyc(b, single({x_letter(1), x_letter(1), dx_letter(0)})));
  CHECK_THROWS_AS(darboux(b, degenerate, t), PreconditionError);
  CHECK_THROWS_AS(darboux(b, single({x_letter(1)}), t), InputError);
}

TEST_CASE("equivalence automorphisms") {
  auto f = fx::s2(6);
  const Basis& b = f.a.basis();
  const EquivalenceCertificate zero = equivalence_automorphism(f.a, f.pairing, Cochain{});
  CHECK(zero.ok());
  CHECK(zero.automorphism.comp == identity_cohomomorphism(b).comp);
  CHECK(zero.perturbation.empty());

  const Cochain eta = single({0, 1, 1});  // eta(u,t)(t) = 1
  const EquivalenceCertificate cert = equivalence_automorphism(f.a, f.pairing, eta);
  CHECK(cert.ok());
  CHECK(homomorphism_defect(cert.automorphism, f.a, f.a).empty());

  CHECK_THROWS_AS(equivalence_automorphism(f.a, f.pairing, single({1, 1})), PreconditionError);
  Cochain mixed = eta;
  add_term(mixed, Mono{0, {1, 1}}, 1);
  CHECK_THROWS_AS(equivalence_automorphism(f.a, f.pairing, mixed), PreconditionError);
}

TEST_CASE("diagram check") {
  auto f = fx::s2(6);
  const Basis& b = f.a.basis();
  const Truncation& t = f.a.trunc();
  BimodMap phi;
  phi[BKey{0, {0, 1}, 0}] = 1;
  phi[BKey{0, {1, 0}, 0}] = 1;
  const Cohomomorphism id = identity_cohomomorphism(b);
  CHECK(diagram_check(b, t, id, phi, phi, 5).pass);
  BimodMap other = phi;
  other[BKey{0, {0, 1}, 0}] = 2;
  other[BKey{0, {1, 0}, 0}] = 2;
  const Report r = diagram_check(b, t, id, phi, other, 5);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("cyclic homomorphisms by both routes") {
  gen::Rng rng(53);
  for (auto f : {fx::s2(6), fx::cp2(6)}) {
    const Basis& b = f.a.basis();
    const Truncation& t = f.a.trunc();
    int hams = 0;
    for (int k = 0; k < 50 && hams < 3; ++k) {
      const auto v = hamiltonian(rng, f);
      if (!v) continue;
      const KajiuraReport r =
          cyclic_homomorphism_check(b, exp_coderivation(b, *v, t), f.pairing, f.pairing, t);
      CHECK(r.pass());
      CHECK(r.routes_agree());
      ++hams;
    }
    CHECK(hams > 0);

    int broken = 0;
    for (int k = 0; k < 10; ++k) {
      const KajiuraReport r =
          cyclic_homomorphism_check(b, random_higher(rng, b), f.pairing, f.pairing, t);
      CHECK(r.routes_agree());
      broken += !r.pass();
    }
    CHECK(broken > 0);

    Cohomomorphism scale = identity_cohomomorphism(b);
    scale.comp[{0}] = single({0}, 2);
    const KajiuraReport s = cyclic_homomorphism_check(b, scale, f.pairing, f.pairing, t);
    CHECK_FALSE(s.preserves.pass);
    CHECK(s.routes_agree());
  }
}
