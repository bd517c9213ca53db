#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gen.hpp"
#include "kscyc/cli.hpp"

using namespace kscyc;
using kscyc::cli::json;

namespace {

const std::string kFixtures = KSCYC_FIXTURES;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::vector<const char*> argv{"kscyc"};
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

cli::AlgebraSpec load(const std::string& name) {
  return cli::algebra_from_json(cli::parse_json(cli::read_file(fixture(name)), name));
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "kscyc_test_cli";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

}  // namespace

TEST_CASE("fixture files match the in-code fixtures") {
  const auto s2 = load("s2.json");
  CHECK(s2.algebra.basis() == fx::s2().a.basis());
  CHECK(s2.algebra.ops() == fx::s2().a.ops());
  REQUIRE(s2.pairing);
  CHECK(s2.pairing->g == fx::s2().pairing.g);
  CHECK_FALSE(s2.filtered);

  const auto cp2 = load("cp2.json");
  CHECK(cp2.algebra.ops() == fx::cp2().a.ops());

  const auto qs2 = load("qs2.json");
  CHECK(qs2.filtered);
  CHECK(qs2.algebra.ops() == fx::qs2().a.ops());
  CHECK(qs2.monoid.energies() == std::vector<Rational>{0, 1, 2, 3});

  for (const char* name : {"s2", "cp2"}) {
    const auto plain = load(std::string(name) + ".json");
    const auto twin = load(std::string(name) + "_trivial_monoid.json");
    CHECK(twin.filtered);
    CHECK(twin.algebra.ops() == plain.algebra.ops());
  }

  cli::Overrides o;
  o.order = 5;
  CHECK(cli::algebra_from_json(cli::parse_json(cli::read_file(fixture("s2.json")), "s2"), o)
            .algebra.trunc()
            .order == 5);
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(load("s2_bad_degree.json"), InputError);
  try {
    cli::parse_json("{\n  \"schema\": 1,\n  \"kind\": \n}", "broken");
    FAIL("no error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("broken:4:1:") == 0);  // the stray brace
  }
  const json no_kind = json::parse(R"({"schema": 1, "basis": []})");
  CHECK_THROWS_AS(cli::algebra_from_json(no_kind), InputError);
  const Basis b = fx::s2().a.basis();
  const json energetic = json::parse(
      R"({"schema": 1, "kind": "cochain",
          "entries": [{"inputs": ["u"], "probe": "t", "c": [{"T": "1", "c": "1"}]}]})");
  CHECK_THROWS_AS(cli::cochain_from_json(b, energetic, false), InputError);
  CHECK(cli::cochain_from_json(b, energetic, true) == single({0, 1}, 1, 1));
}

TEST_CASE("exit codes") {
  CHECK(run({"check", fixture("s2.json")}).code == cli::kPass);
  CHECK(run({"check", fixture("qs2.json")}).code == cli::kPass);
  const Run bad = run({"check", fixture("s2_bad_degree.json")});
  CHECK(bad.code == cli::kInput);
  CHECK_FALSE(bad.err.empty());

  const auto broken = scratch("broken.json");
  write(broken, "{\n  \"schema\": 1,\n  \"kind\": \"algebra\",\n  \"basis\": [\n}");
  const Run malformed = run({"check", broken.string()});
  CHECK(malformed.code == cli::kInput);
  CHECK(malformed.err.find("5:") != std::string::npos);
  CHECK(run({"check", fixture("missing.json")}).code == cli::kInput);

  CHECK(run({"darboux", fixture("qs2.json"), fixture("form_qs2_negative.json")}).code ==
        cli::kObstruction);
  CHECK(run({"darboux", fixture("s2.json"), fixture("form_s2_perturbed.json")}).code ==
        cli::kPass);

  CHECK(run({"tilde", fixture("s2.json"), fixture("s2_pairing_cocycle.json")}).code ==
        cli::kPass);
  CHECK(run({"tilde", fixture("qs2.json"), fixture("s2_pairing_cocycle.json")}).code ==
        cli::kPrecondition);
  CHECK(run({"tilde", fixture("qs2.json"), fixture("s2_pairing_cocycle.json"), "--force"})
            .code == cli::kFail);
  CHECK(run({"tilde", fixture("s2.json"), fixture("zero_cocycle.json")}).code == cli::kFail);

  CHECK(run({"equivalence", fixture("s2.json"), fixture("eta_s2.json")}).code == cli::kPass);
  CHECK(run({"equivalence", fixture("qs2.json"), fixture("eta_qs2.json")}).code == cli::kPass);
  CHECK(run({"equivalence", fixture("qs2.json"), fixture("eta_qs2_negative.json")}).code ==
        cli::kPrecondition);
  CHECK(run({"equivalence", fixture("s2.json"), fixture("eta_zero.json")}).code == cli::kPass);
}

TEST_CASE("reports are deterministic") {
  for (const std::string fmt : {"text", "json"}) {
    const std::vector<std::string> args{"tilde", fixture("cp2.json"), "--seed", "7",
                                        "--format", fmt};
    const Run a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
  const Run j = run({"check", fixture("s2.json"), "--format", "json"});
  json parsed;
  CHECK_NOTHROW(parsed = json::parse(j.out));
  CHECK(parsed.is_object());
}

TEST_CASE("writers and readers round trip") {
  gen::Rng rng(71);
  const auto f = fx::cp2(6);
  const Basis& b = f.a.basis();
  const std::vector<Rational> energies{0, 1, 2};
  for (int k = 0; k < 20; ++k) {
    const Cochain c = gen::random_eta(rng, b, k % 2, 4, 3, false, energies);
    CHECK(cli::cochain_from_json(b, json::parse(cli::cochain_to_json(b, c).dump()), true) == c);

    NegativeCyclicCochain phi;
    phi.cols = {c, gen::random_eta(rng, b, k % 2, 2, 2, false)};
    const auto back = cli::cocycle_from_json(b, cli::cocycle_to_json(b, phi), true);
    CHECK(back.cols == phi.cols);
    CHECK(back.reduced == phi.reduced);

    const Vec form = gen::random_cyclic_form(rng, b, 4, 2, 4, 2, energies);
    CHECK(cli::form_from_json(b, cli::form_to_json(b, form), true) == form);

    const BimodMap psi = bimodmap_from_twoform(b, gen::random_cyclic_form(rng, b, 3, 2, 4, 2));
    CHECK(cli::bimodmap_from_json(b, cli::bimodmap_to_json(b, psi)) == psi);

    Cohomomorphism h = identity_cohomomorphism(b);
    for (auto& w : all_words(gen::basis_letters(b), 2, 2))
      if (b.word_parity(w) == b.parity(0) && gen::uniform(rng, 0, 1))
        add_term(h.comp[w], Mono{0, {0}}, fx::small_rational(rng));
    CHECK(cli::cohomomorphism_from_json(b, cli::cohomomorphism_to_json(b, h)).comp == h.comp);
  }
}

TEST_CASE("equivalence certificate file") {
  const auto out = scratch("certificate.json");
  std::filesystem::remove(out);
  const Run r = run({"equivalence", fixture("s2.json"), fixture("eta_s2.json"), "--output",
                     out.string()});
  REQUIRE(r.code == cli::kPass);
  REQUIRE(std::filesystem::exists(out));
  const auto f = fx::s2();
  const Cohomomorphism h = cli::cohomomorphism_from_json(
      f.a.basis(), cli::parse_json(cli::read_file(out.string()), "certificate"));
  CHECK(homomorphism_defect(h, f.a, f.a).empty());
  CHECK(h.comp == equivalence_automorphism(f.a, f.pairing, single({0, 1, 1}))
                      .automorphism.comp);
}
