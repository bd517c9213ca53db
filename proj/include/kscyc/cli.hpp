#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "kscyc/novikov.hpp"

namespace kscyc::cli {

using json = nlohmann::ordered_json;

// Exit codes.
enum Exit : int { kPass = 0, kFail = 1, kPrecondition = 2, kObstruction = 3, kInput = 4 };

struct AlgebraSpec {
  AInftyStructure algebra;
  std::optional<ConstantTwoForm> pairing;
  GappedMonoid monoid;
  bool filtered = false;  // a "monoid" section was present
};

struct Overrides {
  std::optional<int> order;
  std::optional<Rational> energy_cutoff;
};

// Parses JSON text; syntax errors carry line and column, schema errors a
// path such as ops[2].
json parse_json(const std::string& text, const std::string& what);
std::string read_file(const std::string& path);

AlgebraSpec algebra_from_json(const json& j, const Overrides& o = {});
Cochain cochain_from_json(const Basis& b, const json& j, bool allow_energy);
NegativeCyclicCochain cocycle_from_json(const Basis& b, const json& j, bool allow_energy);
Vec form_from_json(const Basis& b, const json& j, bool allow_energy);
BimodMap bimodmap_from_json(const Basis& b, const json& j);
Cohomomorphism cohomomorphism_from_json(const Basis& b, const json& j);

json coefficient_to_json(const Series& s);
json cochain_to_json(const Basis& b, const Cochain& f);
json cocycle_to_json(const Basis& b, const NegativeCyclicCochain& phi);
json form_to_json(const Basis& b, const Vec& v);
json bimodmap_to_json(const Basis& b, const BimodMap& psi);
json cohomomorphism_to_json(const Basis& b, const Cohomomorphism& f);
json matrix_to_json(const Basis& b, const Matrix& m);
json field_to_json(const Basis& b, const VectorField& v);

// Entry point of the kscyc tool.  Reports go to `out`, diagnostics and
// timing to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kscyc::cli
