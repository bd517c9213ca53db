#include <fstream>
#include <sstream>

#include "kscyc/cli.hpp"

namespace kscyc::cli {

namespace {

const json& req(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw InputError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(path + ": missing field \"" + key + "\"");
  return *it;
}

std::string req_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw InputError(path + ": expected a string");
  return j.get<std::string>();
}

int req_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InputError(path + ": expected an integer");
  return j.get<int>();
}

Rational req_rational(const json& j, const std::string& path) {
  try {
    return parse_rational(req_string(j, path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

const json& req_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected an array");
  return j;
}

void check_schema(const json& j, const char* kind) {
  const int s = req_int(req(j, "schema", "<root>"), "schema");
  if (s != 1) throw InputError("schema: unsupported version " + std::to_string(s));
  if (kind) {
    const std::string k = req_string(req(j, "kind", "<root>"), "kind");
    if (k != kind) throw InputError("kind: expected \"" + std::string(kind) + "\", got \"" + k + "\"");
  }
}

// "c": "p/q"  or  "c": [{"T": "lambda", "c": "p/q"}, ...]
Series req_coefficient(const json& j, const std::string& path, bool allow_energy) {
  Series s;
  if (j.is_string()) {
    add_term(s, Rational(0), req_rational(j, path));
    return s;
  }
  if (!j.is_array()) throw InputError(path + ": expected a rational string or a T-list");
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    const Rational e = req_rational(req(j[i], "T", p), p + ".T");
    if (!allow_energy && !is_zero(e))
      throw InputError(p + ": energy tag on an unfiltered structure");
    add_term(s, e, req_rational(req(j[i], "c", p), p + ".c"));
  }
  return s;
}

Letter req_id(const Basis& b, const json& j, const std::string& path) {
  try {
    return static_cast<Letter>(b.index_of(req_string(j, path)));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Word req_ids(const Basis& b, const json& j, const std::string& path) {
  Word w;
  req_array(j, path);
  for (std::size_t i = 0; i < j.size(); ++i)
    w.push_back(req_id(b, j[i], path + "[" + std::to_string(i) + "]"));
  return w;
}

Letter req_form_letter(const Basis& b, const json& j, const std::string& path) {
  const std::string s = req_string(j, path);
  const bool d = s.rfind("dx:", 0) == 0;
  if (!d && s.rfind("x:", 0) != 0)
    throw InputError(path + ": form letter must look like x:id or dx:id");
  int i;
  try {
    i = b.index_of(s.substr(d ? 3 : 2));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
  return d ? dx_letter(i) : x_letter(i);
}

json ids_to_json(const Basis& b, Word::const_iterator first, Word::const_iterator last) {
  json a = json::array();
  for (auto it = first; it != last; ++it) a.push_back(b[letter_index(*it)].id);
  return a;
}

Cochain entries_to_cochain(const Basis& b, const json& arr, const std::string& path,
                           bool allow_energy) {
  Cochain f;
  req_array(arr, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    Word w = req_ids(b, req(arr[i], "inputs", p), p + ".inputs");
    w.push_back(req_id(b, req(arr[i], "probe", p), p + ".probe"));
    for (const auto& [e, c] : req_coefficient(req(arr[i], "c", p), p + ".c", allow_energy))
      add_term(f, Mono{e, w}, c);
  }
  return f;
}

json cochain_entries(const Basis& b, const Cochain& f) {
  std::map<Word, Series> idx = index_by_word(f);
  json a = json::array();
  for (const auto& [w, s] : idx)
    a.push_back({{"inputs", ids_to_json(b, w.begin(), w.end() - 1)},
                 {"probe", b[w.back()].id},
                 {"c", coefficient_to_json(s)}});
  return a;
}

}  // namespace

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto p = msg.find("parse error"); p != std::string::npos) msg = msg.substr(p);
    throw InputError(what + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AlgebraSpec algebra_from_json(const json& j, const Overrides& o) {
  check_schema(j, nullptr);
  if (auto k = j.find("kind"); k != j.end() && *k != "algebra")
    throw InputError("kind: expected \"algebra\"");

  std::vector<BasisElement> elems;
  const json& jb = req_array(req(j, "basis", "<root>"), "basis");
  for (std::size_t i = 0; i < jb.size(); ++i) {
    const std::string p = "basis[" + std::to_string(i) + "]";
    BasisElement e;
    e.id = req_string(req(jb[i], "id", p), p + ".id");
    e.degree = req_int(req(jb[i], "degree", p), p + ".degree");
    if (auto u = jb[i].find("unit"); u != jb[i].end()) {
      if (!u->is_boolean()) throw InputError(p + ".unit: expected a boolean");
      e.is_unit = u->get<bool>();
    }
    elems.push_back(std::move(e));
  }
  Basis basis;
  try {
    basis = Basis(std::move(elems));
  } catch (const InputError& e) {
    throw InputError(std::string("basis: ") + e.what());
  }

  int order = 8;
  std::optional<Rational> cutoff;
  if (auto t = j.find("truncation"); t != j.end()) {
    if (auto n = t->find("order"); n != t->end()) order = req_int(*n, "truncation.order");
    if (auto e = t->find("energy_cutoff"); e != t->end())
      cutoff = req_rational(*e, "truncation.energy_cutoff");
  }
  if (o.order) order = *o.order;
  if (o.energy_cutoff) cutoff = o.energy_cutoff;
  if (order < 1) throw InputError("truncation.order: must be >= 1");

  AlgebraSpec spec;
  Truncation trunc;
  trunc.order = order;
  if (auto m = j.find("monoid"); m != j.end()) {
    spec.filtered = true;
    std::vector<MonoidElement> gens;
    const json& jg = req_array(req(*m, "generators", "monoid"), "monoid.generators");
    for (std::size_t i = 0; i < jg.size(); ++i) {
      const std::string p = "monoid.generators[" + std::to_string(i) + "]";
      gens.push_back({req_rational(req(jg[i], "energy", p), p + ".energy"),
                      req_int(req(jg[i], "mu", p), p + ".mu")});
    }
    spec.monoid = GappedMonoid(std::move(gens), cutoff);
    trunc = spec.monoid.truncation(order);
  }
  spec.algebra = AInftyStructure(basis, trunc, spec.filtered);

  const json& ops = req_array(req(j, "ops", "<root>"), "ops");
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const std::string p = "ops[" + std::to_string(i) + "]";
    const Word in = req_ids(basis, req(ops[i], "inputs", p), p + ".inputs");
    Rational energy(0);
    int mu = 0;
    if (auto bt = ops[i].find("beta"); bt != ops[i].end()) {
      if (!spec.filtered) throw InputError(p + ".beta: beta tag without a monoid section");
      energy = req_rational(req(*bt, "energy", p + ".beta"), p + ".beta.energy");
      mu = req_int(req(*bt, "mu", p + ".beta"), p + ".beta.mu");
    }
    const json& outs = req_array(req(ops[i], "outputs", p), p + ".outputs");
    for (std::size_t k = 0; k < outs.size(); ++k) {
      const std::string q = p + ".outputs[" + std::to_string(k) + "]";
      const int out = req_id(basis, req(outs[k], "id", q), q + ".id");
      const Rational c = req_rational(req(outs[k], "c", q), q + ".c");
      try {
        spec.algebra.add_op(in, out, c, energy, mu);
      } catch (const InputError& e) {
        throw InputError(p + ": " + e.what());
      }
    }
  }

  if (auto g = j.find("pairing"); g != j.end()) {
    const std::size_t n = basis.size();
    const json& rows = req_array(*g, "pairing");
    if (rows.size() != n) throw InputError("pairing: expected " + std::to_string(n) + " rows");
    ConstantTwoForm w{Matrix(n, std::vector<Rational>(n))};
    for (std::size_t r = 0; r < n; ++r) {
      const std::string p = "pairing[" + std::to_string(r) + "]";
      const json& row = req_array(rows[r], p);
      if (row.size() != n) throw InputError(p + ": expected " + std::to_string(n) + " entries");
      for (std::size_t c = 0; c < n; ++c)
        w.g[r][c] = req_rational(row[c], p + "[" + std::to_string(c) + "]");
    }
    spec.pairing = std::move(w);
  }
  return spec;
}

Cochain cochain_from_json(const Basis& b, const json& j, bool allow_energy) {
  check_schema(j, "cochain");
  return entries_to_cochain(b, req(j, "entries", "<root>"), "entries", allow_energy);
}

NegativeCyclicCochain cocycle_from_json(const Basis& b, const json& j, bool allow_energy) {
  check_schema(j, "cocycle");
  NegativeCyclicCochain phi;
  if (auto r = j.find("reduced"); r != j.end()) {
    if (!r->is_boolean()) throw InputError("reduced: expected a boolean");
    phi.reduced = r->get<bool>();
  }
  const json& cols = req_array(req(j, "columns", "<root>"), "columns");
  if (cols.empty()) throw InputError("columns: need at least phi_0");
  for (std::size_t i = 0; i < cols.size(); ++i)
    phi.cols.push_back(
        entries_to_cochain(b, cols[i], "columns[" + std::to_string(i) + "]", allow_energy));
  return phi;
}

Vec form_from_json(const Basis& b, const json& j, bool allow_energy) {
  check_schema(j, "form");
  Vec v;
  const json& terms = req_array(req(j, "terms", "<root>"), "terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string p = "terms[" + std::to_string(i) + "]";
    const json& jw = req_array(req(terms[i], "word", p), p + ".word");
    Word w;
    for (std::size_t k = 0; k < jw.size(); ++k)
      w.push_back(req_form_letter(b, jw[k], p + ".word[" + std::to_string(k) + "]"));
    for (const auto& [e, c] : req_coefficient(req(terms[i], "c", p), p + ".c", allow_energy))
      add_term(v, Mono{e, w}, c);
  }
  return cyc(b, v);
}

BimodMap bimodmap_from_json(const Basis& b, const json& j) {
  check_schema(j, "bimodule_map");
  BimodMap psi;
  const json& es = req_array(req(j, "entries", "<root>"), "entries");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string p = "entries[" + std::to_string(i) + "]";
    Word w = req_ids(b, req(es[i], "L", p), p + ".L");
    const int pos = static_cast<int>(w.size());
    w.push_back(req_id(b, req(es[i], "v", p), p + ".v"));
    const Word r = req_ids(b, req(es[i], "R", p), p + ".R");
    w.insert(w.end(), r.begin(), r.end());
    w.push_back(req_id(b, req(es[i], "w", p), p + ".w"));
    for (const auto& [e, c] : req_coefficient(req(es[i], "c", p), p + ".c", true))
      add_term(psi, BKey{e, w, pos}, c);
  }
  return psi;
}

Cohomomorphism cohomomorphism_from_json(const Basis& b, const json& j) {
  check_schema(j, nullptr);
  Cohomomorphism f;
  const json& cs = req_array(req(j, "components", "<root>"), "components");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string p = "components[" + std::to_string(i) + "]";
    const Word in = req_ids(b, req(cs[i], "inputs", p), p + ".inputs");
    if (in.empty()) throw InputError(p + ".inputs: empty");
    const Letter out = req_id(b, req(cs[i], "output", p), p + ".output");
    for (const auto& [e, c] : req_coefficient(req(cs[i], "c", p), p + ".c", true))
      add_term(f.comp[in], Mono{e, {out}}, c);
    if (f.comp[in].empty()) f.comp.erase(in);
  }
  return f;
}

json coefficient_to_json(const Series& s) {
  if (s.size() == 1 && is_zero(s.begin()->first)) return format_rational(s.begin()->second);
  json a = json::array();
  for (const auto& [e, c] : s) a.push_back({{"T", format_rational(e)}, {"c", format_rational(c)}});
  return a;
}

json cochain_to_json(const Basis& b, const Cochain& f) {
  return {{"schema", 1}, {"kind", "cochain"}, {"entries", cochain_entries(b, f)}};
}

json cocycle_to_json(const Basis& b, const NegativeCyclicCochain& phi) {
  json cols = json::array();
  for (const auto& c : phi.cols) cols.push_back(cochain_entries(b, c));
  return {{"schema", 1}, {"kind", "cocycle"}, {"reduced", phi.reduced}, {"columns", cols}};
}

json form_to_json(const Basis& b, const Vec& v) {
  json terms = json::array();
  for (const auto& [w, s] : index_by_word(v)) {
    json word = json::array();
    for (Letter l : w) word.push_back(format_letter(b, l));
    terms.push_back({{"word", word}, {"c", coefficient_to_json(s)}});
  }
  return {{"schema", 1}, {"kind", "form"}, {"terms", terms}};
}

json bimodmap_to_json(const Basis& b, const BimodMap& psi) {
  std::map<std::pair<Word, int>, Series> idx;
  for (const auto& [k, c] : psi) add_term(idx[{k.w, k.pos}], k.e, c);
  json es = json::array();
  for (const auto& [key, s] : idx) {
    const auto& [w, pos] = key;
    es.push_back({{"L", ids_to_json(b, w.begin(), w.begin() + pos)},
                  {"v", b[w[pos]].id},
                  {"R", ids_to_json(b, w.begin() + pos + 1, w.end() - 1)},
                  {"w", b[w.back()].id},
                  {"c", coefficient_to_json(s)}});
  }
  return {{"schema", 1}, {"kind", "bimodule_map"}, {"entries", es}};
}

json cohomomorphism_to_json(const Basis& b, const Cohomomorphism& f) {
  json cs = json::array();
  for (const auto& [in, out] : f.comp)
    for (const auto& [o, s] : index_by_word(out))
      cs.push_back({{"inputs", ids_to_json(b, in.begin(), in.end())},
                    {"output", b[o[0]].id},
                    {"c", coefficient_to_json(s)}});
  return {{"schema", 1}, {"kind", "cohomomorphism"}, {"components", cs}};
}

json matrix_to_json(const Basis& b, const Matrix& m) {
  (void)b;
  json rows = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (const auto& x : r) row.push_back(format_rational(x));
    rows.push_back(row);
  }
  return rows;
}

json field_to_json(const Basis& b, const VectorField& v) {
  json comps = json::array();
  for (std::size_t i = 0; i < v.comp.size(); ++i) {
    if (v.comp[i].empty()) continue;
    comps.push_back({{"component", b[i].id}, {"terms", form_to_json(b, v.comp[i])["terms"]}});
  }
  return {{"parity", v.parity}, {"components", comps}};
}

}  // namespace kscyc::cli
