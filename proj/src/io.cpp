#include "latgame/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "latgame/builtin.hpp"

namespace latgame::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw FormatError(what); }

// Objects one key per line, arrays of rows one row per line, rows compact.
void format(const json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + "  " + json(k).dump() + ": ";
      format(v, indent + 2, out);
    }
    out += "\n" + pad + "}";
    return;
  }
  const bool nested = j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); });
  if (nested) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad + "  ";
      if (j[k].is_object())
        format(j[k], indent + 2, out);
      else
        out += j[k].dump();
      if (k + 1 < j.size()) out += ",";
      out += "\n";
    }
    out += pad + "]";
    return;
  }
  out += j.dump();
}

std::string render(const json& j) {
  std::string out;
  format(j, 0, out);
  out += "\n";
  return out;
}

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string(what) + ": " + e.what());
  }
}

void require_keys(const json& j, const char* what, const std::set<std::string>& allowed,
                  const std::set<std::string>& required) {
  if (!j.is_object()) fail(std::string(what) + ": expected an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) fail(std::string(what) + ": unknown key '" + k + "'");
  for (const auto& k : required)
    if (!j.contains(k)) fail(std::string(what) + ": missing key '" + k + "'");
}

std::int64_t to_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) fail(what + ": expected an integer");
  return j.get<std::int64_t>();
}

const std::string& to_str(const json& j, const std::string& what) {
  if (!j.is_string()) fail(what + ": expected a string");
  return j.get_ref<const std::string&>();
}

IntVec to_vec(const json& j, const std::string& what, int dim = 0) {
  if (!j.is_array() || j.empty() || j.size() > static_cast<std::size_t>(IntVec::kMaxDim))
    fail(what + ": expected an integer vector of length 1..3");
  if (dim && j.size() != static_cast<std::size_t>(dim)) fail(what + ": expected length " + std::to_string(dim));
  std::vector<std::int64_t> c;
  for (const auto& e : j) c.push_back(to_int(e, what));
  return IntVec(std::span<const std::int64_t>(c));
}

std::vector<IntVec> to_vecs(const json& j, const std::string& what, int dim = 0) {
  if (!j.is_array()) fail(what + ": expected an array");
  std::vector<IntVec> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(to_vec(j[k], what + "[" + std::to_string(k) + "]", dim));
  return out;
}

json from_vec(const IntVec& v) {
  json a = json::array();
  for (auto c : v.coords()) a.push_back(c);
  return a;
}

json from_vecs(const std::vector<IntVec>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(from_vec(v));
  return a;
}

Symbol to_symbol(const RecurrenceSpec& s, const json& j, const std::string& what) {
  const auto& name = to_str(j, what);
  const auto it = std::find(s.alphabet.begin(), s.alphabet.end(), name);
  if (it == s.alphabet.end()) fail(what + ": '" + name + "' is not in the alphabet");
  return static_cast<Symbol>(it - s.alphabet.begin());
}

std::vector<Outcome> to_bits(const std::string& text, const std::string& what) {
  std::vector<Outcome> bits;
  for (char c : text) {
    if (c == 'P')
      bits.push_back(Outcome::P);
    else if (c == 'N')
      bits.push_back(Outcome::N);
    else
      fail(what + ": code letters must be P or N");
  }
  if (bits.empty()) fail(what + ": empty code");
  return bits;
}

std::string from_bits(const std::vector<Outcome>& bits) {
  std::string s;
  for (auto b : bits) s += to_char(b);
  return s;
}

const char* role_name(Role r) {
  switch (r) {
    case Role::kInput: return "input";
    case Role::kInternal: return "internal";
    case Role::kOutput: return "output";
    case Role::kInPrime: return "in-prime";
    case Role::kInDoublePrime: return "in-double-prime";
  }
  return "?";
}

Role to_role(const std::string& s) {
  for (Role r : {Role::kInput, Role::kInternal, Role::kOutput, Role::kInPrime, Role::kInDoublePrime})
    if (s == role_name(r)) return r;
  fail("sidecar: unknown vertex role '" + s + "'");
}

Variant to_variant(const json& j, const std::string& what) {
  try {
    return parse_variant(to_str(j, what));
  } catch (const FormatError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    fail(what + ": " + e.what());
  }
}

SpecFile read_ca(const json& j) {
  require_keys(j, "spec", {"ca", "variant"}, {"ca"});
  const json& c = j["ca"];
  require_keys(c, "spec.ca", {"rule", "word", "steps"}, {"rule", "word"});
  CaSpec ca;
  ca.rule = static_cast<int>(to_int(c["rule"], "spec.ca.rule"));
  ca.word = to_str(c["word"], "spec.ca.word");
  if (c.contains("steps")) ca.steps = static_cast<int>(to_int(c["steps"], "spec.ca.steps"));
  SpecFile sf;
  try {
    sf.spec = ca_to_recurrence(ca);
  } catch (const std::invalid_argument& e) {
    fail(std::string("spec.ca: ") + e.what());
  }
  sf.enc = ca_encoding();
  sf.variant = j.contains("variant") ? to_variant(j["variant"], "spec.variant") : Variant::B;
  sf.ca = ca;
  return sf;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write '" + path + "'");
  out << text;
  if (!out) throw FileError("write to '" + path + "' failed");
}

// ---------------------------------------------------------------- rulesets

std::string write_ruleset(const GameSpec& game) {
  json j;
  j["dim"] = game.dim();
  j["moves"] = from_vecs(game.ruleset().moves());
  if (!game.defeated().is_empty_literal()) j["defeated"] = game.defeated().str();
  return render(j);
}

GameSpec read_ruleset(const std::string& text) {
  const json j = parse(text, "ruleset");
  require_keys(j, "ruleset", {"defeated", "dim", "moves"}, {"dim", "moves"});
  const auto dim = to_int(j["dim"], "ruleset.dim");
  if (dim < 1 || dim > IntVec::kMaxDim) fail("ruleset.dim: must be 1..3");
  auto moves = to_vecs(j["moves"], "ruleset.moves", static_cast<int>(dim));
  LatticeSet defeated;
  if (j.contains("defeated")) {
    try {
      defeated = LatticeSet::parse(to_str(j["defeated"], "ruleset.defeated"));
    } catch (const FormatError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      fail(std::string("ruleset.defeated: ") + e.what());
    }
  }
  try {
    return GameSpec(Ruleset(static_cast<int>(dim), std::move(moves)), std::move(defeated));
  } catch (const std::invalid_argument& e) {
    fail(std::string("ruleset: ") + e.what());
  }
}

GameSpec load_ruleset(const std::string& name_or_path) {
  if (builtin::is_name(name_or_path)) return GameSpec(builtin::by_name(name_or_path));
  return read_ruleset(read_file(name_or_path));
}

// ---------------------------------------------------------------- specs

SpecFile read_spec(const std::string& text) {
  const json j = parse(text, "spec");
  if (j.is_object() && j.contains("ca")) return read_ca(j);
  require_keys(j, "spec",
               {"alphabet", "betas", "encoding", "f0", "g", "lattice", "module", "sigma0", "variant"},
               {"alphabet", "betas", "encoding", "g", "sigma0"});
  SpecFile sf;
  RecurrenceSpec& s = sf.spec;
  try {
    if (j.contains("lattice")) {
      const auto rows = to_vecs(j["lattice"], "spec.lattice", 2);
      if (rows.size() != 2) fail("spec.lattice: expected two basis rows");
      s.lattice = Sublattice(rows[0], rows[1]);
    }
    s.module = j.contains("module") ? ModuleIdeal(s.lattice, to_vecs(j["module"], "spec.module", 2))
                                    : ModuleIdeal::positive_part(s.lattice);
  } catch (const FormatError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    fail(std::string("spec: ") + e.what());
  }
  s.betas = to_vecs(j["betas"], "spec.betas", 2);
  if (!j["alphabet"].is_array()) fail("spec.alphabet: expected an array");
  for (const auto& a : j["alphabet"]) s.alphabet.push_back(to_str(a, "spec.alphabet"));
  if (!j["g"].is_array()) fail("spec.g: expected an array");
  for (std::size_t k = 0; k < j["g"].size(); ++k) s.g.push_back(to_symbol(s, j["g"][k], "spec.g[" + std::to_string(k) + "]"));
  s.sigma0 = to_symbol(s, j["sigma0"], "spec.sigma0");
  if (j.contains("f0")) {
    if (!j["f0"].is_array()) fail("spec.f0: expected an array");
    for (std::size_t k = 0; k < j["f0"].size(); ++k) {
      const std::string what = "spec.f0[" + std::to_string(k) + "]";
      const json& e = j["f0"][k];
      require_keys(e, what.c_str(), {"l", "value"}, {"l", "value"});
      if (!s.f0.emplace(to_vec(e["l"], what + ".l", 2), to_symbol(s, e["value"], what + ".value")).second)
        fail(what + ": duplicate point");
    }
  }
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    fail(std::string("spec: ") + e.what());
  }

  const json& enc = j["encoding"];
  if (enc.is_string()) {
    if (enc == "identity")
      sf.enc = identity_encoding();
    else if (enc == "swapped")
      sf.enc = swapped_encoding();
    else
      fail("spec.encoding: expected identity, swapped or a table");
    if (s.alphabet_size() != 2) fail("spec.encoding: named encodings need a two-letter alphabet");
  } else {
    if (!enc.is_object()) fail("spec.encoding: expected a string or an object");
    sf.enc.table.assign(static_cast<std::size_t>(s.alphabet_size()), {});
    for (const auto& [k, v] : enc.items()) {
      const Symbol sym = to_symbol(s, json(k), "spec.encoding");
      sf.enc.table[static_cast<std::size_t>(sym)] = to_bits(to_str(v, "spec.encoding." + k), "spec.encoding." + k);
    }
    for (std::size_t k = 0; k < sf.enc.table.size(); ++k)
      if (sf.enc.table[k].empty()) fail("spec.encoding: no code for '" + s.alphabet[k] + "'");
    sf.enc.s = static_cast<int>(sf.enc.table[0].size());
    for (const auto& code : sf.enc.table)
      if (static_cast<int>(code.size()) != sf.enc.s) fail("spec.encoding: codes differ in length");
  }
  const auto rep = validate_encoding(s, sf.enc);
  if (!rep.ok) fail("spec.encoding: " + rep.failed_clause);

  if (j.contains("variant")) sf.variant = to_variant(j["variant"], "spec.variant");
  return sf;
}

SpecFile load_spec(const std::string& path) { return read_spec(read_file(path)); }

std::string write_spec(const SpecFile& sf) {
  const RecurrenceSpec& s = sf.spec;
  json j;
  j["lattice"] = from_vecs({s.lattice.b1(), s.lattice.b2()});
  j["module"] = from_vecs(s.module.generators());
  j["betas"] = from_vecs(s.betas);
  j["alphabet"] = s.alphabet;
  json g = json::array();
  for (Symbol v : s.g) g.push_back(s.alphabet[static_cast<std::size_t>(v)]);
  j["g"] = g;
  j["sigma0"] = s.alphabet[static_cast<std::size_t>(s.sigma0)];
  json f0 = json::array();
  for (const auto& [l, v] : s.f0) f0.push_back({{"l", from_vec(l)}, {"value", s.alphabet[static_cast<std::size_t>(v)]}});
  j["f0"] = f0;
  json enc = json::object();
  for (std::size_t k = 0; k < sf.enc.table.size(); ++k) enc[s.alphabet[k]] = from_bits(sf.enc.table[k]);
  j["encoding"] = enc;
  j["variant"] = std::string(1, to_char(sf.variant));
  return render(j);
}

NorCircuit build_circuit(const SpecFile& sf, Variant variant) {
  return extend_circuit(synthesize_nor_circuit(encoded_table(sf.spec, sf.enc)), variant);
}

// ---------------------------------------------------------------- sidecars

std::string write_sidecar(const CompiledGame& cg, std::uint64_t seed) {
  const auto& pl = cg.placement;
  json j;
  j["m"] = pl.m;
  j["I"] = from_vecs(pl.I);
  j["nu"] = from_vec(pl.nu);
  j["seed"] = seed;
  j["variant"] = std::string(1, to_char(cg.variant));
  json vs = json::array();
  const auto& verts = cg.circuit.vertices();
  for (std::size_t k = 0; k < verts.size(); ++k) {
    json v{{"name", verts[k].name}, {"role", role_name(verts[k].role)}, {"pos", from_vec(pl.pos.at(k))}};
    if (verts[k].i >= 0) v["i"] = verts[k].i;
    if (verts[k].j >= 0) v["j"] = verts[k].j;
    vs.push_back(v);
  }
  json edges = json::array();
  for (auto [a, b] : cg.circuit.edges()) edges.push_back({a, b});
  j["circuit"] = {{"r", cg.circuit.r()}, {"s", cg.circuit.s()}, {"vertices", vs}, {"edges", edges}};
  json lines = json::object();
  for (const auto& line : cg.lines) lines[line.label] = from_vecs(line.moves);
  j["lines"] = lines;
  return render(j);
}

Sidecar read_sidecar(const std::string& text) {
  const json j = parse(text, "sidecar");
  require_keys(j, "sidecar", {"I", "circuit", "lines", "m", "nu", "seed", "variant"},
               {"I", "circuit", "m", "nu", "variant"});
  Sidecar sc;
  sc.placement.m = to_int(j["m"], "sidecar.m");
  sc.placement.I = to_vecs(j["I"], "sidecar.I", 2);
  sc.placement.nu = to_vec(j["nu"], "sidecar.nu", 2);
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) fail("sidecar.seed: expected a nonnegative integer");
    sc.seed = j["seed"].get<std::uint64_t>();
  }
  sc.variant = to_variant(j["variant"], "sidecar.variant");

  const json& c = j["circuit"];
  require_keys(c, "sidecar.circuit", {"edges", "r", "s", "vertices"}, {"edges", "r", "s", "vertices"});
  sc.circuit = NorCircuit(static_cast<int>(to_int(c["r"], "sidecar.circuit.r")),
                          static_cast<int>(to_int(c["s"], "sidecar.circuit.s")));
  if (!c["vertices"].is_array()) fail("sidecar.circuit.vertices: expected an array");
  for (std::size_t k = 0; k < c["vertices"].size(); ++k) {
    const std::string what = "sidecar.circuit.vertices[" + std::to_string(k) + "]";
    const json& v = c["vertices"][k];
    require_keys(v, what.c_str(), {"i", "j", "name", "pos", "role"}, {"name", "pos", "role"});
    Vertex vx;
    vx.role = to_role(to_str(v["role"], what + ".role"));
    vx.name = to_str(v["name"], what + ".name");
    if (v.contains("i")) vx.i = static_cast<int>(to_int(v["i"], what + ".i"));
    if (v.contains("j")) vx.j = static_cast<int>(to_int(v["j"], what + ".j"));
    sc.circuit.add_vertex(vx);
    sc.placement.pos.push_back(to_vec(v["pos"], what + ".pos", 2));
  }
  if (!c["edges"].is_array()) fail("sidecar.circuit.edges: expected an array");
  try {
    for (const auto& e : c["edges"]) {
      if (!e.is_array() || e.size() != 2) fail("sidecar.circuit.edges: expected [tail, head] pairs");
      sc.circuit.add_edge(static_cast<int>(to_int(e[0], "edge")), static_cast<int>(to_int(e[1], "edge")));
    }
    sc.circuit.validate();
    sc.placement.validate(sc.circuit.size());
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    fail(std::string("sidecar: ") + e.what());
  }

  if (j.contains("lines")) {
    const json& ls = j["lines"];
    if (!ls.is_object()) fail("sidecar.lines: expected an object");
    // Emission order first, then anything else in key order.
    std::vector<std::string> order = line_labels();
    for (const auto& [k, v] : ls.items())
      if (std::find(order.begin(), order.end(), k) == order.end()) order.push_back(k);
    for (const auto& label : order)
      if (ls.contains(label)) sc.lines.push_back({label, to_vecs(ls[label], "sidecar.lines." + label, 3)});
  }
  return sc;
}

std::string sidecar_path(const std::string& ruleset_path) {
  const std::string ext = ".json";
  if (ruleset_path.size() > ext.size() && ruleset_path.ends_with(ext))
    return ruleset_path.substr(0, ruleset_path.size() - ext.size()) + ".placement.json";
  return ruleset_path + ".placement.json";
}

}  // namespace latgame::io
