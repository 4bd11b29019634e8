#include "latgame/recurrence.hpp"

#include <algorithm>
#include <stdexcept>

#include "latgame/feasibility.hpp"

namespace latgame {

char to_char(Variant v) {
  switch (v) {
    case Variant::A: return 'A';
    case Variant::B: return 'B';
    case Variant::C: return 'C';
  }
  return '?';
}

Variant parse_variant(const std::string& text) {
  if (text == "A" || text == "a") return Variant::A;
  if (text == "B" || text == "b") return Variant::B;
  if (text == "C" || text == "c") return Variant::C;
  throw std::invalid_argument("unknown variant '" + text + "' (A, B or C)");
}

// ---------------------------------------------------------------- spec

Symbol RecurrenceSpec::apply_g(const std::vector<Symbol>& args) const {
  std::size_t idx = 0;
  for (Symbol a : args) idx = idx * alphabet.size() + static_cast<std::size_t>(a);
  return g.at(idx);
}

Symbol RecurrenceSpec::symbol(const std::string& name) const {
  auto it = std::find(alphabet.begin(), alphabet.end(), name);
  if (it == alphabet.end()) throw std::invalid_argument("unknown symbol '" + name + "'");
  return static_cast<Symbol>(it - alphabet.begin());
}

IntVec RecurrenceSpec::validate() const {
  if (!(module.ambient() == lattice)) throw std::invalid_argument("module lives over a different lattice");
  if (betas.empty()) throw std::invalid_argument("need at least one beta");
  if (alphabet.empty()) throw std::invalid_argument("empty alphabet");
  for (std::size_t a = 0; a < alphabet.size(); ++a)
    for (std::size_t b = a + 1; b < alphabet.size(); ++b)
      if (alphabet[a] == alphabet[b]) throw std::invalid_argument("duplicate symbol '" + alphabet[a] + "'");
  for (const auto& b : betas) {
    require_dim(b, 2, "beta");
    if (b.is_zero()) throw std::invalid_argument("beta must be nonzero");
    if (!lattice.contains(b)) throw std::invalid_argument("beta " + b.str() + " is not in L");
  }
  FunctionalResult h = positive_functional(betas, 2);
  if (!h.feasible()) throw std::invalid_argument("betas do not lie in a common open halfspace containing N^2");
  bool first = false, second = false;
  for (const auto& b : betas) {
    first = first || b[0] <= 0;
    second = second || b[1] <= 0;
  }
  if (!first || !second) throw std::invalid_argument("betas fail the tangent cone condition for N^2");

  std::size_t rows = 1;
  for (int i = 0; i < r(); ++i) rows *= alphabet.size();
  if (g.size() != rows) throw std::invalid_argument("g must have |alphabet|^r entries");
  auto valid = [&](Symbol s) { return s >= 0 && s < alphabet_size(); };
  if (!std::all_of(g.begin(), g.end(), valid)) throw std::invalid_argument("g has a value outside the alphabet");
  if (!valid(sigma0)) throw std::invalid_argument("sigma0 outside the alphabet");

  const auto& gens = module.generators();
  if (f0.size() != gens.size()) throw std::invalid_argument("f0 must be given exactly on the module generators");
  for (const auto& l : gens) {
    auto it = f0.find(l);
    if (it == f0.end()) throw std::invalid_argument("f0 is missing generator " + l.str());
    if (!valid(it->second)) throw std::invalid_argument("f0 value outside the alphabet at " + l.str());
  }
  return *h.functional;
}

// ---------------------------------------------------------------- evaluation

Symbol RecurrenceEvaluator::operator()(const IntVec& l) {
  if (!spec_.module.contains(l)) throw std::domain_error(l.str() + " is not in the module M");
  if (auto it = memo_.find(l); it != memo_.end()) return it->second;

  std::vector<IntVec> stack{l};
  std::vector<Symbol> args;
  while (!stack.empty()) {
    const IntVec cur = stack.back();
    if (memo_.contains(cur)) {
      stack.pop_back();
      continue;
    }
    if (spec_.module.is_generator(cur)) {
      memo_.emplace(cur, spec_.f0.at(cur));
      stack.pop_back();
      continue;
    }
    bool all_in = true;
    bool ready = true;
    args.clear();
    for (const auto& b : spec_.betas) {
      const IntVec prev = cur - b;
      if (!spec_.module.contains(prev)) {
        all_in = false;
        break;
      }
      auto it = memo_.find(prev);
      if (it == memo_.end()) {
        stack.push_back(prev);
        ready = false;
      } else {
        args.push_back(it->second);
      }
    }
    if (!all_in) {
      memo_.emplace(cur, spec_.sigma0);
      stack.pop_back();
    } else if (ready) {
      memo_.emplace(cur, spec_.apply_g(args));
      stack.pop_back();
    }
  }
  return memo_.at(l);
}

Symbol eval_recurrence(const RecurrenceSpec& spec, const IntVec& l) {
  RecurrenceEvaluator ev(spec);
  return ev(l);
}

Outcome binom_parity_oracle(std::int64_t i, std::int64_t j) { return (i & j) == 0 ? Outcome::P : Outcome::N; }

RecurrenceSpec xor_spec() {
  RecurrenceSpec s;
  s.betas = {IntVec{1, 0}, IntVec{0, 1}};
  s.alphabet = {"P", "N"};
  // xor with P as true: equal arguments give N.
  s.g = {1, 0, 0, 1};
  s.sigma0 = 0;
  s.f0 = {{IntVec{0, 0}, 0}};
  return s;
}

// ---------------------------------------------------------------- encodings

std::optional<Symbol> Encoding::decode(const std::vector<Outcome>& bits) const {
  for (std::size_t sym = 0; sym < table.size(); ++sym)
    if (table[sym] == bits) return static_cast<Symbol>(sym);
  return std::nullopt;
}

Encoding identity_encoding() { return Encoding{1, {{Outcome::P}, {Outcome::N}}}; }
Encoding swapped_encoding() { return Encoding{1, {{Outcome::N}, {Outcome::P}}}; }

namespace {

// Calls fn on every argument tuple of g, in table order.
template <typename Fn>
void for_each_args(const RecurrenceSpec& spec, Fn fn) {
  std::vector<Symbol> args(static_cast<std::size_t>(spec.r()), 0);
  const int q = spec.alphabet_size();
  while (true) {
    fn(args);
    int k = spec.r() - 1;
    while (k >= 0 && ++args[static_cast<std::size_t>(k)] == q) args[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) return;
  }
}

bool bit_depends_on(const RecurrenceSpec& spec, const Encoding& enc, int bit, int arg) {
  bool depends = false;
  for_each_args(spec, [&](const std::vector<Symbol>& args) {
    if (depends) return;
    const Outcome base = enc(spec.apply_g(args))[static_cast<std::size_t>(bit)];
    auto alt = args;
    for (Symbol s = 0; s < spec.alphabet_size() && !depends; ++s) {
      alt[static_cast<std::size_t>(arg)] = s;
      if (enc(spec.apply_g(alt))[static_cast<std::size_t>(bit)] != base) depends = true;
    }
  });
  return depends;
}

}  // namespace

EncodingReport validate_encoding(const RecurrenceSpec& spec, const Encoding& enc) {
  EncodingReport rep;
  auto fail = [&](std::string clause) {
    rep.ok = false;
    rep.failed_clause = std::move(clause);
    return rep;
  };
  if (enc.s < 1) return fail("code length s >= 1");
  if (enc.table.size() != spec.alphabet.size()) return fail("one code per symbol");
  for (const auto& code : enc.table)
    if (code.size() != static_cast<std::size_t>(enc.s)) return fail("every code has s bits");
  for (std::size_t a = 0; a < enc.table.size(); ++a)
    for (std::size_t b = a + 1; b < enc.table.size(); ++b)
      if (enc.table[a] == enc.table[b]) return fail("injective");
  if (std::any_of(enc(spec.sigma0).begin(), enc(spec.sigma0).end(), [](Outcome o) { return o == Outcome::P; }))
    return fail("enc(sigma0) = (N,...,N)");

  auto depends_with = [&](int bit, int axis) {
    for (int i = 0; i < spec.r(); ++i)
      if (spec.betas[static_cast<std::size_t>(i)][axis] <= 0 && bit_depends_on(spec, enc, bit, i)) return true;
    return false;
  };
  if (!depends_with(0, 0)) return fail("bit 1 depends on some argument i with (beta_i)_1 <= 0");
  if (!depends_with(enc.s - 1, 1)) return fail("bit s depends on some argument i with (beta_i)_2 <= 0");
  return rep;
}

TruthTable encoded_table(const RecurrenceSpec& spec, const Encoding& enc) {
  TruthTable t;
  t.s = enc.s;
  t.k = spec.r() * enc.s;
  if (t.k > 20) throw std::length_error("encoded table too large");
  t.rows.assign(std::size_t{1} << t.k, std::vector<Outcome>(static_cast<std::size_t>(enc.s), Outcome::N));
  for_each_args(spec, [&](const std::vector<Symbol>& args) {
    std::size_t x = 0;
    for (int i = 0; i < spec.r(); ++i)
      for (int j = 0; j < enc.s; ++j)
        if (enc(args[static_cast<std::size_t>(i)])[static_cast<std::size_t>(j)] == Outcome::P)
          x |= std::size_t{1} << (i * enc.s + j);
    t.rows[x] = enc(spec.apply_g(args));
  });
  return t;
}

// ---------------------------------------------------------------- circuits

int NorCircuit::add_vertex(Vertex v) {
  if (v.name.empty()) v.name = "v" + std::to_string(vertices_.size());
  vertices_.push_back(std::move(v));
  return static_cast<int>(vertices_.size()) - 1;
}

void NorCircuit::add_edge(int tail, int head) {
  const int n = static_cast<int>(vertices_.size());
  if (tail < 0 || tail >= n || head < 0 || head >= n) throw std::out_of_range("edge endpoint out of range");
  if (tail == head) throw std::invalid_argument("self loop");
  if (!has_edge(tail, head)) edges_.emplace_back(tail, head);
}

bool NorCircuit::has_edge(int tail, int head) const {
  return std::find(edges_.begin(), edges_.end(), std::make_pair(tail, head)) != edges_.end();
}

std::vector<int> NorCircuit::preds(int v) const {
  std::vector<int> out;
  for (auto [a, b] : edges_)
    if (b == v) out.push_back(a);
  return out;
}

std::vector<int> NorCircuit::succs(int v) const {
  std::vector<int> out;
  for (auto [a, b] : edges_)
    if (a == v) out.push_back(b);
  return out;
}

int NorCircuit::input(int i, int j) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].role == Role::kInput && vertices_[v].i == i && vertices_[v].j == j) return static_cast<int>(v);
  throw std::out_of_range("no input in_" + std::to_string(i + 1) + std::to_string(j + 1));
}

int NorCircuit::output(int j) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].role == Role::kOutput && vertices_[v].j == j) return static_cast<int>(v);
  throw std::out_of_range("no output out_" + std::to_string(j + 1));
}

namespace {

std::optional<int> find_role(const std::vector<Vertex>& vs, Role role) {
  for (std::size_t v = 0; v < vs.size(); ++v)
    if (vs[v].role == role) return static_cast<int>(v);
  return std::nullopt;
}

}  // namespace

std::optional<int> NorCircuit::in_prime() const { return find_role(vertices_, Role::kInPrime); }
std::optional<int> NorCircuit::in_double_prime() const { return find_role(vertices_, Role::kInDoublePrime); }

std::vector<int> NorCircuit::topological_order() const {
  const std::size_t n = vertices_.size();
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : edges_) ++indeg[static_cast<std::size_t>(b)];
  std::vector<int> order, ready;
  for (std::size_t v = n; v-- > 0;)
    if (indeg[v] == 0) ready.push_back(static_cast<int>(v));
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    std::vector<int> next;
    for (int w : succs(v))
      if (--indeg[static_cast<std::size_t>(w)] == 0) next.push_back(w);
    std::sort(next.rbegin(), next.rend());
    ready.insert(ready.end(), next.begin(), next.end());
  }
  if (order.size() != n) throw std::logic_error("circuit has a cycle");
  return order;
}

void NorCircuit::validate() const {
  if (r_ < 1 || s_ < 1) throw std::invalid_argument("circuit needs r >= 1 and s >= 1");
  if (vertices_.empty()) throw std::invalid_argument("empty circuit");
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < s_; ++j) input(i, j);
  for (int j = 0; j < s_; ++j) output(j);
  for (auto [a, b] : edges_) {
    const Role rb = vertices_[static_cast<std::size_t>(b)].role;
    const Role ra = vertices_[static_cast<std::size_t>(a)].role;
    const bool feed = ra == Role::kInDoublePrime && rb == Role::kInPrime;
    if (!feed && (rb == Role::kInput || rb == Role::kInPrime || rb == Role::kInDoublePrime))
      throw std::invalid_argument("input " + vertices_[static_cast<std::size_t>(b)].name + " has an in-edge");
    if (ra == Role::kOutput) throw std::invalid_argument("output " + vertices_[static_cast<std::size_t>(a)].name + " has an out-edge");
  }
  topological_order();
  for (int i = 0; i < r_; ++i) {
    std::vector<char> seen(vertices_.size(), 0);
    std::vector<int> stack;
    for (int j = 0; j < s_; ++j) stack.push_back(input(i, j));
    bool reaches = false;
    while (!stack.empty() && !reaches) {
      const int v = stack.back();
      stack.pop_back();
      if (seen[static_cast<std::size_t>(v)]) continue;
      seen[static_cast<std::size_t>(v)] = 1;
      if (vertices_[static_cast<std::size_t>(v)].role == Role::kOutput) reaches = true;
      for (int w : succs(v)) stack.push_back(w);
    }
    if (!reaches) throw std::invalid_argument("no path from argument " + std::to_string(i + 1) + " to an output");
  }
}

std::vector<Outcome> eval_circuit_all(const NorCircuit& c, const std::vector<Outcome>& inputs,
                                      std::optional<Outcome> in_prime, std::optional<Outcome> in_double_prime) {
  if (inputs.size() != static_cast<std::size_t>(c.r() * c.s())) throw std::invalid_argument("wrong number of input values");
  if (c.in_prime().has_value() != in_prime.has_value()) throw std::invalid_argument("in' value required iff in' is present");
  if (c.in_double_prime().has_value() != in_double_prime.has_value())
    throw std::invalid_argument("in'' value required iff in'' is present");
  std::vector<Outcome> val(c.size(), Outcome::N);
  for (int v : c.topological_order()) {
    const Vertex& vx = c.vertices()[static_cast<std::size_t>(v)];
    switch (vx.role) {
      case Role::kInput: val[static_cast<std::size_t>(v)] = inputs[static_cast<std::size_t>(vx.i * c.s() + vx.j)]; break;
      case Role::kInPrime: val[static_cast<std::size_t>(v)] = *in_prime; break;
      case Role::kInDoublePrime: val[static_cast<std::size_t>(v)] = *in_double_prime; break;
      default: {
        bool any_p = false;
        for (int u : c.preds(v)) any_p = any_p || val[static_cast<std::size_t>(u)] == Outcome::P;
        val[static_cast<std::size_t>(v)] = nor_of(any_p);
      }
    }
  }
  return val;
}

std::vector<Outcome> eval_circuit(const NorCircuit& c, const std::vector<Outcome>& inputs, std::optional<Outcome> in_prime,
                                  std::optional<Outcome> in_double_prime) {
  auto val = eval_circuit_all(c, inputs, in_prime, in_double_prime);
  std::vector<Outcome> out;
  for (int j = 0; j < c.s(); ++j) out.push_back(val[static_cast<std::size_t>(c.output(j))]);
  return out;
}

NorCircuit synthesize_nor_circuit(const TruthTable& table, int max_inputs) {
  const int k = table.k;
  const int s = table.s;
  if (k < 1 || s < 1) throw std::invalid_argument("truth table needs k >= 1 and s >= 1");
  if (k > max_inputs) throw std::length_error("truth table with " + std::to_string(k) + " inputs exceeds the bound " +
                                              std::to_string(max_inputs));
  if (k % s != 0) throw std::invalid_argument("input count must be a multiple of the output count");
  if (table.rows.size() != (std::size_t{1} << k)) throw std::invalid_argument("truth table must have 2^k rows");
  for (const auto& row : table.rows)
    if (row.size() != static_cast<std::size_t>(s)) throw std::invalid_argument("truth table row of wrong width");

  NorCircuit c(k / s, s);
  std::vector<int> in(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) {
    const int i = a / s, j = a % s;
    in[static_cast<std::size_t>(a)] =
        c.add_vertex({Role::kInput, i, j, "in_" + std::to_string(i + 1) + "_" + std::to_string(j + 1)});
  }
  std::vector<int> inv(static_cast<std::size_t>(k), -1);
  auto inverter = [&](int a) {
    auto& slot = inv[static_cast<std::size_t>(a)];
    if (slot < 0) {
      slot = c.add_vertex({Role::kInternal, -1, -1, "not_" + c.vertices()[static_cast<std::size_t>(in[static_cast<std::size_t>(a)])].name});
      c.add_edge(in[static_cast<std::size_t>(a)], slot);
    }
    return slot;
  };

  std::vector<int> minterm(table.rows.size(), -1);
  for (std::size_t x = 0; x < table.rows.size(); ++x) {
    const auto& row = table.rows[x];
    if (std::none_of(row.begin(), row.end(), [](Outcome o) { return o == Outcome::P; })) continue;
    const int g = c.add_vertex({Role::kInternal, -1, -1, "row_" + std::to_string(x)});
    for (int a = 0; a < k; ++a) c.add_edge((x >> a) & 1U ? inverter(a) : in[static_cast<std::size_t>(a)], g);
    minterm[x] = g;
  }
  for (int j = 0; j < s; ++j) {
    const int mid = c.add_vertex({Role::kInternal, -1, -1, "any_" + std::to_string(j + 1)});
    for (std::size_t x = 0; x < table.rows.size(); ++x)
      if (table.rows[x][static_cast<std::size_t>(j)] == Outcome::P) c.add_edge(minterm[x], mid);
    const int out = c.add_vertex({Role::kOutput, -1, j, "out_" + std::to_string(j + 1)});
    c.add_edge(mid, out);
  }
  return c;
}

NorCircuit extend_circuit(const NorCircuit& base, Variant variant) {
  if (base.in_prime()) throw std::invalid_argument("circuit already has in'");
  if (base.in_double_prime()) throw std::invalid_argument("circuit already has in''");
  NorCircuit c = base;
  const int ip = c.add_vertex({Role::kInPrime, -1, -1, "in'"});
  for (int j = 0; j < c.s(); ++j) c.add_edge(ip, c.output(j));
  if (variant == Variant::B) {
    std::vector<int> targets;
    for (int j = 0; j < c.s(); ++j) {
      const int out = c.output(j);
      targets.push_back(out);
      for (int v : c.preds(out)) targets.push_back(v);
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    const int idp = c.add_vertex({Role::kInDoublePrime, -1, -1, "in''"});
    for (int v : targets) c.add_edge(idp, v);
  }
  return c;
}

NorCircuit xor_circuit() {
  NorCircuit c(2, 1);
  c.add_vertex({Role::kInput, 0, 0, "v0"});
  c.add_vertex({Role::kInput, 1, 0, "v1"});
  for (int v = 2; v <= 5; ++v) c.add_vertex({Role::kInternal, -1, -1, "v" + std::to_string(v)});
  c.add_vertex({Role::kOutput, -1, 0, "v6"});
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 2}, {1, 3}, {0, 4}, {1, 4}, {2, 5}, {3, 5}, {4, 6}, {5, 6}})
    c.add_edge(a, b);
  return c;
}

// ---------------------------------------------------------------- cellular automata

namespace {

void check_ca(const CaSpec& ca) {
  if (ca.rule < 0 || ca.rule > 255) throw std::invalid_argument("rule must be in 0..255");
  if (ca.rule & 1) throw std::invalid_argument("rule is not quiescent: 000 must map to 0");
  if (ca.word.empty()) throw std::invalid_argument("empty initial word");
  for (char ch : ca.word)
    if (ch != '0' && ch != '1') throw std::invalid_argument("initial word must be over {0,1}");
  if (ca.steps < 0) throw std::invalid_argument("steps must be >= 0");
}

}  // namespace

IntVec ca_cell(const CaSpec& ca, std::int64_t x, std::int64_t t) {
  const auto c = static_cast<std::int64_t>(ca.word.size()) + 1;
  return IntVec{t + x + c, t - x + c};
}

RecurrenceSpec ca_to_recurrence(const CaSpec& ca) {
  check_ca(ca);
  const Sublattice even = Sublattice::even_sum();
  const auto n = static_cast<std::int64_t>(ca.word.size());
  std::vector<IntVec> gens;
  std::map<IntVec, Symbol> f0;
  // The whole antidiagonal t = 0 of L+ generates M, so M has finite
  // complement; c = n + 1 keeps at least two background cells per side.
  const std::int64_t c = n + 1;
  for (std::int64_t x = -c; x <= c; ++x) {
    const IntVec l = ca_cell(ca, x, 0);
    gens.push_back(l);
    f0[l] = x >= 0 && x < n && ca.word[static_cast<std::size_t>(x)] == '1' ? 1 : 0;
  }
  RecurrenceSpec s;
  s.lattice = even;
  s.module = ModuleIdeal(even, gens);
  s.betas = {IntVec{2, 0}, IntVec{1, 1}, IntVec{0, 2}};
  s.alphabet = {"0", "1"};
  s.g.resize(8);
  for (int left = 0; left < 2; ++left)
    for (int center = 0; center < 2; ++center)
      for (int right = 0; right < 2; ++right) s.g[static_cast<std::size_t>(left * 4 + center * 2 + right)] = (ca.rule >> (left * 4 + center * 2 + right)) & 1;
  s.sigma0 = 0;
  s.f0 = std::move(f0);
  return s;
}

Encoding ca_encoding() { return Encoding{1, {{Outcome::N}, {Outcome::P}}}; }

}  // namespace latgame
