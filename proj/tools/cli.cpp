#include "cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "latgame/builtin.hpp"
#include "latgame/compiler.hpp"
#include "latgame/engine.hpp"
#include "latgame/io.hpp"
#include "latgame/recurrence.hpp"

namespace latgame::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Already reported.
struct Refused {};

// "3,4" or "3,4,1".
IntVec parse_vec(const std::string& text, const char* flag, int dim = 0) {
  std::vector<std::int64_t> c;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      c.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw UsageError(std::string(flag) + ": '" + text + "' is not a comma-separated integer list");
    }
  }
  if (c.empty() || c.size() > static_cast<std::size_t>(IntVec::kMaxDim) || text.back() == ',')
    throw UsageError(std::string(flag) + ": expected 1 to 3 integers, got '" + text + "'");
  if (dim && c.size() != static_cast<std::size_t>(dim))
    throw UsageError(std::string(flag) + ": expected " + std::to_string(dim) + " integers, got '" + text + "'");
  return IntVec(std::span<const std::int64_t>(c));
}

SolveMode parse_mode(const std::string& s) {
  if (s == "parallel") return SolveMode::kParallel;
  if (s == "serial") return SolveMode::kSerial;
  if (s == "topdown") return SolveMode::kTopDown;
  throw UsageError("--mode: expected parallel, serial or topdown");
}

ImageFormat parse_format(const std::string& s) {
  try {
    return parse_image_format(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--format: ") + e.what());
  }
}

std::string describe(const std::string& source, const GameSpec& g) {
  std::ostringstream os;
  os << source << ": " << g.ruleset().size() << " moves, dim " << g.dim();
  if (!g.defeated().is_empty_literal()) os << ", defeated " << g.defeated().str();
  return os.str();
}

// Window hi for a ruleset of dimension d, optionally forcing the last
// coordinate to cover `slice`.
IntVec window_for(const GameSpec& g, const IntVec& w, std::optional<std::int64_t> slice) {
  if (w.dim() == g.dim()) return w;
  if (g.dim() == 3 && w.dim() == 2) return w.lifted(slice.value_or(0));
  throw UsageError("--window: expected " + std::to_string(g.dim()) + " coordinates");
}

std::optional<std::int64_t> slice_for(const GameSpec& g, std::optional<std::int64_t> slice) {
  if (g.dim() == 3) return slice.value_or(0);
  if (slice && g.dim() == 2) throw UsageError("--slice: only 3-D rulesets have slices");
  return std::nullopt;
}

OutcomeGrid solve_or_refuse(const GameSpec& g, const IntVec& hi, SolveMode mode, std::ostream& err) {
  if (!check_pointedness(g.ruleset()).feasible()) {
    err << "solver refused: the ruleset is not pointed (see `axioms`)\n";
    throw Refused{};
  }
  return solve_window(g, hi, mode);
}

// Options shared by solve and render.
struct ImageArgs {
  std::string ruleset;
  std::string window;
  std::optional<std::int64_t> slice;
  std::string format = "text";
  std::int64_t highlight = 0;
  std::string mode = "parallel";
  std::string output;
};

void add_image_options(CLI::App* sub, ImageArgs& a, bool output_required) {
  sub->add_option("ruleset", a.ruleset, "ruleset file or builtin name")->required();
  sub->add_option("--window", a.window, "window corner x,y[,z]")->required();
  sub->add_option("--slice", a.slice, "last coordinate of the view (3-D rulesets)");
  sub->add_option("--highlight", a.highlight, "keep points with both coordinates divisible by m");
  sub->add_option("--mode", a.mode, "parallel, serial or topdown");
  auto* o = sub->add_option("-o,--output", a.output, "write the image here");
  if (output_required) o->required();
}

std::string image(const ImageArgs& a, ImageFormat fmt, std::ostream& err) {
  const GameSpec g = io::load_ruleset(a.ruleset);
  const auto slice = slice_for(g, a.slice);
  const IntVec hi = window_for(g, parse_vec(a.window, "--window"), slice);
  if (slice && (*slice < 0 || *slice > hi[2])) throw UsageError("--slice: outside the window");
  const auto grid = solve_or_refuse(g, hi, parse_mode(a.mode), err);
  return render_grid(grid, slice, fmt, a.highlight);
}

ImageFormat format_from_path(const std::string& path) {
  const auto dot = path.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  if (ext == "pbm") return ImageFormat::kPbm;
  if (ext == "svg") return ImageFormat::kSvg;
  if (ext == "txt" || ext == "text") return ImageFormat::kText;
  throw UsageError("render: cannot infer the format of '" + path + "' (.pbm, .svg or .txt)");
}

// ---------------------------------------------------------------- commands

int cmd_axioms(const std::string& source, std::ostream& out) {
  const GameSpec g = io::load_ruleset(source);
  out << describe(source, g) << '\n';
  const auto pr = check_pointedness(g.ruleset());
  if (pr.feasible()) {
    out << "pointed: yes, phi = " << *pr.witness << '\n';
  } else {
    out << "pointed: NO, zero combination:";
    const auto& mv = g.ruleset().moves();
    for (std::size_t k = 0; k < pr.certificate.size(); ++k) {
      if (!pr.certificate[k]) continue;
      const IntVec v = k < mv.size() ? mv[k] : IntVec::unit(g.dim(), static_cast<int>(k - mv.size()));
      out << ' ' << pr.certificate[k] << '*' << v;
    }
    out << '\n';
  }
  bool tangent = true;
  for (const auto& ax : check_tangent_cone(g.ruleset())) {
    out << "tangent cone (surrogate) axis " << ax.axis << ": " << (ax.pass ? "pass" : "FAIL");
    if (ax.witness) out << ", witness " << *ax.witness;
    out << '\n';
    tangent = tangent && ax.pass;
  }
  return pr.feasible() && tangent ? kOk : kCheckFailed;
}

int cmd_compile(const std::string& spec_path, const std::optional<std::string>& variant_flag, std::uint64_t seed,
                int attempts, bool core_only, const std::string& output, std::ostream& out, std::ostream& err) {
  const io::SpecFile sf = io::load_spec(spec_path);
  Variant variant = sf.variant;
  if (variant_flag) {
    try {
      variant = parse_variant(*variant_flag);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--variant: ") + e.what());
    }
  }
  if (attempts < 1) throw UsageError("--attempts: must be positive");
  const NorCircuit g = io::build_circuit(sf, variant);
  SearchOptions opts;
  opts.seed = seed;
  opts.attempts = attempts;
  Placement pl;
  try {
    pl = search_placement(g, sf.spec, variant, opts);
  } catch (const SearchFailed& e) {
    err << "compile: " << e.what() << "\nlast attempt:\n" << e.last_report().summary();
    return kCheckFailed;
  }
  const CompiledGame cg = emit_ruleset(pl, g, sf.spec, sf.enc, variant, core_only);
  out << "variant " << to_char(variant) << ", seed " << seed << ", " << g.size() << " gates, m = " << pl.m
      << ", nu = " << pl.nu << '\n';
  out << check_conditions(pl, g, sf.spec, variant).summary();
  for (const auto& line : cg.lines) out << line.label << ": " << line.moves.size() << " moves\n";
  io::write_file(output, io::write_ruleset(cg.game));
  const std::string side = io::sidecar_path(output);
  io::write_file(side, io::write_sidecar(cg, seed));
  out << "wrote " << output << " (" << cg.game.ruleset().size() << " moves) and " << side << '\n';
  return kOk;
}

int cmd_verify(const std::string& source, const std::optional<std::string>& spec_path,
               const std::optional<std::string>& placement_path, std::int64_t bound, std::ostream& out) {
  if (bound < 0) throw UsageError("--bound: must be >= 0");
  const GameSpec game = io::load_ruleset(source);
  io::SpecFile sf;
  CompiledGame cg{game, {}, NorCircuit(1, 1), Variant::C, {}};
  if (builtin::is_name(source) && !placement_path) {
    // The golden rulesets come with the xor circuit, identity encoding.
    if (spec_path) throw UsageError("verify: builtin rulesets use their own recurrence; drop --spec");
    sf.spec = xor_spec();
    sf.enc = identity_encoding();
    cg.placement = paper_placement();
    cg.circuit = xor_circuit();
  } else {
    if (!spec_path) throw UsageError("verify: --spec is required for ruleset files");
    sf = io::load_spec(*spec_path);
    io::Sidecar sc = io::read_sidecar(io::read_file(placement_path.value_or(io::sidecar_path(source))));
    cg.placement = std::move(sc.placement);
    cg.circuit = std::move(sc.circuit);
    cg.variant = sc.variant;
    cg.lines = std::move(sc.lines);
  }
  VerifyOptions opts;
  opts.bound = bound;
  const auto rep = verify_construction(cg, sf.spec, sf.enc, opts);
  out << describe(source, game) << '\n' << "window: nu . (m l) <= " << bound << '\n' << rep.summary();
  out << (rep.ok() ? "verify: pass\n" : "verify: FAIL\n");
  return rep.ok() ? kOk : kCheckFailed;
}

int cmd_probe(const std::string& source, std::optional<std::int64_t> slice_flag, const std::string& cone,
              std::int64_t max_period, const std::optional<std::string>& period, const std::string& window,
              std::ostream& out, std::ostream& err) {
  const GameSpec g = io::load_ruleset(source);
  const auto slice = slice_for(g, slice_flag);
  const IntVec hi = window_for(g, parse_vec(window, "--window"), slice);
  if (slice && (*slice < 0 || *slice > hi[2])) throw UsageError("--slice: outside the window");
  const auto colon = cone.find(':');
  if (colon == std::string::npos) throw UsageError("--cone: expected rx,ry:sx,sy");
  const IntVec r1 = parse_vec(cone.substr(0, colon), "--cone", 2);
  const IntVec r2 = parse_vec(cone.substr(colon + 1), "--cone", 2);
  std::vector<IntVec> periods;
  if (period) {
    periods.push_back(parse_vec(*period, "--period", 2));
    if (periods.back().is_zero()) throw UsageError("--period: must be nonzero");
  } else {
    if (max_period < 1) throw UsageError("--max-period: must be >= 1");
    for (std::int64_t a = -max_period; a <= max_period; ++a)
      for (std::int64_t b = -max_period; b <= max_period; ++b)
        if (a || b) periods.push_back(IntVec{a, b});
  }
  const auto grid = solve_or_refuse(g, hi, SolveMode::kParallel, err);
  out << describe(source, g) << '\n';
  out << "cone " << r1 << ":" << r2 << ", window " << hi;
  if (slice) out << ", slice " << *slice;
  out << '\n';
  std::vector<IntVec> holding;
  for (const auto& l : periods) {
    const auto res = periodicity_probe(grid, slice, r1, r2, l);
    out << "period " << l << ": ";
    if (res.periodic) {
      out << "holds\n";
      holding.push_back(l);
    } else {
      out << "violated at " << *res.violation << '\n';
    }
  }
  out << "periods:";
  for (const auto& l : holding) out << ' ' << l;
  if (holding.empty()) out << " none";
  out << '\n';
  return kOk;
}

int cmd_equiv(const std::string& a, const std::string& b, const std::string& window, std::ostream& out,
              std::ostream& err) {
  const GameSpec g1 = io::load_ruleset(a);
  const GameSpec g2 = io::load_ruleset(b);
  if (g1.dim() != g2.dim()) throw UsageError("equiv: rulesets differ in dimension");
  const IntVec hi = window_for(g1, parse_vec(window, "--window"), std::nullopt);
  for (const auto* g : {&g1, &g2})
    if (!check_pointedness(g->ruleset()).feasible()) {
      err << "solver refused: the ruleset is not pointed (see `axioms`)\n";
      return kCheckFailed;
    }
  const auto rep = equivalence_in_window(g1, g2, hi);
  out << describe(a, g1) << '\n' << describe(b, g2) << '\n';
  if (rep.equal) {
    out << "equivalent on [0," << hi << "]\n";
    return kOk;
  }
  out << "DIFFERENT at " << *rep.first_difference << ": " << to_char(rep.first) << " vs " << to_char(rep.second)
      << '\n';
  return kCheckFailed;
}

int cmd_oracle(const std::string& name, const std::string& window, const std::string& format, std::ostream& out) {
  if (name != "binom-parity" && name != "xor") throw UsageError("oracle: expected binom-parity or xor");
  const IntVec hi = parse_vec(window, "--window", 2);
  const auto fmt = parse_format(format);
  OutcomeGrid grid(hi);
  if (name == "binom-parity") {
    Box::from_origin(hi).for_each([&](const IntVec& p) {
      grid.set(p, binom_parity_oracle(p[0], p[1]) == Outcome::P ? Cell::P : Cell::N);
    });
  } else {
    RecurrenceEvaluator f(xor_spec());
    Box::from_origin(hi).for_each([&](const IntVec& p) { grid.set(p, f(p) == 0 ? Cell::P : Cell::N); });
  }
  out << render_grid(grid, std::nullopt, fmt);
  return kOk;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice-game engine and recurrence compiler"};
  app.name("latgame");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "help for every subcommand");

  std::string ruleset, ruleset2, spec, output, window, name, cone = "1,0:0,1", format = "text";
  std::optional<std::string> spec_flag, placement_flag, variant_flag, period_flag;
  std::optional<std::int64_t> slice;
  std::int64_t bound = 0, max_period = 12;
  std::uint64_t seed = 0;
  int attempts = 10000;
  bool core_only = false, list = false;
  ImageArgs img;

  auto* axioms = app.add_subcommand("axioms", "pointedness and tangent-cone checks");
  axioms->add_option("ruleset", ruleset, "ruleset file or builtin name")->required();

  auto* solve = app.add_subcommand("solve", "solve a window and print one slice as an image");
  add_image_options(solve, img, false);
  solve->add_option("--format", img.format, "text, pbm or svg");

  auto* render = app.add_subcommand("render", "solve a window and write the image; format from the extension");
  add_image_options(render, img, true);

  auto* compile = app.add_subcommand("compile", "compile a recurrence spec into a ruleset and placement");
  compile->add_option("spec", spec, "recurrence spec file")->required();
  compile->add_option("--variant", variant_flag, "A, B or C (default: the spec's)");
  compile->add_option("--seed", seed, "placement search seed");
  compile->add_option("--attempts", attempts, "placement search attempts");
  compile->add_flag("--core-only", core_only, "wires and slices only");
  compile->add_option("-o,--output", output, "ruleset file; the placement goes next to it")->required();

  auto* verify = app.add_subcommand("verify", "check a compiled ruleset against its recurrence");
  verify->add_option("ruleset", ruleset, "ruleset file or builtin name")->required();
  verify->add_option("--spec", spec_flag, "recurrence spec file");
  verify->add_option("--placement", placement_flag, "placement sidecar (default: next to the ruleset)");
  verify->add_option("--bound", bound, "check every l with nu . (m l) <= bound")->required();

  auto* probe = app.add_subcommand("probe", "periodicity probe on one slice");
  probe->add_option("ruleset", ruleset, "ruleset file or builtin name")->required();
  probe->add_option("--slice", slice, "last coordinate (3-D rulesets)");
  probe->add_option("--cone", cone, "cone rays rx,ry:sx,sy");
  probe->add_option("--max-period", max_period, "probe every nonzero l with |l|_inf <= R");
  probe->add_option("--period", period_flag, "probe a single period a,b");
  probe->add_option("--window", window, "window corner x,y")->required();

  auto* equiv = app.add_subcommand("equiv", "compare P-positions of two rulesets on a window");
  equiv->add_option("first", ruleset, "ruleset file or builtin name")->required();
  equiv->add_option("second", ruleset2, "ruleset file or builtin name")->required();
  equiv->add_option("--window", window, "window corner")->required();

  auto* oracle = app.add_subcommand("oracle", "render a reference mask");
  oracle->add_option("name", name, "binom-parity or xor")->required();
  oracle->add_option("--window", window, "window corner x,y")->required();
  oracle->add_option("--format", format, "text, pbm or svg");

  auto* bi = app.add_subcommand("builtin", "print a builtin ruleset");
  bi->add_option("name", name, "paper-gamma or paper-gamma-prime");
  bi->add_flag("--list", list, "list the builtin names");

  std::vector<std::string> argv_store{"latgame"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (*axioms) return cmd_axioms(ruleset, out);
  if (*solve) {
    const std::string picture = image(img, parse_format(img.format), err);
    if (img.output.empty())
      out << picture;
    else
      io::write_file(img.output, picture);
    return kOk;
  }
  if (*render) {
    const auto fmt = format_from_path(img.output);
    io::write_file(img.output, image(img, fmt, err));
    out << "wrote " << img.output << '\n';
    return kOk;
  }
  if (*compile) return cmd_compile(spec, variant_flag, seed, attempts, core_only, output, out, err);
  if (*verify) return cmd_verify(ruleset, spec_flag, placement_flag, bound, out);
  if (*probe) return cmd_probe(ruleset, slice, cone, max_period, period_flag, window, out, err);
  if (*equiv) return cmd_equiv(ruleset, ruleset2, window, out, err);
  if (*oracle) return cmd_oracle(name, window, format, out);
  if (*bi) {
    if (list) {
      for (const auto& n : builtin::names()) out << n << '\n';
      return kOk;
    }
    if (name.empty()) throw UsageError("builtin: expected a name or --list");
    if (!builtin::is_name(name)) throw UsageError("builtin: unknown name '" + name + "'");
    out << io::write_ruleset(GameSpec(builtin::by_name(name)));
    return kOk;
  }
  return kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const io::FormatError& e) {
    err << "input error: " << e.what() << '\n';
    return kUsage;
  } catch (const io::FileError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Refused&) {
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace latgame::cli
