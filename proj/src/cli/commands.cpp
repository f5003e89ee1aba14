#include "symknot/cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <optional>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "symknot/cli/cache.hpp"
#include "symknot/cli/catalog.hpp"
#include "symknot/diagram/pd_io.hpp"
#include "symknot/error.hpp"
#include "symknot/jones/jones.hpp"
#include "symknot/khovanov/khovanov.hpp"
#include "symknot/seifert/lens.hpp"
#include "symknot/seifert/mapping.hpp"
#include "symknot/seifert/seifert.hpp"
#include "symknot/symunion/symmetric_union.hpp"

namespace symknot::cli {

namespace {

using nlohmann::json;

struct Options {
  bool pretty = false;
  std::string cache_dir;
  std::optional<int> max_crossings;

  std::string pd;
  std::string spec;
  std::optional<int> n;
  std::string range;

  std::optional<int> crossing;
  std::optional<int> basepoint;
  bool reduced = false;
  bool unoriented = false;
  int bound = 6;
  std::vector<std::string> args;
};

struct Input {
  diagram::PlanarDiagram diagram;
  std::string name;
  std::optional<symunion::SymmetricUnionSpec> spec;
};

struct Outcome {
  json result;
  bool verified = true;
  // Extra text for --pretty, printed after the fields.
  std::string text;
};

int kh_limit(const Options& o) { return o.max_crossings.value_or(khovanov::kDefaultCrossingLimit); }
int bracket_limit(const Options& o) { return o.max_crossings.value_or(jones::kDefaultBracketLimit); }

std::pair<int, int> parse_range(const std::string& text) {
  static const std::regex re(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw Error(ErrorKind::MalformedSyntax, "range must look like A..B, got '" + text + "'");
  const int lo = std::stoi(m[1]), hi = std::stoi(m[2]);
  if (hi < lo) throw Error(ErrorKind::InvalidArgument, "empty range " + text);
  return {lo, hi};
}

symunion::SymmetricUnionSpec load_spec(const Options& o) {
  if (o.spec.empty()) throw Error(ErrorKind::InvalidArgument, "this command needs --spec FILE");
  std::vector<int> twists;
  if (o.n) twists = {*o.n};
  auto spec = symunion::read_spec_file(o.spec, twists);
  if (o.n) {
    if (spec.half.slots != 1) throw Error(ErrorKind::InvalidArgument, "--n needs a half with one twist slot");
    spec.twists = {*o.n};
  }
  spec.validate();
  return spec;
}

Input load_input(const Options& o) {
  if (o.pd.empty() == o.spec.empty()) throw Error(ErrorKind::InvalidArgument, "give exactly one of --pd FILE or --spec FILE");
  if (!o.pd.empty()) {
    if (o.n) throw Error(ErrorKind::InvalidArgument, "--n applies to --spec input only");
    Input in{diagram::read_pd_file(o.pd, diagram::Splitting::Allow), o.pd, std::nullopt};
    return in;
  }
  auto spec = load_spec(o);
  Input in{symunion::build_symmetric_union(spec), spec.name.empty() ? o.spec : spec.name, spec};
  return in;
}

std::optional<InvariantCache> open_cache(const Options& o) {
  auto dir = resolve_cache_dir(o.cache_dir);
  if (!dir) return std::nullopt;
  return InvariantCache(*dir);
}

// Full record through the cache, or nullopt when no cache is configured.
std::optional<InvariantRecord> cached_record(const Options& o, const Input& in) {
  auto cache = open_cache(o);
  if (!cache) return std::nullopt;
  if (auto hit = cache->get(diagram::canonical_key(in.diagram))) return hit;
  InvariantRecord r = compute_record(in.diagram, in.name, kh_limit(o));
  cache->put(r);
  return r;
}

void require_knot(const diagram::PlanarDiagram& d) {
  if (d.counts().components != 1) throw Error(ErrorKind::NotAKnot, "this command needs a knot diagram");
}

json table_json(const khovanov::BigradedDims& dims) { return dims.to_json(); }

Outcome cmd_build(const Options& o) {
  auto spec = load_spec(o);
  const auto d = symunion::build_symmetric_union(spec);
  Outcome out;
  out.result = {{"name", spec.name},
                {"twists", spec.twists},
                {"crossings", d.crossing_count()},
                {"components", d.counts().components},
                {"pd", diagram::to_pd_text(d)},
                {"key", diagram::canonical_key(d)}};
  return out;
}

Outcome cmd_jones(const Options& o) {
  const Input in = load_input(o);
  Outcome out;
  if (auto r = cached_record(o, in)) {
    out.result = {{"jones", r->jones}, {"cached", true}};
  } else {
    out.result = {{"jones", jones::jones(in.diagram, bracket_limit(o)).to_string()}, {"cached", false}};
  }
  out.result["writhe"] = in.diagram.counts().writhe;
  return out;
}

Outcome cmd_alexander(const Options& o) {
  const Input in = load_input(o);
  require_knot(in.diagram);
  Outcome out;
  if (auto r = cached_record(o, in)) {
    out.result = {{"alexander", *r->alexander}, {"determinant", *r->determinant}, {"cached", true}};
  } else {
    out.result = {{"alexander", jones::alexander(in.diagram).to_string()},
                  {"determinant", jones::determinant(in.diagram).get_str()},
                  {"cached", false}};
  }
  return out;
}

Outcome cmd_kh(const Options& o) {
  const Input in = load_input(o);
  Outcome out;
  khovanov::BigradedDims dims;
  if (o.reduced || o.basepoint) {
    int bp = o.basepoint.value_or(0);
    if (!o.basepoint) {
      const auto arcs = in.diagram.arcs();
      bp = arcs.empty() ? 1 : arcs.front();
    }
    dims = khovanov::reduced_khovanov(in.diagram, bp, kh_limit(o));
    out.result = {{"reduced", true}, {"basepoint", bp}};
  } else if (auto r = cached_record(o, in)) {
    dims = khovanov::BigradedDims::from_json(r->kh);
    out.result = {{"reduced", false}, {"cached", true}};
  } else {
    dims = khovanov::khovanov_homology(in.diagram, kh_limit(o));
    out.result = {{"reduced", false}, {"cached", false}};
  }
  out.result["kh"] = table_json(dims);
  out.result["total"] = dims.total();
  out.text = dims.grid();
  return out;
}

Outcome cmd_lee(const Options& o) {
  const Input in = load_input(o);
  require_knot(in.diagram);
  const auto lee = khovanov::lee_homology(in.diagram, kh_limit(o));
  Outcome out;
  json gens = json::array();
  for (auto [i, j] : lee.generators) gens.push_back({i, j});
  const bool two_at_zero = lee.generators.size() == 2 && lee.generators[0].first == 0 &&
                           lee.generators[1].first == 0 &&
                           std::abs(lee.generators[0].second - lee.generators[1].second) == 2;
  out.result = {{"generators", gens}, {"stages", lee.stages}, {"two_generators_in_degree_zero", two_at_zero}};
  out.verified = two_at_zero;
  if (two_at_zero) {
    const int s = khovanov::s_from_lee(lee);
    out.result["s"] = s;
    // Symmetric unions are ribbon.
    if (in.spec) {
      out.result["ribbon_s_zero"] = s == 0;
      out.verified = s == 0;
    }
  }
  return out;
}

Outcome cmd_tanaka(const Options& o) {
  auto spec = load_spec(o);
  if (spec.half.slots != 1) throw Error(ErrorKind::InvalidArgument, "tanaka needs a half with one twist slot");
  std::vector<int> ns;
  if (!o.range.empty()) {
    auto [lo, hi] = parse_range(o.range);
    for (int n = lo; n <= hi; ++n) ns.push_back(n);
  } else {
    ns = {spec.twists.at(0)};
  }
  Outcome out;
  json rows = json::array();
  bool all = true;
  for (int n : ns) {
    spec.twists = {n};
    const auto r = jones::verify_tanaka(spec);
    rows.push_back({{"n", n}, {"lhs", r.lhs.to_string()}, {"rhs", r.rhs.to_string()}, {"holds", r.holds}});
    all = all && r.holds;
  }
  out.result = ns.size() == 1 ? rows[0] : json{{"cases", rows}, {"holds", all}};
  out.verified = all;
  return out;
}

Outcome cmd_les(const Options& o) {
  Outcome out;
  if (!o.spec.empty() && !o.crossing) {
    auto spec = load_spec(o);
    const auto r = khovanov::skein_axis_verify(spec, kh_limit(o));
    out.result = {{"crossing", r.twist_crossing},
                  {"c", r.skein.c},
                  {"c_is_minus_one", r.c_is_minus_one},
                  {"link_has_two_components", r.link_has_two_components},
                  {"exact", r.skein.exact},
                  {"shifts_match", r.skein.shifts_match},
                  {"bigradings", r.skein.nodes.size()},
                  {"failures", r.skein.failures}};
    out.verified = r.skein.ok() && r.c_is_minus_one;
    return out;
  }
  const Input in = load_input(o);
  if (!o.crossing) throw Error(ErrorKind::InvalidArgument, "les on a PD file needs --crossing INDEX");
  const auto r = khovanov::skein_les_verify(in.diagram, *o.crossing, kh_limit(o));
  out.result = {{"crossing", r.crossing},
                {"c", r.c},
                {"exact", r.exact},
                {"shifts_match", r.shifts_match},
                {"bigradings", r.nodes.size()},
                {"failures", r.failures}};
  out.verified = r.ok();
  return out;
}

Outcome cmd_family(const Options& o) {
  auto spec = load_spec(o);
  auto [lo, hi] = o.range.empty() ? std::pair{1, 3} : parse_range(o.range);
  const auto r = khovanov::family_experiment(spec.half, lo, hi, kh_limit(o));
  Outcome out;
  json members = json::array();
  for (const auto& m : r.members) {
    json mj = {{"n", m.n}, {"dimension", m.kh.total()}, {"nontrivial", m.nontrivial}};
    if (m.maximal) mj["maximal"] = {m.maximal->a, m.maximal->b};
    members.push_back(mj);
  }
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"m", c.m},
                      {"maximal_matches", c.maximal_matches},
                      {"claim_grading", {c.claim_grading.first, c.claim_grading.second}},
                      {"claim_nonzero", c.claim_nonzero},
                      {"witness", {c.witness.first, c.witness.second}},
                      {"witness_dim", c.witness_dim},
                      {"mirror_dim", c.mirror_dim},
                      {"asymmetric", c.asymmetric},
                      {"passed", c.passed()}});
  }
  out.result = {{"members", members}, {"checks", checks}, {"vacuous", r.vacuous}, {"message", r.message},
                {"passed", r.passed()}};
  if (r.k) out.result["k"] = *r.k;
  if (r.base) out.result["base"] = {r.base->a, r.base->b};
  out.verified = r.passed();
  return out;
}

Outcome cmd_symmetry(const Options& o) {
  const Input in = load_input(o);
  const auto by_jones = jones::jones_amphichiral_obstruction(in.diagram);
  const auto by_kh = khovanov::kh_symmetry_check(khovanov::khovanov_homology(in.diagram, kh_limit(o)));
  Outcome out;
  out.result = {{"jones", jones::to_string(by_jones)}, {"kh", jones::to_string(by_kh)}};
  // Kh determines the Jones polynomial, so a Jones obstruction without a Kh
  // obstruction is an internal inconsistency.
  out.verified = !(by_jones == jones::Amphichirality::NotAmphichiral && by_kh == jones::Amphichirality::Inconclusive);
  return out;
}

const std::string& arg(const Options& o, size_t i, const char* what) {
  if (i >= o.args.size()) throw Error(ErrorKind::InvalidArgument, std::string("missing argument: ") + what);
  return o.args[i];
}

long long parse_integer(const std::string& s) {
  try {
    size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::MalformedSyntax, "expected an integer, got '" + s + "'");
}

json lens_json(const seifert::LensParams& l) { return {{"p", l.p}, {"q", l.q}, {"text", seifert::to_string(l)}}; }

Outcome cmd_seifert(const Options& o) {
  const std::string& op = arg(o, 0, "operation");
  Outcome out;
  if (op == "powers") {
    const auto r = seifert::verify_power_formulas(parse_integer(arg(o, 1, "a")),
                                                  o.args.size() > 2 ? static_cast<int>(parse_integer(o.args[2])) : 20);
    out.result = r.to_json();
    out.verified = r.passed();
    return out;
  }
  const auto s = seifert::parse_seifert(arg(o, 1, "Seifert symbol"));
  out.result["input"] = seifert::to_string(s);
  if (op == "euler") {
    out.result["euler"] = seifert::euler_number(s).to_string();
  } else if (op == "normalize") {
    out.result["normal_form"] = seifert::to_string(seifert::normalize(s));
  } else if (op == "reverse") {
    out.result["reversed"] = seifert::to_string(seifert::orientation_reversed(s));
  } else if (op == "h1") {
    const auto order = seifert::h1_order(s);
    out.result["h1_order"] = order == 0 ? json("infinite") : json(order.get_str());
    out.result["odd"] = order != 0 && mpz_odd_p(order.get_mpz_t());
  } else if (op == "lens") {
    const auto l = seifert::lens_recognize(s);
    out.result["lens"] = l ? lens_json(*l) : json(nullptr);
  } else if (op == "iso") {
    const auto t = seifert::parse_seifert(arg(o, 2, "second Seifert symbol"));
    out.result["other"] = seifert::to_string(t);
    out.result["isomorphic"] = seifert::fibrations_isomorphic(s, t);
    out.result["euler"] = {seifert::euler_number(s).to_string(), seifert::euler_number(t).to_string()};
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown seifert operation '" + op +
                                                "' (euler, normalize, reverse, h1, lens, iso, powers)");
  }
  return out;
}

seifert::LensParams parse_lens(const std::string& text) {
  static const std::regex re(R"(\s*(?:L\s*\()?\s*(-?\d+)\s*[,/]\s*(-?\d+)\s*\)?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw Error(ErrorKind::MalformedSyntax, "expected L(p,q), got '" + text + "'");
  return seifert::lens(std::stoll(m[1]), std::stoll(m[2]));
}

Outcome cmd_lens(const Options& o) {
  const auto a = parse_lens(arg(o, 0, "first lens space"));
  const auto b = parse_lens(arg(o, 1, "second lens space"));
  Outcome out;
  out.result = {{"first", lens_json(a)},
                {"second", lens_json(b)},
                {"oriented", !o.unoriented},
                {"homeomorphic", seifert::lens_homeomorphic(a, b, !o.unoriented)}};
  return out;
}

Outcome cmd_slopes(const Options& o) {
  const auto r = seifert::slope_fix_classify(o.bound);
  Outcome out;
  out.result = r.to_json();
  out.verified = r.passed();
  return out;
}

Outcome cmd_catalog(const Options& o) {
  auto cache = open_cache(o);
  const auto r = catalog_ingest(arg(o, 0, "catalog path"), cache ? &*cache : nullptr, kh_limit(o));
  Outcome out;
  out.result = r.to_json();
  if (cache) out.result["cache_records"] = cache->size();
  return out;
}

void print_pretty(std::ostream& os, const json& j, const std::string& text) {
  size_t width = 0;
  for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : j.items()) {
    os << std::left << std::setw(static_cast<int>(width)) << k << "  ";
    if (v.is_string()) os << v.get<std::string>();
    else os << v.dump();
    os << '\n';
  }
  if (!text.empty()) os << '\n' << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of symmetric unions and Seifert fibration checks", "symknot"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--pretty", o.pretty, "aligned text instead of JSON");
  app.add_option("--cache-dir", o.cache_dir, "invariant cache directory (default $SYMKNOT_CACHE_DIR)");
  app.add_option("--max-crossings", o.max_crossings, "refuse larger diagrams (exit 3)");

  using Handler = std::function<Outcome(const Options&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto sub = [&](const char* name, const char* help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    commands.emplace_back(s, std::move(h));
    return s;
  };
  auto diagram_opts = [&](CLI::App* s) {
    s->add_option("--pd", o.pd, "PD file");
    s->add_option("--spec", o.spec, "symmetric union JSON");
    s->add_option("--n", o.n, "twist for a one-slot half");
  };

  auto* build = sub("build", "build a symmetric union diagram", cmd_build);
  build->add_option("--spec", o.spec, "symmetric union JSON")->required();
  build->add_option("--n", o.n, "twist for a one-slot half");
  diagram_opts(sub("jones", "Jones polynomial", cmd_jones));
  diagram_opts(sub("alexander", "Alexander polynomial and determinant", cmd_alexander));
  auto* kh = sub("kh", "Khovanov homology over Q", cmd_kh);
  diagram_opts(kh);
  kh->add_flag("--reduced", o.reduced, "reduced homology");
  kh->add_option("--basepoint", o.basepoint, "arc label for reduced homology");
  diagram_opts(sub("lee", "Lee homology and the s-invariant", cmd_lee));
  auto* tanaka = sub("tanaka", "twist identity for the Jones polynomial", cmd_tanaka);
  tanaka->add_option("--spec", o.spec, "symmetric union JSON")->required();
  tanaka->add_option("--n", o.n, "twist");
  tanaka->add_option("--range", o.range, "twists A..B");
  auto* les = sub("les", "skein long exact sequence", cmd_les);
  diagram_opts(les);
  les->add_option("--crossing", o.crossing, "crossing index");
  auto* family = sub("family", "twist family Khovanov experiment", cmd_family);
  family->add_option("--spec", o.spec, "one-slot half JSON")->required();
  family->add_option("--range", o.range, "twists A..B (default 1..3)");
  diagram_opts(sub("symmetry", "amphichirality obstructions", cmd_symmetry));
  sub("seifert", "Seifert fibration operations", cmd_seifert)->add_option("args", o.args, "OP SYMBOL [SYMBOL]");
  auto* lens = sub("lens", "lens space classification", cmd_lens);
  lens->add_option("args", o.args, "L(p,q) L(p',q')");
  lens->add_flag("--unoriented", o.unoriented, "allow orientation reversal");
  sub("slopes", "slope-fixing mapping classes", cmd_slopes)->add_option("--bound", o.bound, "entry bound");
  sub("catalog", "ingest fixtures into the cache", cmd_catalog)->add_option("args", o.args, "PATH");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  for (const auto& [s, handler] : commands) {
    if (!s->parsed()) continue;
    try {
      Outcome result = handler(o);
      result.result["command"] = s->get_name();
      result.result["verified"] = result.verified;
      if (o.pretty) print_pretty(out, result.result, result.text);
      else out << result.result.dump() << '\n';
      return result.verified ? kExitOk : kExitVerificationFailed;
    } catch (const Error& e) {
      err << "symknot " << s->get_name() << ": " << to_string(e.kind()) << ": " << e.what() << '\n';
      if (e.kind() == ErrorKind::ResourceLimit) return kExitResourceLimit;
      if (e.kind() == ErrorKind::Integrity) return kExitVerificationFailed;
      return kExitInputError;
    } catch (const json::exception& e) {
      err << "symknot " << s->get_name() << ": malformed JSON: " << e.what() << '\n';
      return kExitInputError;
    } catch (const std::filesystem::filesystem_error& e) {
      err << "symknot " << s->get_name() << ": " << e.what() << '\n';
      return kExitInputError;
    }
  }
  return kExitInputError;
}

}  // namespace symknot::cli
