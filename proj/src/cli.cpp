#include "corner/cli.hpp"

#include "corner/georgescu.hpp"
#include "corner/json_io.hpp"
#include "corner/nbody.hpp"
#include "corner/sampling.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <optional>
#include <sstream>

namespace corner {

namespace {

constexpr const char* kSchema = "corner-blowup/1";

struct Options {
  std::string in_path;
  std::string out_path;
  std::string curve_path;
  std::string lattice_path;
  std::string nbody;
  std::uint64_t seed = 0;
  int samples = 100;
  int curves = 100;
  int limit = 100;
  int degree = 3;
  int center = -1;
  double tol = kTupleTol;
};

NBodySpec parse_nbody(const std::string& text) {
  int n = -1, d = -1;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw InputError("bad --nbody value, expected N=?,d=?");
    const std::string key = part.substr(0, eq);
    const int value = std::stoi(part.substr(eq + 1));
    if (key == "N" || key == "n")
      n = value;
    else if (key == "d" || key == "D")
      d = value;
    else
      throw InputError("bad --nbody key: " + key);
  }
  if (n < 0 || d < 0) throw InputError("--nbody needs both N and d");
  try {
    return NBodySpec(n, d);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Semilattice resolve_lattice(const Options& opt) {
  if (!opt.nbody.empty()) return nbody_semilattice(parse_nbody(opt.nbody));
  const std::string& path = !opt.lattice_path.empty() ? opt.lattice_path : opt.in_path;
  if (path.empty()) throw InputError("no lattice given: use --in/--lattice or --nbody");
  const auto j = load_json_file(path);
  if (j.contains("nbody"))
    return nbody_semilattice(
        NBodySpec(j.at("nbody").at("N").get<int>(), j.at("nbody").at("d").get<int>()));
  return semilattice_from_json(j);
}

JsonValue config_json(const Options& opt, bool with_sampling) {
  JsonValue cfg = JsonValue::object();
  cfg.set("seed", JsonValue::integer(static_cast<std::int64_t>(opt.seed)));
  cfg.set("tol", JsonValue::real(opt.tol));
  if (with_sampling) {
    cfg.set("curves", JsonValue::integer(opt.curves));
    cfg.set("degree", JsonValue::integer(opt.degree));
  }
  cfg.set("limit", JsonValue::integer(opt.limit));
  return cfg;
}

std::vector<PolyCurve> sample_curves(const Options& opt, int ambient) {
  Sampler sampler(opt.seed);
  std::vector<PolyCurve> out;
  out.reserve(opt.curves);
  for (int i = 0; i < opt.curves; ++i) {
    const int deg = static_cast<int>(sampler.uniform_int(0, opt.degree));
    out.push_back(sampler.curve(ambient, deg));
  }
  return out;
}

JsonValue envelope(const std::string& command, const Options& opt, bool with_sampling) {
  JsonValue doc = JsonValue::object();
  doc.set("schema", JsonValue::str(kSchema));
  doc.set("command", JsonValue::str(command));
  doc.set("config", config_json(opt, with_sampling));
  return doc;
}

int cmd_close(const Options& opt, JsonValue& doc) {
  if (opt.in_path.empty()) throw InputError("close needs --in");
  auto [ambient, gens] = generators_from_json(load_json_file(opt.in_path));
  Semilattice s = close(ambient, gens);
  doc.set("size", JsonValue::integer(s.size()));
  doc.set("lattice", semilattice_to_json(s));
  return 0;
}

int cmd_orderings(const Options& opt, JsonValue& doc) {
  Semilattice s = resolve_lattice(opt);
  const auto orderings = admissible_orderings(s, opt.limit);
  doc.set("count", JsonValue::integer(static_cast<std::int64_t>(orderings.size())));
  JsonValue arr = JsonValue::array();
  for (const auto& ord : orderings) {
    JsonValue one = JsonValue::array();
    for (int idx : ord) one.push(JsonValue::integer(idx));
    arr.push(std::move(one));
  }
  doc.set("orderings", std::move(arr));
  return 0;
}

int cmd_reduce(const Options& opt, JsonValue& doc) {
  Semilattice s = resolve_lattice(opt);
  if (opt.center < 0 || opt.center >= s.size())
    throw InputError("reduce needs --center with a valid member index");
  std::optional<ReducedFamily> family;
  try {
    family = reduce(s, s.member(opt.center));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  doc.set("center", JsonValue::integer(opt.center));
  doc.set("size", JsonValue::integer(family->size()));
  JsonValue elems = JsonValue::array();
  for (const auto& e : family->elements) {
    JsonValue one = JsonValue::object();
    const auto idx = s.find(e.base);
    one.set("base_member", JsonValue::integer(idx ? *idx : -1));
    const char* tag = e.tag == ReduceTag::kEmpty      ? "empty"
                      : e.tag == ReduceTag::kLifted   ? "lifted"
                                                      : "untouched";
    one.set("tag", JsonValue::str(tag));
    elems.push(std::move(one));
  }
  doc.set("elements", std::move(elems));
  return 0;
}

int cmd_limit(const Options& opt, JsonValue& doc, bool signature_only) {
  Semilattice s = resolve_lattice(opt);
  if (opt.curve_path.empty()) throw InputError("limit needs --curve");
  PolyCurve c = curve_from_json(load_json_file(opt.curve_path));
  if (c.ambient() != s.ambient_dim())
    throw InputError("curve and lattice have different ambient dimensions");
  auto family = make_family(s);
  GeorgescuPoint p = curve_limit_tuple(c, family);
  FaceSignature sig;
  try {
    sig = signature(p);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (!signature_only) {
    JsonValue comps = JsonValue::array();
    for (MemberIndex i = 0; i < family->size(); ++i) {
      JsonValue one = JsonValue::object();
      one.set("member", JsonValue::integer(i));
      one.set("dim", JsonValue::integer(s.member(i).dim()));
      one.set("point", radial_to_json(p.component(i)));
      comps.push(std::move(one));
    }
    doc.set("components", std::move(comps));
  }
  JsonValue at_inf = JsonValue::array();
  for (int i : sig.at_infinity) at_inf.push(JsonValue::integer(i));
  doc.set("signature", std::move(at_inf));
  return 0;
}

int cmd_verify_order(const Options& opt, JsonValue& doc) {
  Semilattice s = resolve_lattice(opt);
  auto family = make_family(s);
  const auto curves = sample_curves(opt, s.ambient_dim());
  const auto report = verify_order_independence(family, curves, opt.tol, opt.limit);
  doc.set("orderings", JsonValue::integer(report.orderings));
  doc.set("curves", JsonValue::integer(report.curves));
  doc.set("pairs_checked", JsonValue::integer(report.pairs_checked));
  doc.set("max_deviation", JsonValue::real(report.max_deviation));
  JsonValue cex = JsonValue::array();
  for (const auto& e : report.counterexamples) {
    JsonValue one = JsonValue::object();
    one.set("curve", JsonValue::integer(e.curve));
    one.set("ordering_a", JsonValue::integer(e.ordering_a));
    one.set("ordering_b", JsonValue::integer(e.ordering_b));
    one.set("deviation", JsonValue::real(e.deviation));
    cex.push(std::move(one));
  }
  doc.set("counterexamples", std::move(cex));
  return report.ok() ? 0 : 1;
}

int cmd_verify_injective(const Options& opt, JsonValue& doc) {
  Semilattice s = resolve_lattice(opt);
  auto family = make_family(s);
  const auto curves = sample_curves(opt, s.ambient_dim());
  const auto report = verify_injectivity(family, curves, opt.tol);
  doc.set("curves", JsonValue::integer(report.curves));
  doc.set("pairs_checked", JsonValue::integer(report.pairs_checked));
  doc.set("distinct_classes", JsonValue::integer(report.distinct_classes));
  doc.set("min_separation", JsonValue::real(report.min_separation));
  doc.set("max_within_class", JsonValue::real(report.max_within_class));
  JsonValue cex = JsonValue::array();
  for (const auto& e : report.counterexamples) {
    JsonValue one = JsonValue::object();
    one.set("curve_a", JsonValue::integer(e.curve_a));
    one.set("curve_b", JsonValue::integer(e.curve_b));
    one.set("same_class", JsonValue::boolean(e.same_class));
    one.set("distance", JsonValue::real(e.distance));
    cex.push(std::move(one));
  }
  doc.set("counterexamples", std::move(cex));
  return report.ok() ? 0 : 1;
}

int cmd_nbody(const Options& opt, JsonValue& doc) {
  if (opt.nbody.empty()) throw InputError("nbody needs --nbody N=?,d=?");
  const NBodySpec spec = parse_nbody(opt.nbody);
  JsonValue spec_json = JsonValue::object();
  spec_json.set("N", JsonValue::integer(spec.particles));
  spec_json.set("d", JsonValue::integer(spec.space_dim));
  doc.set("spec", std::move(spec_json));
  const auto gens = generators(spec);
  doc.set("generators", JsonValue::integer(static_cast<std::int64_t>(gens.size())));
  Semilattice s = nbody_semilattice(spec);
  doc.set("size", JsonValue::integer(s.size()));
  doc.set("lattice", semilattice_to_json(s));
  return 0;
}

}  // namespace

RunResult run_job(const std::vector<std::string>& args) {
  Options opt;
  CLI::App app{"corner-blowup: compactified configuration-space toolkit"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool sampling) {
    sub->add_option("--in", opt.in_path, "input JSON file");
    sub->add_option("--out", opt.out_path, "also write the report to this file");
    sub->add_option("--lattice", opt.lattice_path, "semilattice JSON file");
    sub->add_option("--nbody", opt.nbody, "built-in lattice, e.g. N=2,d=1");
    sub->add_option("--seed", opt.seed, "RNG seed (default 0)");
    sub->add_option("--tol", opt.tol, "tolerance override");
    sub->add_option("--limit", opt.limit, "cap on enumerated orderings");
    if (sampling) {
      sub->add_option("--curves", opt.curves, "number of sampled curves");
      sub->add_option("--samples", opt.samples, "number of samples");
      sub->add_option("--degree", opt.degree, "max curve degree");
    }
  };

  CLI::App* c_close = app.add_subcommand("close", "intersection closure of generators");
  add_common(c_close, false);
  CLI::App* c_ord = app.add_subcommand("orderings", "admissible orderings of a lattice");
  add_common(c_ord, false);
  CLI::App* c_red = app.add_subcommand("reduce", "blow-up reduction along a minimal member");
  add_common(c_red, false);
  c_red->add_option("--center", opt.center, "member index of the reduction center");
  CLI::App* c_lim = app.add_subcommand("limit", "limit tuple of a polynomial curve");
  add_common(c_lim, false);
  c_lim->add_option("--curve", opt.curve_path, "curve JSON file");
  CLI::App* c_sig = app.add_subcommand("signature", "face signature of a curve limit");
  add_common(c_sig, false);
  c_sig->add_option("--curve", opt.curve_path, "curve JSON file");
  CLI::App* c_vo = app.add_subcommand("verify-order", "order-independence harness");
  add_common(c_vo, true);
  CLI::App* c_vi = app.add_subcommand("verify-injective", "tuple separation harness");
  add_common(c_vi, true);
  CLI::App* c_nb = app.add_subcommand("nbody", "build the collision-plane lattice");
  add_common(c_nb, false);

  RunResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    msg << "argument error: " << e.what();
    JsonValue doc = JsonValue::object();
    doc.set("schema", JsonValue::str(kSchema));
    doc.set("error", JsonValue::str(msg.str()));
    result.exit_code = 2;
    result.report = doc.dump() + "\n";
    return result;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const bool sampling = command == "verify-order" || command == "verify-injective";
  JsonValue doc = envelope(command, opt, sampling);
  try {
    int code = 0;
    if (command == "close")
      code = cmd_close(opt, doc);
    else if (command == "orderings")
      code = cmd_orderings(opt, doc);
    else if (command == "reduce")
      code = cmd_reduce(opt, doc);
    else if (command == "limit")
      code = cmd_limit(opt, doc, false);
    else if (command == "signature")
      code = cmd_limit(opt, doc, true);
    else if (command == "verify-order")
      code = cmd_verify_order(opt, doc);
    else if (command == "verify-injective")
      code = cmd_verify_injective(opt, doc);
    else if (command == "nbody")
      code = cmd_nbody(opt, doc);
    result.exit_code = code;
  } catch (const InputError& e) {
    JsonValue err = envelope(command, opt, sampling);
    err.set("error", JsonValue::str(e.what()));
    result.exit_code = 2;
    result.report = err.dump() + "\n";
    return result;
  } catch (const std::exception& e) {
    JsonValue err = envelope(command, opt, sampling);
    err.set("error", JsonValue::str(e.what()));
    result.exit_code = 2;
    result.report = err.dump() + "\n";
    return result;
  }
  result.report = doc.dump() + "\n";
  return result;
}

}  // namespace corner
