// zarcons: JSON in, JSON out. Exit 0 on success, 1 on input errors, 2 when the
// answer is Unknown or the input lies outside the supported fragment.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "zarcons/engine.hpp"
#include "zarcons/error.hpp"
#include "zarcons/expr.hpp"
#include "zarcons/extlab.hpp"

using namespace zarcons;
using nlohmann::json;

namespace {

struct Options {
  std::string input = "-";
  std::string ambient;
  std::string adapter;
  std::string field;
  bool trace = false;
};

struct Outcome {
  json body;
  int code = 0;
};

std::string text_field(const json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorKind::InvalidInput, std::string("missing \"") + key + "\"");
  const json& v = j.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  fail(ErrorKind::InvalidInput, std::string("\"") + key + "\" must be a string or an integer");
}

std::vector<std::string> string_list(const json& j, const char* key) {
  std::vector<std::string> out;
  if (!j.contains(key)) return out;
  const json& v = j.at(key);
  if (!v.is_array()) fail(ErrorKind::InvalidInput, std::string("\"") + key + "\" must be an array");
  for (const auto& e : v) {
    if (e.is_string()) out.push_back(e.get<std::string>());
    else if (e.is_number_integer()) out.push_back(std::to_string(e.get<long long>()));
    else fail(ErrorKind::InvalidInput, std::string("entries of \"") + key + "\" must be strings");
  }
  return out;
}

bool bool_field(const json& j, const char* key, bool fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_boolean()) fail(ErrorKind::InvalidInput, std::string("\"") + key + "\" must be a boolean");
  return j.at(key).get<bool>();
}

long int_field(const json& j, const char* key, long fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer()) fail(ErrorKind::InvalidInput, std::string("\"") + key + "\" must be an integer");
  return j.at(key).get<long>();
}

void check_keys(const json& j, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(ErrorKind::InvalidInput, "payload must be a JSON object");
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) fail(ErrorKind::InvalidInput, "unexpected key \"" + k + "\"");
  }
}

std::string pick(const std::string& flag, const json& j, const char* key) {
  return flag.empty() ? text_field(j, key) : flag;
}

std::optional<Field> field_of(const Options& o, const json& j) {
  if (!o.field.empty()) return Field::parse(o.field);
  if (j.contains("field")) return Field::parse(text_field(j, "field"));
  return std::nullopt;
}

Ambient ambient_from(const Options& o, const json& j) {
  return Ambient::parse(pick(o.ambient, j, "ambient"), field_of(o, j));
}

json points_json(const Ambient& amb, const std::vector<ValuationPoint>& pts) {
  json a = json::array();
  for (const auto& v : pts) a.push_back(amb.point_string(v));
  return a;
}

json set_json(const BasicSet& s, const Ambient& amb) {
  json in = json::array(), out = json::array();
  for (const auto& e : s.in) in.push_back(amb.elem_string(e));
  for (const auto& e : s.out) out.push_back(amb.elem_string(e));
  return json{{"in", in}, {"out", out}};
}

json certificate_json(const Certificate& c) {
  json j = set_json(c.set, c.ambient);
  j["ambient"] = c.ambient.tag();
  j["target"] = c.ambient.point_string(c.target);
  return j;
}

json verdict_json(const Verdict& v, const Options& o) {
  json j{{"status", to_string(v.status)}, {"rule", v.rule}};
  if (v.certificate) j["certificate"] = certificate_json(*v.certificate);
  if (o.trace) j["trace"] = v.trace;
  return j;
}

int verdict_code(const Verdict& v) { return v.status == VerdictStatus::Unknown ? 2 : 0; }

BasicSet basic_from(const Ambient& amb, const json& j) {
  return parse_basic(amb, string_list(j, "in"), string_list(j, "out"));
}

Outcome run_resolve(const json& j, const Options& o) {
  check_keys(j, {"ambient", "field", "in", "out", "union"});
  Ambient amb = ambient_from(o, j);
  ResolvedSet r;
  if (j.contains("union")) {
    if (j.contains("in") || j.contains("out")) fail(ErrorKind::InvalidInput, "give either \"union\" or \"in\"/\"out\"");
    if (!j.at("union").is_array()) fail(ErrorKind::InvalidInput, "\"union\" must be an array");
    ConstructibleSet c;
    for (const auto& d : j.at("union")) {
      check_keys(d, {"in", "out"});
      c.disjuncts.push_back(basic_from(amb, d));
    }
    r = resolve(c, amb);
  } else {
    r = resolve(basic_from(amb, j), amb);
  }
  return {json{{"mode", to_string(r.mode)},
               {"places", points_json(amb, r.places)},
               {"field_point", r.field_point},
               {"unknown_residual", r.unknown_residual()}}};
}

Outcome run_certify(const json& j, const Options& o) {
  check_keys(j, {"ambient", "field", "target", "in", "out"});
  Ambient amb = ambient_from(o, j);
  Certificate c{amb.parse_point(text_field(j, "target")), basic_from(amb, j), amb};
  CertResult r = certify_isolated(c);
  switch (r.status) {
    case CertStatus::Valid: {
      json out{{"valid", true}};
      if (o.trace) out["reason"] = r.reason;
      return {out};
    }
    case CertStatus::Invalid: {
      json out{{"valid", false}, {"reason", r.reason}};
      if (r.witness) out["witness"] = amb.point_string(*r.witness);
      return {out};
    }
    case CertStatus::Unknown: break;
  }
  return {json{{"valid", nullptr}, {"reason", r.reason}}, 2};
}

Outcome run_isolated(const json& j, const Options& o) {
  check_keys(j, {"adapter", "point", "center", "algebraic", "extension_count"});
  Verdict v;
  if (j.contains("extension_count")) {
    if (j.contains("adapter") || j.contains("point") || j.contains("center"))
      fail(ErrorKind::InvalidInput, "\"extension_count\" stands alone");
    const json& c = j.at("extension_count");
    if (!c.is_null() && !c.is_number_integer()) fail(ErrorKind::InvalidInput, "\"extension_count\" must be an integer or null");
    v = decide_isolated_trdeg1(c.is_null() ? std::nullopt : std::optional<long>(c.get<long>()));
    return {verdict_json(v, o), verdict_code(v)};
  }
  auto a = make_adapter(pick(o.adapter, j, "adapter"));
  if (j.contains("center")) {
    if (j.contains("point")) fail(ErrorKind::InvalidInput, "give either \"point\" or \"center\"");
    v = decide_at_center(a->parse_prime(text_field(j, "center")), *a);
  } else {
    ValuationPoint p = parse_place(text_field(j, "point"), a->base_field());
    if (std::holds_alternative<FieldPoint>(p) && j.contains("algebraic"))
      v = decide_field_point(*a, bool_field(j, "algebraic", true));
    else
      v = decide_isolated(p, *a);
  }
  return {verdict_json(v, o), verdict_code(v)};
}

Outcome run_enumerate(const json& j, const Options& o) {
  check_keys(j, {"field", "degree"});
  std::optional<Field> f = field_of(o, j);
  if (!f) fail(ErrorKind::InvalidInput, "missing \"field\"");
  long degree = int_field(j, "degree", 1);
  if (degree < 1 || degree > 8) fail(ErrorKind::InvalidInput, "\"degree\" must lie in 1..8");
  json places = json::array();
  for (const auto& [v, c] : enumerate_isolated_KX(*f, static_cast<int>(degree)))
    places.push_back(json{{"place", to_string(v)}, {"certificate", certificate_json(c)}});
  return {json{{"field", f->tag()}, {"places", places}}};
}

Outcome run_classify(const json& j, const Options&) {
  check_keys(j, {"a", "b"});
  HomeoResult r = classify_homeo(*make_adapter(text_field(j, "a")), *make_adapter(text_field(j, "b")));
  if (r.equal) return {json{{"equal", true}, {"class", to_string(r.a)}}};
  return {json{{"equal", false}, {"class_a", to_string(r.a)}, {"class_b", to_string(r.b)}}};
}

Int prime_field(const json& j) {
  Int p(text_field(j, "p"));
  require_prime(p);
  return p;
}

Outcome run_separate(const json& j, const Options&) {
  check_keys(j, {"p", "s", "t", "root"});
  Int p = prime_field(j);
  int root = static_cast<int>(int_field(j, "root", 1));
  if (root != 1 && root != -1) fail(ErrorKind::InvalidInput, "\"root\" must be 1 or -1");
  SeparatorResult r = build_separator(parse_quad(text_field(j, "s")), parse_quad(text_field(j, "t")), p, root);
  json out{{"separator", to_string(FieldElem(r.q), true)}, {"scale", r.c.to_string()}, {"double_value_t", r.half_val_t}};
  out["double_value_s"] = r.s_zero ? json("inf") : json(r.half_val_s);
  return {out};
}

Outcome run_refute(const json& j, const Options&) {
  check_keys(j, {"ambient", "in", "out", "p", "s", "max_n"});
  Int p = prime_field(j);
  Ambient amb = Ambient::parse(j.contains("ambient") ? text_field(j, "ambient") : "EstKX:p=" + p.get_str());
  if (amb.kind != AmbientKind::EstKX || amb.p != p) fail(ErrorKind::InvalidInput, "refute needs the ambient EstKX:p=" + p.get_str());
  long max_n = int_field(j, "max_n", 40);
  if (max_n < 1) fail(ErrorKind::InvalidInput, "\"max_n\" must be positive");
  RefutationResult r = refute_isolation(basic_from(amb, j), parse_rational(text_field(j, "s")), p, max_n);
  return {json{{"t", r.t.to_string()},
               {"N", r.modulus_exponent},
               {"k", r.k},
               {"in_s", r.in_s}, {"in_t", r.in_t},
               {"out_s", r.out_s}, {"out_t", r.out_t}}};
}

PerfBase base_named(const std::string& s) {
  if (s == "field") return PerfBase::Field;
  if (s == "valuation") return PerfBase::Valuation;
  if (s == "domain") return PerfBase::Domain;
  fail(ErrorKind::InvalidInput, "\"base\" must be field, valuation or domain");
}

PerfSpace space_named(const std::string& s) {
  if (s == "zar" || s == "Zar") return PerfSpace::Zar;
  if (s == "est" || s == "Est") return PerfSpace::Est;
  fail(ErrorKind::InvalidInput, "\"space\" must be zar or est");
}

Outcome run_perfect(const json& j, const Options& o) {
  check_keys(j, {"adapter", "base", "space", "trdeg", "finitely_generated", "simple", "j_zero", "label"});
  PerfSpace space = space_named(j.contains("space") ? text_field(j, "space") : "zar");
  long trdeg = int_field(j, "trdeg", 1);
  if (trdeg < 0) fail(ErrorKind::InvalidInput, "\"trdeg\" must be nonnegative");
  SpaceDescriptor d;
  if (!o.adapter.empty() || j.contains("adapter")) {
    if (j.contains("base")) fail(ErrorKind::InvalidInput, "give either \"adapter\" or \"base\"");
    d = descriptor_for(*make_adapter(pick(o.adapter, j, "adapter")), space, static_cast<int>(trdeg));
  } else {
    d.base = base_named(text_field(j, "base"));
    d.space = space;
    d.trdeg = static_cast<int>(trdeg);
    if (j.contains("j_zero")) d.j_zero = bool_field(j, "j_zero", false);
    if (j.contains("label")) d.label = text_field(j, "label");
  }
  d.finitely_generated = bool_field(j, "finitely_generated", d.finitely_generated);
  d.simple = bool_field(j, "simple", d.simple);
  Verdict v = perfectness_verdict(d);
  return {verdict_json(v, o), verdict_code(v)};
}

json read_payload(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidInput, "cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorKind::InvalidInput, "payload is not valid JSON");
  return j;
}

int error_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnsupportedFactorization:
    case ErrorKind::UnsupportedAmbient:
    case ErrorKind::Unsupported:
    case ErrorKind::BudgetExceeded:
      return 2;
    default:
      return 1;
  }
}

int emit_error(std::string_view kind, const std::string& detail, int code) {
  std::cout << json{{"error", {{"kind", kind}, {"detail", detail}}}}.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructible topology on Zariski-Riemann spaces"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--ambient", o.ambient, "ambient tag, e.g. ZarKX:Q, ZarQ, SpecZ");
  app.add_option("--adapter", o.adapter, "domain adapter id, e.g. Z, kxy_loc:Q");
  app.add_option("--field", o.field, "coefficient field tag, Q or F<p>");
  app.add_flag("--trace", o.trace, "include the rule trace");

  using Runner = Outcome (*)(const json&, const Options&);
  const std::vector<std::tuple<const char*, const char*, Runner>> verbs = {
      {"resolve", "resolve a basic or constructible set", run_resolve},
      {"certify", "check an isolation certificate", run_certify},
      {"isolated", "decide whether a point of Zar(A) is isolated", run_isolated},
      {"enumerate", "isolated points of Zar(K(X)|K) with certificates", run_enumerate},
      {"classify", "compare the constructible spaces of two local domains", run_classify},
      {"separate", "separator between two extensions to Q(X)", run_separate},
      {"refute", "second member of a neighborhood of V_s", run_refute},
      {"perfect", "perfectness verdict for Zar or est", run_perfect},
  };
  std::vector<std::pair<CLI::App*, Runner>> subs;
  for (const auto& [name, help, fn] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("input", o.input, "JSON payload file, - for stdin");
    subs.emplace_back(sub, fn);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error("InvalidInput", e.what(), 1);
  }

  try {
    json payload = read_payload(o.input);
    for (const auto& [sub, fn] : subs) {
      if (!sub->parsed()) continue;
      Outcome out = fn(payload, o);
      std::cout << out.body.dump() << "\n";
      return out.code;
    }
  } catch (const Error& e) {
    return emit_error(to_string(e.kind()), e.what(), error_code(e.kind()));
  } catch (const json::exception& e) {
    return emit_error("InvalidInput", e.what(), 1);
  } catch (const std::invalid_argument& e) {
    return emit_error("InvalidInput", e.what(), 1);
  }
  return 1;
}
