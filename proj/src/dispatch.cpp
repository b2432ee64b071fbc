#include "tropnewton/dispatch.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "json.hpp"

#include "tropnewton/error.hpp"
#include "tropnewton/io.hpp"
#include "tropnewton/tropical.hpp"

namespace tropnewton {

namespace {

using json = nlohmann::ordered_json;

// Diagnostics go to stderr so stdout carries only the result.
spdlog::logger& logger() {
  static auto instance = [] {
    auto l = spdlog::stderr_logger_mt("tropnewton");
    l->set_pattern("tropnewton %l: %v");
    return l;
  }();
  return *instance;
}

json rat_vec(const WeightVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json int_vec(const std::vector<Int>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json poly_list(const std::vector<MPoly>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

json scalar_list(const std::vector<Scalar>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(x.to_string());
  return a;
}

json polygon_json(const NewtonPolygon& P) {
  json a = json::array();
  for (const auto& v : P.vertices) a.push_back(json::array({v.index, to_string(v.value)}));
  return a;
}

json trace_json(const ChoiceTrace& trace, const RingPtr& ring) {
  json a = json::array();
  for (const auto& r : trace) {
    a.push_back({{"level", r.level},
                 {"variable", ring->vars[r.level]},
                 {"polygon", polygon_json(r.polygon)},
                 {"chosen", to_string(r.chosen)},
                 {"unique", r.unique},
                 {"fallback_precision", r.fallback_precision ? json(*r.fallback_precision) : json(nullptr)}});
  }
  return a;
}

json field_json(const Field& f) {
  json j{{"kind", f.is_padic() ? "padic" : "puiseux"}};
  if (f.is_padic()) j["prime"] = f.prime();
  return j;
}

std::string format_point(const WeightVec& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + to_string(w[i]);
  return s + ")";
}

std::string format_ints(const std::vector<Int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

// Splits on commas outside parentheses.
std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

WeightVec resolve_weight(const IdealFile& file, const std::string& text) {
  auto it = file.weights.find(text);
  if (it != file.weights.end()) return it->second;
  return parse_weight_list(text);
}

struct Outcome {
  json outputs = json::object();
  json verification = {{"passed", true}, {"items", json::array()}};
  bool verified = true;
  std::string text;
};

void attach_verification(Outcome& out, const VerificationReport& rep) {
  json items = json::array();
  for (const auto& i : rep.items) {
    items.push_back({{"point", rat_vec(i.point)},
                     {"prevariety", i.prevariety},
                     {"tropical", i.tropical ? json(*i.tropical) : json(nullptr)}});
  }
  out.verified = rep.passed();
  out.verification = {{"passed", out.verified}, {"items", std::move(items)}};
  if (!out.verified) logger().warn("verification failed for at least one output");
}

ZeroDimConfig zero_dim_config(const CommandOptions& o) {
  ZeroDimConfig cfg;
  cfg.schedule.cap = o.precision_cap;
  cfg.schedule.start = std::min(cfg.schedule.start, o.precision_cap);
  return cfg;
}

Outcome run_zerodim(const CommandOptions& o, const IdealFile& f) {
  ZeroDimResult Z = zero_dim_ideal(f.ring, f.gens, zero_dim_config(o));
  logger().info("zerodim: {} triangular component(s), {} point(s)", Z.components.size(), Z.points.size());
  Outcome out;
  json comps = json::array(), points = json::array(), fallback = json::array(), traces = json::array();
  for (const auto& T : Z.components) comps.push_back(poly_list(T.polys));
  std::vector<WeightVec> pts;
  for (size_t i = 0; i < Z.points.size(); ++i) {
    const auto& p = Z.points[i];
    pts.push_back(p.point);
    points.push_back(rat_vec(p.point));
    for (const auto& r : p.trace) {
      if (r.fallback_precision) {
        fallback.push_back({{"point", i}, {"variable", f.ring->vars[r.level]}, {"precision", *r.fallback_precision}});
      }
    }
    traces.push_back({{"component", p.component}, {"levels", trace_json(p.trace, f.ring)}});
    out.text += format_point(p.point) + "\n";
  }
  out.outputs = {{"components", comps}, {"points", points}, {"fallback", fallback}};
  if (o.trace) out.outputs["traces"] = traces;
  attach_verification(out, verify_output(f.ring, f.gens, pts));
  return out;
}

Outcome run_point(const CommandOptions& o, const IdealFile& f) {
  StartingPointConfig cfg;
  cfg.seed = o.seed;
  cfg.max_attempts = o.max_attempts;
  cfg.pure_powers = o.pure_powers;
  cfg.unit_bound = o.unit_bound;
  cfg.zero_dim = zero_dim_config(o);
  if (o.weight) cfg.weight = resolve_weight(f, *o.weight);
  if (o.substitute) {
    std::vector<Scalar> c;
    for (const auto& s : split_list(*o.substitute)) c.push_back(parse_scalar(s, f.field()));
    cfg.substitution = std::move(c);
  }
  StartingPoint sp = starting_point(f.ring, f.gens, cfg);
  const auto& w = sp.witness;
  logger().info("point: attempt {} substituted {} on {}", w.attempts, scalar_list(w.substitution).dump(),
                [&] {
                  json names = json::array();
                  for (size_t v : w.independent) names.push_back(f.ring->vars[v]);
                  return names.dump();
                }());
  for (const auto& r : w.rejected) {
    logger().info("point: substitution ({}) rejected by the torus check", scalar_list(r).dump());
  }
  Outcome out;
  json names = json::array(), rejected = json::array();
  for (size_t v : w.independent) names.push_back(f.ring->vars[v]);
  for (const auto& r : w.rejected) rejected.push_back(scalar_list(r));
  out.outputs = {{"point", rat_vec(sp.point)},
                 {"independent", names},
                 {"substitution", scalar_list(w.substitution)},
                 {"component", poly_list(w.component.polys)},
                 {"attempts", w.attempts},
                 {"rejected", rejected}};
  if (o.trace && w.component.ring) out.outputs["trace"] = trace_json(w.trace, w.component.ring);
  out.text = format_point(sp.point) + "\n";
  attach_verification(out, verify_output(f.ring, f.gens, {sp.point}));
  return out;
}

Outcome run_link(const CommandOptions& o, const IdealFile& f) {
  LinkConfig cfg;
  cfg.seed = o.seed;
  cfg.precondition = o.precondition;
  cfg.paper_exact = o.paper_exact;
  cfg.jobs = o.jobs;
  cfg.zero_dim = zero_dim_config(o);
  RaySet L = tropical_link(f.ring, f.gens, cfg);
  for (const auto& wmsg : L.warnings) logger().warn("link: {}", wmsg);
  Outcome out;
  json lin = json::array(), rays = json::array(), sources = json::array(), slices = json::array();
  json transversal = json::array();
  for (const auto& b : L.lineality.basis) lin.push_back(rat_vec(b));
  for (size_t v : L.transversal) transversal.push_back(f.ring->vars[v]);
  std::vector<WeightVec> pts;
  for (size_t i = 0; i < L.rays.size(); ++i) {
    rays.push_back(int_vec(L.rays[i]));
    pts.emplace_back(L.rays[i].begin(), L.rays[i].end());
    sources.push_back({{"variable", f.ring->vars[L.sources[i].first]}, {"exponent", to_string(L.sources[i].second)}});
    out.text += format_ints(L.rays[i]) + "\n";
  }
  for (const auto& s : L.slices) {
    json vs = json::array();
    for (const auto& v : s.vectors) vs.push_back(rat_vec(v));
    slices.push_back({{"variable", f.ring->vars[s.coordinate]}, {"exponent", to_string(s.exponent)}, {"vectors", vs}});
  }
  json U = nullptr;
  if (!L.unimodular.empty()) U = L.unimodular;
  out.outputs = {{"lineality", lin},   {"base", rat_vec(L.base)}, {"transversal", transversal},
                 {"rays", rays},       {"valency", L.valency()},  {"sources", sources},
                 {"slices", slices},   {"warnings", L.warnings},  {"unimodular", U}};
  out.text = "valency " + std::to_string(L.valency()) + "\n" + out.text;
  attach_verification(out, verify_output(f.ring, f.gens, pts));
  return out;
}

Outcome run_newton(const CommandOptions& o, const IdealFile& f) {
  const auto& vars = f.ring->vars;
  size_t k = vars.size() - 1;
  if (o.var) {
    auto it = std::find(vars.begin(), vars.end(), *o.var);
    if (it == vars.end()) throw Error(ErrorKind::UnknownVariable, "unknown variable " + *o.var);
    k = static_cast<size_t>(it - vars.begin());
  }
  WeightVec w;
  if (o.weight) w = resolve_weight(f, *o.weight);
  if (w.size() != k) {
    throw Error(ErrorKind::LengthMismatch, "--weight needs " + std::to_string(k) + " entries (variables before " +
                                               vars[k] + ")");
  }
  Outcome out;
  json polys = json::array();
  for (const auto& g : f.gens) {
    NewtonPolygon P = expected_polygon(g, k, w);
    json slopes = json::array();
    if (P.vertices.size() > 1) {
      for (const auto& s : lambda(P)) slopes.push_back({{"valuation", to_string(s.valuation)}, {"multiplicity", s.multiplicity}});
    }
    const bool unique = is_unique_at(g, k, w);
    polys.push_back({{"generator", g.to_string()}, {"vertices", polygon_json(P)}, {"slopes", slopes}, {"unique", unique}});
    std::string line;
    for (const auto& v : P.vertices) line += "(" + std::to_string(v.index) + ", " + to_string(v.value) + ") ";
    out.text += line + (unique ? "unique" : "not unique") + "\n";
  }
  out.outputs = {{"variable", vars[k]}, {"weight", rat_vec(w)}, {"polygons", polys}};
  return out;
}

Outcome run_triangulate(const CommandOptions&, const IdealFile& f) {
  Outcome out;
  json comps = json::array();
  for (const auto& T : triangular_decomposition(f.ring, f.gens)) {
    comps.push_back(poly_list(T.polys));
    for (const auto& p : T.polys) out.text += p.to_string() + "\n";
    out.text += "\n";
  }
  out.outputs = {{"components", comps}};
  return out;
}

Outcome run_groebner(const CommandOptions& o, const IdealFile& f) {
  MonomialOrder order = MonomialOrder::degrevlex();
  if (o.order == "lex") {
    order = MonomialOrder::lex();
  } else if (o.order == "weighted") {
    if (!o.weight) throw Error(ErrorKind::InvalidArgument, "--order weighted needs --weight");
    order = MonomialOrder::weighted(resolve_weight(f, *o.weight));
  } else if (o.order != "degrevlex") {
    throw Error(ErrorKind::InvalidArgument, "unknown order " + o.order);
  }
  GroebnerBasis G = buchberger(f.ring, f.gens, order);
  Outcome out;
  out.outputs = {{"order", order.describe()}, {"basis", poly_list(G.polys)}};
  // Dimension data needs a global order; recompute with degrevlex if needed.
  GroebnerBasis D = order.kind() == OrderKind::Weighted ? buchberger(f.ring, f.gens, MonomialOrder::degrevlex()) : G;
  DimensionInfo info = dimension_and_independent_set(D);
  json indep = json::array(), lin = json::array();
  for (size_t v : info.independent) indep.push_back(f.ring->vars[v]);
  out.outputs["dimension"] = info.dimension;
  out.outputs["independent"] = indep;
  if (!D.is_unit()) {
    LinearSubspace C0;
    const char* key = "homogeneity_space";
    try {
      C0 = homogeneity_space(D);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonConstantValuation) throw;
      C0 = lineality_space(D);
      key = "lineality_space";
    }
    for (const auto& b : C0.basis) lin.push_back(rat_vec(b));
    out.outputs[key] = lin;
  }
  for (const auto& g : G.polys) out.text += g.to_string() + "\n";
  return out;
}

Outcome run_verify(const CommandOptions& o, const IdealFile& f) {
  if (!o.weight) throw Error(ErrorKind::InvalidArgument, "verify needs --weight");
  WeightVec w = resolve_weight(f, *o.weight);
  Outcome out;
  auto rep = verify_output(f.ring, f.gens, {w});
  attach_verification(out, rep);
  const auto& i = rep.items.front();
  out.outputs = {{"point", rat_vec(w)}};
  out.text = std::string("prevariety: ") + (i.prevariety ? "pass" : "fail") + "\n";
  if (i.tropical) out.text += std::string("tropical variety: ") + (*i.tropical ? "pass" : "fail") + "\n";
  return out;
}

Status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::ResourceLimit:
    case ErrorKind::InsufficientPrecision:
    case ErrorKind::ExhaustedAttempts:
      return Status::ResourceLimit;
    default:
      return Status::InputError;
  }
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok:
      return "ok";
    case Status::VerificationFailed:
      return "verification_failed";
    case Status::ResourceLimit:
      return "resource_limit";
    case Status::InputError:
      return "input_error";
  }
  return "input_error";
}

}  // namespace

int exit_code(Status status) {
  switch (status) {
    case Status::Ok:
      return 0;
    case Status::VerificationFailed:
      return 2;
    case Status::ResourceLimit:
      return 3;
    case Status::InputError:
      return 1;
  }
  return 1;
}

CommandResult dispatch(const CommandOptions& opts) {
  static const std::map<std::string, std::function<Outcome(const CommandOptions&, const IdealFile&)>> commands{
      {"zerodim", run_zerodim}, {"point", run_point},         {"link", run_link},    {"newton", run_newton},
      {"triangulate", run_triangulate}, {"groebner", run_groebner}, {"verify", run_verify}};
  const auto start = std::chrono::steady_clock::now();
  logger().set_level(opts.quiet ? spdlog::level::warn : spdlog::level::info);
  json doc;
  doc["command"] = opts.command;
  doc["seed"] = opts.seed;
  doc["field"] = nullptr;
  doc["status"] = "ok";
  doc["outputs"] = json::object();
  doc["verification"] = {{"passed", false}, {"items", json::array()}};
  doc["timing_ms"] = nullptr;
  doc["error"] = nullptr;
  Status status = Status::Ok;
  std::string text;
  try {
    auto it = commands.find(opts.command);
    if (it == commands.end()) throw Error(ErrorKind::InvalidArgument, "unknown command " + opts.command);
    IdealFile file = parse_ideal_file(opts.ideal_text);
    doc["field"] = field_json(file.field());
    Outcome out = it->second(opts, file);
    doc["outputs"] = std::move(out.outputs);
    doc["verification"] = std::move(out.verification);
    status = out.verified ? Status::Ok : Status::VerificationFailed;
    text = std::move(out.text);
  } catch (const Error& e) {
    status = status_of(e.kind());
    doc["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.detail()}};
    text = std::string("error: ") + e.what() + "\n";
  }
  doc["status"] = status_name(status);
  if (opts.timing) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    doc["timing_ms"] = ms;
  }
  return {status, doc.dump(2) + "\n", text};
}

}  // namespace tropnewton
