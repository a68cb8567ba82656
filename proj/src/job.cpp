#include "galscaf/job.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "galscaf/diagram.hpp"
#include "galscaf/scaffold.hpp"
#include "galscaf/tensor.hpp"

namespace galscaf {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

const std::set<std::string>& known_tasks() {
  static const std::set<std::string> t = {"analyze",         "diagram",
                                          "scaffold-verify", "scaffold-build",
                                          "roundtrip",       "falsify"};
  return t;
}

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& where) {
  if (!obj.is_object()) throw InvalidInput(where + ": expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key()))
      throw InvalidInput(where + ": unknown field \"" + it.key() + "\"");
  }
}

std::int64_t get_int(const json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw InvalidInput(where + ": expected an integer");
  return j.get<std::int64_t>();
}

std::vector<std::pair<std::int64_t, FqElem>> terms_from_json(const json& j,
                                                             const std::string& where) {
  if (!j.is_array()) throw InvalidInput(where + ": expected a list of [exp, coeff] pairs");
  std::vector<std::pair<std::int64_t, FqElem>> out;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2)
      throw InvalidInput(where + ": each term must be [exp, coeff]");
    const std::int64_t e = get_int(term[0], where + "[0]");
    const std::int64_t c = get_int(term[1], where + "[1]");
    if (c < 0) throw InvalidInput(where + ": coefficients are encoded as nonnegative");
    out.emplace_back(e, static_cast<FqElem>(c));
  }
  return out;
}

XiTable xi_table_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw InvalidInput(where + ": expected a list of coefficients");
  XiTable table;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    check_keys(j[i], {"sigma", "coeff"}, w);
    if (!j[i].contains("sigma") || !j[i].contains("coeff"))
      throw InvalidInput(w + ": needs \"sigma\" and \"coeff\"");
    std::vector<int> tuple;
    for (const auto& x : j[i]["sigma"])
      tuple.push_back(static_cast<int>(get_int(x, w + ".sigma")));
    table.emplace_back(std::move(tuple), terms_from_json(j[i]["coeff"], w + ".coeff"));
  }
  return table;
}

}  // namespace

JobConfig JobConfig::from_json(const json& j) {
  check_keys(j, {"extension", "task", "cap", "cap_ceiling", "seed", "params"}, "config");
  if (!j.contains("extension")) throw InvalidInput("config: missing \"extension\"");
  if (!j.contains("task")) throw InvalidInput("config: missing \"task\"");

  JobConfig cfg;
  const json& ext = j["extension"];
  check_keys(ext, {"p", "m", "n", "e", "u"}, "config.extension");
  for (const char* k : {"p", "n", "e", "u"})
    if (!ext.contains(k))
      throw InvalidInput(std::string("config.extension: missing \"") + k + "\"");
  cfg.extension.p = get_int(ext["p"], "config.extension.p");
  cfg.extension.m = ext.contains("m")
                        ? static_cast<int>(get_int(ext["m"], "config.extension.m"))
                        : 1;
  cfg.extension.n = static_cast<int>(get_int(ext["n"], "config.extension.n"));
  for (const auto& e : ext["e"]) cfg.extension.e.push_back(get_int(e, "config.extension.e"));
  for (std::size_t i = 0; i < ext["u"].size(); ++i)
    cfg.extension.u.push_back(
        terms_from_json(ext["u"][i], "config.extension.u[" + std::to_string(i) + "]"));

  cfg.task = j["task"].get<std::string>();
  if (!known_tasks().count(cfg.task))
    throw InvalidInput("config.task: unknown task \"" + cfg.task + "\"");
  if (j.contains("cap")) cfg.cap = get_int(j["cap"], "config.cap");
  if (j.contains("cap_ceiling")) cfg.cap_ceiling = get_int(j["cap_ceiling"], "config.cap_ceiling");
  if (cfg.cap < 1 || cfg.cap_ceiling < cfg.cap)
    throw InvalidInput("config: need 1 <= cap <= cap_ceiling");
  if (j.contains("seed"))
    cfg.seed = static_cast<std::uint64_t>(get_int(j["seed"], "config.seed"));

  if (j.contains("params")) {
    const json& p = j["params"];
    check_keys(p, {"xi", "scaffold", "budget", "max_precision"}, "config.params");
    if (p.contains("xi")) cfg.xi = xi_table_from_json(p["xi"], "config.params.xi");
    if (p.contains("scaffold")) {
      std::vector<XiTable> sc;
      for (std::size_t i = 0; i < p["scaffold"].size(); ++i)
        sc.push_back(xi_table_from_json(
            p["scaffold"][i], "config.params.scaffold[" + std::to_string(i) + "]"));
      cfg.scaffold = std::move(sc);
    }
    if (p.contains("budget")) cfg.budget = get_int(p["budget"], "config.params.budget");
    if (p.contains("max_precision"))
      cfg.max_precision = get_int(p["max_precision"], "config.params.max_precision");
  }
  return cfg;
}

JobConfig JobConfig::from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("config is not valid JSON: ") + e.what());
  }
  return from_json(j);
}

GroupAlgebraElem xi_from_table(const Extension& ext, const XiTable& table) {
  GroupAlgebraElem xi(ext);
  for (const auto& [tuple, terms] : table) {
    const Automorphism g = ext.sigma(tuple);
    xi = xi + GroupAlgebraElem::of(ext, g).scaled(
                  Series::from_terms(ext.field(), terms));
  }
  return xi;
}

json series_to_json(const Series& s) {
  json terms = json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({e, c});
  json out;
  out["terms"] = terms;
  out["cap"] = s.is_exact() ? json("inf") : json(s.cap());
  return out;
}

json xi_to_json(const GroupAlgebraElem& xi) {
  json out = json::array();
  const Extension& E = xi.ext();
  for (int g = 0; g < static_cast<int>(E.degree()); ++g) {
    const Series& c = xi.coeffs()[static_cast<std::size_t>(g)];
    if (c.is_zero() && c.is_exact()) continue;
    json entry;
    entry["sigma"] = E.tuple_of(Automorphism{g});
    entry["coeff"] = series_to_json(c);
    out.push_back(entry);
  }
  return out;
}

namespace {

json coset_to_json(const Coset& c) { return json::array({c.a, c.b}); }

json diagram_to_json(const Diagram& d) {
  json out;
  json g = json::array();
  for (const auto& c : d.g_min) g.push_back(coset_to_json(c));
  json n = json::array();
  for (const auto& c : d.n_diag) n.push_back(coset_to_json(c));
  out["G"] = g;
  out["N"] = n;
  out["d"] = d.d;
  out["precision"] = d.precision ? json(*d.precision) : json("inf");
  return out;
}

json verdict_to_json(const WitnessVerdict& v) {
  json out = diagram_to_json(v.diagram);
  out["semistable"] = v.semistable;
  out["stable"] = v.stable;
  if (!v.reason.empty()) out["reason"] = v.reason;
  return out;
}

json analyze_results(const Extension& E) {
  json out;
  out["breaks"] = E.ramification().breaks;
  out["different"] = E.ramification().different;
  out["i0"] = E.i0();
  out["degree"] = E.degree();
  json dig;
  dig["a_table"] = E.digits().afun_table();
  dig["b_table"] = E.digits().bfun_table();
  out["digit_tables"] = dig;
  json cong = json::array();
  for (bool b : breaks_congruence(E)) cong.push_back(b);
  out["breaks_congruence"] = cong;
  out["breaks_congruent"] = breaks_congruent(E);
  out["stability_threshold"] = stability_threshold(E);
  return out;
}

json margins_to_json(const VerifyReport& rep) {
  json cases = json::array();
  for (const auto& cm : rep.cases) {
    json c;
    c["i"] = cm.i;
    c["t"] = cm.t;
    c["hit"] = cm.hit;
    c["margin"] = cm.margin.is_infinite()
                      ? json("inf")
                      : (cm.margin.is_exact() ? json(cm.margin.value())
                                              : json(">=" + std::to_string(
                                                        cm.margin.lower_bound())));
    if (cm.unit) c["unit"] = series_to_json(*cm.unit);
    cases.push_back(c);
  }
  json out;
  out["certified"] = rep.certified;
  out["is_scaffold"] = rep.is_scaffold;
  out["cap_limited"] = rep.cap_limited;
  out["cases"] = cases;
  if (!rep.failure.empty()) out["failure"] = rep.failure;
  return out;
}

json scaffold_psi_json(const Scaffold& sc) {
  json out = json::array();
  for (const auto& psi : sc.psi) out.push_back(xi_to_json(psi));
  return out;
}

// One attempt at a fixed cap; InsufficientPrecision propagates to the
// retry ladder.
json run_once(const JobConfig& cfg, std::int64_t cap, const RunOptions& opts,
              std::vector<std::string>& caveats) {
  auto handle = Extension::build(cfg.extension, cap);
  const Extension& E = *handle;
  const std::int64_t maxc =
      cfg.max_precision.value_or(std::max<std::int64_t>(stability_threshold(E) + 1, 2));

  json results;
  if (cfg.task == "analyze") {
    results = analyze_results(E);
  } else if (cfg.task == "diagram") {
    if (!cfg.xi) throw InvalidInput("diagram task needs params.xi");
    const GroupAlgebraElem xi = xi_from_table(E, *cfg.xi);
    results = analyze_results(E);
    results["diagram"] = verdict_to_json(is_stable_witness(xi, E.lambda()));
  } else if (cfg.task == "scaffold-verify") {
    if (!cfg.scaffold) throw InvalidInput("scaffold-verify task needs params.scaffold");
    std::vector<GroupAlgebraElem> psi;
    for (const auto& tab : *cfg.scaffold) psi.push_back(xi_from_table(E, tab));
    const VerifyReport rep = verify_scaffold(psi, E.lambda(), maxc, opts.threads);
    results = analyze_results(E);
    results["verify"] = margins_to_json(rep);
    if (rep.cap_limited)
      caveats.push_back("certified precision limited by working cap " +
                        std::to_string(cap));
  } else if (cfg.task == "scaffold-build") {
    if (!cfg.xi) throw InvalidInput("scaffold-build task needs params.xi (a witness)");
    const GroupAlgebraElem xi = xi_from_table(E, *cfg.xi);
    results = analyze_results(E);
    const WitnessVerdict v = is_semistable_witness(xi, E.lambda());
    results["witness"] = verdict_to_json(v);
    if (!v.semistable) {
      results["built"] = false;
    } else {
      const GroupAlgebraElem norm = normalize_witness(xi, E.lambda());
      const SemistableBuild build = build_from_semistable(norm, E.lambda(), maxc);
      results["built"] = true;
      results["normalized_xi"] = xi_to_json(norm);
      results["psi"] = scaffold_psi_json(build.scaffold);
      results["v_scale"] = build.v_scale;
      results["certified"] = *build.scaffold.certified;
    }
  } else if (cfg.task == "roundtrip") {
    results = analyze_results(E);
    std::vector<GroupAlgebraElem> cand = default_candidate(E);
    VerifyReport rep;
    try {
      rep = verify_scaffold(cand, E.lambda(), maxc, opts.threads);
    } catch (const InsufficientPrecision&) {
      throw;
    }
    results["candidate_certified"] = rep.certified;
    results["candidate_is_scaffold"] = rep.is_scaffold;
    if (!rep.is_scaffold) {
      results["verdict"] = "no candidate scaffold";
      if (!rep.failure.empty()) results["failure"] = rep.failure;
    } else {
      Scaffold sc{cand, E.lambda(), rep.certified, ""};
      const PromotionResult promo = charp_promotion(sc);
      results["promotion"] = json{{"promoted", promo.promoted},
                                  {"reason", promo.promoted ? sc.infinite_reason
                                                            : promo.reason}};
      const Scaffold& use = promo.promoted ? promo.scaffold : sc;
      results["promotion"]["precision"] =
          use.certified ? json(*use.certified) : json("inf");
      const ScaffoldWitness w = semistable_from_scaffold(use);
      results["witness"] = verdict_to_json(w.verdict);
      const GroupAlgebraElem norm = normalize_witness(w.xi, E.lambda());
      const SemistableBuild rebuilt = build_from_semistable(norm, E.lambda(), maxc);
      results["rebuilt_certified"] = *rebuilt.scaffold.certified;
      results["v_scale"] = rebuilt.v_scale;
      results["stable_by_threshold"] =
          !use.certified || *use.certified >= stability_threshold(E);
      results["verdict"] = "roundtrip complete";
    }
  } else if (cfg.task == "falsify") {
    results = analyze_results(E);
    const FalsifierResult f = criterion_c_falsifier(E, E.lambda(), cfg.budget, cfg.seed);
    json fj;
    fj["falsified"] = f.falsified;
    fj["tested"] = f.tested;
    if (f.falsified) {
      fj["xi"] = f.xi_desc;
      fj["t"] = f.t;
      fj["lhs"] = f.lhs;
      fj["rhs"] = f.rhs;
    }
    results["falsifier"] = fj;
  } else {
    throw InvalidInput("unknown task " + cfg.task);
  }
  return results;
}

}  // namespace

json run_job(const JobConfig& cfg, const RunOptions& opts) {
  json cert;
  json input;
  json ext;
  ext["p"] = cfg.extension.p;
  ext["m"] = cfg.extension.m;
  ext["n"] = cfg.extension.n;
  ext["e"] = cfg.extension.e;
  json units = json::array();
  for (const auto& u : cfg.extension.u) {
    json terms = json::array();
    for (const auto& [e, c] : u) terms.push_back({e, c});
    units.push_back(terms);
  }
  ext["u"] = units;
  input["extension"] = ext;
  input["task"] = cfg.task;
  input["cap"] = cfg.cap;
  input["cap_ceiling"] = cfg.cap_ceiling;
  if (cfg.xi) {
    json x = json::array();
    for (const auto& [tuple, terms] : *cfg.xi) {
      json t = json::array();
      for (const auto& [e, c] : terms) t.push_back({e, c});
      x.push_back({{"sigma", tuple}, {"coeff", t}});
    }
    input["xi"] = x;
  }
  cert["input"] = input;
  cert["seed"] = cfg.seed;
  cert["tool"] = json{{"name", "galscaf"}, {"version", kVersion}};

  std::vector<std::string> caveats;
  std::vector<std::int64_t> tried;
  std::int64_t cap = cfg.cap;
  for (;;) {
    tried.push_back(cap);
    try {
      std::vector<std::string> local_caveats;
      json results = run_once(cfg, cap, opts, local_caveats);
      caveats = std::move(local_caveats);
      caveats.push_back("values certified at working cap " + std::to_string(cap));
      cert["results"] = results;
      break;
    } catch (const InsufficientPrecision& e) {
      if (cap * 2 > cfg.cap_ceiling)
        throw PrecisionCeiling(std::string("cap ceiling reached: ") + e.what());
      cap *= 2;
    }
  }
  cert["retries"] = tried;
  cert["caveats"] = caveats;
  return cert;
}

namespace {

std::string text_of(const json& j, int indent = 0) {
  std::ostringstream os;
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object() || (it.value().is_array() && !it.value().empty() &&
                                     (it.value()[0].is_object() || it.value()[0].is_array()))) {
        os << pad << it.key() << ":\n" << text_of(it.value(), indent + 2);
      } else {
        os << pad << it.key() << ": " << it.value().dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() || v.is_array())
        os << pad << "-\n" << text_of(v, indent + 2);
      else
        os << pad << "- " << v.dump() << "\n";
    }
  } else {
    os << pad << j.dump() << "\n";
  }
  return os.str();
}

}  // namespace

std::string emit_certificate(const json& cert, const std::string& format) {
  if (format == "json") return cert.dump(2) + "\n";
  if (format == "text") {
    std::ostringstream os;
    os << "galscaf certificate (v" << kVersion << ")\n";
    os << text_of(cert);
    return os.str();
  }
  throw InvalidInput("unknown format \"" + format + "\" (want json or text)");
}

}  // namespace galscaf
