#pragma once

// Command-line front end. Each verb parses options, calls into the library
// and renders one report, either as text or as JSON with a fixed key order:
//
//   {"command": ..., "input": {...}, "result": {...}, "checks": [...]}
//
// Exit codes: 0 success, 1 invalid input or domain error, 2 a check failed
// or an internal invariant was violated.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polnum/bounds.hpp"
#include "polnum/checks.hpp"
#include "polnum/crf.hpp"
#include "polnum/errors.hpp"
#include "polnum/numeric.hpp"
#include "polnum/polarization.hpp"
#include "polnum/semihom.hpp"
#include "polnum/thresholds.hpp"

namespace polnum::cli {

using Json = nlohmann::ordered_json;

struct Report {
  Json doc;

  explicit Report(const std::string &command) {
    doc["command"] = command;
    doc["input"] = Json::object();
    doc["result"] = Json::object();
    doc["checks"] = Json::array();
  }

  Json &input() { return doc["input"]; }
  Json &result() { return doc["result"]; }

  void check(const std::string &name, bool pass) {
    doc["checks"].push_back(Json{{"name", name}, {"pass", pass}});
  }

  bool all_checks_pass() const {
    for (const auto &c : doc["checks"])
      if (!c["pass"].get<bool>())
        return false;
    return true;
  }
};

inline void render_text(const Json &node, const std::string &prefix,
                        std::ostream &out) {
  for (const auto &[key, value] : node.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      render_text(value, name, out);
    } else if (value.is_string()) {
      out << name << ": " << value.get<std::string>() << '\n';
    } else if (value.is_array()) {
      out << name << ":";
      for (const auto &v : value)
        out << ' ' << (v.is_string() ? v.get<std::string>() : v.dump());
      out << '\n';
    } else {
      out << name << ": " << value.dump() << '\n';
    }
  }
}

inline void render(const Report &r, bool json, std::ostream &out) {
  if (json) {
    out << r.doc.dump(2) << '\n';
    return;
  }
  render_text(r.doc["result"], "", out);
  for (const auto &c : r.doc["checks"])
    out << "check " << c["name"].get<std::string>() << ": "
        << (c["pass"].get<bool>() ? "pass" : "FAIL") << '\n';
}

inline Json class_json(const SemihomClass &c) {
  return Json{{"type", c.base.to_string()},   {"side", to_string(c.side)},
              {"slope", c.slope.to_string()}, {"u", c.u.str()},
              {"rank", c.rank.str()},         {"euler", c.euler.str()}};
}

// --- verbs -----------------------------------------------------------------

inline Report cmd_dual(const std::string &type_text) {
  Report r("dual");
  const auto t = parse_type(type_text);
  r.input()["type"] = t.to_string();
  const auto d = dual_type(t);
  const Integer c = chi(t), cd = chi(d), m = ipow(t.d1dg(), t.g());
  r.result()["dual"] = d.to_string();
  r.result()["chi"] = c.str();
  r.result()["chi_dual"] = cd.str();
  r.result()["chi_product"] = (c * cd).str();
  r.result()["d1dg_pow_g"] = m.str();
  r.check("chi*chi_dual=(d1*dg)^g", c * cd == m);
  r.check("dual(dual)=type", dual_type(d) == t);
  return r;
}

inline Report cmd_invariants(const std::string &type_text,
                             const std::string &slope_text) {
  Report r("invariants");
  const auto t = parse_type(type_text);
  const auto slope = ExactRational::parse(slope_text);
  r.input()["type"] = t.to_string();
  r.input()["slope"] = slope.to_string();
  const auto c = make_class(t, slope);
  const auto img = fm_image_class(t, slope);
  r.result()["u"] = c.u.str();
  r.result()["rank"] = c.rank.str();
  r.result()["euler"] = c.euler.str();
  r.result()["det_multiple"] = c.determinant_multiple().str();
  r.result()["it_index"] = slope.sign() > 0 ? "0" : std::to_string(t.g());
  r.result()["fm_image"] = class_json(img);
  r.check("rank*slope*d1 integral",
          (ExactRational(c.rank) * slope * ExactRational(t.first())).is_integer());
  r.check("euler/rank=slope^g*chi",
          ExactRational::reduce(c.euler, c.rank) ==
              slope.pow(t.g()) * ExactRational(chi(t)));
  r.check("fm rank=|euler|", img.rank == abs(c.euler));
  return r;
}

inline void put_bound(Json &out, const BoundResult &b) {
  out["best_nu"] = b.best_nu.to_string();
  out["bound"] = b.bound.to_string();
  out["candidates_tested"] = b.candidates_tested;
  out["pruned_at"] = b.pruned_at ? b.pruned_at->to_string() : "none";
  out["ge_half"] = b.ge_half;
  out["ge_one"] = b.ge_one;
}

inline Report cmd_bound(const std::string &type_text, std::uint64_t max_den,
                        const std::optional<std::string> &beta0_text,
                        const std::optional<std::string> &at_text) {
  Report r("bound");
  const auto t = parse_type(type_text);
  std::optional<ExactRational> beta0;
  if (beta0_text)
    beta0 = ExactRational::parse(*beta0_text);
  r.input()["type"] = t.to_string();
  r.input()["max_den"] = max_den;
  r.input()["beta0_dual"] = beta0 ? beta0->to_string() : "none";
  const auto d = dual_type(t);
  r.result()["dual"] = d.to_string();

  auto soundness = [&](const ExactRational &nu, const ExactRational &value) {
    const auto rank = make_class(d, nu, Side::dual).rank;
    const auto via_thresholds =
        beta1_from_dual_s0(ExactRational(rank), nu, t).value;
    r.check("bound<=beta1 via s0<=rank", value <= via_thresholds);
  };

  if (at_text) {
    const auto nu = ExactRational::parse(*at_text);
    r.input()["at"] = nu.to_string();
    const auto value = bound_at(t, nu, beta0);
    r.result()["nu"] = nu.to_string();
    r.result()["rank_dual"] = make_class(d, nu, Side::dual).rank.str();
    r.result()["bound"] = value.to_string();
    r.result()["ge_half"] = value >= ExactRational::reduce(1, 2);
    r.result()["ge_one"] = value >= 1;
    soundness(nu, value);
    return r;
  }

  const auto best = maximize(t, max_den, beta0);
  if (!best) {
    r.result()["status"] = "no candidate";
    return r;
  }
  r.result()["status"] = "ok";
  put_bound(r.result(), *best);
  r.result()["rank_dual"] = make_class(d, best->best_nu, Side::dual).rank.str();
  r.check("bound=bound_at(best_nu)", bound_at(t, best->best_nu, beta0) == best->bound);
  soundness(best->best_nu, best->bound);
  return r;
}

struct ConvertOptions {
  std::optional<std::string> beta, s, nu, mu, type;
  std::string to = "s";
  int index = 1;
};

inline Report cmd_convert(const ConvertOptions &o) {
  Report r("convert");
  if (o.index != 0 && o.index != 1)
    throw DomainError("--index must be 0 or 1");
  const std::string i = std::to_string(o.index);
  const std::string j = std::to_string(1 - o.index);
  auto need = [](const std::optional<std::string> &v, const char *flag) {
    if (!v)
      throw DomainError(std::string("missing ") + flag);
    return *v;
  };
  r.input()["to"] = o.to;
  r.input()["index"] = o.index;

  if (o.to == "s") {
    const auto beta = ExtendedRational::parse(need(o.beta, "--beta"));
    const auto nu = ExactRational::parse(need(o.nu, "--nu"));
    r.input()["beta" + i] = beta.to_string();
    r.input()["nu"] = nu.to_string();
    const auto s = s_from_beta(beta, nu);
    r.result()["s" + i] = s.to_string();
    r.result()["nu"] = nu.to_string();
    if (s.is_finite())
      r.check("beta round trip", beta_from_s(s, nu).value == beta.finite());
  } else if (o.to == "beta") {
    const auto s = ExtendedRational::parse(need(o.s, "--s"));
    const auto nu = ExactRational::parse(need(o.nu, "--nu"));
    r.input()["s" + i] = s.to_string();
    r.input()["nu"] = nu.to_string();
    const auto b = beta_from_s(s, nu);
    r.result()["beta" + i] = b.value.to_string();
    r.result()["nu"] = nu.to_string();
    r.result()["exact"] = b.exact;
  } else if (o.to == "dual") {
    const auto beta = ExtendedRational::parse(need(o.beta, "--beta"));
    const auto t = parse_type(need(o.type, "--type"));
    r.input()["beta" + i] = beta.to_string();
    r.input()["type"] = t.to_string();
    const auto d = dual_type(t);
    const auto value = dual_beta(beta, o.index, t);
    r.result()["dual"] = d.to_string();
    r.result()["beta" + j] = value.to_string();
    r.check("double dual", dual_beta(value, 1 - o.index, d) == beta.finite());
  } else if (o.to == "cross") {
    const auto nu = ExactRational::parse(need(o.nu, "--nu"));
    const auto mu = ExactRational::parse(need(o.mu, "--mu"));
    r.input()["nu"] = nu.to_string();
    r.input()["mu"] = mu.to_string();
    ExactRational s_nu;
    if (o.s) {
      s_nu = ExtendedRational::parse(*o.s).finite();
      r.input()["s" + i] = s_nu.to_string();
    } else {
      const auto beta = ExtendedRational::parse(need(o.beta, "--beta or --s"));
      r.input()["beta" + i] = beta.to_string();
      const auto s = s_from_beta(beta, nu);
      if (s.is_infinite())
        throw DomainError("s at nu is +inf; no finite value to transport");
      s_nu = s.finite();
    }
    const auto s_mu = cross_nu(s_nu, nu, mu);
    r.result()["s" + i] = s_mu.to_string();
    r.result()["mu"] = mu.to_string();
    const auto beta = beta_from_s(s_nu, nu).value;
    if (s_mu.is_finite())
      r.check("same beta at nu and mu", beta_from_s(s_mu, mu).value == beta);
    else
      r.check("beta>=mu", beta >= mu);
  } else if (o.to == "bpf") {
    const auto s0 = ExtendedRational::parse(need(o.s, "--s"));
    const auto nu = ExactRational::parse(need(o.nu, "--nu"));
    const auto t = parse_type(need(o.type, "--type"));
    r.input()["s0"] = s0.to_string();
    r.input()["nu"] = nu.to_string();
    r.input()["type"] = t.to_string();
    const auto b = beta1_from_dual_s0(s0, nu, t);
    r.result()["beta1"] = b.value.to_string();
    r.result()["exact"] = b.exact;
    r.result()["beta1_le_one"] = b.value <= 1;
    if (b.exact)
      r.check("equals dual_beta(beta_from_s)",
              b.value == dual_beta(beta_from_s(s0, nu).value, 0, t));
  } else {
    throw DomainError("unknown --to target '" + o.to + "'");
  }
  return r;
}

struct EvalOptions {
  std::string model = "structure";
  std::string type;
  std::optional<std::string> slope;
  std::string at;
  int degree = 0;
  std::string transform = "none";
  std::optional<std::string> nu;
  std::string direction = "inverse";
};

inline Report cmd_eval(const EvalOptions &o) {
  Report r("eval");
  const auto t = parse_type(o.type);
  const auto x = ExactRational::parse(o.at);
  const int g = static_cast<int>(t.g());
  if (o.degree < 0 || o.degree > g)
    throw DomainError("--degree must be in [0, g]");
  r.input()["model"] = o.model;
  r.input()["type"] = t.to_string();
  std::optional<ExactRational> slope;
  if (o.model == "semihom") {
    if (!o.slope)
      throw DomainError("--model semihom needs --slope");
    slope = ExactRational::parse(*o.slope);
    r.input()["slope"] = slope->to_string();
  } else if (o.model != "structure") {
    throw DomainError("unknown model '" + o.model + "'");
  }
  r.input()["at"] = x.to_string();
  r.input()["degree"] = o.degree;
  r.input()["transform"] = o.transform;

  auto family_on = [&](const PolarizationType &base, Side side) {
    return slope ? model_semihom(make_class(base, *slope, side))
                 : model_structure_sheaf(base, side);
  };
  auto put = [&](const RankFunction &f) {
    const auto value = f(x);
    r.result()["value"] = value.to_string();
    r.result()["degree"] = f.degree();
    r.result()["side"] = to_string(f.side());
    r.result()["polarization"] = f.pol().base().to_string();
    r.result()["scale"] = f.pol().scale().to_string();
    r.result()["domain"] = f.domain().to_string();
    return value;
  };

  const auto i = static_cast<std::size_t>(o.degree);
  if (o.transform == "none") {
    put(family_on(t, Side::primal)[i]);
  } else if (o.transform == "fm-neg" || o.transform == "fm-pos") {
    if (!slope)
      throw DomainError("the transform of the structure sheaf is a skyscraper "
                        "and has no closed-form model; use --model semihom");
    const bool neg = o.transform == "fm-neg";
    const auto image = fm_transform_model(t, neg ? *slope : -*slope);
    const auto f = neg ? fm_transform(image[i], t, FmSign::neg)
                       : fm_transform(image[static_cast<std::size_t>(g) - i],
                                      t, FmSign::pos);
    const auto value = put(f);
    const auto direct = family_on(t, Side::primal)[i](x);
    r.result()["direct"] = direct.to_string();
    r.check("transform=direct", value == direct);
  } else if (o.transform == "ideal-dual") {
    if (o.degree > 1)
      throw DomainError("ideal-dual needs --degree 0 or 1");
    const auto input = family_on(dual_type(t), Side::dual)[1 - i];
    put(ideal_duality(input, t, o.degree));
  } else if (o.transform == "ev-rel") {
    if (!o.nu)
      throw DomainError("ev-rel needs --nu");
    const auto nu = ExactRational::parse(*o.nu);
    r.input()["nu"] = nu.to_string();
    r.input()["direction"] = o.direction;
    EvDirection dir;
    if (o.direction == "forward")
      dir = EvDirection::forward;
    else if (o.direction == "inverse")
      dir = EvDirection::inverse;
    else
      throw DomainError("unknown --direction '" + o.direction + "'");
    const auto input = scale_polarization(family_on(t, Side::primal)[i], nu);
    const auto f = ev_complex_relation(input, nu, t, dir);
    put(f);
    const auto back = ev_complex_relation(
        f, nu, t,
        dir == EvDirection::forward ? EvDirection::inverse : EvDirection::forward);
    // The composite is defined wherever the input is evaluated by the output.
    const auto probe = dir == EvDirection::inverse
                           ? x / (ExactRational(1) + x)
                           : x / (ExactRational(1) - x);
    r.check("round trip", back(probe) == input(probe));
  } else {
    throw DomainError("unknown --transform '" + o.transform + "'");
  }
  return r;
}

inline Report cmd_check(const std::string &suite, std::uint64_t seed,
                        std::uint64_t cases) {
  Report r("check");
  r.input()["suite"] = suite;
  r.input()["seed"] = seed;
  r.input()["cases"] = cases;
  bool found = false;
  Json suites = Json::array();
  for (const auto &entry : checks::all_suites()) {
    if (suite != "all" && suite != entry.name)
      continue;
    found = true;
    random::Rng rng(seed);
    const auto rep = entry.fn(rng, cases);
    Json failures = Json::array();
    for (const auto &f : rep.failures)
      failures.push_back(f);
    r.result()[rep.suite] =
        Json{{"cases", rep.cases}, {"passed", rep.passed},
             {"failed", rep.cases - rep.passed}, {"failures", failures}};
    r.check(rep.suite, rep.ok());
  }
  if (!found)
    throw DomainError("unknown suite '" + suite + "'");
  return r;
}

// --- driver ----------------------------------------------------------------

inline int run(const std::vector<std::string> &args, std::ostream &out,
               std::ostream &err) {
  CLI::App app{"Numerical invariants of polarized abelian varieties"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  bool json = false;
  std::string type_text, slope_text;
  std::uint64_t max_den = 24;
  std::optional<std::string> beta0, at;
  ConvertOptions conv;
  EvalOptions ev;
  std::string suite = "all";
  std::uint64_t seed = 1, cases = 100;

  auto *dual = app.add_subcommand("dual", "dual polarization type");
  dual->add_option("--type", type_text, "type, e.g. 1,2,4")->required();

  auto *inv = app.add_subcommand("invariants", "semihomogeneous class invariants");
  inv->add_option("--type", type_text)->required();
  inv->add_option("--slope", slope_text, "nonzero rational p/q")->required();

  auto *bound = app.add_subcommand("bound", "lower bound for beta1");
  bound->add_option("--type", type_text)->required();
  bound->add_option("--max-den", max_den, "denominator budget")->check(CLI::PositiveNumber);
  bound->add_option("--beta0-dual", beta0, "known beta0 of the dual (widens the domain)");
  bound->add_option("--at", at, "evaluate the bound at this nu only");

  auto *convert = app.add_subcommand("convert", "threshold conversions");
  convert->add_option("--beta", conv.beta);
  convert->add_option("--s", conv.s);
  convert->add_option("--nu", conv.nu);
  convert->add_option("--mu", conv.mu);
  convert->add_option("--type", conv.type);
  convert->add_option("--to", conv.to, "s|beta|dual|cross|bpf");
  convert->add_option("--index", conv.index, "threshold index 0|1");

  auto *eval = app.add_subcommand("eval", "evaluate a rank function");
  eval->add_option("--model", ev.model, "structure|semihom");
  eval->add_option("--type", ev.type)->required();
  eval->add_option("--slope", ev.slope);
  eval->add_option("--at", ev.at)->required();
  eval->add_option("--degree", ev.degree);
  eval->add_option("--transform", ev.transform, "none|fm-neg|fm-pos|ideal-dual|ev-rel");
  eval->add_option("--nu", ev.nu);
  eval->add_option("--direction", ev.direction, "forward|inverse");

  auto *check = app.add_subcommand("check", "run property suites");
  check->add_option("--suite", suite, "all|duality|fm|u-oracle|thresholds|bounds");
  check->add_option("--seed", seed);
  check->add_option("--cases", cases);

  for (auto *sub : {dual, inv, bound, convert, eval, check})
    sub->add_flag("--json", json, "machine-readable output");

  std::vector<const char *> argv{"polnum"};
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    std::optional<Report> report;
    if (*dual)
      report = cmd_dual(type_text);
    else if (*inv)
      report = cmd_invariants(type_text, slope_text);
    else if (*bound)
      report = cmd_bound(type_text, max_den, beta0, at);
    else if (*convert)
      report = cmd_convert(conv);
    else if (*eval)
      report = cmd_eval(ev);
    else
      report = cmd_check(suite, seed, cases);
    render(*report, json, out);
    return report->all_checks_pass() ? 0 : 2;
  } catch (const DomainError &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InvariantViolation &e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
}

} // namespace polnum::cli
