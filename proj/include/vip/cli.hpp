#pragma once

// Command-line front end. `run` is an in-process entry point returning the
// exit code and captured output, so tests drive it without a subprocess.
//
// Exit codes: 0 computed result / EXISTS, 10 NOT_EXISTS or FAILS (a
// certified negative answer), 2 input errors, 3 internal consistency
// failures.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vip/vip.hpp"

namespace vip::cli {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchemaVersion = "vip-report/1";

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternal = 3;
inline constexpr int kExitNotExists = 10;

using Json = nlohmann::ordered_json;

struct Outcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline std::string fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

inline Json json_vector(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

namespace detail {

struct Options {
  std::string problem;
  bool json = false;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool timing = false;

  std::string ideal;
  std::string filtration;
  std::string q;
  bool exact = false;
  long estimate = 0;
  std::string lambda;
  long pmax = 8;
  long kmax = 8;
  long rmax = 6;
  long m = 0;
  long cutoff = kDefaultOrderCutoff;
  bool oracle = false;
  bool interval = false;
  long mcap = 40;
  long denominator = 60;
  long trials = 10000;
};

struct Context {
  Options opt;
  dsl::Model model;
  std::string text;
  std::vector<std::string>& vars() { return model.vars; }
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read problem file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline MonomialIdeal product_of_targets(const dsl::Model& m) {
  if (m.targets.empty()) throw Error(ErrorKind::Parse, "no --ideal given and the problem declares no targets");
  MonomialIdeal a = MonomialIdeal::unit(m.dim());
  for (const auto& t : m.targets) a = product(a, t.second.ideal);
  return a;
}

inline MonomialIdeal pick_ideal(const Context& c, const std::string& name) {
  return name.empty() ? product_of_targets(c.model) : c.model.ideal(name);
}

inline Json ideal_json(const MonomialIdeal& a, const std::vector<std::string>& vars) { return render(a, vars); }

inline Json filtration_json(const Filtration& f, const std::string& name) {
  Json j;
  j["name"] = name.empty() ? (f.is_special_sum() ? "I" : "") : name;
  j["kind"] = f.is_special_sum() ? "interpolation" : "parametric";
  if (auto& chk = f.axiom_check()) {
    j["axiom_check"] = {{"bound", chk->bound}, {"graded", chk->graded}, {"decreasing", chk->decreasing}};
  }
  return j;
}

inline std::string filtration_name(const Context& c) {
  if (!c.opt.filtration.empty()) return c.opt.filtration;
  if (c.model.filtrations.size() == 1) return c.model.filtrations[0].first;
  return "I";
}

inline Json certificate_json(const Certificate& cert, const std::vector<std::string>& vars) {
  Json j;
  j["verdict"] = to_string(cert.verdict);
  j["samuel"] = cert.samuel_value.str();
  j["target"] = cert.target_sum.str();
  if (cert.witness) {
    Json values = Json::array();
    for (const auto& v : cert.witness_values) values.push_back(v.str());
    j["witness"] = {{"weights", json_vector(cert.witness->weights())},
                    {"values", values},
                    {"log_discrepancy", cert.log_discrepancy->str()}};
  } else {
    j["witness"] = nullptr;
  }
  j["optimal_weights"] = json_vector(cert.optimal_weights.weights());
  j["winning_generator"] = render_monomial(cert.winning_generator, vars);
  Json act = Json::array();
  for (const auto& a : cert.active)
    act.push_back({{"pair", a.pair + 1}, {"generator", render_monomial(a.generator, vars)}});
  j["active_constraints"] = act;
  return j;
}

inline Json defect_json(const DefectReport& d) {
  Json rows = Json::array();
  for (const auto& r : d.rows) rows.push_back({{"k", r.k}, {"lct", r.lct.str()}, {"defect", r.defect.str()}});
  return Json{{"rho", d.rho.str()},
              {"witness_weights", json_vector(d.witness.weights())},
              {"witness_bound", d.witness_bound.str()},
              {"max_defect", d.max_defect.str()},
              {"monotone", d.monotone},
              {"verdict", to_string(d.verdict)},
              {"rows", rows}};
}

// Each handler fills `result` and a human summary; returns the exit code.
struct Handled {
  int code = kExitOk;
  Json result;
  std::string human;
};

inline Handled cmd_order(Context& c) {
  Filtration f = c.model.filtration(c.opt.filtration);
  MonomialIdeal a = pick_ideal(c, c.opt.ideal);
  Handled h;
  h.result["filtration"] = filtration_json(f, filtration_name(c));
  h.result["ideal"] = ideal_json(a, c.vars());
  if (c.opt.oracle) {
    auto o = oracle::order_bruteforce(f, a, c.opt.mcap);
    h.result["method"] = "bruteforce";
    h.result["order"] = o.value;
    h.result["capped"] = o.capped;
    h.result["cutoff"] = c.opt.mcap;
    h.human = "order (bruteforce) = " + std::to_string(o.value) + (o.capped ? " (cap reached)" : "");
  } else {
    auto o = order(f, a, c.opt.cutoff);
    h.result["method"] = o.infinite ? "scan" : "bounded-scan";
    h.result["order"] = o.value;
    h.result["infinite"] = o.infinite;
    if (o.infinite) h.result["cutoff"] = o.cutoff;
    h.human = "order = " + std::to_string(o.value) + (o.infinite ? " (infinite-flagged at cutoff)" : "");
  }
  return h;
}

inline Handled cmd_samuel(Context& c) {
  if (c.opt.exact == (c.opt.estimate > 0))
    throw Error(ErrorKind::Parse, "samuel needs exactly one of --exact or --estimate K");
  Filtration f = c.model.filtration(c.opt.filtration);
  MonomialIdeal a = pick_ideal(c, c.opt.ideal);
  Handled h;
  h.result["filtration"] = filtration_json(f, filtration_name(c));
  h.result["ideal"] = ideal_json(a, c.vars());
  if (c.opt.exact) {
    Rational v = samuel_exact(f, a, c.opt.threads);
    h.result["method"] = "lp-rho";
    h.result["exact"] = v.str();
    h.human = "nu-bar = " + v.short_str() + " (exact)";
  } else {
    SamuelBound b = samuel_lower_bound(f, a, c.opt.estimate, c.opt.cutoff);
    h.result["method"] = b.method;
    h.result["lower"] = b.lower.str();
    h.result["at_k"] = b.at_k;
    h.result["K"] = c.opt.estimate;
    h.result["infinite"] = b.infinite;
    if (b.exact) h.result["exact"] = b.exact->str();
    h.human = "nu-bar >= " + b.lower.short_str() + " (attained at k = " + std::to_string(b.at_k) + ")";
  }
  return h;
}

inline Handled cmd_rho(Context& c) {
  Filtration f = c.model.filtration(c.opt.filtration);
  MonomialIdeal a = pick_ideal(c, c.opt.ideal);
  Handled h;
  h.result["filtration"] = filtration_json(f, filtration_name(c));
  h.result["ideal"] = ideal_json(a, c.vars());
  if (c.opt.oracle) {
    Rational v = oracle::ratio_sampling_oracle(f, a, c.opt.trials, c.opt.seed);
    h.result["method"] = "sampling";
    h.result["trials"] = c.opt.trials;
    h.result["seed"] = c.opt.seed;
    h.result["upper"] = v.str();
    h.human = "rho <= " + v.short_str() + " (sampled)";
  } else {
    RhoResult r = rho_exact(f, a, c.opt.threads);
    h.result["method"] = "lp";
    h.result["value"] = r.value.str();
    h.result["argmin"] = json_vector(r.argmin.weights());
    h.result["winner"] = render_monomial(r.winner, c.vars());
    h.human = "rho = " + r.value.short_str();
  }
  return h;
}

inline Handled cmd_lct(Context& c) {
  Filtration f = c.model.filtration(c.opt.filtration);
  MonomialIdeal q = c.opt.q.empty() ? MonomialIdeal::unit(c.model.dim()) : c.model.ideal(c.opt.q);
  Handled h;
  h.result["filtration"] = filtration_json(f, filtration_name(c));
  h.result["q"] = ideal_json(q, c.vars());
  if (c.opt.oracle) {
    auto s = oracle::lct_sweep_oracle(q, f, c.opt.denominator, c.opt.pmax);
    h.result["method"] = "grid-sweep";
    h.result["denominator"] = c.opt.denominator;
    h.result["pmax"] = c.opt.pmax;
    h.result["grid_value"] = s.value.str();
    h.result["heuristic"] = s.heuristic;
    h.human = "lct grid value = " + s.value.short_str();
    return h;
  }
  JumpingNumber j = lct_filtration(q, f, c.opt.threads);
  h.result["method"] = "lp";
  h.result["value"] = j.value.str();
  h.result["argmin"] = json_vector(j.argmin.weights());
  h.result["winner"] = render_monomial(j.winner, c.vars());
  h.human = "lct = " + j.value.short_str();
  if (c.opt.interval) {
    LctInterval iv = lct_via_multiplier(q, f, c.opt.pmax, Rational(1, 64), c.opt.threads);
    h.result["interval"] = {{"lower", iv.lower.str()}, {"upper", iv.upper.str()}, {"heuristic", iv.heuristic}};
    h.human += "  (multiplier interval [" + iv.lower.short_str() + ", " + iv.upper.short_str() + "])";
  }
  return h;
}

inline Handled cmd_mult_ideal(Context& c) {
  if (c.opt.lambda.empty()) throw Error(ErrorKind::Parse, "mult-ideal needs --lambda p/q");
  Rational lambda = Rational::parse(c.opt.lambda);
  Filtration f = c.model.filtration(c.opt.filtration);
  MultiplierIdeal mi = asymptotic_multiplier_ideal(f, lambda, c.opt.pmax, c.opt.threads);
  Handled h;
  h.result["filtration"] = filtration_json(f, filtration_name(c));
  h.result["lambda"] = lambda.str();
  h.result["pmax"] = c.opt.pmax;
  h.result["ideal"] = ideal_json(mi.ideal, c.vars());
  h.result["stabilized"] = mi.stabilized;
  h.result["attained_at"] = mi.attained_at;
  h.human = "J = (" + render(mi.ideal, c.vars()) + ")" + (mi.stabilized ? "" : "  [not stabilized]");
  return h;
}

inline Handled cmd_defect(Context& c) {
  Filtration f = c.model.filtration(c.opt.filtration);
  MonomialIdeal q = pick_ideal(c, c.opt.q.empty() ? c.opt.ideal : c.opt.q);
  DefectReport d = defect_sequence(q, f, c.opt.kmax, c.opt.threads);
  Handled h;
  h.result["filtration"] = filtration_json(f, filtration_name(c));
  h.result["q"] = ideal_json(q, c.vars());
  h.result["kmax"] = c.opt.kmax;
  h.result["defects"] = defect_json(d);
  std::ostringstream os;
  os << "rho = " << d.rho << ", witness bound = " << d.witness_bound << ", max defect = " << d.max_defect << " ("
     << to_string(d.verdict) << ")";
  h.human = os.str();
  return h;
}

inline Handled cmd_interp_check(Context& c) {
  InterpolationProblem p = c.model.problem();
  Certificate cert = decide_finite(p, c.opt.threads);
  Handled h;
  h.result = certificate_json(cert, c.vars());
  h.code = cert.verdict == Verdict::Exists ? kExitOk : kExitNotExists;
  h.human = std::string(to_string(cert.verdict)) + ": nu-bar(a_1...a_r) = " + cert.samuel_value.short_str() +
            ", sum of targets = " + cert.target_sum.short_str();
  if (cert.witness) {
    h.human += "\nwitness weights:";
    for (const auto& w : cert.witness->weights()) h.human += " " + w.short_str();
  }
  return h;
}

inline Handled cmd_interp_infinite(Context& c) {
  InterpolationProblem p = c.model.problem();
  PrefixReport rep = decide_infinite_prefix(p, c.opt.rmax, c.opt.kmax, c.opt.threads);
  Handled h;
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json row;
    row["r"] = r.r;
    row["certificate"] = certificate_json(r.certificate, c.vars());
    if (r.defects) {
      row["defects"] = defect_json(*r.defects);
      row["witness_positive"] = r.witness_positive;
    }
    rows.push_back(row);
  }
  h.result["verdict"] = to_string(rep.verdict);
  h.result["rmax"] = c.opt.rmax;
  h.result["kmax"] = c.opt.kmax;
  h.result["failed_at"] = rep.failed_at ? Json(*rep.failed_at) : Json(nullptr);
  h.result["sup_defect"] = rep.sup_defect.str();
  h.result["uniform_bound"] = rep.uniform_bound.str();
  h.result["bound_nonincreasing_tail"] = rep.witness_bound_nonincreasing_tail;
  h.result["note"] = rep.note;
  h.result["prefixes"] = rows;
  h.code = rep.verdict == PrefixVerdict::Fails ? kExitNotExists : kExitOk;
  h.human = std::string(to_string(rep.verdict)) + ": " + rep.note;
  return h;
}

inline Handled cmd_skoda(Context& c) {
  MonomialIdeal a = pick_ideal(c, c.opt.ideal);
  bool ok = skoda_check(a, c.opt.m);
  Handled h;
  h.result["ideal"] = ideal_json(a, c.vars());
  h.result["m"] = c.opt.m;
  h.result["multiplier"] = ideal_json(howald_multiplier(a, Rational(c.opt.m)), c.vars());
  h.result["holds"] = ok;
  h.human = std::string("Skoda containment ") + (ok ? "holds" : "FAILS");
  if (!ok) h.code = kExitInternal;
  return h;
}

}  // namespace detail

inline Outcome run(const std::vector<std::string>& args) {
  using detail::Handled;
  Outcome outcome;
  detail::Context ctx;
  auto& o = ctx.opt;

  CLI::App app{"Valuative interpolation for monomial ideals", "vip"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--problem", o.problem, "problem file")->required();
    sub->add_flag("--json", o.json, "machine-readable JSON report");
    sub->add_option("--seed", o.seed, "seed for randomized code paths");
    sub->add_option("--threads", o.threads, "worker threads (results are identical)")->check(CLI::Range(1u, 256u));
    sub->add_flag("--timing", o.timing, "include wall-clock timing in the report");
    sub->add_option("--filtration", o.filtration, "filtration name (default: the declared one, else I)");
  };

  std::string command;
  std::vector<std::pair<CLI::App*, std::function<Handled(detail::Context&)>>> handlers;

  auto* order_cmd = app.add_subcommand("order", "order function of a filtration at an ideal");
  common(order_cmd);
  order_cmd->add_option("--ideal", o.ideal, "ideal name (default: product of targets)");
  order_cmd->add_option("--cutoff", o.cutoff, "scan cutoff when no bound is available");
  order_cmd->add_flag("--oracle", o.oracle, "literal brute-force expansion");
  order_cmd->add_option("--mcap", o.mcap, "brute-force index cap");
  handlers.emplace_back(order_cmd, detail::cmd_order);

  auto* samuel_cmd = app.add_subcommand("samuel", "asymptotic Samuel function");
  common(samuel_cmd);
  samuel_cmd->add_option("--ideal", o.ideal, "ideal name (default: product of targets)");
  samuel_cmd->add_flag("--exact", o.exact, "exact value (interpolation filtrations)");
  samuel_cmd->add_option("--estimate", o.estimate, "Fekete lower bound up to K")->check(CLI::PositiveNumber);
  samuel_cmd->add_option("--cutoff", o.cutoff, "order scan cutoff");
  handlers.emplace_back(samuel_cmd, detail::cmd_samuel);

  auto* rho_cmd = app.add_subcommand("rho", "infimum of v(a)/v(F) over weight valuations");
  common(rho_cmd);
  rho_cmd->add_option("--ideal", o.ideal, "ideal name (default: product of targets)");
  rho_cmd->add_flag("--oracle", o.oracle, "random-weight sampling upper bound");
  rho_cmd->add_option("--trials", o.trials, "sampling trials")->check(CLI::PositiveNumber);
  handlers.emplace_back(rho_cmd, detail::cmd_rho);

  auto* lct_cmd = app.add_subcommand("lct", "jumping number lct^q of a filtration");
  common(lct_cmd);
  lct_cmd->add_option("--q", o.q, "ideal q (default: unit ideal)");
  lct_cmd->add_flag("--interval", o.interval, "also bracket via multiplier ideals");
  lct_cmd->add_flag("--oracle", o.oracle, "grid sweep over multiplier ideals");
  lct_cmd->add_option("--denominator", o.denominator, "grid denominator")->check(CLI::PositiveNumber);
  lct_cmd->add_option("--pmax", o.pmax, "multiplier-ideal depth")->check(CLI::PositiveNumber);
  handlers.emplace_back(lct_cmd, detail::cmd_lct);

  auto* mult_cmd = app.add_subcommand("mult-ideal", "asymptotic multiplier ideal");
  common(mult_cmd);
  mult_cmd->add_option("--lambda", o.lambda, "coefficient p/q")->required();
  mult_cmd->add_option("--pmax", o.pmax, "largest term index used")->check(CLI::PositiveNumber);
  handlers.emplace_back(mult_cmd, detail::cmd_mult_ideal);

  auto* defect_cmd = app.add_subcommand("defect", "defect sequence lct(q^k) - k rho(q)");
  common(defect_cmd);
  defect_cmd->add_option("--q", o.q, "ideal q (default: product of targets)");
  defect_cmd->add_option("--ideal", o.ideal, "alias for --q");
  defect_cmd->add_option("--kmax", o.kmax, "largest k")->check(CLI::PositiveNumber);
  handlers.emplace_back(defect_cmd, detail::cmd_defect);

  auto* interp_cmd = app.add_subcommand("interp", "valuative interpolation decisions");
  interp_cmd->require_subcommand(1);
  auto* check_cmd = interp_cmd->add_subcommand("check", "finite interpolation");
  common(check_cmd);
  handlers.emplace_back(check_cmd, detail::cmd_interp_check);
  auto* inf_cmd = interp_cmd->add_subcommand("infinite", "prefix checker for infinite sequences");
  common(inf_cmd);
  inf_cmd->add_option("--rmax", o.rmax, "longest prefix")->check(CLI::PositiveNumber);
  inf_cmd->add_option("--kmax", o.kmax, "largest power in defect sequences")->check(CLI::PositiveNumber);
  handlers.emplace_back(inf_cmd, detail::cmd_interp_infinite);

  auto* skoda_cmd = app.add_subcommand("skoda", "Skoda containment J(a^m) in a^(m-n+1)");
  common(skoda_cmd);
  skoda_cmd->add_option("--ideal", o.ideal, "ideal name (default: product of targets)");
  skoda_cmd->add_option("--m", o.m, "power m >= n")->required();
  handlers.emplace_back(skoda_cmd, detail::cmd_skoda);

  std::vector<std::string> argv_store{"vip"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  std::ostringstream out, err;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    outcome.out = app.help();
    return outcome;
  } catch (const CLI::CallForVersion&) {
    outcome.out = std::string(kToolVersion) + "\n";
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.exit_code = kExitInputError;
    outcome.err = std::string("error: ") + e.what() + "\n";
    return outcome;
  }

  const std::function<Handled(detail::Context&)>* handler = nullptr;
  CLI::App* chosen = nullptr;
  for (auto& [sub, fn] : handlers)
    if (sub->parsed()) {
      handler = &fn;
      chosen = sub;
    }
  if (!handler) {
    outcome.exit_code = kExitInputError;
    outcome.err = "error: no command given\n";
    return outcome;
  }
  command = chosen->get_parent() != &app ? chosen->get_parent()->get_name() + " " + chosen->get_name()
                                         : chosen->get_name();

  auto t0 = std::chrono::steady_clock::now();
  Handled h;
  try {
    ctx.text = detail::read_file(o.problem);
    ctx.model = dsl::load_model(ctx.text);
    h = (*handler)(ctx);
  } catch (const Error& e) {
    outcome.exit_code = e.kind() == ErrorKind::Consistency ? kExitInternal : kExitInputError;
    outcome.err = std::string("error (") + to_string(e.kind()) + "): " + e.what() + "\n";
    if (o.json) {
      Json j;
      j["schema"] = kSchemaVersion;
      j["tool"] = {{"name", "vip"}, {"version", kToolVersion}};
      j["command"] = command;
      j["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
      outcome.out = j.dump(2) + "\n";
    }
    return outcome;
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  // Echo only options that affect the result; --threads and --timing do not.
  Json echo;
  for (const auto* opt : chosen->get_options()) {
    const std::string name = opt->get_name(false, true);
    if (name.rfind("--", 0) != 0 || name == "--help" || name == "--threads" || name == "--timing" ||
        name == "--json" || opt->count() == 0)
      continue;
    auto results = opt->results();
    echo[name.substr(2)] = opt->get_type_size() == 0 ? Json(true) : Json(results.empty() ? "" : results.back());
  }

  outcome.exit_code = h.code;
  if (o.json) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["tool"] = {{"name", "vip"}, {"version", kToolVersion}};
    j["command"] = command;
    j["options"] = echo;
    j["input"] = {{"dimension", ctx.model.dim()}, {"variables", ctx.model.vars}, {"digest", fnv1a64(ctx.text)}};
    j["result"] = h.result;
    if (o.timing) j["timing"] = {{"seconds", std::to_string(seconds)}};
    outcome.out = j.dump(2) + "\n";
  } else {
    outcome.out = command + ": " + h.human + "\n";
    if (o.timing) outcome.out += "time: " + std::to_string(seconds) + " s\n";
  }
  return outcome;
}

inline int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  Outcome o = run(args);
  std::cout << o.out;
  std::cerr << o.err;
  return o.exit_code;
}

}  // namespace vip::cli
