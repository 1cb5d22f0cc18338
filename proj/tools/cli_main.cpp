#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "frobsplit/flagsplit.hpp"
#include "frobsplit/gmod.hpp"
#include "frobsplit/parse.hpp"
#include "frobsplit/registry.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace frob;

namespace {

constexpr int kExitPass = 0, kExitCheckFail = 1, kExitUsage = 2, kExitResource = 3;

void emit(const json& j, const std::string& format, const std::string& out_path) {
  std::string text = format == "json" ? j.dump(2) + "\n" : std::string();
  if (format == "text") {
    // text mode callers print themselves; here only handle --out
    text = j.dump(2) + "\n";
    if (!out_path.empty()) std::ofstream(out_path) << text;
    return;
  }
  if (!out_path.empty())
    std::ofstream(out_path) << text;
  else
    std::cout << text;
}

std::string char_to_string(const Character& ch) {
  std::string s;
  for (auto& [w, mult] : ch) {
    if (!s.empty()) s += " + ";
    if (mult != 1) s += std::to_string(mult) + "*";
    s += "e" + render_weight(w);
  }
  return s.empty() ? "0" : s;
}

std::string factors_to_string(const Character& cf) {
  std::string s;
  for (auto& [w, mult] : cf)
    for (long long k = 0; k < mult; ++k) {
      if (!s.empty()) s += ", ";
      s += "L" + render_weight(w);
    }
  return s.empty() ? "(none)" : s;
}

json module_summary(const WtModule& m) {
  json j;
  j["dim"] = m.dim();
  j["character"] = char_to_string(character(m));
  j["factors"] = factors_to_string(composition_factors(m));
  return j;
}

int cmd_contract(const std::string& expr, const RunConfig& cfg, const std::string& format,
                 const std::string& out_path) {
  RootDatum d(cfg.rank, cfg.p);
  WtModule m = parse_module_expr(expr, d);
  WtModule c = contract_module(m);
  json j;
  j["p"] = cfg.p;
  j["rank"] = cfg.rank;
  j["module"] = module_summary(m);
  j["module"]["expr"] = expr;
  j["contraction"] = module_summary(c);
  if (format == "text") {
    std::cout << "module " << expr << ": dim " << m.dim() << "\n"
              << "  character: " << j["module"]["character"].get<std::string>() << "\n"
              << "  factors:   " << j["module"]["factors"].get<std::string>() << "\n"
              << "contraction: dim " << c.dim() << "\n"
              << "  character: " << j["contraction"]["character"].get<std::string>() << "\n"
              << "  factors:   " << j["contraction"]["factors"].get<std::string>() << "\n";
  }
  emit(j, format, out_path);
  return kExitPass;
}

int cmd_verify(const std::string& suite, const RunConfig& cfg, const std::string& format,
               const std::string& out_path) {
  std::vector<CheckResult> results = run_suite(suite, cfg);
  bool all_pass = true;
  json checks = json::array();
  for (auto& r : results) {
    all_pass = all_pass && r.pass;
    json c;
    c["name"] = r.name;
    c["paper_anchor"] = r.paper_anchor;
    c["parameters"] = r.parameters;
    c["pass"] = r.pass;
    c["elapsed_ms"] = r.elapsed_ms;
    if (!r.pass) c["witness"] = r.witness;
    checks.push_back(c);
    if (format == "text")
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << " [" << r.paper_anchor << "] ("
                << r.parameters << ", " << r.elapsed_ms << " ms)"
                << (r.pass ? "" : "\n      witness: " + r.witness) << "\n";
  }
  json j;
  j["suite"] = suite;
  j["p"] = cfg.p;
  j["rank"] = cfg.rank;
  j["max_degree"] = effective_degree(cfg);
  j["seed"] = cfg.seed;
  j["sampled"] = cfg.sampled;
  j["pass"] = all_pass;
  j["checks"] = checks;
  if (format == "text")
    std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
  emit(j, format, out_path);
  return all_pass ? kExitPass : kExitCheckFail;
}

int cmd_eval(const std::string& expr, const std::string& apply, const RunConfig& cfg,
             const std::string& format, const std::string& out_path) {
  RootDatum d(cfg.rank, cfg.p);
  DistElem x = parse_dist(expr, d);
  DistElem y = x;
  if (apply == "phi")
    y = phi(x);
  else if (apply == "fr")
    y = dist_fr(x);
  else if (!apply.empty())
    throw CLI::ValidationError("--apply must be phi or fr");
  std::string rendered = render_dist(y);
  json j;
  j["p"] = cfg.p;
  j["rank"] = cfg.rank;
  j["input"] = expr;
  if (!apply.empty()) j["apply"] = apply;
  j["result"] = rendered;
  if (format == "text") std::cout << rendered << "\n";
  emit(j, format, out_path);
  return kExitPass;
}

int cmd_split(const std::string& check, const RunConfig& cfg, const std::string& format,
              const std::string& out_path) {
  long long D = effective_degree(cfg);
  FlagRing r(cfg.p, D);
  bool pass = true;
  std::string why;
  auto run_one = [&](const std::string& name) {
    std::string w;
    bool ok = true;
    if (name == "semiinv")
      ok = psi_a_semi_invariant(r, Gen::E, &w) && psi_a_semi_invariant(r, Gen::F, &w);
    else if (name == "glue")
      ok = theta_glue_check(r, &w) && theta_splits_check(r, &w);
    else if (name == "schubert")
      ok = schubert_models_agree(r, &w) && theta_compatibility_check(r, &w);
    else if (name == "sigma") {
      SigmaReport rep = sigma_checks(r);
      ok = rep.ok;
      w = rep.why;
    } else
      throw CLI::ValidationError("--check must be semiinv, glue, schubert, sigma or all");
    if (!ok && why.empty()) why = name + ": " + w;
    pass = pass && ok;
  };
  if (check == "all")
    for (const char* name : {"semiinv", "glue", "schubert", "sigma"}) run_one(name);
  else
    run_one(check);
  json j;
  j["check"] = check;
  j["p"] = cfg.p;
  j["D"] = D;
  j["pass"] = pass;
  if (!pass) j["counterexample"] = why;
  if (format == "text")
    std::cout << (pass ? "PASS" : "FAIL") << "  split check '" << check << "' (p=" << cfg.p
              << ", D=" << D << ")" << (pass ? "" : "\n  counterexample: " + why) << "\n";
  emit(j, format, out_path);
  return pass ? kExitPass : kExitCheckFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact mod-p workbench: divided-power algebra, Frobenius contraction, "
               "induction functor and flag splittings for SL2^l"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "text", out_path, suite = "all", expr, apply, check = "all";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "prime, 2..13")->capture_default_str();
    sub->add_option("--rank", cfg.rank, "number of SL2 factors")->capture_default_str();
    sub->add_option("--max-degree", cfg.max_degree, "truncation degree D (0 = 3p, cap 8p)");
    sub->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
    sub->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", out_path, "write JSON report to file");
    sub->add_flag("--sampled", cfg.sampled, "smaller randomized batteries");
  };

  CLI::App* c_contract = app.add_subcommand("contract", "Frobenius contraction of a module");
  c_contract->add_option("expr", expr, "module expression, e.g. \"nabla(2)\"")->required();
  add_common(c_contract);

  CLI::App* c_verify = app.add_subcommand("verify", "run a verification suite");
  add_common(c_verify);
  c_verify->add_option("--suite", suite, "hyperalg|contraction|induction|flag|all")
      ->check(CLI::IsMember({"hyperalg", "contraction", "induction", "flag", "all"}));

  CLI::App* c_eval = app.add_subcommand("eval", "normal form of a divided-power expression");
  c_eval->add_option("expr", expr, "e.g. \"E F\" or \"F^(2) [H;1] E\"")->required();
  c_eval->add_option("--apply", apply, "phi|fr");
  add_common(c_eval);

  CLI::App* c_split = app.add_subcommand("split", "flag-variety splitting checks");
  add_common(c_split);
  c_split->add_option("--check", check, "semiinv|glue|schubert|sigma|all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    validate_config(cfg);
    if (c_contract->parsed()) return cmd_contract(expr, cfg, format, out_path);
    if (c_verify->parsed()) return cmd_verify(suite, cfg, format, out_path);
    if (c_eval->parsed()) return cmd_eval(expr, apply, cfg, format, out_path);
    if (c_split->parsed()) return cmd_split(check, cfg, format, out_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    std::cerr << "resource bound exceeded: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
