#include "lpict/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "lpict/dflsaf.hpp"
#include "lpict/error.hpp"
#include "lpict/kmp.hpp"
#include "lpict/model.hpp"
#include "lpict/reduction.hpp"
#include "lpict/report.hpp"

namespace lpict::cli {

namespace {

struct Options {
  std::string model;
  std::string env;
  std::string attackers;
  bool dual = false;
  std::string style;
  std::string format = "text";
  std::string term;
  std::size_t steps = 10;
  std::string ideal_file, actual_file;
  std::size_t pos = 1;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

report::Format format_of(const Options& o) {
  return o.format == "json" ? report::Format::Json : report::Format::Text;
}

bool color_enabled() {
  const char* v = std::getenv("LPICT_COLOR");
  return v && std::string(v) == "1";
}

std::set<lts::AttackerCapability> parse_attackers(const std::string& list) {
  std::set<lts::AttackerCapability> out;
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    auto cap = lts::parse_capability(item);
    if (!cap) throw UsageError("unknown attacker capability '" + item + "'");
    out.insert(*cap);
  }
  return out;
}

int analyze(const Options& o, std::ostream& out) {
  models::ProtocolModel model = models::resolve_model(o.model);
  const auto start = std::chrono::steady_clock::now();
  report::AnalysisReport r;

  if (o.dual) {
    if (!o.env.empty()) throw UsageError("--dual runs both environments; drop --env");
    if (!o.attackers.empty()) {
      auto nonideal = models::EnvironmentConfig::nonideal(parse_attackers(o.attackers));
      std::erase_if(model.environments, [](const auto& e) {
        return e.kind == models::EnvironmentKind::Nonideal;
      });
      model.environments.push_back(nonideal);
    }
    r = report::make_report(model, analysis::dual_environment_verdict(model));
  } else {
    models::EnvironmentConfig env;
    if (o.env == "nonideal") {
      if (!o.attackers.empty()) {
        env = models::EnvironmentConfig::nonideal(parse_attackers(o.attackers));
      } else {
        env = model.environment(models::EnvironmentKind::Nonideal);
      }
    } else if (!o.attackers.empty()) {
      throw UsageError("--attackers needs --env nonideal or --dual");
    }
    r = report::make_report(model, env, analysis::run_dflsaf(model, env));
  }

  r.duration_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  out << report::render_report(r, format_of(o), color_enabled());
  return r.verdict == analysis::Verdict::Secure ? 0 : 1;
}

int prove(const Options& o, std::ostream& out) {
  const auto model = models::resolve_model(o.model);
  const auto result = analysis::entailment_judgment(model.lts);
  std::vector<report::ProofReport> proofs;
  bool valid = true;
  auto add = [&](const char* style, const std::optional<logic::Proof>& proof) {
    if (!o.style.empty() && o.style != style) return;
    if (!proof) {
      valid = false;
      return;
    }
    valid = valid && logic::check_proof(result.sequent, *proof).valid;
    proofs.push_back({style, result.sequent, *proof});
  };
  add("forward", result.forward);
  add("contradiction", result.contradiction);
  out << report::render_proofs(proofs, format_of(o));
  if (!valid && format_of(o) == report::Format::Text) out << "no valid proof found\n";
  return valid ? 0 : 1;
}

int reduce(const Options& o, std::ostream& out) {
  pi::Process p = pi::parse_process(o.term);
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  steps.push_back({{"step", 0}, {"rule", nullptr}, {"term", pi::to_string(p)}, {"choices", 0}});
  for (std::size_t i = 1; i <= o.steps; ++i) {
    const auto next = pi::reduce_step(p);
    if (next.empty()) break;
    p = next.front().term;
    steps.back()["choices"] = next.size();
    steps.push_back({{"step", i},
                     {"rule", pi::to_string(next.front().rule)},
                     {"term", pi::to_string(p)},
                     {"choices", 0}});
  }
  if (format_of(o) == report::Format::Json) {
    out << steps.dump(2) << "\n";
    return 0;
  }
  for (const auto& s : steps) {
    out << s["step"].get<std::size_t>() << ": ";
    if (!s["rule"].is_null()) out << "[" << s["rule"].get<std::string>() << "] ";
    out << s["term"].get<std::string>() << "\n";
  }
  if (pi::reduce_step(p).empty()) out << "(no further reductions)\n";
  return 0;
}

std::vector<std::string> read_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open trace file '" + path + "'");
  std::vector<std::string> tokens;
  for (std::string line; std::getline(in, line);) {
    line = line.substr(0, line.find('#'));
    std::istringstream words(line);
    for (std::string w; words >> w;) tokens.push_back(w);
  }
  return tokens;
}

int match(const Options& o, std::ostream& out) {
  const auto ideal = read_trace(o.ideal_file);
  const auto actual = read_trace(o.actual_file);
  const auto at = analysis::kmp_match(actual, ideal, o.pos);
  const bool full = at == std::optional<std::size_t>{1} && actual.size() == ideal.size();
  if (format_of(o) == report::Format::Json) {
    nlohmann::ordered_json position = nullptr;
    if (at) position = *at;
    nlohmann::ordered_json doc{{"position", position}, {"matched", full}};
    out << doc.dump(2) << "\n";
  } else {
    out << "position: " << (at ? std::to_string(*at) : "none") << "\n";
    out << "matched: " << (full ? "true" : "false") << "\n";
  }
  return at ? 0 : 1;
}

int list_models(std::ostream& out) {
  for (const auto& [name, description] : models::builtin_models())
    out << name << "\t" << description << "\n";
  return 0;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Logic security analysis of protocol state machines", "lpict"};
  app.require_subcommand(1);
  Options o;
  const auto formats = CLI::IsMember({"text", "json"});

  auto* analyze_cmd = app.add_subcommand("analyze", "Evaluate a model in one or both environments");
  analyze_cmd->add_option("--model", o.model, "Built-in name or model file")->required();
  analyze_cmd->add_option("--env", o.env, "ideal or nonideal")
      ->check(CLI::IsMember({"ideal", "nonideal"}));
  analyze_cmd->add_option("--attackers", o.attackers, "Comma-separated capabilities");
  analyze_cmd->add_flag("--dual", o.dual, "Compare ideal and non-ideal runs");
  analyze_cmd->add_option("--format", o.format)->check(formats);

  auto* prove_cmd = app.add_subcommand("prove", "Prove the model's chain sequent");
  prove_cmd->add_option("--model", o.model, "Built-in name or model file")->required();
  prove_cmd->add_option("--style", o.style, "forward or contradiction (default both)")
      ->check(CLI::IsMember({"forward", "contradiction"}));
  prove_cmd->add_option("--format", o.format)->check(formats);

  auto* reduce_cmd = app.add_subcommand("reduce", "Step a pi-calculus term");
  reduce_cmd->add_option("--term", o.term, "Process term")->required();
  reduce_cmd->add_option("--steps", o.steps, "Maximum number of steps");
  reduce_cmd->add_option("--format", o.format)->check(formats);

  auto* match_cmd = app.add_subcommand("match", "Search an ideal trace inside an actual one");
  match_cmd->add_option("--ideal", o.ideal_file, "Pattern trace file")->required();
  match_cmd->add_option("--actual", o.actual_file, "Text trace file")->required();
  match_cmd->add_option("--pos", o.pos, "1-based start position");
  match_cmd->add_option("--format", o.format)->check(formats);

  auto* models_cmd = app.add_subcommand("models", "List built-in models");

  std::ostringstream out, err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? 0 : 2, out.str(), err.str()};
  }

  int code = 2;
  try {
    if (*analyze_cmd) code = analyze(o, out);
    if (*prove_cmd) code = prove(o, out);
    if (*reduce_cmd) code = reduce(o, out);
    if (*match_cmd) code = match(o, out);
    if (*models_cmd) code = list_models(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return {2, out.str(), err.str()};
  }
  return {code, out.str(), err.str()};
}

}  // namespace lpict::cli
