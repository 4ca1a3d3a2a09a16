#include "lpict/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "lpict/error.hpp"

namespace lpict::report {

using analysis::Verdict;
using json = nlohmann::ordered_json;

namespace {

EnvironmentReport environment_report(const models::EnvironmentConfig& env,
                                     const analysis::DflsafOutcome& outcome) {
  EnvironmentReport r{env, outcome.verdict, {}, outcome.judgments, outcome.failing};
  for (const auto& s : outcome.trace) r.trace.push_back(analysis::to_token(s));
  return r;
}

void add_proofs(AnalysisReport& r, const analysis::DflsafOutcome& outcome) {
  if (!outcome.entailment) return;
  const auto& e = *outcome.entailment;
  if (e.forward) r.proofs.push_back({"forward", e.sequent, *e.forward});
  if (e.contradiction) r.proofs.push_back({"contradiction", e.sequent, *e.contradiction});
}

}  // namespace

AnalysisReport make_report(const models::ProtocolModel& model,
                           const models::EnvironmentConfig& env,
                           const analysis::DflsafOutcome& outcome) {
  AnalysisReport r;
  r.model = model.name;
  r.environments.push_back(environment_report(env, outcome));
  r.verdict = outcome.verdict;
  r.failing = outcome.failing;
  add_proofs(r, outcome);
  return r;
}

AnalysisReport make_report(const models::ProtocolModel& model,
                           const analysis::DualVerdict& dual) {
  AnalysisReport r;
  r.model = model.name;
  r.environments.push_back(
      environment_report(model.environment(models::EnvironmentKind::Ideal), dual.ideal));
  r.environments.push_back(
      environment_report(model.environment(models::EnvironmentKind::Nonideal), dual.nonideal));
  r.matched = dual.matched;
  r.verdict = dual.secure ? Verdict::Secure : Verdict::Flawed;
  r.failing = dual.ideal.failing ? dual.ideal.failing : dual.nonideal.failing;
  add_proofs(r, dual.ideal);
  return r;
}

// ---------------------------------------------------------------------------
// Text

namespace {

std::string judgment_text(const std::optional<bool>& j) {
  if (!j) return "not evaluated";
  return *j ? "holds" : "fails";
}

std::string verdict_text(Verdict v, bool color) {
  const std::string word = analysis::to_string(v);
  if (!color) return word;
  return (v == Verdict::Secure ? "\033[32m" : "\033[31m") + word + "\033[0m";
}

std::string environment_title(const models::EnvironmentConfig& env) {
  std::string out = models::to_string(env.kind);
  if (env.kind == models::EnvironmentKind::Nonideal) {
    out += " (attackers:";
    if (env.attackers.empty()) out += " none";
    for (auto cap : env.attackers) out += " " + lts::to_string(cap);
    out += ")";
  }
  return out;
}

}  // namespace

std::string render_proof_section(const ProofReport& p) {
  return p.style + " proof of " + logic::render_sequent(p.sequent) + "\n" +
         logic::render_proof(p.proof);
}

namespace {

std::string render_text(const AnalysisReport& r, bool color) {
  std::ostringstream out;
  out << "model: " << r.model << "\n";
  for (const auto& e : r.environments) {
    out << "environment: " << environment_title(e.environment) << "\n";
    out << "  verdict: " << verdict_text(e.verdict, color) << "\n";
    out << "  trace:";
    if (e.trace.empty()) out << " (empty)";
    for (const auto& t : e.trace) out << " " << t;
    out << "\n";
    if (e.failing) out << "  failing: " << e.failing->event << " at " << e.failing->state << "\n";
    out << "  partial order: " << judgment_text(e.judgments.partial_order) << "\n";
    out << "  entailment: " << judgment_text(e.judgments.entailment) << "\n";
    if (e.judgments.matching)
      out << "  matching: " << judgment_text(e.judgments.matching) << "\n";
  }
  if (r.environments.empty()) out << "trace: (empty)\n";
  if (r.matched) out << "matched: " << (*r.matched ? "true" : "false") << "\n";
  if (r.failing) out << "failing: " << r.failing->event << " at " << r.failing->state << "\n";
  out << "verdict: " << verdict_text(r.verdict, color) << "\n";
  for (const auto& p : r.proofs) out << "\n" << render_proof_section(p);
  if (r.duration_ms) {
    std::ostringstream ms;
    ms.precision(3);
    ms << std::fixed << *r.duration_ms;
    out << "\nduration: " << ms.str() << " ms\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// JSON

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json failing_json(const std::optional<analysis::FailingEvent>& f) {
  if (!f) return nullptr;
  return json{{"state", f->state}, {"event", f->event}};
}

json proof_json(const ProofReport& p) {
  json premises = json::array();
  for (const auto& f : p.sequent.premises) premises.push_back(logic::to_string(f));
  json lines = json::array();
  for (const auto& l : p.proof.lines)
    lines.push_back({{"index", l.index},
                     {"formula", logic::to_string(l.formula)},
                     {"rule", logic::to_string(l.rule)},
                     {"refs", l.refs}});
  return {{"style", p.style},
          {"premises", premises},
          {"conclusion", logic::to_string(p.sequent.conclusion)},
          {"lines", lines}};
}

json to_json(const AnalysisReport& r) {
  json envs = json::array();
  for (const auto& e : r.environments) {
    json attackers = json::array();
    for (auto cap : e.environment.attackers) attackers.push_back(lts::to_string(cap));
    envs.push_back({{"environment", models::to_string(e.environment.kind)},
                    {"attackers", attackers},
                    {"verdict", analysis::to_string(e.verdict)},
                    {"trace", e.trace},
                    {"judgments",
                     {{"partial_order", optional_bool(e.judgments.partial_order)},
                      {"entailment", optional_bool(e.judgments.entailment)},
                      {"matching", optional_bool(e.judgments.matching)}}},
                    {"failing", failing_json(e.failing)}});
  }
  json proofs = json::array();
  for (const auto& p : r.proofs) proofs.push_back(proof_json(p));
  json doc{{"model", r.model},
           {"environments", envs},
           {"matched", optional_bool(r.matched)},
           {"verdict", analysis::to_string(r.verdict)},
           {"failing", failing_json(r.failing)},
           {"proofs", proofs}};
  if (r.duration_ms) doc["duration_ms"] = *r.duration_ms;
  return doc;
}

Verdict parse_verdict(const std::string& s) {
  if (s == "secure") return Verdict::Secure;
  if (s == "flawed") return Verdict::Flawed;
  throw ParseError("unknown verdict '" + s + "'", 0);
}

std::optional<bool> parse_optional_bool(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<bool>();
}

std::optional<analysis::FailingEvent> parse_failing(const json& j) {
  if (j.is_null()) return std::nullopt;
  return analysis::FailingEvent{j.at("state").get<std::string>(),
                                j.at("event").get<std::string>()};
}

AnalysisReport from_json(const json& doc) {
  AnalysisReport r;
  r.model = doc.at("model").get<std::string>();
  for (const auto& e : doc.at("environments")) {
    EnvironmentReport env;
    const auto kind = e.at("environment").get<std::string>();
    if (kind != "ideal" && kind != "nonideal")
      throw ParseError("unknown environment '" + kind + "'", 0);
    env.environment.kind =
        kind == "ideal" ? models::EnvironmentKind::Ideal : models::EnvironmentKind::Nonideal;
    for (const auto& a : e.at("attackers")) {
      auto cap = lts::parse_capability(a.get<std::string>());
      if (!cap) throw ParseError("unknown attacker capability", 0);
      env.environment.attackers.insert(*cap);
    }
    env.verdict = parse_verdict(e.at("verdict").get<std::string>());
    env.trace = e.at("trace").get<std::vector<std::string>>();
    const auto& j = e.at("judgments");
    env.judgments = {parse_optional_bool(j.at("partial_order")),
                     parse_optional_bool(j.at("entailment")),
                     parse_optional_bool(j.at("matching"))};
    env.failing = parse_failing(e.at("failing"));
    r.environments.push_back(std::move(env));
  }
  r.matched = parse_optional_bool(doc.at("matched"));
  r.verdict = parse_verdict(doc.at("verdict").get<std::string>());
  r.failing = parse_failing(doc.at("failing"));
  for (const auto& p : doc.at("proofs")) {
    ProofReport proof;
    proof.style = p.at("style").get<std::string>();
    for (const auto& f : p.at("premises"))
      proof.sequent.premises.push_back(logic::parse_formula(f.get<std::string>()));
    proof.sequent.conclusion = logic::parse_formula(p.at("conclusion").get<std::string>());
    for (const auto& l : p.at("lines"))
      proof.proof.lines.push_back({l.at("index").get<std::size_t>(),
                                   logic::parse_formula(l.at("formula").get<std::string>()),
                                   logic::rule_from_string(l.at("rule").get<std::string>()),
                                   l.at("refs").get<std::vector<std::size_t>>()});
    r.proofs.push_back(std::move(proof));
  }
  if (doc.contains("duration_ms")) r.duration_ms = doc.at("duration_ms").get<double>();
  return r;
}

}  // namespace

std::string render_report(const AnalysisReport& r, Format format, bool color) {
  if (format == Format::Json) return to_json(r).dump(2) + "\n";
  return render_text(r, color);
}

std::string render_proofs(const std::vector<ProofReport>& proofs, Format format) {
  if (format == Format::Json) {
    json doc = json::array();
    for (const auto& p : proofs) doc.push_back(proof_json(p));
    return doc.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < proofs.size(); ++i)
    out += (i ? "\n" : "") + render_proof_section(proofs[i]);
  return out;
}

AnalysisReport parse_report_json(const std::string& text) {
  try {
    return from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), 0);
  } catch (const DomainError& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), 0);
  }
}

}  // namespace lpict::report
