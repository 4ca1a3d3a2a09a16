#pragma once

// Analysis reports.  The JSON form is the record of truth; the text form is
// rendered from the same fields.
//
// JSON schema (keys in this order):
//   model          string
//   environments   [ { environment: "ideal"|"nonideal", attackers: [string],
//                      verdict: "secure"|"flawed", trace: ["S1:11111", ...],
//                      judgments: { partial_order, entailment, matching }
//                        (each true, false or null when not evaluated),
//                      failing: { state, event } | null } ]
//   matched        bool | null  (null unless both environments ran)
//   verdict        "secure"|"flawed"
//   failing        { state, event } | null  (first failing environment)
//   proofs         [ { style: "forward"|"contradiction", premises: [string],
//                      conclusion: string,
//                      lines: [ { index, formula, rule, refs: [int] } ] } ]
//   duration_ms    number, present only when timed

#include <optional>
#include <string>
#include <vector>

#include "lpict/dflsaf.hpp"
#include "lpict/model.hpp"
#include "lpict/proof.hpp"

namespace lpict::report {

struct EnvironmentReport {
  models::EnvironmentConfig environment;
  analysis::Verdict verdict = analysis::Verdict::Flawed;
  std::vector<std::string> trace;
  analysis::Judgments judgments;
  std::optional<analysis::FailingEvent> failing;

  bool operator==(const EnvironmentReport&) const = default;
};

struct ProofReport {
  std::string style;
  logic::Sequent sequent;
  logic::Proof proof;

  bool operator==(const ProofReport& o) const {
    return style == o.style && sequent.premises == o.sequent.premises &&
           sequent.conclusion == o.sequent.conclusion && proof == o.proof;
  }
};

struct AnalysisReport {
  std::string model;
  std::vector<EnvironmentReport> environments;
  std::optional<bool> matched;
  analysis::Verdict verdict = analysis::Verdict::Flawed;
  std::optional<analysis::FailingEvent> failing;
  std::vector<ProofReport> proofs;
  std::optional<double> duration_ms;

  bool operator==(const AnalysisReport&) const = default;
};

AnalysisReport make_report(const models::ProtocolModel& model,
                           const models::EnvironmentConfig& env,
                           const analysis::DflsafOutcome& outcome);
AnalysisReport make_report(const models::ProtocolModel& model,
                           const analysis::DualVerdict& dual);

enum class Format { Text, Json };

// `color` wraps verdicts in ANSI escapes (text only).
std::string render_report(const AnalysisReport& r, Format format, bool color = false);
// Parses the JSON form; throws ParseError on malformed input.
AnalysisReport parse_report_json(const std::string& json);

// Proof section as printed in text reports: sequent line, then the table.
std::string render_proof_section(const ProofReport& p);
// Proof sections alone; JSON renders an array in the `proofs` schema above.
std::string render_proofs(const std::vector<ProofReport>& proofs, Format format);

}  // namespace lpict::report
