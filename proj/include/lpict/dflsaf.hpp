#pragma once

// Per-state event evaluation along a protocol chain, followed by the
// ordering and entailment judgments, in one or two environments.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpict/guarded_lts.hpp"
#include "lpict/model.hpp"
#include "lpict/proof.hpp"

namespace lpict::analysis {

struct TraceSymbol {
  std::string state;
  bool value = false;             // the state's event tree
  std::vector<bool> event_values;  // one per event, in declared order

  bool operator==(const TraceSymbol&) const = default;
};

// "S1:11111": state id, colon, event bits.
std::string to_token(const TraceSymbol& symbol);

enum class Verdict { Secure, Flawed };
std::string to_string(Verdict verdict);

struct FailingEvent {
  std::string state;
  std::string event;
  bool operator==(const FailingEvent&) const = default;
};

// Unset when the analysis stopped before reaching the judgment.
struct Judgments {
  std::optional<bool> partial_order;
  std::optional<bool> entailment;
  std::optional<bool> matching;
  bool operator==(const Judgments&) const = default;
};

struct EntailmentResult {
  logic::Sequent sequent;
  std::optional<logic::Proof> forward;
  std::optional<logic::Proof> contradiction;
  bool holds = false;
};

struct DflsafOutcome {
  Verdict verdict = Verdict::Flawed;
  std::vector<TraceSymbol> trace;
  std::optional<FailingEvent> failing;
  Judgments judgments;
  std::optional<EntailmentResult> entailment;
};

DflsafOutcome run_dflsaf(const models::ProtocolModel& model,
                         const models::EnvironmentConfig& env);

// The visited states form a repeat-free sequence in which each state reaches
// every later one and none reaches an earlier one.  Throws
// ValidationError(UnknownState) for states missing from the system.
bool partial_order_check(std::span<const TraceSymbol> trace, const lts::GuardedLTS& lts);

// The chain as a sequent: the initial atom plus one implication per
// transition, concluding the terminal atom.
logic::Sequent chain_sequent(const lts::GuardedLTS& lts);

// Forward and refutation proofs of the sequent, both checked.
EntailmentResult entailment_judgment(const logic::Sequent& sequent);
EntailmentResult entailment_judgment(const lts::GuardedLTS& lts);

struct DualVerdict {
  DflsafOutcome ideal;
  DflsafOutcome nonideal;
  bool matched = false;
  bool secure = false;
};

// Runs both declared environments; the traces match when they have equal
// length and the non-ideal trace contains the ideal one at position 1.
DualVerdict dual_environment_verdict(const models::ProtocolModel& model);

}  // namespace lpict::analysis
