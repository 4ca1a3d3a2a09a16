#pragma once

// Protocol models: a guarded transition system plus the environments it is
// analysed in, with a line-oriented text format.
//
//   protocol "TLS1.3"
//   state S1 {
//     event ClientHello resists replay mitm integrity
//     event Key_share resists replay mitm
//     combine and                 # n-1 operators, left-deep; or a formula
//     message ClientHello Key_share
//   }
//   state S2 { }                  # only the terminal state may be empty
//   alias S3 = S2                 # S3 declares the same events as S2
//   transition S1 -> S2 on msg1 when ClientHello & Key_share
//   initial S1
//   terminal S2 as S_end          # `as` renames the state in proofs
//   environment ideal
//   environment nonideal attackers replay mitm
//
// `#` starts a comment.  Unknown keywords and tags are errors.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lpict/formula.hpp"
#include "lpict/guarded_lts.hpp"
#include "lpict/tags.hpp"

namespace lpict::models {

using lts::AttackerCapability;
using lts::ResistTag;

enum class EnvironmentKind { Ideal, Nonideal };

std::string to_string(EnvironmentKind kind);

struct EnvironmentConfig {
  EnvironmentKind kind = EnvironmentKind::Ideal;
  std::set<AttackerCapability> attackers;  // empty when ideal

  static EnvironmentConfig ideal() { return {}; }
  static EnvironmentConfig nonideal(std::set<AttackerCapability> attackers) {
    return {EnvironmentKind::Nonideal, std::move(attackers)};
  }
  bool operator==(const EnvironmentConfig&) const = default;
};

struct ProtocolModel {
  std::string name;
  lts::GuardedLTS lts;
  std::vector<EnvironmentConfig> environments;  // at most one of each kind

  // Throws ValidationError(MissingEnvironment) when not declared.
  const EnvironmentConfig& environment(EnvironmentKind kind) const;
  bool operator==(const ProtocolModel&) const = default;
};

// Truth value of every event, per state.
struct EventAssignment {
  std::map<std::string, logic::Valuation> states;

  const logic::Valuation& at(const std::string& state) const;
  bool operator==(const EventAssignment& other) const;
};

// Ideal: every event holds.  Non-ideal: an event fails exactly when it lacks
// the resist tag countering one of the attacker's capabilities.  Throws
// ValidationError(InvalidEnvironment) for an ideal environment with attackers.
EventAssignment apply_environment(const ProtocolModel& model, const EnvironmentConfig& env);

// Throws ParseError (position = 1-based line) or ValidationError.
ProtocolModel load_model(std::string_view source);
ProtocolModel load_model_file(const std::string& path);
std::string render_model(const ProtocolModel& model);

ProtocolModel builtin_tls13();
ProtocolModel builtin_dh();
// Built-in model names with a one-line description each.
std::vector<std::pair<std::string, std::string>> builtin_models();
// A built-in name, or else a path to a model file.
ProtocolModel resolve_model(const std::string& name_or_path);

}  // namespace lpict::models
