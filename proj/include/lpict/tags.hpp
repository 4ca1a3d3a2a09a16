#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lpict::lts {

// Security properties an event is built to withstand.
enum class ResistTag {
  Replay,
  Mitm,
  ForwardSecrecy,
  Integrity,
  IdentityAuth,
  SelectionSync,
  Confidentiality,
  Verification,
};

// What a non-ideal environment's attacker can do.
enum class AttackerCapability { Replay, Mitm, Eavesdrop, Tamper, Impersonate };

const std::vector<ResistTag>& all_resist_tags();
const std::vector<AttackerCapability>& all_capabilities();

std::string to_string(ResistTag tag);
std::string to_string(AttackerCapability capability);

std::optional<ResistTag> parse_resist_tag(std::string_view text);
std::optional<AttackerCapability> parse_capability(std::string_view text);

// The tag an event needs in order to survive the capability.
ResistTag countered_by(AttackerCapability capability);

}  // namespace lpict::lts
