#include "lpict/tags.hpp"

#include <array>
#include <utility>

namespace lpict::lts {
namespace {

constexpr std::array<std::pair<ResistTag, std::string_view>, 8> kTagNames{{
    {ResistTag::Replay, "replay"},
    {ResistTag::Mitm, "mitm"},
    {ResistTag::ForwardSecrecy, "forward_secrecy"},
    {ResistTag::Integrity, "integrity"},
    {ResistTag::IdentityAuth, "identity_auth"},
    {ResistTag::SelectionSync, "selection_sync"},
    {ResistTag::Confidentiality, "confidentiality"},
    {ResistTag::Verification, "verification"},
}};

constexpr std::array<std::pair<AttackerCapability, std::string_view>, 5> kCapabilityNames{{
    {AttackerCapability::Replay, "replay"},
    {AttackerCapability::Mitm, "mitm"},
    {AttackerCapability::Eavesdrop, "eavesdrop"},
    {AttackerCapability::Tamper, "tamper"},
    {AttackerCapability::Impersonate, "impersonate"},
}};

}  // namespace

const std::vector<ResistTag>& all_resist_tags() {
  static const std::vector<ResistTag> tags = [] {
    std::vector<ResistTag> out;
    for (const auto& [tag, name] : kTagNames) out.push_back(tag);
    return out;
  }();
  return tags;
}

const std::vector<AttackerCapability>& all_capabilities() {
  static const std::vector<AttackerCapability> caps = [] {
    std::vector<AttackerCapability> out;
    for (const auto& [cap, name] : kCapabilityNames) out.push_back(cap);
    return out;
  }();
  return caps;
}

std::string to_string(ResistTag tag) {
  for (const auto& [t, name] : kTagNames)
    if (t == tag) return std::string(name);
  return {};
}

std::string to_string(AttackerCapability capability) {
  for (const auto& [c, name] : kCapabilityNames)
    if (c == capability) return std::string(name);
  return {};
}

std::optional<ResistTag> parse_resist_tag(std::string_view text) {
  for (const auto& [t, name] : kTagNames)
    if (name == text) return t;
  return std::nullopt;
}

std::optional<AttackerCapability> parse_capability(std::string_view text) {
  for (const auto& [c, name] : kCapabilityNames)
    if (name == text) return c;
  return std::nullopt;
}

ResistTag countered_by(AttackerCapability capability) {
  switch (capability) {
    case AttackerCapability::Replay:
      return ResistTag::Replay;
    case AttackerCapability::Mitm:
      return ResistTag::Mitm;
    case AttackerCapability::Eavesdrop:
      return ResistTag::Confidentiality;
    case AttackerCapability::Tamper:
      return ResistTag::Integrity;
    case AttackerCapability::Impersonate:
      return ResistTag::IdentityAuth;
  }
  return ResistTag::Replay;
}

}  // namespace lpict::lts
