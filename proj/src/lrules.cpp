#include "lpict/lrules.hpp"

#include <set>

#include "lpict/error.hpp"
#include "lpict/reduction.hpp"

namespace lpict::lts {

namespace {

constexpr std::pair<LRule, std::string_view> kRuleTags[] = {
    {LRule::Tau, "LTAU"}, {LRule::React, "LREACT"}, {LRule::ReactPrime, "LREACT'"},
    {LRule::Par, "LPAR"}, {LRule::Res, "LRES"},     {LRule::Struct, "LSTRUCT"},
};

bool selects(LRule rule, const pi::Successor& s) {
  switch (rule) {
    case LRule::Tau:
      return s.rule == pi::ReactionRule::Tau;
    case LRule::React:
      return s.rule == pi::ReactionRule::React;
    case LRule::ReactPrime:
      return s.rule == pi::ReactionRule::ReactPrime;
    case LRule::Par:
      return s.idle_context;
    case LRule::Res:
      return s.under_restriction;
    case LRule::Struct:
      return true;
  }
  return false;
}

}  // namespace

std::string to_string(LRule rule) {
  for (const auto& [r, tag] : kRuleTags)
    if (r == rule) return std::string(tag);
  return {};
}

LRule parse_lrule(std::string_view tag) {
  for (const auto& [r, t] : kRuleTags)
    if (t == tag) return r;
  throw DomainError("unknown rule tag '" + std::string(tag) + "'");
}

std::vector<pi::Process> apply_lrule(LRule rule, const pi::Process& p,
                                     const std::optional<logic::Formula>& guard,
                                     const logic::Valuation& valuation) {
  if (guard && !logic::eval_formula(*guard, valuation)) return {};
  std::vector<pi::Process> out;
  for (const auto& s : pi::reduce_step(p))
    if (selects(rule, s)) out.push_back(s.term);
  return out;
}

bool lsoom_eval(const std::vector<Event>& events, const EventTree& tree,
                const logic::Valuation& valuation) {
  std::set<std::string> declared, used;
  for (const auto& e : events) declared.insert(e.name);
  for (const EventTree* leaf : leaves(tree)) used.insert(leaf->event());
  if (declared != used)
    throw ValidationError(ValidationError::Kind::LeafMismatch,
                          "tree leaves differ from the declared events");
  return eval_event_tree(tree, valuation);
}

}  // namespace lpict::lts
