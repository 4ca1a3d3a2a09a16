#pragma once

// Guarded reaction rules.  Each rule behaves like its unguarded counterpart
// when the guard holds and produces nothing when it does not.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpict/event_tree.hpp"
#include "lpict/formula.hpp"
#include "lpict/guarded_lts.hpp"
#include "lpict/process.hpp"

namespace lpict::lts {

enum class LRule { Tau, React, ReactPrime, Par, Res, Struct };

std::string to_string(LRule rule);
// Accepts LTAU, LREACT, LREACT', LPAR, LRES and LSTRUCT; throws DomainError.
LRule parse_lrule(std::string_view tag);

// Successor terms of p permitted by the rule.  LTAU, LREACT and LREACT'
// select redexes by kind, LPAR those with an idle parallel context, LRES
// those under a restriction and LSTRUCT all of them.  An absent guard holds.
std::vector<pi::Process> apply_lrule(LRule rule, const pi::Process& p,
                                     const std::optional<logic::Formula>& guard,
                                     const logic::Valuation& valuation);

// Whether a state's events, combined by `tree`, let it fire.  The tree's
// leaves must be exactly the event names (ValidationError otherwise).
bool lsoom_eval(const std::vector<Event>& events, const EventTree& tree,
                const logic::Valuation& valuation);

}  // namespace lpict::lts
