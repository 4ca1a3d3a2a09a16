#include "lpict/dflsaf.hpp"

#include <set>

#include "lpict/error.hpp"
#include "lpict/kmp.hpp"
#include "lpict/state_tree.hpp"

namespace lpict::analysis {

using logic::Formula;

std::string to_token(const TraceSymbol& symbol) {
  std::string out = symbol.state + ":";
  for (bool b : symbol.event_values) out += b ? '1' : '0';
  return out;
}

std::string to_string(Verdict verdict) {
  return verdict == Verdict::Secure ? "secure" : "flawed";
}

DflsafOutcome run_dflsaf(const models::ProtocolModel& model,
                         const models::EnvironmentConfig& env) {
  const auto assignment = models::apply_environment(model, env);
  const StateTree tree = build_state_tree(model.lts);

  DflsafOutcome out;
  for (const StateTree* node = &tree; node; node = node->next.get()) {
    const lts::StateNode& state = model.lts.state(node->state);
    const logic::Valuation& values = assignment.at(state.id);
    TraceSymbol symbol{state.id, true, {}};
    for (const auto& e : state.events) symbol.event_values.push_back(values.get(e.name));
    if (node->events) symbol.value = lts::eval_event_tree(*node->events, values);
    out.trace.push_back(symbol);
    if (!symbol.value) {
      out.failing = FailingEvent{state.id, lts::first_false_leaf(*node->events, values)->event()};
      return out;
    }
  }

  out.judgments.partial_order = partial_order_check(out.trace, model.lts);
  out.entailment = entailment_judgment(model.lts);
  out.judgments.entailment = out.entailment->holds;
  if (*out.judgments.partial_order && *out.judgments.entailment) out.verdict = Verdict::Secure;
  return out;
}

bool partial_order_check(std::span<const TraceSymbol> trace, const lts::GuardedLTS& lts) {
  std::set<std::string> seen;
  for (const auto& s : trace) {
    lts.state(s.state);
    if (!seen.insert(s.state).second) return false;
  }
  for (std::size_t i = 0; i < trace.size(); ++i)
    for (std::size_t j = i + 1; j < trace.size(); ++j)
      if (!lts.reaches(trace[i].state, trace[j].state) ||
          lts.reaches(trace[j].state, trace[i].state))
        return false;
  return true;
}

logic::Sequent chain_sequent(const lts::GuardedLTS& lts) {
  const auto states = spine(build_state_tree(lts));
  logic::Sequent sequent;
  sequent.premises.push_back(Formula::atom(lts.atom_for(states.front())));
  for (std::size_t i = 0; i + 1 < states.size(); ++i)
    sequent.premises.push_back(Formula::implication(Formula::atom(lts.atom_for(states[i])),
                                                    Formula::atom(lts.atom_for(states[i + 1]))));
  sequent.conclusion = Formula::atom(lts.atom_for(states.back()));
  return sequent;
}

EntailmentResult entailment_judgment(const logic::Sequent& sequent) {
  EntailmentResult r;
  r.sequent = sequent;
  r.forward = logic::search_forward_chain(sequent.premises, sequent.conclusion);
  r.contradiction = logic::search_contradiction(sequent.premises, sequent.conclusion);
  r.holds = r.forward && r.contradiction && logic::check_proof(sequent, *r.forward).valid &&
            logic::check_proof(sequent, *r.contradiction).valid;
  return r;
}

EntailmentResult entailment_judgment(const lts::GuardedLTS& lts) {
  return entailment_judgment(chain_sequent(lts));
}

DualVerdict dual_environment_verdict(const models::ProtocolModel& model) {
  const auto& ideal_env = model.environment(models::EnvironmentKind::Ideal);
  const auto& nonideal_env = model.environment(models::EnvironmentKind::Nonideal);
  DualVerdict d;
  d.ideal = run_dflsaf(model, ideal_env);
  d.nonideal = run_dflsaf(model, nonideal_env);
  d.matched = d.ideal.trace.size() == d.nonideal.trace.size() &&
              kmp_match(d.nonideal.trace, d.ideal.trace, 1) == std::optional<std::size_t>{1};
  d.nonideal.judgments.matching = d.matched;
  const bool judgments_hold = d.nonideal.judgments.partial_order.value_or(false) &&
                              d.nonideal.judgments.entailment.value_or(false);
  d.secure = d.ideal.verdict == Verdict::Secure && d.matched && judgments_hold;
  return d;
}

}  // namespace lpict::analysis
