#pragma once

#include <string>
#include <vector>

#include "lpict/process.hpp"

namespace lpict::pi {

enum class ReactionRule { Tau, React, ReactPrime };

std::string to_string(ReactionRule rule);

struct Successor {
  ReactionRule rule;
  Process term;
  // Some parallel component was left untouched by the redex (PAR context).
  bool idle_context = false;
  // The redex fired under at least one restriction (RES context).
  bool under_restriction = false;
};

// All one-step successors of p.  Redexes are found on the standard form of p,
// with every replication unfolded twice so that two copies of the same body
// may react; this makes the result closed under PAR, RES and STRUCT.
// Successors are deduplicated up to canonical form and returned in discovery
// order.
std::vector<Successor> reduce_step(const Process& p);

}  // namespace lpict::pi
