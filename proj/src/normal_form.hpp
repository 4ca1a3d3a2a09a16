#pragma once

// Internal representation of a process in standard form:
//
//   new g1 ... gn (M1 | ... | Mm | !Q1 | ... | !Qk)
//
// Restrictions are hoisted to the nearest enclosing prefix or replication,
// parallel compositions are flattened and nils dropped.  Hoisted binders are
// renamed only when they would clash with another name of the same level.

#include <memory>
#include <string>
#include <vector>

#include "lpict/process.hpp"

namespace lpict::pi::detail {

struct NormLevel;

struct NormBranch {
  Prefix prefix;
  std::shared_ptr<const NormLevel> continuation;
};

struct NormUnit {
  bool replicated = false;
  std::vector<NormBranch> branches;           // when !replicated
  std::shared_ptr<const NormLevel> body;      // when replicated
};

struct NormLevel {
  std::vector<Name> group;
  std::vector<NormUnit> units;
};

NormLevel normalize(const Process& p);

// Rebuilds a process: restrictions outermost, then sums, then replications.
Process to_process(const NormLevel& level);
Process unit_to_process(const NormUnit& unit);

NameSet free_names(const NormUnit& unit);

// Canonical text key: two processes have equal keys iff their standard forms
// are equal up to alpha-conversion and reordering of summands, parallel
// components and restrictions.  Throws LimitExceeded when the restriction
// groups are too symmetric to order cheaply.
std::string canonical_key(const NormLevel& level);

}  // namespace lpict::pi::detail
