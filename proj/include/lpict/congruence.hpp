#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lpict/process.hpp"

namespace lpict::pi {

struct CongruenceOptions {
  // How many copies of a replicated body (!P = P | !P) may be unfolded when
  // looking for a common canonical form.
  std::size_t unfold_bound = 1;
  // Cap on the number of unfolded variants examined per term.
  std::size_t max_variants = 4096;
};

// Structural congruence: alpha-conversion, reordering of sums, monoid laws of
// `|`, scope extrusion, `new x 0 = 0`, restriction swapping and replication
// unfolding up to options.unfold_bound copies.  Throws LimitExceeded when the
// unfolding would produce more than options.max_variants terms.
bool structurally_congruent(const Process& p, const Process& q,
                            const CongruenceOptions& options = {});

// new a1...an (M1 | ... | Mm | !Q1 | ... | !Qk) with unused restrictions
// dropped; continuations and replicated bodies are themselves standard.
Process standard_form(const Process& p);

// True iff p has the standard-form shape (recursively under replication).
bool is_standard_form(const Process& p);

// Canonical key of p with no replication unfolding.
std::string canonical_form_key(const Process& p);

// All terms obtained by unfolding each replication 0..bound times.
std::vector<Process> replication_unfoldings(const Process& p, std::size_t bound,
                                            std::size_t max_variants);

}  // namespace lpict::pi
