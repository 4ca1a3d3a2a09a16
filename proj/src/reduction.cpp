#include "lpict/reduction.hpp"

#include <optional>
#include <set>

#include "lpict/congruence.hpp"
#include "normal_form.hpp"

namespace lpict::pi {

std::string to_string(ReactionRule rule) {
  switch (rule) {
    case ReactionRule::Tau:
      return "TAU";
    case ReactionRule::React:
      return "REACT";
    case ReactionRule::ReactPrime:
      return "REACT'";
  }
  return {};
}

namespace {

constexpr int kOriginal = -1;
constexpr int kCopiesPerReplication = 2;

struct PoolEntry {
  detail::NormUnit unit;
  int owner;
};

struct Copy {
  int parent;
  std::vector<Name> group;
};

// The units of a standard form plus unfolded copies of every replication.
class RedexPool {
 public:
  explicit RedexPool(const Process& p) : level_(detail::normalize(p)) {
    used_ = all_names(p);
    for (const auto& u : level_.units) entries_.push_back({u, kOriginal});
    const std::size_t originals = entries_.size();
    for (std::size_t i = 0; i < originals; ++i)
      if (entries_[i].unit.replicated) expand(kOriginal, i);
  }

  std::vector<Successor> successors() const {
    std::vector<Successor> out;
    std::set<std::string> seen;
    auto emit = [&](ReactionRule rule, std::size_t a, Process ra,
                    std::optional<std::pair<std::size_t, Process>> b) {
      Successor s = assemble(rule, a, std::move(ra), std::move(b));
      std::string key = to_string(rule) + ":" + canonical_form_key(s.term);
      if (seen.insert(key).second) out.push_back(std::move(s));
    };

    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const auto& ui = entries_[i].unit;
      if (ui.replicated) continue;
      for (const auto& bi : ui.branches) {
        if (bi.prefix.kind == Prefix::Kind::Tau) {
          emit(ReactionRule::Tau, i, detail::to_process(*bi.continuation),
               std::nullopt);
          continue;
        }
        if (bi.prefix.kind != Prefix::Kind::Receive) continue;
        for (std::size_t j = 0; j < entries_.size(); ++j) {
          const auto& uj = entries_[j].unit;
          if (j == i || uj.replicated) continue;
          for (const auto& bj : uj.branches) {
            if (bj.prefix.kind != Prefix::Kind::Send ||
                bj.prefix.channel != bi.prefix.channel ||
                bj.prefix.arity() != bi.prefix.arity())
              continue;
            Substitution subst;
            for (std::size_t k = 0; k < bi.prefix.arity(); ++k)
              subst.emplace(bi.prefix.names[k], bj.prefix.names[k]);
            Process receiver = substitute(detail::to_process(*bi.continuation), subst);
            Process sender = detail::to_process(*bj.continuation);
            ReactionRule rule = bi.prefix.arity() == 0 ? ReactionRule::React
                                                       : ReactionRule::ReactPrime;
            emit(rule, i, std::move(receiver), std::pair{j, std::move(sender)});
          }
        }
      }
    }
    return out;
  }

 private:
  void expand(int parent, std::size_t replicated_entry) {
    const detail::NormLevel body = *entries_[replicated_entry].unit.body;
    for (int c = 0; c < kCopiesPerReplication; ++c) {
      Copy copy{parent, {}};
      Substitution renaming;
      for (const auto& g : body.group) {
        Name fresh = fresh_name(g, used_);
        used_.insert(fresh);
        copy.group.push_back(fresh);
        renaming.emplace(g, fresh);
      }
      const int id = static_cast<int>(copies_.size());
      copies_.push_back(copy);
      const std::size_t first = entries_.size();
      for (const auto& u : body.units) {
        Process renamed = substitute(detail::unit_to_process(u), renaming);
        entries_.push_back({detail::normalize(renamed).units.front(), id});
      }
      const std::size_t last = entries_.size();
      for (std::size_t k = first; k < last; ++k)
        if (entries_[k].unit.replicated) expand(id, k);
    }
  }

  Successor assemble(ReactionRule rule, std::size_t a, Process ra,
                     std::optional<std::pair<std::size_t, Process>> b) const {
    std::set<int> required;
    auto require = [&](int owner) {
      while (owner != kOriginal && required.insert(owner).second)
        owner = copies_[owner].parent;
    };
    require(entries_[a].owner);
    if (b) require(entries_[b->first].owner);

    Successor s{rule, Process::nil()};
    std::vector<Process> parts;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      int owner = entries_[k].owner;
      if (owner != kOriginal && !required.contains(owner)) continue;
      if (k == a) {
        parts.push_back(ra);
      } else if (b && k == b->first) {
        parts.push_back(b->second);
      } else {
        parts.push_back(detail::unit_to_process(entries_[k].unit));
        s.idle_context = true;
      }
    }

    std::vector<Name> group = level_.group;
    for (int c : required)
      group.insert(group.end(), copies_[c].group.begin(), copies_[c].group.end());
    s.under_restriction = !group.empty();

    Process term = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k)
      term = Process::parallel(term, parts[k]);
    for (auto it = group.rbegin(); it != group.rend(); ++it)
      term = Process::restrict(*it, term);
    s.term = std::move(term);
    return s;
  }

  detail::NormLevel level_;
  NameSet used_;
  std::vector<PoolEntry> entries_;
  std::vector<Copy> copies_;
};

}  // namespace

std::vector<Successor> reduce_step(const Process& p) {
  return RedexPool(p).successors();
}

}  // namespace lpict::pi
