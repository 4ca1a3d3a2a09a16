#include "normal_form.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lpict/error.hpp"

namespace lpict::pi::detail {

namespace {

void collect(const Process& p, NormLevel& level, NameSet& reserved);

std::shared_ptr<const NormLevel> normalize_shared(const Process& p) {
  return std::make_shared<const NormLevel>(normalize(p));
}

void collect(const Process& p, NormLevel& level, NameSet& reserved) {
  struct Visitor {
    NormLevel& level;
    NameSet& reserved;
    void operator()(const Nil&) const {}
    void operator()(const Sum& s) const {
      NormUnit unit;
      for (const auto& b : s.branches)
        unit.branches.push_back({b.prefix, normalize_shared(b.continuation)});
      level.units.push_back(std::move(unit));
    }
    void operator()(const Parallel& par) const {
      collect(par.left, level, reserved);
      collect(par.right, level, reserved);
    }
    void operator()(const Restriction& r) const {
      if (!reserved.contains(r.name)) {
        reserved.insert(r.name);
        level.group.push_back(r.name);
        collect(r.body, level, reserved);
        return;
      }
      NameSet used = reserved;
      NameSet inner = all_names(r.body);
      used.insert(inner.begin(), inner.end());
      Name renamed = fresh_name(r.name, used);
      reserved.insert(renamed);
      level.group.push_back(renamed);
      collect(substitute(r.body, {{r.name, renamed}}), level, reserved);
    }
    void operator()(const Replication& r) const {
      NormUnit unit;
      unit.replicated = true;
      unit.body = normalize_shared(r.body);
      level.units.push_back(std::move(unit));
    }
  };
  std::visit(Visitor{level, reserved}, p.node().value);
}

NameSet level_free_names(const NormLevel& level);

}  // namespace

NameSet free_names(const NormUnit& unit) {
  NameSet out;
  if (unit.replicated) return level_free_names(*unit.body);
  for (const auto& b : unit.branches) {
    if (b.prefix.kind != Prefix::Kind::Tau) out.insert(b.prefix.channel);
    NameSet inner = level_free_names(*b.continuation);
    if (b.prefix.kind == Prefix::Kind::Receive) {
      for (const auto& param : b.prefix.names) inner.erase(param);
    } else if (b.prefix.kind == Prefix::Kind::Send) {
      out.insert(b.prefix.names.begin(), b.prefix.names.end());
    }
    out.insert(inner.begin(), inner.end());
  }
  return out;
}

namespace {

NameSet level_free_names(const NormLevel& level) {
  NameSet out;
  for (const auto& u : level.units) {
    NameSet f = free_names(u);
    out.insert(f.begin(), f.end());
  }
  for (const auto& g : level.group) out.erase(g);
  return out;
}

}  // namespace

NormLevel normalize(const Process& p) {
  NormLevel level;
  NameSet reserved = free_names(p);
  collect(p, level, reserved);

  NameSet used;
  for (const auto& u : level.units) {
    NameSet f = free_names(u);
    used.insert(f.begin(), f.end());
  }
  std::erase_if(level.group, [&](const Name& g) { return !used.contains(g); });
  return level;
}

Process unit_to_process(const NormUnit& unit) {
  if (unit.replicated) return Process::replicate(to_process(*unit.body));
  std::vector<Branch> branches;
  for (const auto& b : unit.branches)
    branches.push_back({b.prefix, to_process(*b.continuation)});
  return Process::sum(std::move(branches));
}

Process to_process(const NormLevel& level) {
  std::vector<Process> parts;
  for (const auto& u : level.units)
    if (!u.replicated) parts.push_back(unit_to_process(u));
  for (const auto& u : level.units)
    if (u.replicated) parts.push_back(unit_to_process(u));

  Process body;
  if (!parts.empty()) {
    body = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
      body = Process::parallel(body, parts[i]);
  }
  for (auto it = level.group.rbegin(); it != level.group.rend(); ++it)
    body = Process::restrict(*it, body);
  return body;
}

// ---------------------------------------------------------------------------
// Canonical keys

namespace {

using Env = std::map<Name, std::string>;

constexpr std::size_t kMaxGroupOrderings = 5040;

std::string key_level(const NormLevel& level, std::size_t depth, const Env& env);

const std::string& lookup(const Env& env, const Name& n) {
  auto it = env.find(n);
  return it == env.end() ? n : it->second;
}

std::string key_branch(const NormBranch& b, std::size_t depth, const Env& env) {
  const Prefix& p = b.prefix;
  std::string out;
  switch (p.kind) {
    case Prefix::Kind::Tau:
      out = "t.";
      return out + key_level(*b.continuation, depth + 1, env);
    case Prefix::Kind::Send: {
      out = "s" + lookup(env, p.channel) + "<";
      for (std::size_t i = 0; i < p.names.size(); ++i) {
        if (i) out += ',';
        out += lookup(env, p.names[i]);
      }
      out += ">.";
      return out + key_level(*b.continuation, depth + 1, env);
    }
    case Prefix::Kind::Receive: {
      out = "r" + lookup(env, p.channel) + "(" + std::to_string(p.arity()) + ").";
      Env inner = env;
      for (std::size_t i = 0; i < p.names.size(); ++i)
        inner[p.names[i]] = "$" + std::to_string(depth) + "." + std::to_string(i);
      return out + key_level(*b.continuation, depth + 1, inner);
    }
  }
  return out;
}

std::string key_unit(const NormUnit& u, std::size_t depth, const Env& env) {
  if (u.replicated) return "![" + key_level(*u.body, depth + 1, env) + "]";
  std::vector<std::string> keys;
  keys.reserve(u.branches.size());
  for (const auto& b : u.branches) keys.push_back(key_branch(b, depth, env));
  std::sort(keys.begin(), keys.end());
  std::string out = "+[";
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i) out += ',';
    out += keys[i];
  }
  return out + "]";
}

std::string assemble(std::size_t group_size, std::vector<std::string> keys) {
  std::sort(keys.begin(), keys.end());
  std::string out = "v" + std::to_string(group_size) + "[";
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i) out += '|';
    out += keys[i];
  }
  return out + "]";
}

// Key of one connected block: restricted names `group` and the units they
// occur in.  Names are numbered in every order consistent with an
// alpha-invariant signature and the smallest key wins.
std::string key_block(const std::vector<Name>& group, const std::vector<const NormUnit*>& units,
                      std::size_t depth, const Env& env) {
  const std::size_t n = group.size();

  // Signature of a name: the keys, with every restricted name erased, of the
  // units it occurs in.
  Env erased = env;
  for (const auto& g : group) erased[g] = "*";
  std::vector<std::string> erased_keys;
  std::vector<NameSet> unit_names;
  for (const NormUnit* u : units) {
    erased_keys.push_back(key_unit(*u, depth, erased));
    unit_names.push_back(free_names(*u));
  }
  std::vector<std::pair<std::string, Name>> signed_names;
  for (const auto& g : group) {
    std::vector<std::string> sig;
    for (std::size_t i = 0; i < units.size(); ++i)
      if (unit_names[i].contains(g)) sig.push_back(erased_keys[i]);
    std::sort(sig.begin(), sig.end());
    std::string joined;
    for (const auto& s : sig) joined += s + ";";
    signed_names.emplace_back(std::move(joined), g);
  }
  std::sort(signed_names.begin(), signed_names.end());

  // Tie classes: runs of equal signature.  Names within a class are permuted.
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  std::size_t orderings = 1;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && signed_names[j].first == signed_names[i].first) ++j;
    if (j - i > 1) {
      classes.emplace_back(i, j);
      for (std::size_t k = 2; k <= j - i; ++k) {
        orderings *= k;
        if (orderings > kMaxGroupOrderings)
          throw LimitExceeded("restriction group too symmetric to canonicalize");
      }
    }
    i = j;
  }

  std::vector<Name> order;
  for (const auto& [sig, name] : signed_names) order.push_back(name);
  for (const auto& [lo, hi] : classes)
    std::sort(order.begin() + lo, order.begin() + hi);

  std::string best;
  bool first = true;
  while (true) {
    Env named = env;
    for (std::size_t i = 0; i < n; ++i)
      named[order[i]] = "#" + std::to_string(depth) + "." + std::to_string(i);
    std::vector<std::string> keys;
    for (const NormUnit* u : units) keys.push_back(key_unit(*u, depth, named));
    std::string candidate = "{" + assemble(n, std::move(keys)) + "}";
    if (first || candidate < best) best = std::move(candidate);
    first = false;

    // Odometer over the permutations of each tie class.
    std::size_t c = 0;
    for (; c < classes.size(); ++c) {
      auto [lo, hi] = classes[c];
      if (std::next_permutation(order.begin() + lo, order.begin() + hi)) break;
    }
    if (c == classes.size()) break;
  }
  return best;
}

// Restricted names that never share a unit are keyed independently: the
// level splits into blocks connected through shared names, and the level key
// is the sorted list of block keys.  Replicated copies with private names
// thus cost one block each instead of a factorial search.
std::string key_level(const NormLevel& level, std::size_t depth, const Env& env) {
  const std::size_t n = level.group.size();
  std::map<Name, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[level.group[i]] = i;

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  // Group positions per unit; units without restricted names stay loose.
  std::vector<std::vector<std::size_t>> members(level.units.size());
  for (std::size_t u = 0; u < level.units.size(); ++u) {
    for (const auto& name : free_names(level.units[u])) {
      auto it = index.find(name);
      if (it != index.end()) members[u].push_back(it->second);
    }
    for (std::size_t k = 1; k < members[u].size(); ++k)
      parent[find(members[u][k])] = find(members[u][0]);
  }

  std::map<std::size_t, std::pair<std::vector<Name>, std::vector<const NormUnit*>>> blocks;
  std::vector<std::string> keys;
  for (std::size_t i = 0; i < n; ++i) blocks[find(i)].first.push_back(level.group[i]);
  for (std::size_t u = 0; u < level.units.size(); ++u) {
    if (members[u].empty()) {
      keys.push_back(key_unit(level.units[u], depth, env));
    } else {
      blocks[find(members[u][0])].second.push_back(&level.units[u]);
    }
  }
  for (const auto& [root, block] : blocks)
    keys.push_back(key_block(block.first, block.second, depth, env));
  return assemble(n, std::move(keys));
}

}  // namespace

std::string canonical_key(const NormLevel& level) { return key_level(level, 0, {}); }

}  // namespace lpict::pi::detail
