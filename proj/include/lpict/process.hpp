#pragma once

// Process terms of the pi-calculus.
//
// Concrete syntax accepted by parse_process() and emitted by to_string():
//
//   P ::= 0 | pi.P | P + P | P | P | new x P | !P | (P)
//   pi ::= tau | x(y1,...,yn) | x<z1,...,zn> | x        (x alone = x())
//
// `+` binds tighter than `|`; both are left-associative.  `new x` and `!`
// apply to the following prefixed term, `0`, parenthesised term or unary
// term.  Prefix continuations are parsed at the same (unary) level.

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <map>
#include <variant>
#include <vector>

namespace lpict::pi {

using Name = std::string;
using NameSet = std::set<Name>;
using Substitution = std::map<Name, Name>;

struct Prefix {
  enum class Kind : unsigned char { Receive, Send, Tau };

  Kind kind = Kind::Tau;
  Name channel;
  // Binders for Receive, arguments for Send, empty for Tau.
  std::vector<Name> names;

  static Prefix tau() { return {}; }
  static Prefix receive(Name channel, std::vector<Name> params = {});
  static Prefix send(Name channel, std::vector<Name> args = {});

  std::size_t arity() const noexcept { return names.size(); }
  bool operator==(const Prefix&) const = default;
};

struct Node;
struct Branch;

// Immutable, cheaply copyable handle to a process AST node.
class Process {
 public:
  Process();  // 0

  static Process nil();
  static Process prefixed(Prefix prefix, Process continuation);
  static Process sum(std::vector<Branch> branches);
  static Process parallel(Process left, Process right);
  static Process restrict(Name name, Process body);
  static Process replicate(Process body);

  const Node& node() const noexcept { return *node_; }

  bool is_nil() const noexcept;
  bool operator==(const Process& other) const;

 private:
  explicit Process(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Branch {
  Prefix prefix;
  Process continuation;
  bool operator==(const Branch&) const = default;
};

struct Nil {
  bool operator==(const Nil&) const = default;
};
struct Sum {
  std::vector<Branch> branches;  // never empty; an empty sum is Nil
  bool operator==(const Sum&) const = default;
};
struct Parallel {
  Process left;
  Process right;
  bool operator==(const Parallel&) const = default;
};
struct Restriction {
  Name name;
  Process body;
  bool operator==(const Restriction&) const = default;
};
struct Replication {
  Process body;
  bool operator==(const Replication&) const = default;
};

struct Node {
  std::variant<Nil, Sum, Parallel, Restriction, Replication> value;
};

Process parse_process(std::string_view source);
std::string to_string(const Process& p);
std::string to_string(const Prefix& prefix);

// fn(p): names occurring free; receive parameters and restrictions bind.
NameSet free_names(const Process& p);
// Every name occurring in p, bound or free.
NameSet all_names(const Process& p);

// Simultaneous capture-avoiding substitution.  Binders that would capture a
// name in the range of the substitution are renamed to fresh names.
Process substitute(const Process& p, const Substitution& subst);

// Returns `base` if unused, otherwise base1, base2, ... the first not in `used`.
Name fresh_name(const Name& base, const NameSet& used);

// Number of AST nodes, counting each branch prefix as a node.
std::size_t term_size(const Process& p);

}  // namespace lpict::pi
