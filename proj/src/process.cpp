#include "lpict/process.hpp"

#include <cctype>
#include <utility>

#include "lpict/error.hpp"

namespace lpict::pi {

Prefix Prefix::receive(Name channel, std::vector<Name> params) {
  return {Kind::Receive, std::move(channel), std::move(params)};
}

Prefix Prefix::send(Name channel, std::vector<Name> args) {
  return {Kind::Send, std::move(channel), std::move(args)};
}

namespace {

const std::shared_ptr<const Node>& nil_node() {
  static const auto node = std::make_shared<const Node>(Node{Nil{}});
  return node;
}

}  // namespace

Process::Process() : node_(nil_node()) {}

Process Process::nil() { return Process(); }

Process Process::prefixed(Prefix prefix, Process continuation) {
  return sum({Branch{std::move(prefix), std::move(continuation)}});
}

Process Process::sum(std::vector<Branch> branches) {
  if (branches.empty()) return nil();
  return Process(std::make_shared<const Node>(Node{Sum{std::move(branches)}}));
}

Process Process::parallel(Process left, Process right) {
  return Process(std::make_shared<const Node>(
      Node{Parallel{std::move(left), std::move(right)}}));
}

Process Process::restrict(Name name, Process body) {
  return Process(std::make_shared<const Node>(
      Node{Restriction{std::move(name), std::move(body)}}));
}

Process Process::replicate(Process body) {
  return Process(
      std::make_shared<const Node>(Node{Replication{std::move(body)}}));
}

bool Process::is_nil() const noexcept {
  return std::holds_alternative<Nil>(node_->value);
}

bool Process::operator==(const Process& other) const {
  if (node_ == other.node_) return true;
  return node_->value == other.node_->value;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class ProcessParser {
 public:
  explicit ProcessParser(std::string_view src) : src_(src) {}

  Process parse() {
    Process p = parse_parallel();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("process syntax error: " + msg, pos_);
  }

  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string peek_word() {
    skip_ws();
    std::size_t end = pos_;
    if (end < src_.size() && is_ident_start(src_[end])) {
      while (end < src_.size() && is_ident_char(src_[end])) ++end;
    }
    return std::string(src_.substr(pos_, end - pos_));
  }

  Name identifier() {
    std::string word = peek_word();
    if (word.empty()) fail("expected a name");
    if (word == "tau" || word == "new") fail("'" + word + "' is reserved");
    pos_ += word.size();
    return word;
  }

  std::vector<Name> name_list(char close) {
    std::vector<Name> names;
    if (accept(close)) return names;
    do {
      names.push_back(identifier());
    } while (accept(','));
    expect(close);
    return names;
  }

  Process parse_parallel() {
    Process left = parse_sum();
    while (accept('|')) {
      Process right = parse_sum();
      left = Process::parallel(std::move(left), std::move(right));
    }
    return left;
  }

  Process parse_sum() {
    std::size_t start = pos_;
    Process first = parse_unary();
    if (!peek('+')) return first;

    std::vector<Branch> branches;
    auto absorb = [&](const Process& operand) {
      if (operand.is_nil()) return;
      const auto* s = std::get_if<Sum>(&operand.node().value);
      if (s == nullptr) {
        pos_ = start;
        fail("operand of '+' must be a prefixed term or 0");
      }
      branches.insert(branches.end(), s->branches.begin(), s->branches.end());
    };
    absorb(first);
    while (accept('+')) {
      start = pos_;
      absorb(parse_unary());
    }
    return Process::sum(std::move(branches));
  }

  Process parse_unary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '!') {
      ++pos_;
      return Process::replicate(parse_unary());
    }
    if (c == '(') {
      ++pos_;
      Process inner = parse_parallel();
      expect(')');
      return inner;
    }
    if (c == '0' && (pos_ + 1 == src_.size() || !is_ident_char(src_[pos_ + 1]))) {
      ++pos_;
      return Process::nil();
    }
    std::string word = peek_word();
    if (word == "new") {
      pos_ += word.size();
      Name bound = identifier();
      return Process::restrict(std::move(bound), parse_unary());
    }
    if (word == "tau") {
      pos_ += word.size();
      expect('.');
      return Process::prefixed(Prefix::tau(), parse_unary());
    }
    std::size_t prefix_pos = pos_;
    Name channel = identifier();
    Prefix prefix = Prefix::receive(channel);
    if (accept('(')) {
      prefix.names = name_list(')');
      NameSet seen;
      for (const auto& n : prefix.names) {
        if (!seen.insert(n).second) {
          pos_ = prefix_pos;
          fail("duplicate binder '" + n + "' in receive prefix");
        }
      }
    } else if (accept('<')) {
      prefix = Prefix::send(channel, name_list('>'));
    }
    expect('.');
    return Process::prefixed(std::move(prefix), parse_unary());
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Process parse_process(std::string_view source) {
  return ProcessParser(source).parse();
}

// ---------------------------------------------------------------------------
// Printer

namespace {

enum class Level { Parallel = 0, Sum = 1, Unary = 2 };

std::string join(const std::vector<Name>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out;
}

std::string print(const Process& p, Level ctx);

std::string print_branch(const Branch& b) {
  return to_string(b.prefix) + "." + print(b.continuation, Level::Unary);
}

std::string print(const Process& p, Level ctx) {
  struct Visitor {
    Level ctx;
    std::string operator()(const Nil&) const { return "0"; }
    std::string operator()(const Sum& s) const {
      if (s.branches.size() == 1) return print_branch(s.branches.front());
      std::string out;
      for (std::size_t i = 0; i < s.branches.size(); ++i) {
        if (i) out += " + ";
        out += print_branch(s.branches[i]);
      }
      return ctx > Level::Sum ? "(" + out + ")" : out;
    }
    std::string operator()(const Parallel& par) const {
      std::string out =
          print(par.left, Level::Parallel) + " | " + print(par.right, Level::Sum);
      return ctx > Level::Parallel ? "(" + out + ")" : out;
    }
    std::string operator()(const Restriction& r) const {
      return "new " + r.name + " " + print(r.body, Level::Unary);
    }
    std::string operator()(const Replication& r) const {
      return "!" + print(r.body, Level::Unary);
    }
  };
  return std::visit(Visitor{ctx}, p.node().value);
}

}  // namespace

std::string to_string(const Prefix& prefix) {
  switch (prefix.kind) {
    case Prefix::Kind::Tau:
      return "tau";
    case Prefix::Kind::Receive:
      if (prefix.names.empty()) return prefix.channel;
      return prefix.channel + "(" + join(prefix.names) + ")";
    case Prefix::Kind::Send:
      return prefix.channel + "<" + join(prefix.names) + ">";
  }
  return {};
}

std::string to_string(const Process& p) { return print(p, Level::Parallel); }

// ---------------------------------------------------------------------------
// Names

namespace {

void collect_free(const Process& p, NameSet& out) {
  struct Visitor {
    NameSet& out;
    void operator()(const Nil&) const {}
    void operator()(const Sum& s) const {
      for (const auto& b : s.branches) {
        if (b.prefix.kind != Prefix::Kind::Tau) out.insert(b.prefix.channel);
        if (b.prefix.kind == Prefix::Kind::Send) {
          out.insert(b.prefix.names.begin(), b.prefix.names.end());
          collect_free(b.continuation, out);
        } else if (b.prefix.kind == Prefix::Kind::Receive) {
          NameSet inner;
          collect_free(b.continuation, inner);
          for (const auto& param : b.prefix.names) inner.erase(param);
          out.insert(inner.begin(), inner.end());
        } else {
          collect_free(b.continuation, out);
        }
      }
    }
    void operator()(const Parallel& par) const {
      collect_free(par.left, out);
      collect_free(par.right, out);
    }
    void operator()(const Restriction& r) const {
      NameSet inner;
      collect_free(r.body, inner);
      inner.erase(r.name);
      out.insert(inner.begin(), inner.end());
    }
    void operator()(const Replication& r) const { collect_free(r.body, out); }
  };
  std::visit(Visitor{out}, p.node().value);
}

void collect_all(const Process& p, NameSet& out) {
  struct Visitor {
    NameSet& out;
    void operator()(const Nil&) const {}
    void operator()(const Sum& s) const {
      for (const auto& b : s.branches) {
        if (b.prefix.kind != Prefix::Kind::Tau) out.insert(b.prefix.channel);
        out.insert(b.prefix.names.begin(), b.prefix.names.end());
        collect_all(b.continuation, out);
      }
    }
    void operator()(const Parallel& par) const {
      collect_all(par.left, out);
      collect_all(par.right, out);
    }
    void operator()(const Restriction& r) const {
      out.insert(r.name);
      collect_all(r.body, out);
    }
    void operator()(const Replication& r) const { collect_all(r.body, out); }
  };
  std::visit(Visitor{out}, p.node().value);
}

}  // namespace

NameSet free_names(const Process& p) {
  NameSet out;
  collect_free(p, out);
  return out;
}

NameSet all_names(const Process& p) {
  NameSet out;
  collect_all(p, out);
  return out;
}

Name fresh_name(const Name& base, const NameSet& used) {
  if (!used.contains(base)) return base;
  for (std::size_t i = 1;; ++i) {
    Name candidate = base + std::to_string(i);
    if (!used.contains(candidate)) return candidate;
  }
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

Name rename_with(const Substitution& s, const Name& n) {
  auto it = s.find(n);
  return it == s.end() ? n : it->second;
}

// Enters the scope of `binders` over `body`: drops shadowed entries and
// renames binders that would capture a name in the substitution's range.
// Returns the substitution to use for the body; `binders` is updated in place.
Substitution enter_scope(const Substitution& subst, std::vector<Name>& binders,
                         const Process& body) {
  Substitution inner;
  NameSet body_free = free_names(body);
  for (const auto& [from, to] : subst) {
    bool shadowed = false;
    for (const auto& b : binders) shadowed = shadowed || b == from;
    if (!shadowed && body_free.contains(from)) inner.emplace(from, to);
  }
  if (inner.empty()) return inner;

  NameSet range;
  for (const auto& [from, to] : inner) range.insert(to);

  NameSet used = body_free;
  used.insert(range.begin(), range.end());
  for (const auto& [from, to] : inner) used.insert(from);
  used.insert(binders.begin(), binders.end());

  for (auto& b : binders) {
    if (!range.contains(b)) continue;
    Name renamed = fresh_name(b, used);
    used.insert(renamed);
    inner[b] = renamed;
    b = renamed;
  }
  return inner;
}

Process subst_rec(const Process& p, const Substitution& subst) {
  if (subst.empty()) return p;
  struct Visitor {
    const Substitution& subst;
    Process operator()(const Nil&) const { return Process::nil(); }
    Process operator()(const Sum& s) const {
      std::vector<Branch> out;
      out.reserve(s.branches.size());
      for (const auto& b : s.branches) {
        Prefix prefix = b.prefix;
        if (prefix.kind != Prefix::Kind::Tau)
          prefix.channel = rename_with(subst, prefix.channel);
        if (prefix.kind == Prefix::Kind::Send) {
          for (auto& n : prefix.names) n = rename_with(subst, n);
          out.push_back({std::move(prefix), subst_rec(b.continuation, subst)});
        } else if (prefix.kind == Prefix::Kind::Receive) {
          Substitution inner = enter_scope(subst, prefix.names, b.continuation);
          out.push_back({std::move(prefix), subst_rec(b.continuation, inner)});
        } else {
          out.push_back({std::move(prefix), subst_rec(b.continuation, subst)});
        }
      }
      return Process::sum(std::move(out));
    }
    Process operator()(const Parallel& par) const {
      return Process::parallel(subst_rec(par.left, subst),
                               subst_rec(par.right, subst));
    }
    Process operator()(const Restriction& r) const {
      std::vector<Name> binder{r.name};
      Substitution inner = enter_scope(subst, binder, r.body);
      return Process::restrict(binder.front(), subst_rec(r.body, inner));
    }
    Process operator()(const Replication& r) const {
      return Process::replicate(subst_rec(r.body, subst));
    }
  };
  return std::visit(Visitor{subst}, p.node().value);
}

}  // namespace

Process substitute(const Process& p, const Substitution& subst) {
  Substitution effective;
  for (const auto& [from, to] : subst)
    if (from != to) effective.emplace(from, to);
  return subst_rec(p, effective);
}

std::size_t term_size(const Process& p) {
  struct Visitor {
    std::size_t operator()(const Nil&) const { return 1; }
    std::size_t operator()(const Sum& s) const {
      std::size_t n = 0;
      for (const auto& b : s.branches) n += 1 + term_size(b.continuation);
      return n;
    }
    std::size_t operator()(const Parallel& par) const {
      return 1 + term_size(par.left) + term_size(par.right);
    }
    std::size_t operator()(const Restriction& r) const {
      return 1 + term_size(r.body);
    }
    std::size_t operator()(const Replication& r) const {
      return 1 + term_size(r.body);
    }
  };
  return std::visit(Visitor{}, p.node().value);
}

}  // namespace lpict::pi
