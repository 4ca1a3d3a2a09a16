#include "lpict/regex.hpp"

#include "lpict/error.hpp"

namespace lpict::pi {

RegularExpr RegularExpr::make(Kind kind, Name name, std::vector<RegularExpr> children) {
  return RegularExpr(std::make_shared<const Node>(
      Node{kind, std::move(name), std::move(children)}));
}

RegularExpr RegularExpr::empty() {
  static const RegularExpr e = make(Kind::Empty, {}, {});
  return e;
}

RegularExpr RegularExpr::epsilon() {
  static const RegularExpr e = make(Kind::Epsilon, {}, {});
  return e;
}

RegularExpr RegularExpr::symbol(Name name) {
  return make(Kind::Symbol, std::move(name), {});
}

RegularExpr RegularExpr::concat(RegularExpr a, RegularExpr b) {
  if (a.kind() == Kind::Empty || b.kind() == Kind::Empty) return empty();
  if (a.kind() == Kind::Epsilon) return b;
  if (b.kind() == Kind::Epsilon) return a;
  return make(Kind::Concat, {}, {std::move(a), std::move(b)});
}

RegularExpr RegularExpr::alternation(RegularExpr a, RegularExpr b) {
  if (a.kind() == Kind::Empty) return b;
  if (b.kind() == Kind::Empty) return a;
  if (a == b) return a;
  return make(Kind::Union, {}, {std::move(a), std::move(b)});
}

RegularExpr RegularExpr::star(RegularExpr a) {
  if (a.kind() == Kind::Empty || a.kind() == Kind::Epsilon) return epsilon();
  if (a.kind() == Kind::Star) return a;
  return make(Kind::Star, {}, {std::move(a)});
}

bool RegularExpr::nullable() const {
  switch (kind()) {
    case Kind::Empty:
    case Kind::Symbol:
      return false;
    case Kind::Epsilon:
    case Kind::Star:
      return true;
    case Kind::Concat:
      return left().nullable() && right().nullable();
    case Kind::Union:
      return left().nullable() || right().nullable();
  }
  return false;
}

RegularExpr RegularExpr::derivative(const Name& symbol) const {
  switch (kind()) {
    case Kind::Empty:
    case Kind::Epsilon:
      return empty();
    case Kind::Symbol:
      return name() == symbol ? epsilon() : empty();
    case Kind::Concat: {
      RegularExpr head = concat(left().derivative(symbol), right());
      if (!left().nullable()) return head;
      return alternation(head, right().derivative(symbol));
    }
    case Kind::Union:
      return alternation(left().derivative(symbol), right().derivative(symbol));
    case Kind::Star:
      return concat(left().derivative(symbol), *this);
  }
  return empty();
}

bool RegularExpr::matches(const Word& word) const {
  RegularExpr current = *this;
  for (const auto& symbol : word) {
    current = current.derivative(symbol);
    if (current.kind() == Kind::Empty) return false;
  }
  return current.nullable();
}

bool RegularExpr::operator==(const RegularExpr& other) const {
  if (node_ == other.node_) return true;
  return node_->kind == other.node_->kind && node_->name == other.node_->name &&
         node_->children == other.node_->children;
}

std::string to_string(const RegularExpr& r) {
  using Kind = RegularExpr::Kind;
  switch (r.kind()) {
    case Kind::Empty:
      return "{}";
    case Kind::Epsilon:
      return "e";
    case Kind::Symbol:
      return r.name();
    case Kind::Concat:
      return "(" + to_string(r.left()) + "." + to_string(r.right()) + ")";
    case Kind::Union:
      return "(" + to_string(r.left()) + " + " + to_string(r.right()) + ")";
    case Kind::Star:
      return to_string(r.left()) + "*";
  }
  return {};
}

RegularExpr arden_solve(const RegularExpr& s, const RegularExpr& t) {
  if (s.nullable())
    throw DomainError("Arden's rule requires the empty word not to be in S");
  return RegularExpr::concat(RegularExpr::star(s), t);
}

std::vector<Word> enumerate_words(const std::vector<Name>& alphabet,
                                  std::size_t max_length) {
  std::vector<Word> out{Word{}};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& a : alphabet) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace lpict::pi
