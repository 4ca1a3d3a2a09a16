#pragma once

// Regular expressions over the name alphabet and Arden's rule for the
// language equation X = S.X + T.

#include <memory>
#include <string>
#include <vector>

#include "lpict/process.hpp"

namespace lpict::pi {

using Word = std::vector<Name>;

class RegularExpr {
 public:
  enum class Kind { Empty, Epsilon, Symbol, Concat, Union, Star };

  // Smart constructors apply only the identities that keep the language
  // unchanged: 0.r = 0, e.r = r, 0 + r = r, 0* = e* = e, r** = r*.
  static RegularExpr empty();
  static RegularExpr epsilon();
  static RegularExpr symbol(Name name);
  static RegularExpr concat(RegularExpr a, RegularExpr b);
  static RegularExpr alternation(RegularExpr a, RegularExpr b);
  static RegularExpr star(RegularExpr a);

  Kind kind() const noexcept { return node_->kind; }
  const Name& name() const noexcept { return node_->name; }
  const RegularExpr& left() const noexcept { return node_->children.front(); }
  const RegularExpr& right() const noexcept { return node_->children.back(); }

  bool nullable() const;
  // Brzozowski derivative with respect to one symbol.
  RegularExpr derivative(const Name& symbol) const;
  bool matches(const Word& word) const;

  bool operator==(const RegularExpr& other) const;

 private:
  struct Node {
    Kind kind;
    Name name;
    std::vector<RegularExpr> children;
  };
  explicit RegularExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static RegularExpr make(Kind kind, Name name, std::vector<RegularExpr> children);

  std::shared_ptr<const Node> node_;
};

std::string to_string(const RegularExpr& r);

// Least solution S*.T of X = S.X + T.  Throws DomainError when the empty
// word is in the language of S.
RegularExpr arden_solve(const RegularExpr& s, const RegularExpr& t);

// Every word over `alphabet` of length at most max_length, shortest first.
std::vector<Word> enumerate_words(const std::vector<Name>& alphabet,
                                  std::size_t max_length);

}  // namespace lpict::pi
