#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpict/error.hpp"

namespace lpict::analysis {

// Knuth-Morris-Pratt failure function: fail[i] is the length of the longest
// proper border of pattern[0..i].
template <typename T, typename Eq = std::equal_to<>>
std::vector<std::size_t> kmp_failure(std::span<const T> pattern, Eq eq = {}) {
  std::vector<std::size_t> fail(pattern.size(), 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < pattern.size(); ++i) {
    while (k > 0 && !eq(pattern[i], pattern[k])) k = fail[k - 1];
    if (eq(pattern[i], pattern[k])) ++k;
    fail[i] = k;
  }
  return fail;
}

// Smallest 1-based index >= pos at which pattern occurs in text.  pos must
// lie in [1, text.size() + 1]; an empty pattern matches at pos.
template <typename T, typename Eq = std::equal_to<>>
std::optional<std::size_t> kmp_match(std::span<const T> text, std::span<const T> pattern,
                                     std::size_t pos = 1, Eq eq = {}) {
  if (pos < 1 || pos > text.size() + 1)
    throw DomainError("match position " + std::to_string(pos) + " outside [1, " +
                      std::to_string(text.size() + 1) + "]");
  if (pattern.empty()) return pos;
  const auto fail = kmp_failure(pattern, eq);
  std::size_t k = 0;
  for (std::size_t i = pos - 1; i < text.size(); ++i) {
    while (k > 0 && !eq(text[i], pattern[k])) k = fail[k - 1];
    if (eq(text[i], pattern[k])) ++k;
    if (k == pattern.size()) return i + 2 - pattern.size();
  }
  return std::nullopt;
}

template <typename T>
std::optional<std::size_t> kmp_match(const std::vector<T>& text, const std::vector<T>& pattern,
                                     std::size_t pos = 1) {
  return kmp_match(std::span<const T>(text), std::span<const T>(pattern), pos);
}

}  // namespace lpict::analysis
