#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace aeu {

/// Verdict of a (possibly partial) order comparison.
enum class Comparison { Greater, Less, Equivalent, Incomparable };

constexpr Comparison reversed(Comparison c) {
  switch (c) {
    case Comparison::Greater:
      return Comparison::Less;
    case Comparison::Less:
      return Comparison::Greater;
    default:
      return c;
  }
}

/// True for Greater or Equivalent ("at least as good as").
constexpr bool at_least(Comparison c) {
  return c == Comparison::Greater || c == Comparison::Equivalent;
}

constexpr const char* to_letter(Comparison c) {
  switch (c) {
    case Comparison::Greater:
      return "G";
    case Comparison::Less:
      return "L";
    case Comparison::Equivalent:
      return "E";
    case Comparison::Incomparable:
      return "I";
  }
  return "?";
}

constexpr const char* to_word(Comparison c) {
  switch (c) {
    case Comparison::Greater:
      return "GREATER";
    case Comparison::Less:
      return "LESS";
    case Comparison::Equivalent:
      return "EQUIVALENT";
    case Comparison::Incomparable:
      return "INCOMPARABLE";
  }
  return "?";
}

std::optional<Comparison> comparison_from_letter(std::string_view s);

}  // namespace aeu
