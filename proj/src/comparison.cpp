#include "aeu/comparison.hpp"

namespace aeu {

std::optional<Comparison> comparison_from_letter(std::string_view s) {
  if (s == "G") return Comparison::Greater;
  if (s == "L") return Comparison::Less;
  if (s == "E") return Comparison::Equivalent;
  if (s == "I") return Comparison::Incomparable;
  return std::nullopt;
}

}  // namespace aeu
