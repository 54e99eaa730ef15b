#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace aeu {

using Json = nlohmann::ordered_json;

/// Outcome of one checked law or axiom. A failed verdict always carries a
/// reproducible counterexample payload.
struct LawVerdict {
  std::string law;
  bool passed = false;
  std::uint64_t cases = 0;           // size of the enumerated/sampled domain
  Json counterexample;               // null when passed

  static LawVerdict pass(std::string law, std::uint64_t cases) {
    return {std::move(law), true, cases, Json()};
  }
  static LawVerdict fail(std::string law, std::uint64_t cases, Json ce) {
    return {std::move(law), false, cases, std::move(ce)};
  }
};

struct CheckReport {
  std::string suite;
  std::string instance;
  Json budget;
  std::vector<LawVerdict> verdicts;

  bool all_passed() const {
    for (const auto& v : verdicts)
      if (!v.passed) return false;
    return true;
  }

  Json to_json() const;
  /// Fixed-width human summary, one line per law.
  std::string to_text() const;
};

}  // namespace aeu
