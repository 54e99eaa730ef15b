#include "aeu/report.hpp"

#include <sstream>

namespace aeu {

Json CheckReport::to_json() const {
  Json laws = Json::array();
  for (const auto& v : verdicts) {
    Json entry;
    entry["law"] = v.law;
    entry["status"] = v.passed ? "pass" : "fail";
    entry["cases"] = v.cases;
    entry["counterexample"] = v.counterexample;
    laws.push_back(std::move(entry));
  }
  Json out;
  out["suite"] = suite;
  out["semiring"] = instance;
  out["budget"] = budget;
  out["laws"] = std::move(laws);
  out["all_pass"] = all_passed();
  return out;
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << " on " << instance << "\n";
  for (const auto& v : verdicts) {
    std::string name = v.law;
    if (name.size() < 36) name.resize(36, ' ');
    os << "  " << name << (v.passed ? "PASS" : "FAIL");
    os << "  " << v.cases << " cases\n";
    if (!v.passed)
      os << "    counterexample: " << v.counterexample.dump() << "\n";
  }
  os << (all_passed() ? "ALL-PASS" : "VIOLATIONS-FOUND") << "\n";
  return os.str();
}

}  // namespace aeu
