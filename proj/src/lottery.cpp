#include "aeu/lottery.hpp"

#include <algorithm>
#include <set>

namespace aeu {

// ---------------------------------------------------------------------------
// ConsequenceSpace

ConsequenceSpace::ConsequenceSpace(std::vector<std::string> names,
                                   std::string best, std::string worst)
    : names_(std::move(names)), best_(std::move(best)), worst_(std::move(worst)) {
  if (names_.size() < 2)
    throw InputError("consequence space needs at least two consequences");
  std::set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second)
      throw InputError("duplicate consequence name: '" + n + "'");
  if (best_ == worst_)
    throw InputError("best and worst consequences must differ");
  if (!seen.count(best_))
    throw InputError("best consequence '" + best_ + "' is not in the space");
  if (!seen.count(worst_))
    throw InputError("worst consequence '" + worst_ + "' is not in the space");
}

bool ConsequenceSpace::contains(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::size_t ConsequenceSpace::index_of(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    throw InputError("unknown consequence: '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

ConsequenceSpace ConsequenceSpace::reversed_ends() const {
  return {names_, worst_, best_};
}

// ---------------------------------------------------------------------------
// Lottery

namespace {

void check_normalized(const SemiringDescriptor& d, const SemiringValue& total,
                      const char* what) {
  if (!(total == one(d)))
    throw InvariantViolation(std::string(what) +
                             " does not sum to the unit of " + d.str() +
                             " (got " + to_literal(total) + ")");
}

}  // namespace

Lottery Lottery::simple(const SemiringDescriptor& d, Dist dist) {
  SemiringValue total = zero(d);
  for (auto it = dist.begin(); it != dist.end();) {
    require_same_instance(d, it->second.descriptor(), "lottery");
    total = add(total, it->second);
    if (it->second == zero(d))
      it = dist.erase(it);  // canonical form omits zero mass
    else
      ++it;
  }
  check_normalized(d, total, "simple lottery");
  return Lottery{d, std::move(dist)};
}

Lottery Lottery::compound(const SemiringDescriptor& d,
                          std::vector<Branch> branches) {
  if (branches.empty())
    throw InvariantViolation("compound lottery needs at least one branch");
  SemiringValue total = zero(d);
  for (const Branch& b : branches) {
    require_same_instance(d, b.coeff.descriptor(), "lottery");
    if (!b.sub) throw InvariantViolation("compound branch without sub-lottery");
    require_same_instance(d, b.sub->descriptor(), "lottery");
    total = add(total, b.coeff);
  }
  check_normalized(d, total, "compound coefficients");
  return Lottery{d, std::move(branches)};
}

Lottery Lottery::compound(const SemiringDescriptor& d,
                          std::vector<std::pair<SemiringValue, Lottery>> parts) {
  std::vector<Branch> branches;
  branches.reserve(parts.size());
  for (auto& [coeff, sub] : parts)
    branches.push_back(
        {std::move(coeff), std::make_shared<const Lottery>(std::move(sub))});
  return compound(d, std::move(branches));
}

SemiringValue Lottery::mass(const std::string& name) const {
  const Dist& m = dist();
  const auto it = m.find(name);
  return it == m.end() ? zero(desc_) : it->second;
}

std::size_t Lottery::depth() const {
  if (is_simple()) return 1;
  std::size_t deepest = 0;
  for (const Branch& b : branches()) deepest = std::max(deepest, b.sub->depth());
  return deepest + 1;
}

bool Lottery::operator==(const Lottery& o) const {
  if (!(desc_ == o.desc_)) return false;
  if (is_simple() != o.is_simple()) return false;
  if (is_simple()) return dist() == o.dist();
  const auto& a = branches();
  const auto& b = o.branches();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i].coeff == b[i].coeff)) return false;
    if (a[i].sub == b[i].sub) continue;  // shared subtree
    if (!(*a[i].sub == *b[i].sub)) return false;
  }
  return true;
}

Lottery degenerate(const ConsequenceSpace& space, const SemiringDescriptor& d,
                   const std::string& x) {
  if (!space.contains(x))
    throw InputError("unknown consequence: '" + x + "'");
  Lottery::Dist dist;
  dist.emplace(x, one(d));
  return Lottery::simple(d, std::move(dist));
}

Lottery reduce(const Lottery& l) {
  if (l.is_simple()) return l;
  const SemiringDescriptor& d = l.descriptor();
  Lottery::Dist acc;
  for (const Lottery::Branch& b : l.branches()) {
    const Lottery flat = reduce(*b.sub);
    for (const auto& [name, mass] : flat.dist()) {
      const SemiringValue term = mul(b.coeff, mass);
      auto [it, inserted] = acc.emplace(name, term);
      if (!inserted) it->second = add(it->second, term);
    }
  }
  return Lottery::simple(d, std::move(acc));
}

Lottery substitute(const Lottery& l, std::span<const std::size_t> path,
                   const Lottery& replacement) {
  if (path.empty())
    throw InputError("substitution path must address a branch");
  if (l.is_simple())
    throw InputError("substitution path descends into a simple lottery");
  const auto& branches = l.branches();
  if (path.front() >= branches.size())
    throw InputError("substitution path index " +
                     std::to_string(path.front()) + " out of range");
  std::vector<Lottery::Branch> out = branches;
  if (path.size() == 1) {
    require_same_instance(l.descriptor(), replacement.descriptor(),
                          "substitute");
    out[path.front()].sub = std::make_shared<const Lottery>(replacement);
  } else {
    out[path.front()].sub = std::make_shared<const Lottery>(
        substitute(*branches[path.front()].sub, path.subspan(1), replacement));
  }
  return Lottery::compound(l.descriptor(), std::move(out));
}

// ---------------------------------------------------------------------------
// PlausibilityMeasure

PlausibilityMeasure::PlausibilityMeasure(
    SemiringDescriptor d, std::vector<std::string> states,
    std::map<std::string, SemiringValue> weights)
    : desc_(std::move(d)), states_(std::move(states)), weights_(std::move(weights)) {
  if (states_.empty()) throw InputError("measure needs at least one state");
  std::set<std::string> seen;
  for (const auto& s : states_)
    if (!seen.insert(s).second)
      throw InputError("duplicate state name: '" + s + "'");
  SemiringValue total = zero(desc_);
  for (const auto& s : states_) {
    auto it = weights_.find(s);
    if (it == weights_.end()) {
      weights_.emplace(s, zero(desc_));
      continue;
    }
    require_same_instance(desc_, it->second.descriptor(), "measure");
    total = add(total, it->second);
  }
  for (const auto& [s, w] : weights_)
    if (!seen.count(s)) throw InputError("weight for unknown state: '" + s + "'");
  check_normalized(desc_, total, "measure weights");
}

const SemiringValue& PlausibilityMeasure::weight(const std::string& state) const {
  const auto it = weights_.find(state);
  if (it == weights_.end())
    throw InputError("unknown state: '" + state + "'");
  return it->second;
}

std::vector<std::string> PlausibilityMeasure::complement(
    std::span<const std::string> event) const {
  const std::set<std::string> in(event.begin(), event.end());
  std::vector<std::string> out;
  for (const auto& s : states_)
    if (!in.count(s)) out.push_back(s);
  return out;
}

SemiringValue event_plausibility(const PlausibilityMeasure& m,
                                 std::span<const std::string> event) {
  SemiringValue total = zero(m.descriptor());
  std::set<std::string> seen;
  for (const auto& s : event) {
    if (!seen.insert(s).second) continue;
    total = add(total, m.weight(s));
  }
  return total;
}

PlausibilityMeasure product_measure(const PlausibilityMeasure& a,
                                    const PlausibilityMeasure& b) {
  require_same_instance(a.descriptor(), b.descriptor(), "product_measure");
  std::vector<std::string> states;
  std::map<std::string, SemiringValue> weights;
  for (const auto& s : a.states()) {
    for (const auto& t : b.states()) {
      const std::string name = s + "|" + t;
      states.push_back(name);
      weights.emplace(name, mul(a.weight(s), b.weight(t)));
    }
  }
  return {a.descriptor(), std::move(states), std::move(weights)};
}

Lottery induced_lottery(const PlausibilityMeasure& m, const Act& f,
                        const ConsequenceSpace& space) {
  const SemiringDescriptor& d = m.descriptor();
  Lottery::Dist dist;
  for (const auto& s : m.states()) {
    const auto it = f.assignment.find(s);
    if (it == f.assignment.end())
      throw InputError("act does not cover state '" + s + "'");
    if (!space.contains(it->second))
      throw InputError("act maps state '" + s + "' to unknown consequence '" +
                       it->second + "'");
    const SemiringValue& w = m.weight(s);
    auto [pos, inserted] = dist.emplace(it->second, w);
    if (!inserted) pos->second = add(pos->second, w);
  }
  for (const auto& [s, x] : f.assignment)
    if (std::find(m.states().begin(), m.states().end(), s) == m.states().end())
      throw InputError("act mentions unknown state '" + s + "'");
  return Lottery::simple(d, std::move(dist));
}

}  // namespace aeu
