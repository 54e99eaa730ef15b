#include "aeu/engine.hpp"

namespace aeu {

UtilityAssignment::UtilityAssignment(ConsequenceSpace space,
                                     SemiringDescriptor d,
                                     std::map<std::string, BinaryValue> u)
    : space_(std::move(space)), desc_(std::move(d)), u_(std::move(u)) {
  for (const auto& name : space_.names()) {
    const auto it = u_.find(name);
    if (it == u_.end())
      throw InputError("utility assignment misses consequence '" + name + "'");
    require_same_instance(desc_, it->second.descriptor(), "utility");
  }
  for (const auto& [name, value] : u_)
    if (!space_.contains(name))
      throw InputError("utility for unknown consequence '" + name + "'");
  if (!(u_.at(space_.best()) == binary_top(desc_)))
    throw InputError("best consequence must carry the top utility " +
                     binary_top(desc_).str());
  if (!(u_.at(space_.worst()) == binary_bottom(desc_)))
    throw InputError("worst consequence must carry the bottom utility " +
                     binary_bottom(desc_).str());
}

const BinaryValue& UtilityAssignment::at(const std::string& name) const {
  const auto it = u_.find(name);
  if (it == u_.end())
    throw InputError("unknown consequence: '" + name + "'");
  return it->second;
}

namespace {

BinaryValue into_scale(PairValue acc, const char* op) {
  try {
    return BinaryValue{std::move(acc)};
  } catch (const InvariantViolation& e) {
    throw InvariantViolation(std::string(op) +
                             " left the binary scale; the semiring instance "
                             "is broken: " +
                             e.what());
  }
}

PairValue eval_simple(const Lottery& l, const UtilityAssignment& u) {
  const SemiringDescriptor& d = l.descriptor();
  PairValue acc{zero(d), zero(d)};
  for (const auto& [name, mass] : l.dist()) {
    if (!u.space().contains(name))
      throw InputError("lottery mentions consequence '" + name +
                       "' outside the utility space");
    acc = pair_add(acc, scalar_mul(mass, u.at(name).pair()));
  }
  return acc;
}

PairValue fold_pair(const Lottery& l, const UtilityAssignment& u) {
  if (l.is_simple()) return eval_simple(l, u);
  const SemiringDescriptor& d = l.descriptor();
  PairValue acc{zero(d), zero(d)};
  for (const Lottery::Branch& b : l.branches()) {
    // Sub-lotteries must themselves evaluate onto the scale, so the check
    // runs at every level of the induction.
    const BinaryValue sub = into_scale(fold_pair(*b.sub, u), "aeu_fold");
    acc = pair_add(acc, scalar_mul(b.coeff, sub.pair()));
  }
  return acc;
}

}  // namespace

BinaryValue aeu_eval(const Lottery& l, const UtilityAssignment& u) {
  require_same_instance(l.descriptor(), u.descriptor(), "aeu_eval");
  return into_scale(eval_simple(reduce(l), u), "aeu_eval");
}

Comparison aeu_compare(const Lottery& a, const Lottery& b,
                       const UtilityAssignment& u) {
  return compare2(aeu_eval(a, u), aeu_eval(b, u));
}

BinaryValue aeu_fold(const Lottery& l, const UtilityAssignment& u) {
  require_same_instance(l.descriptor(), u.descriptor(), "aeu_fold");
  return into_scale(fold_pair(l, u), "aeu_fold");
}

BinaryValue sigma_measure(const PlausibilityMeasure& m,
                          std::span<const std::string> event) {
  const SemiringValue on = event_plausibility(m, event);
  const SemiringValue off = event_plausibility(m, m.complement(event));
  return {on, off};
}

UtilityAssignment shift_utility(const UtilityAssignment& u,
                                const std::string& pivot, ShiftDirection dir,
                                const SemiringValue& step) {
  const SemiringDescriptor& d = u.descriptor();
  require_same_instance(d, step.descriptor(), "shift_utility");
  if (pivot == u.space().best() || pivot == u.space().worst())
    throw PreconditionError("shift pivot must lie strictly between the "
                            "extreme consequences");
  const BinaryValue& at_pivot = u.at(pivot);

  std::map<std::string, BinaryValue> shifted;
  for (const auto& [name, value] : u.table()) {
    if (name == u.space().best() || name == u.space().worst()) {
      shifted.emplace(name, value);
      continue;
    }
    const Comparison vs_pivot = compare2(value, at_pivot);
    const bool moves = dir == ShiftDirection::Up
                           ? !at_least(vs_pivot)   // strictly below, or askew
                           : !at_least(reversed(vs_pivot));
    if (!moves) {
      shifted.emplace(name, value);
      continue;
    }
    if (dir == ShiftDirection::Up) {
      const auto rest = solve_add(value.second(), step);
      shifted.emplace(name, rest ? BinaryValue{add(value.first(), step), *rest}
                                 : binary_top(d));
    } else {
      const auto rest = solve_add(value.first(), step);
      shifted.emplace(name, rest ? BinaryValue{*rest, add(value.second(), step)}
                                 : binary_bottom(d));
    }
  }
  return {u.space(), d, std::move(shifted)};
}

Lottery binary_lottery(const ConsequenceSpace& space, const BinaryValue& alpha) {
  Lottery::Dist dist;
  dist.emplace(space.best(), alpha.first());
  dist.emplace(space.worst(), alpha.second());
  return Lottery::simple(alpha.descriptor(), std::move(dist));
}

BinaryValue elicit_binary_equivalent(const std::string& x,
                                     const UtilityAssignment& u) {
  const BinaryValue& target = u.at(x);
  const BinaryValue evaluated =
      aeu_eval(binary_lottery(u.space(), target), u);
  if (!(evaluated == target))
    throw InvariantViolation(
        "binary equivalent for '" + x + "' failed verification: expected " +
        target.str() + ", lottery evaluates to " + evaluated.str());
  return target;
}

UtilityAssignment dual_assignment(const UtilityAssignment& u) {
  std::map<std::string, BinaryValue> flipped;
  for (const auto& [name, value] : u.table())
    flipped.emplace(name, swapped(value));
  return {u.space().reversed_ends(), u.descriptor(), std::move(flipped)};
}

}  // namespace aeu
