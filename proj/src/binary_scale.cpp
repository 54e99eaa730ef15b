#include "aeu/binary_scale.hpp"

namespace aeu {

PairValue::PairValue(SemiringValue first, SemiringValue second)
    : first_(std::move(first)), second_(std::move(second)) {
  require_same_instance(first_.descriptor(), second_.descriptor(), "pair");
}

BinaryValue::BinaryValue(SemiringValue first, SemiringValue second)
    : first_(std::move(first)), second_(std::move(second)) {
  require_same_instance(first_.descriptor(), second_.descriptor(),
                        "binary value");
  const SemiringValue total = add(first_, second_);
  if (!(total == one(first_.descriptor())))
    throw InvariantViolation("pair (" + to_literal(first_) + ", " +
                             to_literal(second_) +
                             ") is not on the binary scale of " +
                             first_.descriptor().str());
}

std::string BinaryValue::str() const {
  return "[\"" + to_literal(first_) + "\",\"" + to_literal(second_) + "\"]";
}

BinaryValue binary_top(const SemiringDescriptor& d) {
  return {one(d), zero(d)};
}

BinaryValue binary_bottom(const SemiringDescriptor& d) {
  return {zero(d), one(d)};
}

PairValue pair_add(const PairValue& a, const PairValue& b) {
  return {add(a.first(), b.first()), add(a.second(), b.second())};
}

PairValue scalar_mul(const SemiringValue& lambda, const PairValue& a) {
  return {mul(lambda, a.first()), mul(lambda, a.second())};
}

Comparison compare2(const BinaryValue& a, const BinaryValue& b) {
  require_same_instance(a.descriptor(), b.descriptor(), "compare2");
  const Comparison best = leq(a.first(), b.first());
  const Comparison worst = leq(a.second(), b.second());
  if (best == Comparison::Equivalent && worst == Comparison::Equivalent)
    return Comparison::Equivalent;
  const bool ge = at_least(best) && at_least(reversed(worst));
  const bool le = at_least(reversed(best)) && at_least(worst);
  if (ge) return Comparison::Greater;
  if (le) return Comparison::Less;
  return Comparison::Incomparable;
}

BinaryValue swapped(const BinaryValue& a) { return {a.second(), a.first()}; }

BinaryValue solve_scale(const SemiringValue& lambda, const SemiringValue& mu) {
  auto [p, q] = solve_scale_parts(lambda, mu);
  const SemiringValue total = add(lambda, mu);
  if (!(mul(total, p) == lambda) || !(mul(total, q) == mu))
    throw InvariantViolation("scale solver failed for (" + to_literal(lambda) +
                             ", " + to_literal(mu) + ") on " +
                             lambda.descriptor().str());
  return BinaryValue{std::move(p), std::move(q)};
}

std::optional<SemiringValue> e1_witness(const BinaryValue& a,
                                        const BinaryValue& b) {
  require_same_instance(a.descriptor(), b.descriptor(), "e1_witness");
  const SemiringDescriptor& d = a.descriptor();
  if (d.kind == SemiringKind::Product) {
    // Both equations decompose componentwise, so solve each factor on its own.
    std::vector<SemiringValue> parts;
    for (std::size_t i = 0; i < 2; ++i) {
      const BinaryValue ai{a.first().parts()[i], a.second().parts()[i]};
      const BinaryValue bi{b.first().parts()[i], b.second().parts()[i]};
      const auto nu_i = e1_witness(ai, bi);
      if (!nu_i) return std::nullopt;
      parts.push_back(*nu_i);
    }
    return SemiringValue{d, std::move(parts)};
  }
  auto satisfies = [&](const SemiringValue& nu) {
    return add(b.first(), nu) == a.first() && add(a.second(), nu) == b.second();
  };
  std::vector<SemiringValue> candidates;
  const auto from_best = solve_add(a.first(), b.first());
  const auto from_worst = solve_add(b.second(), a.second());
  if (from_best) candidates.push_back(*from_best);
  if (from_worst) candidates.push_back(*from_worst);
  // In the idempotent instances one equation can be slack; the join of the
  // two one-sided solutions then satisfies both when anything does.
  if (from_best && from_worst) candidates.push_back(add(*from_best, *from_worst));
  for (const SemiringValue& nu : candidates)
    if (satisfies(nu)) return nu;
  return std::nullopt;
}

}  // namespace aeu
