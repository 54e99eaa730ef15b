#pragma once

#include <optional>
#include <string>

#include "aeu/semiring.hpp"

namespace aeu {

/// Unconstrained pair of semiring values sharing an instance. This is the
/// accumulator type: the componentwise sum of two binary-scale elements
/// generally leaves the scale, so accumulation runs here and the final
/// result is checked back into BinaryValue.
class PairValue {
 public:
  PairValue(SemiringValue first, SemiringValue second);

  const SemiringValue& first() const { return first_; }
  const SemiringValue& second() const { return second_; }
  const SemiringDescriptor& descriptor() const { return first_.descriptor(); }

  bool operator==(const PairValue& o) const {
    return first_ == o.first_ && second_ == o.second_;
  }

 private:
  SemiringValue first_;
  SemiringValue second_;
};

/// Element of the binary scale: a pair whose components sum to the unit.
/// The first component reads as the plausibility of reaching the best
/// consequence, the second of reaching the worst one. Membership is checked
/// at construction.
class BinaryValue {
 public:
  BinaryValue(SemiringValue first, SemiringValue second);
  explicit BinaryValue(const PairValue& p) : BinaryValue(p.first(), p.second()) {}

  const SemiringValue& first() const { return first_; }
  const SemiringValue& second() const { return second_; }
  const SemiringDescriptor& descriptor() const { return first_.descriptor(); }
  PairValue pair() const { return {first_, second_}; }

  bool operator==(const BinaryValue& o) const {
    return first_ == o.first_ && second_ == o.second_;
  }

  /// ["1/2","1/2"]-style rendering used in CLI output and messages.
  std::string str() const;

 private:
  SemiringValue first_;
  SemiringValue second_;
};

/// Top and bottom of the binary scale.
BinaryValue binary_top(const SemiringDescriptor& d);
BinaryValue binary_bottom(const SemiringDescriptor& d);

/// Componentwise (+).
PairValue pair_add(const PairValue& a, const PairValue& b);

/// Componentwise left (*) by a scalar.
PairValue scalar_mul(const SemiringValue& lambda, const PairValue& a);

/// The binary-scale order: a beats b when a's best-plausibility is at least
/// b's and a's worst-plausibility is at most b's, strictly somewhere.
Comparison compare2(const BinaryValue& a, const BinaryValue& b);

/// Component swap; an involution, and antitone for compare2.
BinaryValue swapped(const BinaryValue& a);

/// The scale solver: alpha with (lambda (+) mu) (*) alpha == (lambda, mu).
/// Re-multiplies before returning; failure on a shipped instance is reported
/// as an invariant violation.
BinaryValue solve_scale(const SemiringValue& lambda, const SemiringValue& mu);

/// One value nu satisfying both equations a1 == b1 (+) nu and
/// b2 == a2 (+) nu, when it exists. This is the difference witness used by
/// the solvability and continuity checks.
std::optional<SemiringValue> e1_witness(const BinaryValue& a,
                                        const BinaryValue& b);

}  // namespace aeu
