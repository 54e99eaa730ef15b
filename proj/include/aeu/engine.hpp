#pragma once

#include <map>
#include <span>
#include <string>

#include "aeu/binary_scale.hpp"
#include "aeu/lottery.hpp"

namespace aeu {

/// Utility assignment into the binary scale. The best consequence is pinned
/// to the top of the scale and the worst to the bottom; everything else may
/// take any scale value.
class UtilityAssignment {
 public:
  UtilityAssignment(ConsequenceSpace space, SemiringDescriptor d,
                    std::map<std::string, BinaryValue> u);

  const ConsequenceSpace& space() const { return space_; }
  const SemiringDescriptor& descriptor() const { return desc_; }
  const BinaryValue& at(const std::string& name) const;
  const std::map<std::string, BinaryValue>& table() const { return u_; }

  bool operator==(const UtilityAssignment& o) const {
    return space_ == o.space_ && desc_ == o.desc_ && u_ == o.u_;
  }

 private:
  ConsequenceSpace space_;
  SemiringDescriptor desc_;
  std::map<std::string, BinaryValue> u_;
};

/// Evaluates a lottery by reducing it first and then accumulating
/// mass-weighted utilities. The result is checked back onto the binary
/// scale; failure there means the semiring instance is broken.
BinaryValue aeu_eval(const Lottery& l, const UtilityAssignment& u);

/// Compares two lotteries by the binary-scale order of their evaluations.
Comparison aeu_compare(const Lottery& a, const Lottery& b,
                       const UtilityAssignment& u);

/// Evaluates a compound lottery by backward induction, without reducing.
/// Agrees with aeu_eval exactly (linearity); keeping both routes makes that
/// a continuously exercised check instead of prose.
BinaryValue aeu_fold(const Lottery& l, const UtilityAssignment& u);

/// The autodual measure derived from a plausibility measure: the pair of the
/// event's plausibility and its complement's.
BinaryValue sigma_measure(const PlausibilityMeasure& m,
                          std::span<const std::string> event);

enum class ShiftDirection { Up, Down };

/// Shifts utilities on the far side of a pivot consequence by a step,
/// saturating at the scale ends; the pivot's side and the extreme
/// consequences are untouched. Up-shifts raise everything strictly below the
/// pivot, down-shifts lower everything strictly above it.
UtilityAssignment shift_utility(const UtilityAssignment& u,
                                const std::string& pivot, ShiftDirection dir,
                                const SemiringValue& step);

/// The binary lottery [alpha1 / best, alpha2 / worst] as a simple lottery.
Lottery binary_lottery(const ConsequenceSpace& space, const BinaryValue& alpha);

/// The scale value alpha making the binary lottery on alpha indifferent to
/// the sure consequence; verified by evaluation before returning.
BinaryValue elicit_binary_equivalent(const std::string& x,
                                     const UtilityAssignment& u);

/// The assignment for the reversed consequence order: every utility swapped,
/// best and worst exchanged. Evaluation under it is the component swap of
/// evaluation under the original (criterion autoduality).
UtilityAssignment dual_assignment(const UtilityAssignment& u);

}  // namespace aeu
