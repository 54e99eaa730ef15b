#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aeu/engine.hpp"
#include "aeu/enumeration.hpp"
#include "aeu/laws.hpp"
#include "aeu/parallel.hpp"
#include "aeu/report.hpp"

namespace aeu {

struct NamedLottery {
  std::string name;
  Lottery lottery;
};

/// Explicit preference data: a finite list of named lotteries and a verdict
/// for every ordered pair. Consistency (mirror symmetry and an Equivalent
/// diagonal) is validated on construction of checks that consume it.
struct PreferenceTable {
  std::vector<NamedLottery> lotteries;
  // relation[a][b] = verdict of lotteries[a] versus lotteries[b]
  std::vector<std::vector<Comparison>> relation;

  void validate() const;  // throws InputError on inconsistent data
};

/// How two evaluations are compared when inducing a preference relation over
/// lotteries. The default is the binary-scale order; tests inject broken
/// relations here as negative controls.
using ValueRelation = std::function<Comparison(const BinaryValue&, const BinaryValue&)>;

ValueRelation scale_order_relation();
/// Negative control ignoring the worst-outcome component.
ValueRelation first_component_relation();

/// Reduction consistency, preorder, binary-lottery order and
/// substitutability, plus the sure-consequence continuity witness, all
/// checked over the generated lottery universe under the relation induced by
/// the utility assignment.
CheckReport check_c_axioms(const UtilityAssignment& u,
                           const EnumerationBudget& budget,
                           ExecMode mode = ExecMode::Parallel,
                           const ValueRelation& rel = scale_order_relation());

/// Preorder, non-triviality, weak independence and continuity (with verified
/// mixture witnesses) over the same universe.
CheckReport check_d_axioms(const UtilityAssignment& u,
                           const EnumerationBudget& budget,
                           ExecMode mode = ExecMode::Parallel,
                           const ValueRelation& rel = scale_order_relation());

/// The two equation-solving guarantees: the pairwise difference witness on
/// ordered scale pairs and the scale factorization, each re-verified against
/// its defining equations.
CheckReport check_solvability(const SemiringDescriptor& d,
                              const EnumerationBudget& budget,
                              ExecMode mode = ExecMode::Parallel);

/// alpha on the binary scale with alpha1 (*) a (+) alpha2 (*) g == b,
/// for strictly ordered a > b > g; verified before returning. The first
/// component of the scale witness pairs with the difference on the lower
/// step, so the mixture leans on the upper lottery exactly enough.
BinaryValue continuity_witness(const BinaryValue& a, const BinaryValue& b,
                               const BinaryValue& g);

/// Witness quadruple for decomposing an ordered pair of scale values into an
/// outer mix with an inner binary lottery:
///   a1 == l (+) m (*) lp      b1 == m (*) lp
///   a2 == m (*) mp            b2 == l (+) a2
/// with (lp, mp) on the scale. All four equations are re-verified.
struct MixDecomposition {
  SemiringValue outer_step;    // l
  SemiringValue inner_weight;  // m
  BinaryValue inner;           // (lp, mp)
};
MixDecomposition lemma2_witness(const BinaryValue& alpha,
                                const BinaryValue& beta);

/// k-ary extension of the scale factorization: weights alpha_i summing to
/// the unit with (sum of lambdas) (*) alpha_i == lambda_i, built by the
/// recursive composition (factor the prefix total against the last element,
/// rescale the prefix solution by the outer first component).
std::vector<SemiringValue> kary_scale_extension(
    const std::vector<SemiringValue>& lambdas);

/// Runs the k-ary extension over enumerated/sampled tuples for every k up to
/// the branch budget, re-multiplying each result; plus the substitutability
/// consequence checked on enumerated assignments.
CheckReport check_lemma1(const SemiringDescriptor& d,
                         const EnumerationBudget& budget,
                         ExecMode mode = ExecMode::Parallel);

/// Scan wrapper running lemma2_witness over enumerated/sampled ordered scale
/// pairs and re-verifying the four equations.
CheckReport check_lemma2(const SemiringDescriptor& d,
                         const EnumerationBudget& budget,
                         ExecMode mode = ExecMode::Parallel);

/// Recovers a utility assignment from preference data: each consequence gets
/// the coefficients of a binary lottery the table judges equivalent to it,
/// then the whole table is replayed through the evaluation order. Absent when
/// a witness is missing or the replay disagrees. Inconsistent tables are an
/// input error, not an absent result.
std::optional<UtilityAssignment> synthesize_utility(
    const PreferenceTable& table, const ConsequenceSpace& space,
    const SemiringDescriptor& d);

/// Builds the table induced by an assignment over a lottery list.
PreferenceTable build_preference_table(const UtilityAssignment& u,
                                       std::vector<NamedLottery> lotteries);

/// Canonical starter assignment for CLI checks: extremes plus the even
/// mixture for every interior consequence.
UtilityAssignment default_assignment(const SemiringDescriptor& d,
                                     std::uint32_t consequences);

}  // namespace aeu
