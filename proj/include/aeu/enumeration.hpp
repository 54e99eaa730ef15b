#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "aeu/binary_scale.hpp"
#include "aeu/lottery.hpp"

namespace aeu {

/// Bounds for enumeration and sampling in the checkers. Exhaustive mode is
/// only valid for instances whose carrier can be enumerated (qualposs,
/// kappa under the ceiling, and products of those); everything else samples
/// through the seed.
struct EnumerationBudget {
  enum class Mode { Exhaustive, Sampled };

  Mode mode = Mode::Sampled;
  std::uint32_t max_consequences = 3;
  std::uint32_t max_depth = 2;
  std::uint32_t max_branches = 3;
  std::uint32_t samples = 500;
  std::uint64_t seed = 0;
  std::uint32_t denominator_bound = 8;
  std::uint32_t kappa_ceiling = 32;
  // Quadratic and cubic sub-checks enumerate fully below this universe size
  // and fall back to seeded sampling above it.
  std::uint32_t pairwise_threshold = 200;

  void validate_for(const SemiringDescriptor& d) const;
  nlohmann::ordered_json to_json() const;
};

/// Deterministic 64-bit generator (splitmix64). Kept deliberately simple so
/// sampled runs are reproducible byte for byte across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

 private:
  std::uint64_t state_;
};

/// Sorted, deduplicated rationals p/q with 0 <= p <= q <= bound.
std::vector<Rational> unit_grid(std::uint32_t denominator_bound);

/// The whole carrier for enumerable instances (kappa truncated at the
/// ceiling plus infinity). Throws InputError otherwise.
std::vector<SemiringValue> enumerate_values(const SemiringDescriptor& d,
                                            const EnumerationBudget& b);

/// One random carrier element drawn from the instance's grid.
SemiringValue sample_value(const SemiringDescriptor& d,
                           const EnumerationBudget& b, Rng& rng);

/// Deterministic pool of carrier values for law checks: the full carrier for
/// enumerable instances, a grid plus seeded extras elsewhere.
std::vector<SemiringValue> value_pool(const SemiringDescriptor& d,
                                      const EnumerationBudget& b, Rng& rng);

/// The binary scale, enumerated exactly for enumerable carriers and over the
/// rational grid elsewhere.
std::vector<BinaryValue> enumerate_scale(const SemiringDescriptor& d,
                                         const EnumerationBudget& b);

/// All k-tuples of carrier values summing to the unit (normalized
/// coefficient vectors / simple distributions). Exhaustive instances only.
std::vector<std::vector<SemiringValue>> enumerate_normalized_tuples(
    const SemiringDescriptor& d, std::uint32_t k, const EnumerationBudget& b);

/// A random normalized k-tuple.
std::vector<SemiringValue> sample_normalized_tuple(const SemiringDescriptor& d,
                                                   std::uint32_t k,
                                                   const EnumerationBudget& b,
                                                   Rng& rng);

Lottery sample_simple_lottery(const SemiringDescriptor& d,
                              const ConsequenceSpace& space,
                              const EnumerationBudget& b, Rng& rng);

Lottery sample_lottery(const SemiringDescriptor& d,
                       const ConsequenceSpace& space,
                       const EnumerationBudget& b, std::uint32_t depth,
                       Rng& rng);

/// The lottery universe the axiom checkers quantify over. In exhaustive mode
/// simple lotteries are materialized and compound layers are described
/// combinatorially and decoded on demand, so the universe can be large
/// without being resident. Index order is canonical: simples first, then
/// depth layers in branch-count order.
class LotteryUniverse {
 public:
  static LotteryUniverse exhaustive(const SemiringDescriptor& d,
                                    const ConsequenceSpace& space,
                                    const EnumerationBudget& b);
  static LotteryUniverse sampled(const SemiringDescriptor& d,
                                 const ConsequenceSpace& space,
                                 const EnumerationBudget& b);

  std::uint64_t size() const { return total_; }
  std::uint64_t simple_count() const { return simples_.size(); }
  Lottery at(std::uint64_t i) const;

 private:
  struct Block {
    std::uint32_t branches = 0;
    std::uint64_t coeff_tuples = 0;
    std::uint64_t sub_base = 0;  // size of the universe below this layer
    std::uint64_t count = 0;
    std::uint64_t offset = 0;
  };

  SemiringDescriptor desc_ = SemiringDescriptor::prob();
  std::vector<Lottery> simples_;
  std::vector<Lottery> stored_;  // sampled mode only
  std::vector<std::vector<std::vector<SemiringValue>>> tuples_by_k_;
  std::vector<Block> blocks_;
  std::uint64_t total_ = 0;
  bool combinatorial_ = false;
};

/// All subsets of a state list, in canonical bitmask order.
std::vector<std::vector<std::string>> enumerate_events(
    const std::vector<std::string>& states);

}  // namespace aeu
