#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "aeu/semiring.hpp"

namespace aeu {

/// Finite consequence space with designated best and worst elements.
class ConsequenceSpace {
 public:
  ConsequenceSpace(std::vector<std::string> names, std::string best,
                   std::string worst);

  const std::vector<std::string>& names() const { return names_; }
  const std::string& best() const { return best_; }
  const std::string& worst() const { return worst_; }
  std::size_t size() const { return names_.size(); }
  bool contains(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;  // throws InputError

  bool operator==(const ConsequenceSpace& o) const {
    return names_ == o.names_ && best_ == o.best_ && worst_ == o.worst_;
  }

  /// Same space with the roles of best and worst exchanged.
  ConsequenceSpace reversed_ends() const;

 private:
  std::vector<std::string> names_;
  std::string best_;
  std::string worst_;
};

/// A lottery: either a normalized distribution over consequences or a
/// normalized nonempty list of coefficient/sub-lottery branches. Immutable;
/// sub-lotteries are shared, equality is structural. Zero-mass consequences
/// are dropped at construction so simple lotteries are canonical.
class Lottery {
 public:
  using Dist = std::map<std::string, SemiringValue>;
  struct Branch {
    SemiringValue coeff;
    std::shared_ptr<const Lottery> sub;
  };

  static Lottery simple(const SemiringDescriptor& d, Dist dist);
  static Lottery compound(const SemiringDescriptor& d,
                          std::vector<Branch> branches);
  static Lottery compound(const SemiringDescriptor& d,
                          std::vector<std::pair<SemiringValue, Lottery>> parts);

  bool is_simple() const { return std::holds_alternative<Dist>(node_); }
  const Dist& dist() const { return std::get<Dist>(node_); }
  const std::vector<Branch>& branches() const {
    return std::get<std::vector<Branch>>(node_);
  }
  const SemiringDescriptor& descriptor() const { return desc_; }

  /// Mass on one consequence of a simple lottery (absence = zero element).
  SemiringValue mass(const std::string& name) const;

  std::size_t depth() const;  // simple lotteries have depth 1

  bool operator==(const Lottery& o) const;

 private:
  Lottery(SemiringDescriptor d, std::variant<Dist, std::vector<Branch>> n)
      : desc_(std::move(d)), node_(std::move(n)) {}

  SemiringDescriptor desc_;
  std::variant<Dist, std::vector<Branch>> node_;
};

/// The sure lottery on one consequence.
Lottery degenerate(const ConsequenceSpace& space, const SemiringDescriptor& d,
                   const std::string& x);

/// Collapses a compound lottery to the simple one assigning each consequence
/// the coefficient-weighted sum of its sub-lottery masses.
Lottery reduce(const Lottery& l);

/// Replaces the sub-lottery addressed by a nonempty branch-index path;
/// coefficients are untouched.
Lottery substitute(const Lottery& l, std::span<const std::size_t> path,
                   const Lottery& replacement);

/// Finite state space with semiring weights summing to the unit; events get
/// the sum of their singleton weights, which bakes in decomposability.
class PlausibilityMeasure {
 public:
  PlausibilityMeasure(SemiringDescriptor d, std::vector<std::string> states,
                      std::map<std::string, SemiringValue> weights);

  const std::vector<std::string>& states() const { return states_; }
  const SemiringDescriptor& descriptor() const { return desc_; }
  const SemiringValue& weight(const std::string& state) const;

  std::vector<std::string> complement(std::span<const std::string> event) const;

 private:
  SemiringDescriptor desc_;
  std::vector<std::string> states_;
  std::map<std::string, SemiringValue> weights_;
};

SemiringValue event_plausibility(const PlausibilityMeasure& m,
                                 std::span<const std::string> event);

/// Two-factor measure with weight(s,t) = w1(s) (*) w2(t); states are named
/// "s|t". Rectangle events then satisfy the product law by construction.
PlausibilityMeasure product_measure(const PlausibilityMeasure& a,
                                    const PlausibilityMeasure& b);

/// A total map from states to consequences.
struct Act {
  std::map<std::string, std::string> assignment;
};

/// The lottery an act induces: each consequence gets the plausibility of its
/// preimage.
Lottery induced_lottery(const PlausibilityMeasure& m, const Act& f,
                        const ConsequenceSpace& space);

}  // namespace aeu
