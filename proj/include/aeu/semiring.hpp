#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "aeu/comparison.hpp"
#include "aeu/errors.hpp"
#include "aeu/rational.hpp"

namespace aeu {

enum class SemiringKind { Prob, QuantPoss, QualPoss, Kappa, LexProb, Product };

/// Identifies one semiring instance. The descriptor fixes the carrier set,
/// both operators, the neutral elements and the order; values carry a copy so
/// mixing instances is detectable.
struct SemiringDescriptor {
  SemiringKind kind = SemiringKind::Prob;
  std::uint32_t levels = 0;  // QualPoss: scale size n >= 2
  std::uint32_t length = 0;  // LexProb: vector length k >= 1
  std::vector<SemiringDescriptor> components;  // Product: exactly two

  static SemiringDescriptor prob();
  static SemiringDescriptor quantposs();
  static SemiringDescriptor qualposs(std::uint32_t n);
  static SemiringDescriptor kappa();
  static SemiringDescriptor lexprob(std::uint32_t k);
  static SemiringDescriptor product(SemiringDescriptor a, SemiringDescriptor b);

  bool operator==(const SemiringDescriptor& o) const {
    return kind == o.kind && levels == o.levels && length == o.length &&
           components == o.components;
  }

  /// "prob", "qualposs:3", "lexprob:2", "product:prob:kappa", ...
  std::string str() const;
  static SemiringDescriptor parse(std::string_view s);

  /// True when the whole carrier can be enumerated (QualPoss, and products
  /// of enumerable components). Kappa is enumerable only under a ceiling,
  /// which the enumeration layer supplies.
  bool finite_carrier() const;
  /// True when exhaustive budgets make sense: finite carriers plus Kappa
  /// (truncated at a ceiling for enumeration, never for arithmetic).
  bool exhaustively_enumerable() const;
};

/// A rank in the disbelief semiring: a natural number or infinity.
struct KappaValue {
  bool infinite = false;
  std::uint64_t rank = 0;  // meaningless when infinite

  static KappaValue inf() { return {true, 0}; }
  static KappaValue of(std::uint64_t r) { return {false, r}; }
  bool operator==(const KappaValue& o) const {
    return infinite == o.infinite && (infinite || rank == o.rank);
  }
  std::string str() const { return infinite ? "inf" : std::to_string(rank); }
};

/// One element of a semiring instance, stored exactly and canonically.
class SemiringValue {
 public:
  using Payload = std::variant<Rational,                    // Prob, QuantPoss
                               std::uint32_t,               // QualPoss level
                               KappaValue,                  // Kappa
                               std::vector<Rational>,       // LexProb
                               std::vector<SemiringValue>>; // Product (2 parts)

  SemiringValue(SemiringDescriptor desc, Payload payload);

  const SemiringDescriptor& descriptor() const { return desc_; }
  const Payload& payload() const { return payload_; }

  const Rational& rational() const { return std::get<Rational>(payload_); }
  std::uint32_t level() const { return std::get<std::uint32_t>(payload_); }
  const KappaValue& kappa() const { return std::get<KappaValue>(payload_); }
  const std::vector<Rational>& coords() const {
    return std::get<std::vector<Rational>>(payload_);
  }
  const std::vector<SemiringValue>& parts() const {
    return std::get<std::vector<SemiringValue>>(payload_);
  }

  bool operator==(const SemiringValue& o) const {
    return desc_ == o.desc_ && payload_ == o.payload_;
  }

 private:
  SemiringDescriptor desc_;
  Payload payload_;
};

SemiringValue zero(const SemiringDescriptor& d);
SemiringValue one(const SemiringDescriptor& d);

/// a (+) b. Throws InstanceMismatchError when descriptors differ.
SemiringValue add(const SemiringValue& a, const SemiringValue& b);

/// a (*) b.
SemiringValue mul(const SemiringValue& a, const SemiringValue& b);

/// Order verdict of a versus b in the instance's canonical order. Product is
/// the only shipped instance that can answer Incomparable.
Comparison leq(const SemiringValue& a, const SemiringValue& b);

/// Some delta with known (+) delta == target, when one exists; the canonical
/// pick is the order-minimal solution, so results are deterministic.
std::optional<SemiringValue> solve_add(const SemiringValue& target,
                                       const SemiringValue& known);

/// Raw scale solver: a pair (p, q) with (lambda (+) mu) (*) p == lambda and
/// (lambda (+) mu) (*) q == mu, p (+) q == 1. The binary-scale layer wraps
/// this into a checked pair and re-verifies the equations.
std::pair<SemiringValue, SemiringValue> solve_scale_parts(
    const SemiringValue& lambda, const SemiringValue& mu);

void require_same_instance(const SemiringDescriptor& a,
                           const SemiringDescriptor& b, const char* op);

// Literal syntax shared by all file formats: "3/10" (prob, quantposs),
// "2" (qualposs level), "5" or "inf" (kappa), "[1/2,1/3]" (lexprob),
// "(1/2,0)" (product).
std::string to_literal(const SemiringValue& v);
SemiringValue parse_literal(const SemiringDescriptor& d, std::string_view s);

}  // namespace aeu
