#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aeu/axiom_lab.hpp"
#include "aeu/engine.hpp"
#include "aeu/enumeration.hpp"
#include "oracle_helpers.hpp"

using namespace aeu;

namespace {

const SemiringDescriptor prob = SemiringDescriptor::prob();
const SemiringDescriptor qual3 = SemiringDescriptor::qualposs(3);
const SemiringDescriptor kappa = SemiringDescriptor::kappa();

SemiringValue pr(long long n, long long m = 1) { return {prob, Rational(n, m)}; }
SemiringValue level(std::uint32_t l) { return {qual3, l}; }
SemiringValue rank(std::uint64_t r) { return {kappa, KappaValue::of(r)}; }
SemiringValue rank_inf() { return {kappa, KappaValue::inf()}; }

ConsequenceSpace space2() { return {{"x1", "x2"}, "x1", "x2"}; }

Lottery simple_of(const SemiringDescriptor& d,
                  std::initializer_list<std::pair<const char*, SemiringValue>> m) {
  Lottery::Dist dist;
  for (const auto& [name, v] : m) dist.emplace(name, v);
  return Lottery::simple(d, std::move(dist));
}

}  // namespace

TEST_CASE("utility assignments pin the extremes") {
  const ConsequenceSpace space({"x1", "x2", "x3"}, "x1", "x3");
  std::map<std::string, BinaryValue> u{
      {"x1", binary_top(prob)},
      {"x2", BinaryValue{pr(1, 2), pr(1, 2)}},
      {"x3", binary_bottom(prob)}};
  CHECK_NOTHROW(UtilityAssignment(space, prob, u));
  auto broken = u;
  broken.erase("x2");
  CHECK_THROWS_AS(UtilityAssignment(space, prob, broken), InputError);
  auto wrong_top = u;
  wrong_top.at("x1") = BinaryValue{pr(1, 2), pr(1, 2)};
  CHECK_THROWS_AS(UtilityAssignment(space, prob, wrong_top), InputError);
}

TEST_CASE("aeu_eval matches the worked expectations") {
  const ConsequenceSpace space({"x1", "x2", "x3"}, "x1", "x3");
  const UtilityAssignment u(space, prob,
                            {{"x1", binary_top(prob)},
                             {"x2", BinaryValue{pr(1, 4), pr(3, 4)}},
                             {"x3", binary_bottom(prob)}});
  // Degenerate lotteries return the utility itself.
  for (const auto& name : space.names())
    CHECK(aeu_eval(degenerate(space, prob, name), u) == u.at(name));

  const Lottery half = simple_of(prob, {{"x1", pr(1, 2)}, {"x2", pr(1, 2)}});
  const BinaryValue v = aeu_eval(half, u);
  CHECK(v == BinaryValue{pr(5, 8), pr(3, 8)});
  // Independent expectation oracle over the first components.
  const auto expected = oracle::expected_value(
      {{oracle::frac(1, 2), oracle::frac(1)}, {oracle::frac(1, 2), oracle::frac(1, 4)}});
  CHECK(v.first().rational() == Rational(expected.n, expected.d));
}

TEST_CASE("aeu_eval matches the max-min oracle on the level scale") {
  const ConsequenceSpace space({"x1", "x2", "x3"}, "x1", "x3");
  const UtilityAssignment u(space, qual3,
                            {{"x1", BinaryValue{level(2), level(0)}},
                             {"x2", BinaryValue{level(1), level(2)}},
                             {"x3", BinaryValue{level(0), level(2)}}});
  const Lottery pi = simple_of(qual3, {{"x1", level(2)}, {"x2", level(1)}});
  const BinaryValue v = aeu_eval(pi, u);
  CHECK(v == BinaryValue{level(2), level(1)});
  const auto om = oracle::maxmin_utility({{2u, {2u, 0u}}, {1u, {1u, 2u}}});
  CHECK(v.first().level() == om.best);
  CHECK(v.second().level() == om.worst);
}

TEST_CASE("aeu_compare orders lotteries by their evaluations") {
  const ConsequenceSpace space = space2();
  const UtilityAssignment u(space, prob,
                            {{"x1", binary_top(prob)},
                             {"x2", binary_bottom(prob)}});
  const Lottery sure = degenerate(space, prob, "x1");
  const Lottery coin = simple_of(prob, {{"x1", pr(1, 2)}, {"x2", pr(1, 2)}});
  CHECK(aeu_compare(sure, coin, u) == Comparison::Greater);
  CHECK(aeu_compare(coin, sure, u) == Comparison::Less);
  CHECK(aeu_compare(coin, coin, u) == Comparison::Equivalent);
}

TEST_CASE("incomparable evaluations arise on the product instance") {
  const SemiringDescriptor pp = SemiringDescriptor::product(prob, prob);
  const ConsequenceSpace space = space2();
  const UtilityAssignment u(space, pp,
                            {{"x1", binary_top(pp)}, {"x2", binary_bottom(pp)}});
  auto pair_val = [&](long long an, long long ad, long long bn, long long bd) {
    return SemiringValue{pp, std::vector<SemiringValue>{pr(an, ad), pr(bn, bd)}};
  };
  const Lottery la = simple_of(
      pp, {{"x1", pair_val(1, 2, 3, 4)}, {"x2", pair_val(1, 2, 1, 4)}});
  const Lottery lb = simple_of(
      pp, {{"x1", pair_val(3, 4, 1, 2)}, {"x2", pair_val(1, 4, 1, 2)}});
  CHECK(aeu_eval(la, u) ==
        BinaryValue{pair_val(1, 2, 3, 4), pair_val(1, 2, 1, 4)});
  CHECK(aeu_compare(la, lb, u) == Comparison::Incomparable);
}

TEST_CASE("aeu_fold equals aeu_eval on the worked examples") {
  const ConsequenceSpace space = space2();
  const UtilityAssignment u(space, prob,
                            {{"x1", binary_top(prob)},
                             {"x2", binary_bottom(prob)}});
  const Lottery inner = simple_of(prob, {{"x1", pr(2, 5)}, {"x2", pr(3, 5)}});
  const Lottery outer = Lottery::compound(
      prob, std::vector<std::pair<SemiringValue, Lottery>>{
                {pr(1, 2), inner}, {pr(1, 2), degenerate(space, prob, "x1")}});
  const BinaryValue folded = aeu_fold(outer, u);
  CHECK(folded == BinaryValue{pr(7, 10), pr(3, 10)});
  CHECK(folded == aeu_eval(outer, u));
  CHECK(aeu_fold(inner, u) == aeu_eval(inner, u));

  const UtilityAssignment ku(space, kappa,
                             {{"x1", binary_top(kappa)},
                              {"x2", binary_bottom(kappa)}});
  const Lottery kinner = simple_of(kappa, {{"x1", rank(0)}, {"x2", rank(3)}});
  const Lottery kouter = Lottery::compound(
      kappa, std::vector<std::pair<SemiringValue, Lottery>>{
                 {rank(0), kinner},
                 {rank(2), degenerate(space, kappa, "x2")}});
  const BinaryValue kv = aeu_fold(kouter, u.descriptor() == kappa ? u : ku);
  CHECK(kv == BinaryValue{rank(0), rank(2)});
  const auto ok = oracle::minplus_utility({{0, {0, 3}}, {2, {oracle::kInf, 0}}});
  CHECK(kv.first().kappa().rank == ok.best);
  CHECK(kv.second().kappa().rank == ok.worst);
  CHECK(kv == aeu_eval(kouter, ku));
}

TEST_CASE("linearity holds on sampled compound lotteries") {
  EnumerationBudget budget;
  Rng rng(3);
  for (const auto& d : {prob, qual3, kappa}) {
    const UtilityAssignment u = default_assignment(d, 3);
    for (int i = 0; i < 150; ++i) {
      const Lottery l = sample_lottery(d, u.space(), budget, 3, rng);
      CHECK(aeu_fold(l, u) == aeu_eval(l, u));
    }
  }
}

TEST_CASE("sigma measure pairs an event with its complement") {
  const PlausibilityMeasure m(prob, {"s1", "s2", "s3"},
                              {{"s1", pr(1, 2)}, {"s2", pr(1, 3)},
                               {"s3", pr(1, 6)}});
  const std::vector<std::string> empty;
  const std::vector<std::string> ab{"s1", "s2"};
  CHECK(sigma_measure(m, empty) == binary_bottom(prob));
  CHECK(sigma_measure(m, m.states()) == binary_top(prob));
  CHECK(sigma_measure(m, ab) == BinaryValue{pr(5, 6), pr(1, 6)});

  // sigma equals the evaluation of the two-sided act on the event.
  const ConsequenceSpace space = space2();
  const UtilityAssignment u(space, prob,
                            {{"x1", binary_top(prob)},
                             {"x2", binary_bottom(prob)}});
  for (const auto& event : enumerate_events(m.states())) {
    Act act;
    for (const auto& s : m.states()) act.assignment[s] = "x2";
    for (const auto& s : event) act.assignment[s] = "x1";
    CHECK(sigma_measure(m, event) == aeu_eval(induced_lottery(m, act, space), u));
    CHECK(sigma_measure(m, m.complement(event)) ==
          swapped(sigma_measure(m, event)));
  }
}

TEST_CASE("shift_utility reproduces the attitude scenario") {
  // Interior consequences y1 > y2 > y3 with explicit extremes around them.
  const ConsequenceSpace space({"top", "y1", "y2", "y3", "bot"}, "top", "bot");
  const UtilityAssignment base(space, prob,
                               {{"top", binary_top(prob)},
                                {"y1", binary_top(prob)},
                                {"y2", BinaryValue{pr(1, 2), pr(1, 2)}},
                                {"y3", binary_bottom(prob)},
                                {"bot", binary_bottom(prob)}});
  const Lottery bet = simple_of(prob, {{"y1", pr(1, 2)}, {"y3", pr(1, 2)}});
  // Indifference under the base assignment.
  CHECK(aeu_eval(bet, base) == base.at("y2"));

  const UtilityAssignment lifted =
      shift_utility(base, "y2", ShiftDirection::Up, pr(1, 4));
  CHECK(lifted.at("y3") == BinaryValue{pr(1, 4), pr(3, 4)});
  CHECK(lifted.at("y1") == base.at("y1"));
  CHECK(lifted.at("y2") == base.at("y2"));
  CHECK(lifted.at("bot") == binary_bottom(prob));  // extremes stay put
  const BinaryValue shifted_value = aeu_eval(bet, lifted);
  CHECK(shifted_value == BinaryValue{pr(5, 8), pr(3, 8)});
  CHECK(compare2(shifted_value, lifted.at("y2")) == Comparison::Greater);

  // The mirrored shift makes the sure pivot preferred.
  const UtilityAssignment lowered =
      shift_utility(base, "y2", ShiftDirection::Down, pr(1, 4));
  CHECK(lowered.at("y1") == BinaryValue{pr(3, 4), pr(1, 4)});
  CHECK(lowered.at("y3") == base.at("y3"));
  CHECK(compare2(aeu_eval(bet, lowered), lowered.at("y2")) ==
        Comparison::Less);

  // Zero step changes nothing.
  const UtilityAssignment same =
      shift_utility(base, "y2", ShiftDirection::Up, pr(0));
  for (const auto& name : space.names()) CHECK(same.at(name) == base.at(name));

  // Saturation at the top of the scale.
  const UtilityAssignment maxed =
      shift_utility(base, "y2", ShiftDirection::Up, pr(2));
  CHECK(maxed.at("y3") == binary_top(prob));

  CHECK_THROWS_AS(shift_utility(base, "top", ShiftDirection::Up, pr(1, 4)),
                  PreconditionError);
}

TEST_CASE("elicit_binary_equivalent returns the verified witness") {
  const ConsequenceSpace space({"x1", "y", "x3"}, "x1", "x3");
  const UtilityAssignment u(space, prob,
                            {{"x1", binary_top(prob)},
                             {"y", BinaryValue{pr(1, 3), pr(2, 3)}},
                             {"x3", binary_bottom(prob)}});
  CHECK(elicit_binary_equivalent("x1", u) == binary_top(prob));
  CHECK(elicit_binary_equivalent("x3", u) == binary_bottom(prob));
  const BinaryValue alpha = elicit_binary_equivalent("y", u);
  CHECK(alpha == BinaryValue{pr(1, 3), pr(2, 3)});
  CHECK(aeu_eval(binary_lottery(space, alpha), u) == u.at("y"));
}

TEST_CASE("swapping utilities and ends swaps the evaluation") {
  EnumerationBudget budget;
  Rng rng(31);
  for (const auto& d : {prob, qual3, kappa}) {
    const UtilityAssignment u = default_assignment(d, 3);
    const UtilityAssignment dual = dual_assignment(u);
    for (int i = 0; i < 100; ++i) {
      const Lottery l = sample_lottery(d, u.space(), budget, 3, rng);
      const BinaryValue straight = aeu_eval(l, u);
      CHECK(swapped(straight) == aeu_eval(l, dual));
      const Lottery l2 = sample_lottery(d, u.space(), budget, 3, rng);
      CHECK(aeu_compare(l, l2, u) == aeu_compare(l2, l, dual));
    }
  }
}
