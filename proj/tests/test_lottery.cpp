#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aeu/enumeration.hpp"
#include "aeu/lottery.hpp"

using namespace aeu;

namespace {

const SemiringDescriptor prob = SemiringDescriptor::prob();
const SemiringDescriptor qual3 = SemiringDescriptor::qualposs(3);
const SemiringDescriptor kappa = SemiringDescriptor::kappa();

SemiringValue pr(long long n, long long m = 1) { return {prob, Rational(n, m)}; }
SemiringValue level(std::uint32_t l) { return {qual3, l}; }
SemiringValue rank(std::uint64_t r) { return {kappa, KappaValue::of(r)}; }

ConsequenceSpace space3() { return {{"x1", "x2", "x3"}, "x1", "x3"}; }

Lottery simple_of(const SemiringDescriptor& d,
                  std::initializer_list<std::pair<const char*, SemiringValue>> m) {
  Lottery::Dist dist;
  for (const auto& [name, v] : m) dist.emplace(name, v);
  return Lottery::simple(d, std::move(dist));
}

}  // namespace

TEST_CASE("consequence space validation") {
  CHECK_NOTHROW(space3());
  CHECK_THROWS_AS(ConsequenceSpace({"a"}, "a", "a"), InputError);
  CHECK_THROWS_AS(ConsequenceSpace({"a", "a"}, "a", "a"), InputError);
  CHECK_THROWS_AS(ConsequenceSpace({"a", "b"}, "a", "c"), InputError);
  CHECK_THROWS_AS(ConsequenceSpace({"a", "b"}, "a", "a"), InputError);
  const auto flipped = space3().reversed_ends();
  CHECK(flipped.best() == "x3");
  CHECK(flipped.worst() == "x1");
}

TEST_CASE("simple lotteries normalize and drop zero mass") {
  const Lottery l = simple_of(prob, {{"x1", pr(1, 2)}, {"x2", pr(1, 2)},
                                     {"x3", pr(0)}});
  CHECK(l.dist().size() == 2);
  CHECK(l.mass("x3") == pr(0));
  CHECK(l.mass("x1") == pr(1, 2));
  CHECK_THROWS_AS(simple_of(prob, {{"x1", pr(1, 2)}}), InvariantViolation);
  CHECK_THROWS_AS(simple_of(qual3, {{"x1", level(1)}}), InvariantViolation);
  CHECK_NOTHROW(simple_of(qual3, {{"x1", level(2)}, {"x2", level(1)}}));
}

TEST_CASE("degenerate lotteries put the unit on one consequence") {
  const auto space = space3();
  const Lottery d1 = degenerate(space, prob, "x1");
  CHECK(d1.is_simple());
  CHECK(d1.mass("x1") == pr(1));
  CHECK(d1.dist().size() == 1);
  // Rank instance: everything else implicitly at infinity.
  const Lottery d2 = degenerate(space, kappa, "x2");
  CHECK(d2.mass("x2") == rank(0));
  CHECK(d2.mass("x1") == SemiringValue{kappa, KappaValue::inf()});
  const Lottery d3 = degenerate(space, qual3, "x1");
  CHECK(d3.mass("x1") == level(2));
  CHECK_THROWS_AS(degenerate(space, prob, "zzz"), InputError);
}

TEST_CASE("reduce collapses compound lotteries") {
  const Lottery inner =
      simple_of(prob, {{"x1", pr(2, 5)}, {"x2", pr(3, 5)}});
  const Lottery outer = Lottery::compound(
      prob, std::vector<std::pair<SemiringValue, Lottery>>{
                {pr(1, 2), inner},
                {pr(1, 2), simple_of(prob, {{"x1", pr(1)}})}});
  const Lottery flat = reduce(outer);
  CHECK(flat.is_simple());
  CHECK(flat.mass("x1") == pr(7, 10));
  CHECK(flat.mass("x2") == pr(3, 10));

  // Ranked version: min-plus evaluation of the same shape.
  const Lottery kinner =
      simple_of(kappa, {{"x1", rank(0)}, {"x2", rank(3)}});
  const Lottery kouter = Lottery::compound(
      kappa, std::vector<std::pair<SemiringValue, Lottery>>{
                 {rank(0), kinner},
                 {rank(2), simple_of(kappa, {{"x2", rank(0)}})}});
  const Lottery kflat = reduce(kouter);
  CHECK(kflat.mass("x1") == rank(0));
  CHECK(kflat.mass("x2") == rank(2));

  CHECK(reduce(inner) == inner);          // depth-1 identity
  CHECK(reduce(reduce(outer)) == flat);   // idempotent
  CHECK(outer.depth() == 2);
  CHECK(flat.depth() == 1);
}

TEST_CASE("reduce preserves normalization on sampled lotteries") {
  EnumerationBudget budget;
  Rng rng(5);
  const auto space = space3();
  for (const auto& d : {prob, qual3, kappa,
                        SemiringDescriptor::product(prob, qual3)}) {
    for (int i = 0; i < 120; ++i) {
      const Lottery l = sample_lottery(d, space, budget, 3, rng);
      const Lottery flat = reduce(l);
      SemiringValue total = zero(d);
      for (const auto& [name, mass] : flat.dist()) total = add(total, mass);
      CHECK(total == one(d));
      CHECK(reduce(flat) == flat);
    }
  }
}

TEST_CASE("flattening one level then reducing equals reducing directly") {
  EnumerationBudget budget;
  Rng rng(17);
  const auto space = space3();
  for (int i = 0; i < 80; ++i) {
    const Lottery l = sample_lottery(prob, space, budget, 3, rng);
    if (l.is_simple()) continue;
    // Replace each branch by its reduction, then reduce the result.
    std::vector<std::pair<SemiringValue, Lottery>> parts;
    for (const auto& b : l.branches())
      parts.emplace_back(b.coeff, reduce(*b.sub));
    const Lottery flattened = Lottery::compound(prob, std::move(parts));
    CHECK(reduce(flattened) == reduce(l));
  }
}

TEST_CASE("substitute replaces the addressed branch") {
  const Lottery pa = simple_of(prob, {{"x1", pr(1)}});
  const Lottery pb = simple_of(prob, {{"x2", pr(1)}});
  const Lottery pc = simple_of(prob, {{"x3", pr(1)}});
  const Lottery l = Lottery::compound(
      prob, std::vector<std::pair<SemiringValue, Lottery>>{{pr(1, 2), pa},
                                                           {pr(1, 2), pb}});
  const std::size_t path1[] = {1};
  const Lottery swapped_branch = substitute(l, path1, pc);
  CHECK(*swapped_branch.branches()[1].sub == pc);
  CHECK(*swapped_branch.branches()[0].sub == pa);
  CHECK(swapped_branch.branches()[1].coeff == pr(1, 2));

  // Substitute-then-reduce equals reduce with the replaced distribution.
  const Lottery direct = Lottery::compound(
      prob, std::vector<std::pair<SemiringValue, Lottery>>{{pr(1, 2), pa},
                                                           {pr(1, 2), pc}});
  CHECK(reduce(swapped_branch) == reduce(direct));

  const std::size_t bad_index[] = {2};
  CHECK_THROWS_AS(substitute(l, bad_index, pc), InputError);
  CHECK_THROWS_AS(substitute(l, {}, pc), InputError);
  const std::size_t too_deep[] = {0, 0};
  CHECK_THROWS_AS(substitute(l, too_deep, pc), InputError);

  // Nested path.
  const Lottery nested = Lottery::compound(
      prob, std::vector<std::pair<SemiringValue, Lottery>>{{pr(1), l}});
  const std::size_t path2[] = {0, 0};
  const Lottery deep = substitute(nested, path2, pc);
  CHECK(*deep.branches()[0].sub->branches()[0].sub == pc);
}

TEST_CASE("measures extend to events by the sum") {
  const PlausibilityMeasure m(prob, {"s1", "s2", "s3"},
                              {{"s1", pr(1, 2)}, {"s2", pr(1, 3)},
                               {"s3", pr(1, 6)}});
  const std::vector<std::string> empty;
  const std::vector<std::string> ab{"s1", "s2"};
  CHECK(event_plausibility(m, empty) == pr(0));
  CHECK(event_plausibility(m, m.states()) == pr(1));
  CHECK(event_plausibility(m, ab) == pr(5, 6));
  CHECK_THROWS_AS(event_plausibility(m, std::vector<std::string>{"zz"}),
                  InputError);
  CHECK_THROWS_AS(PlausibilityMeasure(prob, {"s1"}, {{"s1", pr(1, 2)}}),
                  InvariantViolation);

  // Decomposability on disjoint events, all instances.
  EnumerationBudget budget;
  Rng rng(23);
  for (const auto& d : {prob, qual3, kappa}) {
    const auto weights = sample_normalized_tuple(d, 4, budget, rng);
    std::map<std::string, SemiringValue> wm;
    const std::vector<std::string> states{"a", "b", "c", "d"};
    for (std::size_t i = 0; i < 4; ++i) wm.emplace(states[i], weights[i]);
    const PlausibilityMeasure mm(d, states, wm);
    for (const auto& event : enumerate_events(states)) {
      const auto rest = mm.complement(event);
      CHECK(add(event_plausibility(mm, event), event_plausibility(mm, rest)) ==
            one(d));
      // Monotonicity via the difference witness.
      for (const auto& sub : enumerate_events(event)) {
        const auto whole = event_plausibility(mm, event);
        const auto part = event_plausibility(mm, sub);
        CHECK(solve_add(whole, part).has_value());
      }
    }
  }
}

TEST_CASE("product measures satisfy the rectangle law by construction") {
  const PlausibilityMeasure a(prob, {"s1", "s2"},
                              {{"s1", pr(1, 3)}, {"s2", pr(2, 3)}});
  const PlausibilityMeasure b(prob, {"t1", "t2"},
                              {{"t1", pr(1, 4)}, {"t2", pr(3, 4)}});
  const PlausibilityMeasure ab = product_measure(a, b);
  CHECK(ab.states().size() == 4);
  CHECK(event_plausibility(ab, ab.states()) == pr(1));
  // Rectangle {s1} x {t1,t2} has the product plausibility.
  const std::vector<std::string> rect{"s1|t1", "s1|t2"};
  CHECK(event_plausibility(ab, rect) ==
        mul(event_plausibility(a, std::vector<std::string>{"s1"}), pr(1)));
  const std::vector<std::string> cell{"s2|t2"};
  CHECK(event_plausibility(ab, cell) == mul(pr(2, 3), pr(3, 4)));
}

TEST_CASE("acts induce lotteries through preimages") {
  const PlausibilityMeasure m(prob, {"s1", "s2", "s3"},
                              {{"s1", pr(1, 2)}, {"s2", pr(1, 3)},
                               {"s3", pr(1, 6)}});
  const auto space = space3();
  Act f;
  f.assignment = {{"s1", "x1"}, {"s2", "x1"}, {"s3", "x2"}};
  const Lottery l = induced_lottery(m, f, space);
  CHECK(l.mass("x1") == pr(5, 6));
  CHECK(l.mass("x2") == pr(1, 6));

  Act constant;
  constant.assignment = {{"s1", "x2"}, {"s2", "x2"}, {"s3", "x2"}};
  CHECK(induced_lottery(m, constant, space) == degenerate(space, prob, "x2"));

  // Binary act on the event {s1}.
  Act binary;
  binary.assignment = {{"s1", "x1"}, {"s2", "x3"}, {"s3", "x3"}};
  const Lottery bl = induced_lottery(m, binary, space);
  CHECK(bl.mass("x1") == pr(1, 2));
  CHECK(bl.mass("x3") == pr(1, 2));

  Act partial;
  partial.assignment = {{"s1", "x1"}};
  CHECK_THROWS_AS(induced_lottery(m, partial, space), InputError);
  Act stray;
  stray.assignment = {{"s1", "x1"}, {"s2", "x1"}, {"s3", "x1"}, {"s9", "x1"}};
  CHECK_THROWS_AS(induced_lottery(m, stray, space), InputError);
}
