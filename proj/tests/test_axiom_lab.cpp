#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aeu/axiom_lab.hpp"
#include "aeu/io.hpp"

using namespace aeu;

namespace {

const SemiringDescriptor prob = SemiringDescriptor::prob();
const SemiringDescriptor qual3 = SemiringDescriptor::qualposs(3);
const SemiringDescriptor kappa = SemiringDescriptor::kappa();

SemiringValue pr(long long n, long long m = 1) { return {prob, Rational(n, m)}; }
SemiringValue level(std::uint32_t l) { return {qual3, l}; }
SemiringValue rank(std::uint64_t r) { return {kappa, KappaValue::of(r)}; }

EnumerationBudget exhaustive_budget() {
  EnumerationBudget b;
  b.mode = EnumerationBudget::Mode::Exhaustive;
  b.kappa_ceiling = 8;
  b.max_depth = 2;
  b.max_branches = 2;
  b.samples = 200;
  return b;
}

EnumerationBudget sampled_budget(std::uint32_t samples = 200,
                                 std::uint64_t seed = 7) {
  EnumerationBudget b;
  b.mode = EnumerationBudget::Mode::Sampled;
  b.samples = samples;
  b.seed = seed;
  b.max_depth = 2;
  b.max_branches = 3;
  return b;
}

}  // namespace

TEST_CASE("solvability passes on the shipped instances") {
  for (const auto& d : {qual3, kappa}) {
    const CheckReport report = check_solvability(d, exhaustive_budget());
    INFO(report.to_text());
    CHECK(report.all_passed());
  }
  const CheckReport sampled = check_solvability(prob, sampled_budget(1000, 0));
  INFO(sampled.to_text());
  CHECK(sampled.all_passed());
  for (const auto& v : sampled.verdicts) CHECK(v.cases >= 1000);
}

TEST_CASE("solvability worked example") {
  const BinaryValue alpha{pr(7, 10), pr(3, 10)};
  const BinaryValue beta{pr(1, 2), pr(1, 2)};
  const auto lambda = e1_witness(alpha, beta);
  REQUIRE(lambda.has_value());
  CHECK(*lambda == pr(1, 5));
  CHECK(add(beta.first(), *lambda) == alpha.first());
  CHECK(add(alpha.second(), *lambda) == beta.second());
}

TEST_CASE("continuity witness reproduces the worked mixtures") {
  const BinaryValue a{pr(1), pr(0)};
  const BinaryValue b{pr(3, 5), pr(2, 5)};
  const BinaryValue g{pr(0), pr(1)};
  CHECK(continuity_witness(a, b, g) == BinaryValue{pr(3, 5), pr(2, 5)});

  const BinaryValue qa{level(2), level(0)};
  const BinaryValue qb{level(2), level(1)};
  const BinaryValue qg{level(1), level(2)};
  CHECK(continuity_witness(qa, qb, qg) == BinaryValue{level(2), level(1)});

  CHECK_THROWS_AS(continuity_witness(a, a, g), PreconditionError);
  CHECK_THROWS_AS(continuity_witness(a, b, b), PreconditionError);
}

TEST_CASE("continuity witness verifies across enumerated strict triples") {
  EnumerationBudget budget = exhaustive_budget();
  for (const auto& d : {qual3, kappa, SemiringDescriptor::product(qual3, qual3)}) {
    const auto scale = enumerate_scale(d, budget);
    for (const auto& a : scale)
      for (const auto& b : scale) {
        if (compare2(a, b) != Comparison::Greater) continue;
        for (const auto& g : scale) {
          if (compare2(b, g) != Comparison::Greater) continue;
          const BinaryValue alpha = continuity_witness(a, b, g);
          const PairValue mixed = pair_add(scalar_mul(alpha.first(), a.pair()),
                                           scalar_mul(alpha.second(), g.pair()));
          CHECK(mixed == b.pair());
        }
      }
  }
}

TEST_CASE("mix decomposition reproduces the worked quadruple") {
  const auto w = lemma2_witness(BinaryValue{pr(7, 10), pr(3, 10)},
                                BinaryValue{pr(1, 2), pr(1, 2)});
  CHECK(w.outer_step == pr(1, 5));
  CHECK(w.inner_weight == pr(4, 5));
  CHECK(w.inner == BinaryValue{pr(5, 8), pr(3, 8)});

  // Identity case degenerates to the inner lottery alone.
  const BinaryValue alpha{pr(2, 3), pr(1, 3)};
  const auto id = lemma2_witness(alpha, alpha);
  CHECK(id.outer_step == pr(0));
  CHECK(id.inner_weight == pr(1));
  CHECK(id.inner == alpha);

  CHECK_THROWS_AS(lemma2_witness(BinaryValue{pr(1, 2), pr(1, 2)},
                                 BinaryValue{pr(7, 10), pr(3, 10)}),
                  PreconditionError);
}

TEST_CASE("mix decomposition verifies over enumerated rank pairs") {
  EnumerationBudget budget = exhaustive_budget();
  const auto scale = enumerate_scale(kappa, budget);
  std::size_t checked = 0;
  for (const auto& a : scale)
    for (const auto& b : scale) {
      if (!at_least(compare2(a, b))) continue;
      const auto w = lemma2_witness(a, b);
      CHECK(add(w.outer_step, mul(w.inner_weight, w.inner.first())) ==
            a.first());
      CHECK(mul(w.inner_weight, w.inner.first()) == b.first());
      CHECK(mul(w.inner_weight, w.inner.second()) == a.second());
      CHECK(add(w.outer_step, a.second()) == b.second());
      ++checked;
    }
  CHECK(checked > 50);
}

TEST_CASE("lemma suites pass on shipped instances") {
  for (const auto& d : {qual3, kappa}) {
    const CheckReport l1 = check_lemma1(d, exhaustive_budget());
    INFO(l1.to_text());
    CHECK(l1.all_passed());
    const CheckReport l2 = check_lemma2(d, exhaustive_budget());
    INFO(l2.to_text());
    CHECK(l2.all_passed());
  }
  CHECK(check_lemma1(prob, sampled_budget()).all_passed());
  CHECK(check_lemma2(prob, sampled_budget(500, 0)).all_passed());
}

TEST_CASE("k-ary scale extension matches the worked example") {
  const std::vector<SemiringValue> lambdas{pr(3, 10), pr(1, 10), pr(2, 5)};
  const auto alphas = kary_scale_extension(lambdas);
  REQUIRE(alphas.size() == 3);
  CHECK(alphas[0] == pr(3, 8));
  CHECK(alphas[1] == pr(1, 8));
  CHECK(alphas[2] == pr(1, 2));
  // Trivial single-element case.
  const auto single = kary_scale_extension({pr(2, 5)});
  REQUIRE(single.size() == 1);
  CHECK(single[0] == pr(1));
}

TEST_CASE("c-axioms hold for the induced order at desk scale") {
  EnumerationBudget budget = exhaustive_budget();
  const UtilityAssignment u = default_assignment(qual3, 3);
  const CheckReport report = check_c_axioms(u, budget);
  INFO(report.to_text());
  CHECK(report.all_passed());

  const UtilityAssignment up = default_assignment(prob, 3);
  const CheckReport sampled = check_c_axioms(up, sampled_budget());
  INFO(sampled.to_text());
  CHECK(sampled.all_passed());
}

TEST_CASE("d-axioms hold for the induced order at desk scale") {
  EnumerationBudget budget = exhaustive_budget();
  const UtilityAssignment u = default_assignment(qual3, 3);
  const CheckReport report = check_d_axioms(u, budget);
  INFO(report.to_text());
  CHECK(report.all_passed());

  const UtilityAssignment up = default_assignment(prob, 3);
  const CheckReport sampled = check_d_axioms(up, sampled_budget());
  INFO(sampled.to_text());
  CHECK(sampled.all_passed());
}

TEST_CASE("the first-component relation is caught as a violation") {
  EnumerationBudget budget = exhaustive_budget();
  // Interior utility with distinct worst-components so the projection is
  // genuinely lossy.
  UtilityAssignment u(ConsequenceSpace({"x1", "x2", "x3"}, "x1", "x3"), qual3,
                      {{"x1", binary_top(qual3)},
                       {"x2", BinaryValue{level(2), level(1)}},
                       {"x3", binary_bottom(qual3)}});
  const CheckReport c =
      check_c_axioms(u, budget, ExecMode::Parallel, first_component_relation());
  bool c2_failed = false;
  for (const auto& v : c.verdicts)
    if (v.law == "C2.binary-lottery-order" && !v.passed) {
      c2_failed = true;
      CHECK_FALSE(v.counterexample.is_null());
    }
  CHECK(c2_failed);

  const CheckReport drep =
      check_d_axioms(u, budget, ExecMode::Parallel, first_component_relation());
  bool d2_failed = false;
  for (const auto& v : drep.verdicts)
    if (v.law == "D2.non-triviality" && !v.passed) {
      d2_failed = true;
      CHECK_FALSE(v.counterexample.is_null());
    }
  CHECK(d2_failed);
}

TEST_CASE("axiom reports are identical across execution modes") {
  EnumerationBudget budget = exhaustive_budget();
  const UtilityAssignment u = default_assignment(qual3, 3);
  CHECK(check_c_axioms(u, budget, ExecMode::Serial).to_json() ==
        check_c_axioms(u, budget, ExecMode::Parallel).to_json());
  CHECK(check_d_axioms(u, budget, ExecMode::Serial).to_json() ==
        check_d_axioms(u, budget, ExecMode::Parallel).to_json());
  CHECK(check_solvability(qual3, budget, ExecMode::Serial).to_json() ==
        check_solvability(qual3, budget, ExecMode::Parallel).to_json());
}

namespace {

/// Degenerates plus every grid binary lottery, the raw material for
/// synthesis round-trips.
std::vector<NamedLottery> table_lotteries(const UtilityAssignment& u,
                                          const EnumerationBudget& budget) {
  std::vector<NamedLottery> out;
  int i = 0;
  for (const auto& name : u.space().names())
    out.push_back({"deg_" + name,
                   degenerate(u.space(), u.descriptor(), name)});
  for (const auto& alpha : enumerate_scale(u.descriptor(), budget))
    out.push_back({"bin_" + std::to_string(i++),
                   binary_lottery(u.space(), alpha)});
  return out;
}

}  // namespace

TEST_CASE("synthesized assignments reproduce the generating table") {
  EnumerationBudget budget = exhaustive_budget();
  const auto scale = enumerate_scale(qual3, budget);
  for (const auto& mid : scale) {
    UtilityAssignment u(ConsequenceSpace({"x1", "x2", "x3"}, "x1", "x3"), qual3,
                        {{"x1", binary_top(qual3)},
                         {"x2", mid},
                         {"x3", binary_bottom(qual3)}});
    const PreferenceTable table =
        build_preference_table(u, table_lotteries(u, budget));
    const auto recovered = synthesize_utility(table, u.space(), qual3);
    REQUIRE(recovered.has_value());
    // Verdict-for-verdict agreement over the whole table.
    for (std::size_t a = 0; a < table.lotteries.size(); ++a)
      for (std::size_t b = 0; b < table.lotteries.size(); ++b)
        CHECK(aeu_compare(table.lotteries[a].lottery,
                          table.lotteries[b].lottery,
                          *recovered) == table.relation[a][b]);
  }
}

TEST_CASE("tables with only the forced extremes still synthesize") {
  const UtilityAssignment u = default_assignment(qual3, 2);
  std::vector<NamedLottery> lotteries{
      {"sure_best", degenerate(u.space(), qual3, u.space().best())},
      {"sure_worst", degenerate(u.space(), qual3, u.space().worst())}};
  const PreferenceTable table = build_preference_table(u, lotteries);
  const auto recovered = synthesize_utility(table, u.space(), qual3);
  REQUIRE(recovered.has_value());
  CHECK(recovered->at(u.space().best()) == binary_top(qual3));
  CHECK(recovered->at(u.space().worst()) == binary_bottom(qual3));
}

TEST_CASE("deleting the witness rows makes synthesis return absent") {
  EnumerationBudget budget = exhaustive_budget();
  UtilityAssignment u(ConsequenceSpace({"x1", "x2", "x3"}, "x1", "x3"), qual3,
                      {{"x1", binary_top(qual3)},
                       {"x2", BinaryValue{level(2), level(1)}},
                       {"x3", binary_bottom(qual3)}});
  auto lotteries = table_lotteries(u, budget);
  // Drop every binary lottery equivalent to the interior consequence.
  std::vector<NamedLottery> pruned;
  for (const auto& nl : lotteries) {
    if (!nl.lottery.is_simple() ||
        aeu_compare(nl.lottery, degenerate(u.space(), qual3, "x2"), u) !=
            Comparison::Equivalent ||
        nl.name.rfind("deg_", 0) == 0)
      pruned.push_back(nl);
  }
  const PreferenceTable table = build_preference_table(u, pruned);
  CHECK_FALSE(synthesize_utility(table, u.space(), qual3).has_value());
}

TEST_CASE("inconsistent tables are an input error, not absent") {
  const UtilityAssignment u = default_assignment(qual3, 3);
  EnumerationBudget budget = exhaustive_budget();
  PreferenceTable table = build_preference_table(u, table_lotteries(u, budget));
  table.relation[0][1] = Comparison::Greater;
  table.relation[1][0] = Comparison::Greater;  // mirror broken
  CHECK_THROWS_AS(synthesize_utility(table, u.space(), qual3), InputError);
  PreferenceTable diag = build_preference_table(u, table_lotteries(u, budget));
  diag.relation[2][2] = Comparison::Less;
  CHECK_THROWS_AS(synthesize_utility(diag, u.space(), qual3), InputError);
}
