#include "aeu/axiom_lab.hpp"

#include <algorithm>
#include <set>

#include "aeu/io.hpp"

namespace aeu {

namespace {

constexpr std::uint64_t kScalePairCap = 300000;

std::vector<std::uint64_t> pick_indices(std::uint64_t begin, std::uint64_t end,
                                        std::uint64_t cap, Rng& rng) {
  std::vector<std::uint64_t> out;
  const std::uint64_t count = end > begin ? end - begin : 0;
  if (count <= cap) {
    out.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t i = begin; i < end; ++i) out.push_back(i);
    return out;
  }
  std::set<std::uint64_t> picked;
  while (picked.size() < cap) picked.insert(begin + rng.below(count));
  return {picked.begin(), picked.end()};
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> pick_pairs(
    std::uint64_t n, std::uint64_t cap, Rng& rng) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  if (n == 0) return out;
  if (n * n <= cap) {
    out.reserve(static_cast<std::size_t>(n * n));
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b) out.emplace_back(a, b);
    return out;
  }
  std::set<std::pair<std::uint64_t, std::uint64_t>> picked;
  while (picked.size() < cap) picked.insert({rng.below(n), rng.below(n)});
  return {picked.begin(), picked.end()};
}

std::vector<std::array<std::uint64_t, 3>> pick_triples(std::uint64_t n,
                                                       std::uint64_t cap,
                                                       Rng& rng) {
  std::vector<std::array<std::uint64_t, 3>> out;
  if (n == 0) return out;
  if (n <= 1 || n * n * n <= cap) {
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b)
        for (std::uint64_t c = 0; c < n; ++c) out.push_back({a, b, c});
    return out;
  }
  std::set<std::array<std::uint64_t, 3>> picked;
  while (picked.size() < cap)
    picked.insert({rng.below(n), rng.below(n), rng.below(n)});
  return {picked.begin(), picked.end()};
}

/// Shared state of one axiom-lab run over one assignment.
struct LabContext {
  const UtilityAssignment& u;
  const EnumerationBudget& budget;
  ExecMode mode;
  ValueRelation rel;
  LotteryUniverse uni;
  std::vector<BinaryValue> scale;
  std::vector<Lottery> scale_lotteries;
  std::vector<BinaryValue> scale_vals;
  std::vector<BinaryValue> cached_vals;  // empty when the universe is large
  std::uint64_t pair_cap = 0;
  std::uint64_t triple_cap = 0;

  LabContext(const UtilityAssignment& u_, const EnumerationBudget& b,
             ExecMode m, ValueRelation r)
      : u(u_), budget(b), mode(m), rel(std::move(r)),
        uni(b.mode == EnumerationBudget::Mode::Exhaustive
                ? LotteryUniverse::exhaustive(u_.descriptor(), u_.space(), b)
                : LotteryUniverse::sampled(u_.descriptor(), u_.space(), b)) {
    scale = enumerate_scale(u.descriptor(), budget);
    for (const BinaryValue& alpha : scale) {
      scale_lotteries.push_back(binary_lottery(u.space(), alpha));
      scale_vals.push_back(aeu_eval(scale_lotteries.back(), u));
    }
    const std::uint64_t cache_limit =
        std::max<std::uint64_t>(budget.pairwise_threshold, budget.samples);
    if (uni.size() <= cache_limit)
      cached_vals = indexed_map<BinaryValue>(
          uni.size(), mode, [this](std::uint64_t i) { return value_at(i); });
    pair_cap = std::max<std::uint64_t>(2 * budget.samples, 500);
    triple_cap = std::max<std::uint64_t>(4 * budget.samples, 2000);
  }

  BinaryValue value_at(std::uint64_t i) const {
    if (!cached_vals.empty()) return cached_vals[static_cast<std::size_t>(i)];
    return aeu_eval(uni.at(i), u);
  }
  Comparison rel_at(std::uint64_t a, std::uint64_t b) const {
    return rel(value_at(a), value_at(b));
  }
  Json lottery_json(std::uint64_t i) const {
    return lottery_node_to_json(uni.at(i), u.space());
  }
};

using Detail = std::function<Json(std::uint64_t)>;

void run_scan(CheckReport& report, const LabContext& ctx, std::string law,
              std::uint64_t domain,
              const std::function<bool(std::uint64_t)>& pred,
              const Detail& detail) {
  const auto outcome = scan_first_failure(domain, ctx.mode, pred);
  if (outcome.passed()) {
    report.verdicts.push_back(LawVerdict::pass(std::move(law), domain));
    return;
  }
  Json ce;
  try {
    ce = detail(*outcome.first_failure);
  } catch (const std::exception& e) {
    ce["error"] = e.what();
  }
  ce["case_index"] = *outcome.first_failure;
  report.verdicts.push_back(
      LawVerdict::fail(std::move(law), domain, std::move(ce)));
}

void check_reduction_consistency(CheckReport& report, const LabContext& ctx) {
  const std::uint64_t first = ctx.uni.simple_count();
  const std::uint64_t count = ctx.uni.size() - first;
  run_scan(
      report, ctx, "R.reduction-consistency", count,
      [&ctx, first](std::uint64_t j) {
        const Lottery l = ctx.uni.at(first + j);
        const BinaryValue direct = ctx.value_at(first + j);
        const BinaryValue via_reduce = aeu_eval(reduce(l), ctx.u);
        return ctx.rel(direct, via_reduce) == Comparison::Equivalent;
      },
      [&ctx, first](std::uint64_t j) {
        Json ce;
        ce["lottery"] = ctx.lottery_json(first + j);
        ce["reduced"] =
            lottery_node_to_json(reduce(ctx.uni.at(first + j)), ctx.u.space());
        return ce;
      });
}

void check_preorder(CheckReport& report, LabContext& ctx, const char* prefix,
                    Rng& rng) {
  run_scan(
      report, ctx, std::string(prefix) + ".reflexivity", ctx.uni.size(),
      [&ctx](std::uint64_t i) {
        return ctx.rel_at(i, i) == Comparison::Equivalent;
      },
      [&ctx](std::uint64_t i) {
        Json ce;
        ce["lottery"] = ctx.lottery_json(i);
        return ce;
      });

  const std::uint64_t n = ctx.uni.size();
  const std::uint64_t full_cube_limit =
      static_cast<std::uint64_t>(ctx.budget.pairwise_threshold) *
      ctx.budget.pairwise_threshold * ctx.budget.pairwise_threshold;
  const auto triples =
      pick_triples(n, std::min(ctx.triple_cap * 4, full_cube_limit), rng);
  run_scan(
      report, ctx, std::string(prefix) + ".transitivity", triples.size(),
      [&ctx, &triples](std::uint64_t t) {
        const auto [a, b, c] = triples[static_cast<std::size_t>(t)];
        if (!at_least(ctx.rel_at(a, b)) || !at_least(ctx.rel_at(b, c)))
          return true;
        return at_least(ctx.rel_at(a, c));
      },
      [&ctx, &triples](std::uint64_t t) {
        const auto [a, b, c] = triples[static_cast<std::size_t>(t)];
        Json ce;
        ce["a"] = ctx.lottery_json(a);
        ce["b"] = ctx.lottery_json(b);
        ce["c"] = ctx.lottery_json(c);
        return ce;
      });
}

void check_binary_order(CheckReport& report, const LabContext& ctx, Rng& rng) {
  const auto pairs = pick_pairs(ctx.scale.size(), kScalePairCap, rng);
  run_scan(
      report, ctx, "C2.binary-lottery-order", pairs.size(),
      [&ctx, &pairs](std::uint64_t t) {
        const auto [a, b] = pairs[static_cast<std::size_t>(t)];
        const bool scale_ge = at_least(compare2(ctx.scale[a], ctx.scale[b]));
        const bool lottery_ge =
            at_least(ctx.rel(ctx.scale_vals[a], ctx.scale_vals[b]));
        return scale_ge == lottery_ge;
      },
      [&ctx, &pairs](std::uint64_t t) {
        const auto [a, b] = pairs[static_cast<std::size_t>(t)];
        Json ce;
        ce["alpha"] = ctx.scale[a].str();
        ce["beta"] = ctx.scale[b].str();
        ce["scale_verdict"] = to_letter(compare2(ctx.scale[a], ctx.scale[b]));
        ce["lottery_verdict"] =
            to_letter(ctx.rel(ctx.scale_vals[a], ctx.scale_vals[b]));
        return ce;
      });
}

void check_substitutability(CheckReport& report, const LabContext& ctx,
                            const char* law) {
  // Equivalence classes over the simple layer give replacement candidates;
  // the reduction of the sub-lottery itself is always one more candidate.
  const std::uint64_t simple_count = ctx.uni.simple_count();
  std::vector<BinaryValue> simple_vals;
  simple_vals.reserve(static_cast<std::size_t>(simple_count));
  for (std::uint64_t i = 0; i < simple_count; ++i)
    simple_vals.push_back(ctx.value_at(i));

  const std::uint64_t first = ctx.uni.simple_count();
  const std::uint64_t count = ctx.uni.size() - first;
  run_scan(
      report, ctx, std::string(law) + ".substitutability", count,
      [&](std::uint64_t j) {
        const Lottery l = ctx.uni.at(first + j);
        const BinaryValue original = ctx.value_at(first + j);
        const auto& branches = l.branches();
        for (std::size_t pos = 0; pos < branches.size(); ++pos) {
          const BinaryValue sub_val = aeu_eval(*branches[pos].sub, ctx.u);
          std::vector<Lottery> replacements;
          replacements.push_back(reduce(*branches[pos].sub));
          std::size_t found = 0;
          for (std::uint64_t s = 0; s < simple_count && found < 2; ++s) {
            if (ctx.rel(simple_vals[static_cast<std::size_t>(s)], sub_val) !=
                Comparison::Equivalent)
              continue;
            replacements.push_back(ctx.uni.at(s));
            ++found;
          }
          for (const Lottery& rep : replacements) {
            const std::size_t path[1] = {pos};
            const Lottery substituted = substitute(l, path, rep);
            if (ctx.rel(original, aeu_eval(substituted, ctx.u)) !=
                Comparison::Equivalent)
              return false;
          }
        }
        return true;
      },
      [&ctx, first](std::uint64_t j) {
        Json ce;
        ce["lottery"] = ctx.lottery_json(first + j);
        return ce;
      });
}

void check_consequence_continuity(CheckReport& report, const LabContext& ctx) {
  const auto& names = ctx.u.space().names();
  run_scan(
      report, ctx, "C4.consequence-continuity", names.size(),
      [&ctx, &names](std::uint64_t i) {
        const std::string& x = names[static_cast<std::size_t>(i)];
        const BinaryValue alpha = elicit_binary_equivalent(x, ctx.u);
        const Lottery sure = degenerate(ctx.u.space(), ctx.u.descriptor(), x);
        const Lottery bl = binary_lottery(ctx.u.space(), alpha);
        return ctx.rel(aeu_eval(sure, ctx.u), aeu_eval(bl, ctx.u)) ==
               Comparison::Equivalent;
      },
      [&ctx, &names](std::uint64_t i) {
        Json ce;
        ce["consequence"] = names[static_cast<std::size_t>(i)];
        return ce;
      });
}

void check_non_triviality(CheckReport& report, const LabContext& ctx,
                          Rng& rng) {
  const auto pairs = pick_pairs(ctx.scale.size(), kScalePairCap, rng);
  run_scan(
      report, ctx, "D2.non-triviality", pairs.size(),
      [&ctx, &pairs](std::uint64_t t) {
        const auto [a, b] = pairs[static_cast<std::size_t>(t)];
        if (a == b) return true;
        if (ctx.scale[a] == ctx.scale[b]) return true;
        return ctx.rel(ctx.scale_vals[a], ctx.scale_vals[b]) !=
               Comparison::Equivalent;
      },
      [&ctx, &pairs](std::uint64_t t) {
        const auto [a, b] = pairs[static_cast<std::size_t>(t)];
        Json ce;
        ce["alpha"] = ctx.scale[a].str();
        ce["beta"] = ctx.scale[b].str();
        return ce;
      });
}

void check_weak_independence(CheckReport& report, const LabContext& ctx,
                             Rng& rng) {
  const auto pairs = pick_pairs(ctx.uni.size(), ctx.pair_cap, rng);
  // Alphas: the whole scale when small, a deterministic stride otherwise.
  std::vector<std::size_t> alphas;
  const std::size_t alpha_cap = 24;
  const std::size_t stride =
      ctx.scale.size() > alpha_cap ? ctx.scale.size() / alpha_cap + 1 : 1;
  for (std::size_t i = 0; i < ctx.scale.size(); i += stride) alphas.push_back(i);
  // Mixing partners: a few universe elements spread over the index range.
  std::vector<std::uint64_t> partners;
  const std::uint64_t partner_count = std::min<std::uint64_t>(8, ctx.uni.size());
  for (std::uint64_t i = 0; i < partner_count; ++i)
    partners.push_back(i * (ctx.uni.size() / partner_count));

  const std::uint64_t domain =
      static_cast<std::uint64_t>(pairs.size()) * alphas.size() * partners.size();
  auto decode = [&](std::uint64_t t) {
    const std::size_t pair_idx = static_cast<std::size_t>(t % pairs.size());
    const std::size_t alpha_idx =
        static_cast<std::size_t>((t / pairs.size()) % alphas.size());
    const std::size_t partner_idx =
        static_cast<std::size_t>(t / pairs.size() / alphas.size());
    return std::tuple{pairs[pair_idx], alphas[alpha_idx],
                      partners[partner_idx]};
  };
  auto mix = [&ctx](const BinaryValue& alpha, const Lottery& main,
                    const Lottery& partner) {
    return Lottery::compound(
        ctx.u.descriptor(),
        std::vector<std::pair<SemiringValue, Lottery>>{
            {alpha.first(), main}, {alpha.second(), partner}});
  };
  run_scan(
      report, ctx, "D3.weak-independence", domain,
      [&](std::uint64_t t) {
        const auto [pair, alpha_idx, partner] = decode(t);
        if (!at_least(ctx.rel_at(pair.first, pair.second))) return true;
        const BinaryValue& alpha = ctx.scale[alpha_idx];
        const Lottery pi = ctx.uni.at(partner);
        const Lottery mixed_hi = mix(alpha, ctx.uni.at(pair.first), pi);
        const Lottery mixed_lo = mix(alpha, ctx.uni.at(pair.second), pi);
        return at_least(
            ctx.rel(aeu_eval(mixed_hi, ctx.u), aeu_eval(mixed_lo, ctx.u)));
      },
      [&](std::uint64_t t) {
        const auto [pair, alpha_idx, partner] = decode(t);
        Json ce;
        ce["preferred"] = ctx.lottery_json(pair.first);
        ce["other"] = ctx.lottery_json(pair.second);
        ce["alpha"] = ctx.scale[alpha_idx].str();
        ce["partner"] = ctx.lottery_json(partner);
        return ce;
      });
}

void check_continuity(CheckReport& report, const LabContext& ctx, Rng& rng) {
  // Distinct evaluation values with a representative lottery each.
  std::vector<std::pair<BinaryValue, std::uint64_t>> reps;
  const auto scan = pick_indices(0, ctx.uni.size(),
                                 std::max<std::uint64_t>(ctx.pair_cap, 512), rng);
  for (const std::uint64_t i : scan) {
    const BinaryValue v = ctx.value_at(i);
    bool known = false;
    for (const auto& [existing, idx] : reps)
      if (existing == v) {
        known = true;
        break;
      }
    if (!known) reps.emplace_back(v, i);
    if (reps.size() >= 40) break;
  }
  const std::uint64_t r = reps.size();
  const std::uint64_t domain = r * r * r;
  run_scan(
      report, ctx, "D4.continuity", domain,
      [&ctx, &reps, r](std::uint64_t t) {
        const auto& [a_val, a_idx] = reps[static_cast<std::size_t>(t % r)];
        const auto& [b_val, b_idx] =
            reps[static_cast<std::size_t>((t / r) % r)];
        const auto& [g_val, g_idx] =
            reps[static_cast<std::size_t>(t / r / r)];
        if (ctx.rel(a_val, b_val) != Comparison::Greater) return true;
        if (ctx.rel(b_val, g_val) != Comparison::Greater) return true;
        if (compare2(a_val, b_val) != Comparison::Greater ||
            compare2(b_val, g_val) != Comparison::Greater)
          return true;  // witness construction needs the scale order itself
        const BinaryValue alpha = continuity_witness(a_val, b_val, g_val);
        const Lottery mixture = Lottery::compound(
            ctx.u.descriptor(),
            std::vector<std::pair<SemiringValue, Lottery>>{
                {alpha.first(), ctx.uni.at(a_idx)},
                {alpha.second(), ctx.uni.at(g_idx)}});
        const BinaryValue mixed = aeu_eval(mixture, ctx.u);
        return mixed == b_val &&
               ctx.rel(mixed, b_val) == Comparison::Equivalent;
      },
      [&ctx, &reps, r](std::uint64_t t) {
        Json ce;
        ce["a"] = reps[static_cast<std::size_t>(t % r)].first.str();
        ce["b"] = reps[static_cast<std::size_t>((t / r) % r)].first.str();
        ce["g"] = reps[static_cast<std::size_t>(t / r / r)].first.str();
        return ce;
      });
}

UtilityAssignment vary_assignment(const UtilityAssignment& base,
                                  const BinaryValue& mid_value) {
  std::map<std::string, BinaryValue> u;
  for (const auto& name : base.space().names()) {
    if (name == base.space().best() || name == base.space().worst())
      u.emplace(name, base.at(name));
    else
      u.emplace(name, mid_value);
  }
  return {base.space(), base.descriptor(), std::move(u)};
}

}  // namespace

void PreferenceTable::validate() const {
  const std::size_t n = lotteries.size();
  if (relation.size() != n)
    throw InputError("relation must cover every listed lottery");
  for (std::size_t a = 0; a < n; ++a) {
    if (relation[a].size() != n)
      throw InputError("relation must cover every ordered pair");
    if (relation[a][a] != Comparison::Equivalent)
      throw InputError("relation diagonal must be Equivalent at '" +
                       lotteries[a].name + "'");
    for (std::size_t b = 0; b < n; ++b)
      if (relation[a][b] != reversed(relation[b][a]))
        throw InputError("relation is not mirror-consistent at ('" +
                         lotteries[a].name + "', '" + lotteries[b].name + "')");
  }
}

ValueRelation scale_order_relation() {
  return [](const BinaryValue& a, const BinaryValue& b) {
    return compare2(a, b);
  };
}

ValueRelation first_component_relation() {
  return [](const BinaryValue& a, const BinaryValue& b) {
    return leq(a.first(), b.first());
  };
}

CheckReport check_c_axioms(const UtilityAssignment& u,
                           const EnumerationBudget& budget, ExecMode mode,
                           const ValueRelation& rel) {
  budget.validate_for(u.descriptor());
  LabContext ctx(u, budget, mode, rel);
  Rng rng(budget.seed ^ 0xc0a11ull);
  CheckReport report;
  report.suite = "c-axioms";
  report.instance = u.descriptor().str();
  report.budget = budget.to_json();
  check_reduction_consistency(report, ctx);
  check_preorder(report, ctx, "C1", rng);
  check_binary_order(report, ctx, rng);
  check_substitutability(report, ctx, "C3");
  check_consequence_continuity(report, ctx);
  return report;
}

CheckReport check_d_axioms(const UtilityAssignment& u,
                           const EnumerationBudget& budget, ExecMode mode,
                           const ValueRelation& rel) {
  budget.validate_for(u.descriptor());
  LabContext ctx(u, budget, mode, rel);
  Rng rng(budget.seed ^ 0xdA10ull);
  CheckReport report;
  report.suite = "d-axioms";
  report.instance = u.descriptor().str();
  report.budget = budget.to_json();
  check_preorder(report, ctx, "D1", rng);
  check_non_triviality(report, ctx, rng);
  check_weak_independence(report, ctx, rng);
  check_continuity(report, ctx, rng);
  return report;
}

BinaryValue continuity_witness(const BinaryValue& a, const BinaryValue& b,
                               const BinaryValue& g) {
  require_same_instance(a.descriptor(), b.descriptor(), "continuity_witness");
  require_same_instance(a.descriptor(), g.descriptor(), "continuity_witness");
  if (compare2(a, b) != Comparison::Greater ||
      compare2(b, g) != Comparison::Greater)
    throw PreconditionError(
        "continuity witness needs strictly ordered scale values a > b > g");
  const auto upper = e1_witness(a, b);
  const auto lower = e1_witness(b, g);
  if (!upper || !lower)
    throw InvariantViolation("difference witness missing for ordered pair");
  // The first component pairs with the lower-step difference: the mixture
  // leans on the top lottery by exactly the amount separating b from g.
  const BinaryValue alpha = solve_scale(*lower, *upper);
  const PairValue mixed = pair_add(scalar_mul(alpha.first(), a.pair()),
                                   scalar_mul(alpha.second(), g.pair()));
  if (!(mixed == b.pair()))
    throw InvariantViolation("continuity mixture failed verification: got (" +
                             to_literal(mixed.first()) + ", " +
                             to_literal(mixed.second()) + "), want " + b.str());
  return alpha;
}

MixDecomposition lemma2_witness(const BinaryValue& alpha,
                                const BinaryValue& beta) {
  require_same_instance(alpha.descriptor(), beta.descriptor(),
                        "lemma2_witness");
  if (!at_least(compare2(alpha, beta)))
    throw PreconditionError("decomposition needs alpha >= beta on the scale");
  const SemiringValue m = add(alpha.second(), beta.first());
  const auto l = e1_witness(alpha, beta);
  if (!l)
    throw InvariantViolation("difference witness missing for ordered pair");
  const BinaryValue inner = solve_scale(beta.first(), alpha.second());
  const SemiringValue m_lp = mul(m, inner.first());
  const SemiringValue m_mp = mul(m, inner.second());
  const bool ok = add(*l, m_lp) == alpha.first() &&     // (1)
                  m_lp == beta.first() &&               // (2)
                  m_mp == alpha.second() &&             // (3)
                  add(*l, alpha.second()) == beta.second();  // (4)
  if (!ok)
    throw InvariantViolation("mix decomposition failed verification for " +
                             alpha.str() + " vs " + beta.str());
  return {*l, m, inner};
}

CheckReport check_solvability(const SemiringDescriptor& d,
                              const EnumerationBudget& budget, ExecMode mode) {
  budget.validate_for(d);
  Rng rng(budget.seed ^ 0xe5017ull);
  CheckReport report;
  report.suite = "solvability";
  report.instance = d.str();
  report.budget = budget.to_json();

  const auto scale = enumerate_scale(d, budget);
  const auto scale_pairs =
      budget.mode == EnumerationBudget::Mode::Exhaustive
          ? pick_pairs(scale.size(), kScalePairCap, rng)
          : [&] {
              std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
              for (std::uint32_t i = 0; i < budget.samples; ++i)
                out.emplace_back(rng.below(scale.size()),
                                 rng.below(scale.size()));
              return out;
            }();
  {
    const auto outcome = scan_first_failure(
        scale_pairs.size(), mode, [&](std::uint64_t t) {
          const auto [a, b] = scale_pairs[static_cast<std::size_t>(t)];
          const BinaryValue& alpha = scale[a];
          const BinaryValue& betav = scale[b];
          if (!at_least(compare2(alpha, betav))) return true;
          const auto nu = e1_witness(alpha, betav);
          if (!nu) return false;
          return add(betav.first(), *nu) == alpha.first() &&
                 add(alpha.second(), *nu) == betav.second();
        });
    if (outcome.passed()) {
      report.verdicts.push_back(
          LawVerdict::pass("E1.difference-witness", outcome.domain_size));
    } else {
      const auto [a, b] =
          scale_pairs[static_cast<std::size_t>(*outcome.first_failure)];
      Json ce;
      ce["alpha"] = scale[a].str();
      ce["beta"] = scale[b].str();
      report.verdicts.push_back(LawVerdict::fail(
          "E1.difference-witness", outcome.domain_size, std::move(ce)));
    }
  }

  Rng pool_rng(budget.seed ^ 0xe5018ull);
  const auto pool = value_pool(d, budget, pool_rng);
  const auto value_pairs =
      budget.mode == EnumerationBudget::Mode::Exhaustive
          ? pick_pairs(pool.size(), kScalePairCap, pool_rng)
          : [&] {
              std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
              for (std::uint32_t i = 0; i < budget.samples; ++i)
                out.emplace_back(pool_rng.below(pool.size()),
                                 pool_rng.below(pool.size()));
              return out;
            }();
  {
    const auto outcome = scan_first_failure(
        value_pairs.size(), mode, [&](std::uint64_t t) {
          const auto [a, b] = value_pairs[static_cast<std::size_t>(t)];
          const BinaryValue alpha = solve_scale(pool[a], pool[b]);
          const SemiringValue total = add(pool[a], pool[b]);
          return mul(total, alpha.first()) == pool[a] &&
                 mul(total, alpha.second()) == pool[b];
        });
    if (outcome.passed()) {
      report.verdicts.push_back(
          LawVerdict::pass("E2.scale-factorization", outcome.domain_size));
    } else {
      const auto [a, b] =
          value_pairs[static_cast<std::size_t>(*outcome.first_failure)];
      Json ce;
      ce["lambda"] = to_literal(pool[a]);
      ce["mu"] = to_literal(pool[b]);
      report.verdicts.push_back(LawVerdict::fail(
          "E2.scale-factorization", outcome.domain_size, std::move(ce)));
    }
  }
  return report;
}

std::vector<SemiringValue> kary_scale_extension(
    const std::vector<SemiringValue>& lambdas) {
  if (lambdas.empty())
    throw PreconditionError("k-ary extension needs at least one element");
  const SemiringDescriptor& d = lambdas.front().descriptor();
  if (lambdas.size() == 1) return {one(d)};
  SemiringValue prefix_total = zero(d);
  for (std::size_t i = 0; i + 1 < lambdas.size(); ++i)
    prefix_total = add(prefix_total, lambdas[i]);
  const BinaryValue outer = solve_scale(prefix_total, lambdas.back());
  const std::vector<SemiringValue> prefix(lambdas.begin(), lambdas.end() - 1);
  const auto gammas = kary_scale_extension(prefix);
  std::vector<SemiringValue> alphas;
  alphas.reserve(lambdas.size());
  for (const SemiringValue& gamma : gammas)
    alphas.push_back(mul(outer.first(), gamma));
  alphas.push_back(outer.second());
  return alphas;
}

CheckReport check_lemma1(const SemiringDescriptor& d,
                         const EnumerationBudget& budget, ExecMode mode) {
  budget.validate_for(d);
  Rng rng(budget.seed ^ 0x1e111ull);
  CheckReport report;
  report.suite = "lemma1";
  report.instance = d.str();
  report.budget = budget.to_json();

  // (i) k-ary extension of the scale factorization, re-multiplied.
  std::vector<std::vector<SemiringValue>> tuples;
  {
    Rng pool_rng(budget.seed ^ 0x1e112ull);
    const auto pool = value_pool(d, budget, pool_rng);
    for (std::uint32_t k = 1; k <= budget.max_branches; ++k) {
      if (budget.mode == EnumerationBudget::Mode::Exhaustive) {
        std::uint64_t combos = 1;
        bool overflow = false;
        for (std::uint32_t i = 0; i < k; ++i) {
          combos *= pool.size();
          if (combos > 20000) {
            overflow = true;
            break;
          }
        }
        if (!overflow) {
          for (std::uint64_t c = 0; c < combos; ++c) {
            std::uint64_t rest = c;
            std::vector<SemiringValue> tuple;
            for (std::uint32_t i = 0; i < k; ++i) {
              tuple.push_back(pool[rest % pool.size()]);
              rest /= pool.size();
            }
            tuples.push_back(std::move(tuple));
          }
          continue;
        }
      }
      const std::uint32_t want = std::max<std::uint32_t>(budget.samples / 4, 64);
      for (std::uint32_t i = 0; i < want; ++i) {
        std::vector<SemiringValue> tuple;
        for (std::uint32_t j = 0; j < k; ++j)
          tuple.push_back(pool[rng.index(pool.size())]);
        tuples.push_back(std::move(tuple));
      }
    }
  }
  {
    const auto outcome =
        scan_first_failure(tuples.size(), mode, [&](std::uint64_t t) {
          const auto& lambdas = tuples[static_cast<std::size_t>(t)];
          const auto alphas = kary_scale_extension(lambdas);
          SemiringValue total = zero(d);
          for (const auto& l : lambdas) total = add(total, l);
          SemiringValue alpha_total = zero(d);
          for (std::size_t i = 0; i < lambdas.size(); ++i) {
            if (!(mul(total, alphas[i]) == lambdas[i])) return false;
            alpha_total = add(alpha_total, alphas[i]);
          }
          return alpha_total == one(d);
        });
    if (outcome.passed()) {
      report.verdicts.push_back(
          LawVerdict::pass("L1.k-ary-scale-extension", outcome.domain_size));
    } else {
      const auto& lambdas =
          tuples[static_cast<std::size_t>(*outcome.first_failure)];
      Json items = Json::array();
      for (const auto& l : lambdas) items.push_back(to_literal(l));
      Json ce;
      ce["lambdas"] = std::move(items);
      report.verdicts.push_back(LawVerdict::fail(
          "L1.k-ary-scale-extension", outcome.domain_size, std::move(ce)));
    }
  }

  // (ii) the substitutability consequence, under assignments varying the
  // interior utility across the enumerated scale.
  EnumerationBudget small = budget;
  small.max_depth = std::min<std::uint32_t>(small.max_depth, 2);
  small.samples = std::min<std::uint32_t>(small.samples, 200);
  const UtilityAssignment base = default_assignment(d, 3);
  const auto scale = enumerate_scale(d, small);
  std::vector<UtilityAssignment> assignments{base};
  if (!scale.empty()) {
    assignments.push_back(vary_assignment(base, scale.front()));
    assignments.push_back(vary_assignment(base, scale[scale.size() / 2]));
  }
  std::uint64_t cases = 0;
  std::optional<Json> failure;
  for (const UtilityAssignment& u : assignments) {
    LabContext ctx(u, small, mode, scale_order_relation());
    CheckReport sub;
    sub.suite = "lemma1";
    sub.instance = d.str();
    check_substitutability(sub, ctx, "C3");
    cases += sub.verdicts.back().cases;
    if (!sub.verdicts.back().passed && !failure) {
      failure = sub.verdicts.back().counterexample;
      (*failure)["mid_utility"] = u.at(u.space().names()[1]).str();
    }
  }
  if (failure)
    report.verdicts.push_back(
        LawVerdict::fail("L1.substitutability-consequence", cases, *failure));
  else
    report.verdicts.push_back(
        LawVerdict::pass("L1.substitutability-consequence", cases));
  return report;
}

CheckReport check_lemma2(const SemiringDescriptor& d,
                         const EnumerationBudget& budget, ExecMode mode) {
  budget.validate_for(d);
  Rng rng(budget.seed ^ 0x1e211ull);
  CheckReport report;
  report.suite = "lemma2";
  report.instance = d.str();
  report.budget = budget.to_json();

  const auto scale = enumerate_scale(d, budget);
  const auto pairs =
      budget.mode == EnumerationBudget::Mode::Exhaustive
          ? pick_pairs(scale.size(), kScalePairCap, rng)
          : [&] {
              std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
              for (std::uint32_t i = 0; i < budget.samples; ++i)
                out.emplace_back(rng.below(scale.size()),
                                 rng.below(scale.size()));
              return out;
            }();
  const auto outcome =
      scan_first_failure(pairs.size(), mode, [&](std::uint64_t t) {
        const auto [a, b] = pairs[static_cast<std::size_t>(t)];
        if (!at_least(compare2(scale[a], scale[b]))) return true;
        lemma2_witness(scale[a], scale[b]);  // throws on verification failure
        return true;
      });
  if (outcome.passed()) {
    report.verdicts.push_back(
        LawVerdict::pass("L2.mix-decomposition", outcome.domain_size));
  } else {
    const auto [a, b] =
        pairs[static_cast<std::size_t>(*outcome.first_failure)];
    Json ce;
    ce["alpha"] = scale[a].str();
    ce["beta"] = scale[b].str();
    report.verdicts.push_back(LawVerdict::fail(
        "L2.mix-decomposition", outcome.domain_size, std::move(ce)));
  }
  return report;
}

std::optional<UtilityAssignment> synthesize_utility(
    const PreferenceTable& table, const ConsequenceSpace& space,
    const SemiringDescriptor& d) {
  table.validate();
  const std::size_t n = table.lotteries.size();
  std::vector<Lottery> reduced;
  reduced.reserve(n);
  for (const NamedLottery& nl : table.lotteries) {
    require_same_instance(d, nl.lottery.descriptor(), "synthesize_utility");
    reduced.push_back(reduce(nl.lottery));
  }
  // Binary lotteries: support inside {best, worst}; their coefficient pair is
  // on the scale by normalization.
  std::vector<std::optional<BinaryValue>> as_binary(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool binary = true;
    for (const auto& [name, mass] : reduced[i].dist())
      if (name != space.best() && name != space.worst()) binary = false;
    if (binary)
      as_binary[i] = BinaryValue{reduced[i].mass(space.best()),
                                 reduced[i].mass(space.worst())};
  }
  std::map<std::string, BinaryValue> u;
  for (const std::string& x : space.names()) {
    const Lottery sure = degenerate(space, d, x);
    std::optional<std::size_t> sure_idx;
    for (std::size_t i = 0; i < n; ++i)
      if (reduced[i] == sure) {
        sure_idx = i;
        break;
      }
    if (!sure_idx)
      throw InputError("table misses the sure lottery for consequence '" + x +
                       "'");
    std::optional<BinaryValue> witness;
    for (std::size_t i = 0; i < n && !witness; ++i) {
      if (!as_binary[i]) continue;
      if (table.relation[*sure_idx][i] == Comparison::Equivalent)
        witness = as_binary[i];
    }
    if (!witness) return std::nullopt;  // no equivalent binary lottery listed
    u.emplace(x, *witness);
  }
  std::optional<UtilityAssignment> assignment;
  try {
    assignment.emplace(space, d, std::move(u));
  } catch (const InputError&) {
    return std::nullopt;  // extremes came out unpinned: table disagrees
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (aeu_compare(table.lotteries[a].lottery, table.lotteries[b].lottery,
                      *assignment) != table.relation[a][b])
        return std::nullopt;
  return assignment;
}

PreferenceTable build_preference_table(const UtilityAssignment& u,
                                       std::vector<NamedLottery> lotteries) {
  PreferenceTable table;
  table.lotteries = std::move(lotteries);
  const std::size_t n = table.lotteries.size();
  std::vector<BinaryValue> vals;
  vals.reserve(n);
  for (const NamedLottery& nl : table.lotteries)
    vals.push_back(aeu_eval(nl.lottery, u));
  table.relation.assign(n, std::vector<Comparison>(n, Comparison::Equivalent));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table.relation[a][b] = compare2(vals[a], vals[b]);
  return table;
}

UtilityAssignment default_assignment(const SemiringDescriptor& d,
                                     std::uint32_t consequences) {
  if (consequences < 2)
    throw InputError("assignment needs at least two consequences");
  std::vector<std::string> names;
  for (std::uint32_t i = 1; i <= consequences; ++i)
    names.push_back("x" + std::to_string(i));
  ConsequenceSpace space(names, names.front(), names.back());
  const BinaryValue even = solve_scale(one(d), one(d));
  std::map<std::string, BinaryValue> u;
  for (std::uint32_t i = 0; i < consequences; ++i) {
    if (i == 0)
      u.emplace(names[i], binary_top(d));
    else if (i + 1 == consequences)
      u.emplace(names[i], binary_bottom(d));
    else
      u.emplace(names[i], even);
  }
  return {std::move(space), d, std::move(u)};
}

}  // namespace aeu
