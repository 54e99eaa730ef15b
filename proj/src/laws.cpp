#include "aeu/laws.hpp"

namespace aeu {

TripleDomain TripleDomain::cube(std::size_t pool) {
  TripleDomain d;
  d.pool_size = pool;
  return d;
}

TripleDomain TripleDomain::sample(std::size_t pool, std::uint32_t count,
                                  Rng& rng) {
  TripleDomain d;
  d.pool_size = pool;
  d.sampled.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i)
    d.sampled.push_back({rng.index(pool), rng.index(pool), rng.index(pool)});
  return d;
}

namespace {

struct ShippedAlgebra {
  using value_type = SemiringValue;
  SemiringDescriptor desc;

  SemiringValue add(const SemiringValue& a, const SemiringValue& b) const {
    return aeu::add(a, b);
  }
  SemiringValue mul(const SemiringValue& a, const SemiringValue& b) const {
    return aeu::mul(a, b);
  }
  SemiringValue zero() const { return aeu::zero(desc); }
  SemiringValue one() const { return aeu::one(desc); }
  bool equal(const SemiringValue& a, const SemiringValue& b) const {
    return a == b;
  }
  std::string render(const SemiringValue& a) const { return to_literal(a); }
};

}  // namespace

CheckReport check_semiring_laws(const SemiringDescriptor& d,
                                const EnumerationBudget& budget,
                                ExecMode mode) {
  budget.validate_for(d);
  Rng rng(budget.seed);
  const ShippedAlgebra alg{d};
  const auto pool = value_pool(d, budget, rng);
  const TripleDomain domain =
      budget.mode == EnumerationBudget::Mode::Exhaustive
          ? TripleDomain::cube(pool.size())
          : TripleDomain::sample(pool.size(), budget.samples, rng);
  return run_law_checks(alg, pool, domain, mode, d.str(), budget.to_json());
}

CheckReport check_natmax_control(std::uint64_t max_value, ExecMode mode) {
  const NatMaxAlgebra alg;
  std::vector<std::uint64_t> pool;
  for (std::uint64_t v = 0; v <= max_value; ++v) pool.push_back(v);
  Json budget;
  budget["mode"] = "exhaustive";
  budget["max_value"] = max_value;
  CheckReport report = run_law_checks(alg, pool, TripleDomain::cube(pool.size()),
                                      mode, "natmax-control", budget);
  report.suite = "negative-control";
  return report;
}

}  // namespace aeu
