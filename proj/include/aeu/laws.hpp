#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aeu/enumeration.hpp"
#include "aeu/parallel.hpp"
#include "aeu/report.hpp"
#include "aeu/semiring.hpp"

namespace aeu {

/// Domain of value triples a law scan runs over: either the full cube of a
/// pool (decoded from the index, nothing materialized) or an explicit list
/// of sampled index triples.
struct TripleDomain {
  std::vector<std::array<std::size_t, 3>> sampled;  // empty => full cube
  std::size_t pool_size = 0;

  std::uint64_t size() const {
    if (!sampled.empty()) return sampled.size();
    return static_cast<std::uint64_t>(pool_size) * pool_size * pool_size;
  }
  std::array<std::size_t, 3> decode(std::uint64_t i) const {
    if (!sampled.empty()) return sampled[static_cast<std::size_t>(i)];
    const std::size_t a = static_cast<std::size_t>(i % pool_size);
    const std::size_t b = static_cast<std::size_t>((i / pool_size) % pool_size);
    const std::size_t c =
        static_cast<std::size_t>(i / pool_size / pool_size % pool_size);
    return {a, b, c};
  }

  static TripleDomain cube(std::size_t pool);
  static TripleDomain sample(std::size_t pool, std::uint32_t count, Rng& rng);
};

/// Runs the semiring and pair-extension law suite over any algebra-shaped
/// structure. Requirements on Algebra:
///   value_type, add(a,b), mul(a,b), zero(), one(),
///   equal(a,b) -> bool, render(a) -> std::string.
/// Pair laws are evaluated componentwise on pairs built from each triple.
template <class Algebra>
CheckReport run_law_checks(const Algebra& alg,
                           const std::vector<typename Algebra::value_type>& pool,
                           const TripleDomain& domain, ExecMode mode,
                           std::string instance_name, Json budget_json) {
  using V = typename Algebra::value_type;
  using P = std::pair<V, V>;

  const auto padd = [&alg](const P& x, const P& y) -> P {
    return {alg.add(x.first, y.first), alg.add(x.second, y.second)};
  };
  const auto pequal = [&alg](const P& x, const P& y) {
    return alg.equal(x.first, y.first) && alg.equal(x.second, y.second);
  };
  const auto prender = [&alg](const P& x) {
    return "(" + alg.render(x.first) + ", " + alg.render(x.second) + ")";
  };

  struct Law {
    std::string name;
    // Returns lhs/rhs rendering on failure.
    std::function<std::optional<std::pair<std::string, std::string>>(
        const V&, const V&, const V&)>
        check;
  };

  auto scalar_law = [&alg](auto fn) {
    return [&alg, fn](const V& a, const V& b, const V& c)
               -> std::optional<std::pair<std::string, std::string>> {
      const auto [lhs, rhs] = fn(a, b, c);
      if (alg.equal(lhs, rhs)) return std::nullopt;
      return std::make_pair(alg.render(lhs), alg.render(rhs));
    };
  };

  std::vector<Law> laws;
  laws.push_back({"A1.add-commutativity",
                  scalar_law([&alg](const V& a, const V& b, const V&) {
                    return std::pair{alg.add(a, b), alg.add(b, a)};
                  })});
  laws.push_back({"A1.add-associativity",
                  scalar_law([&alg](const V& a, const V& b, const V& c) {
                    return std::pair{alg.add(alg.add(a, b), c),
                                     alg.add(a, alg.add(b, c))};
                  })});
  laws.push_back({"A1.zero-neutral",
                  scalar_law([&alg](const V& a, const V&, const V&) {
                    return std::pair{alg.add(a, alg.zero()), a};
                  })});
  laws.push_back({"A2.mul-associativity",
                  scalar_law([&alg](const V& a, const V& b, const V& c) {
                    return std::pair{alg.mul(alg.mul(a, b), c),
                                     alg.mul(a, alg.mul(b, c))};
                  })});
  laws.push_back({"A2.one-neutral",
                  [&](const V& a, const V&, const V&)
                      -> std::optional<std::pair<std::string, std::string>> {
                    const V l = alg.mul(a, alg.one());
                    const V r = alg.mul(alg.one(), a);
                    if (alg.equal(l, a) && alg.equal(r, a)) return std::nullopt;
                    return std::make_pair(alg.render(l) + " / " + alg.render(r),
                                          alg.render(a));
                  }});
  laws.push_back({"A2.zero-absorbing",
                  [&](const V& a, const V&, const V&)
                      -> std::optional<std::pair<std::string, std::string>> {
                    const V l = alg.mul(a, alg.zero());
                    const V r = alg.mul(alg.zero(), a);
                    if (alg.equal(l, alg.zero()) && alg.equal(r, alg.zero()))
                      return std::nullopt;
                    return std::make_pair(alg.render(l) + " / " + alg.render(r),
                                          alg.render(alg.zero()));
                  }});
  laws.push_back({"A3.right-distributivity",
                  scalar_law([&alg](const V& a, const V& b, const V& c) {
                    return std::pair{alg.mul(alg.add(a, b), c),
                                     alg.add(alg.mul(a, c), alg.mul(b, c))};
                  })});
  laws.push_back({"A3.left-distributivity",
                  scalar_law([&alg](const V& a, const V& b, const V& c) {
                    return std::pair{alg.mul(a, alg.add(b, c)),
                                     alg.add(alg.mul(a, b), alg.mul(a, c))};
                  })});
  laws.push_back({"B1.pair-add-associativity",
                  [&](const V& a, const V& b, const V& c)
                      -> std::optional<std::pair<std::string, std::string>> {
                    const P p{a, b}, q{b, c}, r{c, a};
                    const P lhs = padd(padd(p, q), r);
                    const P rhs = padd(p, padd(q, r));
                    if (pequal(lhs, rhs)) return std::nullopt;
                    return std::make_pair(prender(lhs), prender(rhs));
                  }});
  laws.push_back({"B2.pair-add-commutativity",
                  [&](const V& a, const V& b, const V& c)
                      -> std::optional<std::pair<std::string, std::string>> {
                    const P p{a, b}, q{b, c};
                    const P lhs = padd(p, q);
                    const P rhs = padd(q, p);
                    if (pequal(lhs, rhs)) return std::nullopt;
                    return std::make_pair(prender(lhs), prender(rhs));
                  }});
  laws.push_back({"B3.scalar-one-identity",
                  [&](const V& a, const V& b, const V&)
                      -> std::optional<std::pair<std::string, std::string>> {
                    const P p{a, b};
                    const P lhs{alg.mul(alg.one(), p.first),
                                alg.mul(alg.one(), p.second)};
                    if (pequal(lhs, p)) return std::nullopt;
                    return std::make_pair(prender(lhs), prender(p));
                  }});

  CheckReport report;
  report.suite = "semiring-laws";
  report.instance = std::move(instance_name);
  report.budget = std::move(budget_json);

  for (const Law& law : laws) {
    const auto outcome =
        scan_first_failure(domain.size(), mode, [&](std::uint64_t i) {
          const auto [x, y, z] = domain.decode(i);
          return !law.check(pool[x], pool[y], pool[z]).has_value();
        });
    if (outcome.passed()) {
      report.verdicts.push_back(LawVerdict::pass(law.name, outcome.domain_size));
      continue;
    }
    const auto [x, y, z] = domain.decode(*outcome.first_failure);
    const auto detail = law.check(pool[x], pool[y], pool[z]);
    Json ce;
    ce["a"] = alg.render(pool[x]);
    ce["b"] = alg.render(pool[y]);
    ce["c"] = alg.render(pool[z]);
    if (detail) {
      ce["lhs"] = detail->first;
      ce["rhs"] = detail->second;
    }
    report.verdicts.push_back(
        LawVerdict::fail(law.name, outcome.domain_size, std::move(ce)));
  }
  return report;
}

/// Law suite for a shipped instance: exhaustive cube for enumerable
/// carriers, seeded sampled triples elsewhere.
CheckReport check_semiring_laws(const SemiringDescriptor& d,
                                const EnumerationBudget& budget,
                                ExecMode mode = ExecMode::Parallel);

/// Negative control: naturals with + as combination and max as sequencing.
/// max has no absorbing zero, so the A2 absorption law must fail; the test
/// suite uses this to prove the checker is not vacuous.
struct NatMaxAlgebra {
  using value_type = std::uint64_t;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a + b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return a > b ? a : b;
  }
  std::uint64_t zero() const { return 0; }
  std::uint64_t one() const { return 0; }
  bool equal(std::uint64_t a, std::uint64_t b) const { return a == b; }
  std::string render(std::uint64_t a) const { return std::to_string(a); }
};

CheckReport check_natmax_control(std::uint64_t max_value, ExecMode mode);

}  // namespace aeu
