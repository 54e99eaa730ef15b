#include "aeu/enumeration.hpp"

#include <algorithm>
#include <set>

namespace aeu {

namespace {

constexpr std::uint64_t kMaxUniverse = 64ull * 1000 * 1000;

[[noreturn]] void budget_too_large(const std::string& what) {
  throw InputError("enumeration budget too large: " + what);
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b,
                          const char* what) {
  if (b != 0 && a > kMaxUniverse / b) budget_too_large(what);
  return a * b;
}

}  // namespace

void EnumerationBudget::validate_for(const SemiringDescriptor& d) const {
  if (mode == Mode::Exhaustive && !d.exhaustively_enumerable())
    throw InputError("exhaustive enumeration is not available for " + d.str() +
                     "; use sampled mode");
  if (max_consequences < 2)
    throw InputError("budget needs at least two consequences");
  if (max_branches < 2) throw InputError("budget needs at least two branches");
  if (denominator_bound < 1)
    throw InputError("denominator bound must be at least 1");
}

nlohmann::ordered_json EnumerationBudget::to_json() const {
  nlohmann::ordered_json j;
  j["mode"] = mode == Mode::Exhaustive ? "exhaustive" : "sampled";
  j["max_consequences"] = max_consequences;
  j["max_depth"] = max_depth;
  j["max_branches"] = max_branches;
  j["samples"] = samples;
  j["seed"] = seed;
  j["denominator_bound"] = denominator_bound;
  j["kappa_ceiling"] = kappa_ceiling;
  return j;
}

std::vector<Rational> unit_grid(std::uint32_t denominator_bound) {
  std::set<Rational> grid;
  for (std::uint32_t q = 1; q <= denominator_bound; ++q)
    for (std::uint32_t p = 0; p <= q; ++p)
      grid.insert(Rational(p, q));
  return {grid.begin(), grid.end()};
}

std::vector<SemiringValue> enumerate_values(const SemiringDescriptor& d,
                                            const EnumerationBudget& b) {
  switch (d.kind) {
    case SemiringKind::QualPoss: {
      std::vector<SemiringValue> out;
      for (std::uint32_t l = 0; l < d.levels; ++l) out.emplace_back(d, l);
      return out;
    }
    case SemiringKind::Kappa: {
      std::vector<SemiringValue> out;
      for (std::uint64_t r = 0; r <= b.kappa_ceiling; ++r)
        out.emplace_back(d, KappaValue::of(r));
      out.emplace_back(d, KappaValue::inf());
      return out;
    }
    case SemiringKind::Product: {
      const auto left = enumerate_values(d.components[0], b);
      const auto right = enumerate_values(d.components[1], b);
      checked_mul(left.size(), right.size(), "product carrier");
      std::vector<SemiringValue> out;
      out.reserve(left.size() * right.size());
      for (const auto& x : left)
        for (const auto& y : right)
          out.emplace_back(d, std::vector<SemiringValue>{x, y});
      return out;
    }
    default:
      throw InputError("carrier of " + d.str() + " cannot be enumerated");
  }
}

SemiringValue sample_value(const SemiringDescriptor& d,
                           const EnumerationBudget& b, Rng& rng) {
  switch (d.kind) {
    case SemiringKind::Prob: {
      // Values up to 2 exercise the unbounded carrier without leaving the
      // range where lottery arithmetic lives.
      const std::uint64_t q = 1 + rng.below(b.denominator_bound);
      const std::uint64_t p = rng.below(2 * q + 1);
      return {d, Rational(static_cast<std::int64_t>(p),
                          static_cast<std::int64_t>(q))};
    }
    case SemiringKind::QuantPoss: {
      const std::uint64_t q = 1 + rng.below(b.denominator_bound);
      const std::uint64_t p = rng.below(q + 1);
      return {d, Rational(static_cast<std::int64_t>(p),
                          static_cast<std::int64_t>(q))};
    }
    case SemiringKind::QualPoss:
      return {d, static_cast<std::uint32_t>(rng.below(d.levels))};
    case SemiringKind::Kappa: {
      if (rng.below(8) == 0) return {d, KappaValue::inf()};
      return {d, KappaValue::of(rng.below(b.kappa_ceiling + 1))};
    }
    case SemiringKind::LexProb: {
      std::vector<Rational> coords;
      coords.reserve(d.length);
      for (std::uint32_t i = 0; i < d.length; ++i) {
        const std::uint64_t q = 1 + rng.below(b.denominator_bound);
        const std::uint64_t p = rng.below(2 * q + 1);
        coords.emplace_back(static_cast<std::int64_t>(p),
                            static_cast<std::int64_t>(q));
      }
      return {d, std::move(coords)};
    }
    case SemiringKind::Product:
      return {d, std::vector<SemiringValue>{
                     sample_value(d.components[0], b, rng),
                     sample_value(d.components[1], b, rng)}};
  }
  throw InvariantViolation("sample_value: unknown kind");
}

std::vector<SemiringValue> value_pool(const SemiringDescriptor& d,
                                      const EnumerationBudget& b, Rng& rng) {
  if (d.exhaustively_enumerable()) return enumerate_values(d, b);
  std::vector<SemiringValue> pool;
  switch (d.kind) {
    case SemiringKind::Prob:
    case SemiringKind::QuantPoss: {
      for (const Rational& r : unit_grid(b.denominator_bound))
        pool.emplace_back(d, r);
      if (d.kind == SemiringKind::Prob) {
        pool.emplace_back(d, Rational(3, 2));
        pool.emplace_back(d, Rational(2));
      }
      break;
    }
    default:
      break;
  }
  const std::size_t want = std::max<std::size_t>(pool.size() + 8,
                                                 b.samples / 16 + 16);
  while (pool.size() < want) pool.push_back(sample_value(d, b, rng));
  return pool;
}

std::vector<BinaryValue> enumerate_scale(const SemiringDescriptor& d,
                                         const EnumerationBudget& b) {
  std::vector<BinaryValue> out;
  auto push_unique = [&out](BinaryValue v) {
    for (const auto& existing : out)
      if (existing == v) return;
    out.push_back(std::move(v));
  };
  switch (d.kind) {
    case SemiringKind::Prob: {
      for (const Rational& r : unit_grid(b.denominator_bound))
        push_unique({SemiringValue{d, r}, SemiringValue{d, Rational(1) - r}});
      return out;
    }
    case SemiringKind::QuantPoss: {
      const auto grid = unit_grid(b.denominator_bound);
      for (const Rational& r : grid) {
        push_unique({one(d), SemiringValue{d, r}});
        push_unique({SemiringValue{d, r}, one(d)});
      }
      return out;
    }
    case SemiringKind::QualPoss:
    case SemiringKind::Kappa:
    case SemiringKind::Product: {
      // Filter the (truncated) carrier square; products recurse through it.
      const auto values = d.kind == SemiringKind::Product
                              ? std::vector<SemiringValue>{}
                              : enumerate_values(d, b);
      if (d.kind != SemiringKind::Product) {
        const SemiringValue unit = one(d);
        for (const auto& x : values)
          for (const auto& y : values)
            if (add(x, y) == unit) push_unique({x, y});
        return out;
      }
      const auto left = enumerate_scale(d.components[0], b);
      const auto right = enumerate_scale(d.components[1], b);
      checked_mul(left.size(), right.size(), "product scale");
      for (const auto& l : left)
        for (const auto& r : right)
          out.push_back(
              {SemiringValue{d, std::vector<SemiringValue>{l.first(), r.first()}},
               SemiringValue{d,
                             std::vector<SemiringValue>{l.second(), r.second()}}});
      return out;
    }
    case SemiringKind::LexProb: {
      // Componentwise independent unit splits; cap the cartesian growth.
      std::vector<std::pair<Rational, Rational>> splits;
      for (const Rational& r : unit_grid(b.denominator_bound))
        splits.emplace_back(r, Rational(1) - r);
      std::uint64_t combos = 1;
      for (std::uint32_t i = 0; i < d.length; ++i)
        combos = checked_mul(combos, splits.size(), "lexprob scale");
      const std::uint64_t cap = 4096;
      const std::uint64_t stride = combos > cap ? combos / cap + 1 : 1;
      for (std::uint64_t idx = 0; idx < combos; idx += stride) {
        std::uint64_t rest = idx;
        std::vector<Rational> first(d.length), second(d.length);
        for (std::uint32_t i = 0; i < d.length; ++i) {
          const auto& [p, q] = splits[rest % splits.size()];
          rest /= splits.size();
          first[i] = p;
          second[i] = q;
        }
        out.push_back({SemiringValue{d, std::move(first)},
                       SemiringValue{d, std::move(second)}});
      }
      return out;
    }
  }
  throw InvariantViolation("enumerate_scale: unknown kind");
}

std::vector<std::vector<SemiringValue>> enumerate_normalized_tuples(
    const SemiringDescriptor& d, std::uint32_t k, const EnumerationBudget& b) {
  if (k == 0) throw InputError("tuples need at least one slot");

  if (d.kind == SemiringKind::Prob) {
    // Weak compositions p1 + ... + pk = q over each grid denominator,
    // deduplicated as reduced fractions.
    std::set<std::vector<Rational>> seen;
    for (std::uint32_t q = 1; q <= b.denominator_bound; ++q) {
      std::vector<std::uint32_t> parts(k, 0);
      auto emit = [&] {
        std::vector<Rational> tuple(k);
        for (std::uint32_t i = 0; i < k; ++i) tuple[i] = Rational(parts[i], q);
        seen.insert(std::move(tuple));
      };
      auto walk = [&](auto&& self, std::uint32_t pos,
                      std::uint32_t remaining) -> void {
        if (pos == k - 1) {
          parts[pos] = remaining;
          emit();
          return;
        }
        for (std::uint32_t p = 0; p <= remaining; ++p) {
          parts[pos] = p;
          self(self, pos + 1, remaining - p);
        }
      };
      walk(walk, 0, q);
    }
    std::vector<std::vector<SemiringValue>> out;
    out.reserve(seen.size());
    for (const auto& tuple : seen) {
      std::vector<SemiringValue> vs;
      vs.reserve(k);
      for (const Rational& r : tuple) vs.emplace_back(d, r);
      out.push_back(std::move(vs));
    }
    return out;
  }

  if (d.kind == SemiringKind::QuantPoss) {
    // Grid tuples whose maximum is 1.
    const auto grid = unit_grid(b.denominator_bound);
    std::uint64_t combos = 1;
    for (std::uint32_t i = 0; i < k; ++i)
      combos = checked_mul(combos, grid.size(), "normalized tuples");
    const Rational unit{1};
    std::vector<std::vector<SemiringValue>> out;
    for (std::uint64_t c = 0; c < combos; ++c) {
      std::uint64_t rest = c;
      bool has_unit = false;
      std::vector<SemiringValue> tuple;
      tuple.reserve(k);
      for (std::uint32_t i = 0; i < k; ++i) {
        const Rational& r = grid[rest % grid.size()];
        rest /= grid.size();
        if (r == unit) has_unit = true;
        tuple.emplace_back(d, r);
      }
      if (has_unit) out.push_back(std::move(tuple));
    }
    return out;
  }

  const auto values = enumerate_values(d, b);
  std::uint64_t combos = 1;
  for (std::uint32_t i = 0; i < k; ++i)
    combos = checked_mul(combos, values.size(), "normalized tuples");
  const SemiringValue unit = one(d);
  std::vector<std::vector<SemiringValue>> out;
  for (std::uint64_t c = 0; c < combos; ++c) {
    std::uint64_t rest = c;
    SemiringValue total = zero(d);
    std::vector<SemiringValue> tuple;
    tuple.reserve(k);
    for (std::uint32_t i = 0; i < k; ++i) {
      const auto& v = values[rest % values.size()];
      rest /= values.size();
      tuple.push_back(v);
      total = add(total, v);
    }
    if (total == unit) out.push_back(std::move(tuple));
  }
  return out;
}

std::vector<SemiringValue> sample_normalized_tuple(const SemiringDescriptor& d,
                                                   std::uint32_t k,
                                                   const EnumerationBudget& b,
                                                   Rng& rng) {
  switch (d.kind) {
    case SemiringKind::Prob: {
      while (true) {
        const std::uint64_t q = 1 + rng.below(b.denominator_bound);
        std::vector<std::uint64_t> parts(k);
        std::uint64_t total = 0;
        for (auto& p : parts) {
          p = rng.below(q + 1);
          total += p;
        }
        if (total == 0) continue;
        std::vector<SemiringValue> out;
        out.reserve(k);
        for (const auto p : parts)
          out.emplace_back(d, Rational(static_cast<std::int64_t>(p),
                                       static_cast<std::int64_t>(total)));
        return out;
      }
    }
    case SemiringKind::QuantPoss:
    case SemiringKind::QualPoss:
    case SemiringKind::Kappa: {
      std::vector<SemiringValue> out;
      out.reserve(k);
      for (std::uint32_t i = 0; i < k; ++i)
        out.push_back(sample_value(d, b, rng));
      out[rng.index(k)] = one(d);
      return out;
    }
    case SemiringKind::LexProb: {
      // Normalize each coordinate slice across the tuple independently.
      std::vector<std::vector<Rational>> coords(k,
                                                std::vector<Rational>(d.length));
      for (std::uint32_t j = 0; j < d.length; ++j) {
        while (true) {
          const std::uint64_t q = 1 + rng.below(b.denominator_bound);
          Rational total{0};
          std::vector<Rational> slice(k);
          for (auto& r : slice) {
            r = Rational(static_cast<std::int64_t>(rng.below(q + 1)),
                         static_cast<std::int64_t>(q));
            total += r;
          }
          if (total.is_zero()) continue;
          for (std::uint32_t i = 0; i < k; ++i) coords[i][j] = slice[i] / total;
          break;
        }
      }
      std::vector<SemiringValue> out;
      out.reserve(k);
      for (auto& c : coords) out.emplace_back(d, std::move(c));
      return out;
    }
    case SemiringKind::Product: {
      const auto left = sample_normalized_tuple(d.components[0], k, b, rng);
      const auto right = sample_normalized_tuple(d.components[1], k, b, rng);
      std::vector<SemiringValue> out;
      out.reserve(k);
      for (std::uint32_t i = 0; i < k; ++i)
        out.emplace_back(d, std::vector<SemiringValue>{left[i], right[i]});
      return out;
    }
  }
  throw InvariantViolation("sample_normalized_tuple: unknown kind");
}

Lottery sample_simple_lottery(const SemiringDescriptor& d,
                              const ConsequenceSpace& space,
                              const EnumerationBudget& b, Rng& rng) {
  const auto tuple = sample_normalized_tuple(
      d, static_cast<std::uint32_t>(space.size()), b, rng);
  Lottery::Dist dist;
  for (std::size_t i = 0; i < space.size(); ++i)
    dist.emplace(space.names()[i], tuple[i]);
  return Lottery::simple(d, std::move(dist));
}

Lottery sample_lottery(const SemiringDescriptor& d,
                       const ConsequenceSpace& space,
                       const EnumerationBudget& b, std::uint32_t depth,
                       Rng& rng) {
  if (depth <= 1) return sample_simple_lottery(d, space, b, rng);
  const std::uint32_t k =
      2 + static_cast<std::uint32_t>(rng.below(b.max_branches - 1));
  const auto coeffs = sample_normalized_tuple(d, k, b, rng);
  std::vector<std::pair<SemiringValue, Lottery>> parts;
  parts.reserve(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::uint32_t sub_depth =
        1 + static_cast<std::uint32_t>(rng.below(depth - 1));
    parts.emplace_back(coeffs[i], sample_lottery(d, space, b, sub_depth, rng));
  }
  return Lottery::compound(d, std::move(parts));
}

// ---------------------------------------------------------------------------
// LotteryUniverse

LotteryUniverse LotteryUniverse::exhaustive(const SemiringDescriptor& d,
                                            const ConsequenceSpace& space,
                                            const EnumerationBudget& b) {
  LotteryUniverse u;
  u.desc_ = d;
  u.combinatorial_ = true;

  const auto dists = enumerate_normalized_tuples(
      d, static_cast<std::uint32_t>(space.size()), b);
  for (const auto& tuple : dists) {
    Lottery::Dist dist;
    for (std::size_t i = 0; i < space.size(); ++i)
      dist.emplace(space.names()[i], tuple[i]);
    u.simples_.push_back(Lottery::simple(d, std::move(dist)));
  }
  if (u.simples_.empty())
    throw InvariantViolation("no normalized distributions enumerated");

  u.tuples_by_k_.resize(b.max_branches + 1);
  for (std::uint32_t k = 2; k <= b.max_branches; ++k)
    u.tuples_by_k_[k] = enumerate_normalized_tuples(d, k, b);

  u.total_ = u.simples_.size();
  for (std::uint32_t depth = 2; depth <= b.max_depth; ++depth) {
    const std::uint64_t base = u.total_;
    for (std::uint32_t k = 2; k <= b.max_branches; ++k) {
      Block block;
      block.branches = k;
      block.coeff_tuples = u.tuples_by_k_[k].size();
      block.sub_base = base;
      std::uint64_t count = block.coeff_tuples;
      for (std::uint32_t i = 0; i < k; ++i)
        count = checked_mul(count, base, "lottery universe");
      block.count = count;
      block.offset = u.total_;
      u.total_ += count;
      if (u.total_ > kMaxUniverse) budget_too_large("lottery universe");
      u.blocks_.push_back(block);
    }
  }
  return u;
}

LotteryUniverse LotteryUniverse::sampled(const SemiringDescriptor& d,
                                         const ConsequenceSpace& space,
                                         const EnumerationBudget& b) {
  LotteryUniverse u;
  u.desc_ = d;
  u.combinatorial_ = false;
  Rng rng(b.seed);

  // Grid simples first so equivalence classes are populated, then random
  // simples and compounds up to the sample budget.
  std::set<std::vector<Rational>> grid_done;
  const std::uint32_t n = static_cast<std::uint32_t>(space.size());
  if (d.kind == SemiringKind::Prob || d.kind == SemiringKind::QuantPoss) {
    EnumerationBudget coarse = b;
    coarse.denominator_bound = std::min<std::uint32_t>(b.denominator_bound, 4);
    for (const auto& tuple : enumerate_normalized_tuples(d, n, coarse)) {
      Lottery::Dist dist;
      for (std::size_t i = 0; i < space.size(); ++i)
        dist.emplace(space.names()[i], tuple[i]);
      u.simples_.push_back(Lottery::simple(d, std::move(dist)));
      if (u.simples_.size() * 2 >= b.samples) break;
    }
  }
  while (u.simples_.size() < std::max<std::size_t>(b.samples / 2, 2))
    u.simples_.push_back(sample_simple_lottery(d, space, b, rng));

  while (b.max_depth >= 2 &&
         u.simples_.size() + u.stored_.size() < b.samples) {
    const std::uint32_t depth =
        2 + static_cast<std::uint32_t>(rng.below(b.max_depth - 1));
    u.stored_.push_back(sample_lottery(d, space, b, depth, rng));
  }
  u.total_ = u.simples_.size() + u.stored_.size();
  return u;
}

Lottery LotteryUniverse::at(std::uint64_t i) const {
  if (i < simples_.size()) return simples_[static_cast<std::size_t>(i)];
  if (!combinatorial_)
    return stored_[static_cast<std::size_t>(i - simples_.size())];
  for (const Block& block : blocks_) {
    if (i < block.offset || i >= block.offset + block.count) continue;
    std::uint64_t rest = i - block.offset;
    const std::uint64_t tuple_idx = rest % block.coeff_tuples;
    rest /= block.coeff_tuples;
    const auto& coeffs = tuples_by_k_[block.branches][tuple_idx];
    std::vector<std::pair<SemiringValue, Lottery>> parts;
    parts.reserve(block.branches);
    for (std::uint32_t s = 0; s < block.branches; ++s) {
      const std::uint64_t sub_idx = rest % block.sub_base;
      rest /= block.sub_base;
      parts.emplace_back(coeffs[s], at(sub_idx));
    }
    return Lottery::compound(desc_, std::move(parts));
  }
  throw InvariantViolation("lottery universe index out of range");
}

std::vector<std::vector<std::string>> enumerate_events(
    const std::vector<std::string>& states) {
  if (states.size() > 20) throw InputError("too many states to enumerate events");
  const std::size_t count = std::size_t{1} << states.size();
  std::vector<std::vector<std::string>> out;
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<std::string> event;
    for (std::size_t i = 0; i < states.size(); ++i)
      if (mask & (std::size_t{1} << i)) event.push_back(states[i]);
    out.push_back(std::move(event));
  }
  return out;
}

}  // namespace aeu
