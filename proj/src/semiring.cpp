#include "aeu/semiring.hpp"

#include <algorithm>
#include <cctype>

namespace aeu {

namespace {

const Rational kZero{0};
const Rational kOne{1};

[[noreturn]] void bad_descriptor(const std::string& what) {
  throw InvariantViolation("bad semiring descriptor: " + what);
}

}  // namespace

// ---------------------------------------------------------------------------
// Descriptors

SemiringDescriptor SemiringDescriptor::prob() { return {.kind = SemiringKind::Prob}; }

SemiringDescriptor SemiringDescriptor::quantposs() {
  return {.kind = SemiringKind::QuantPoss};
}

SemiringDescriptor SemiringDescriptor::qualposs(std::uint32_t n) {
  if (n < 2) bad_descriptor("qualposs needs at least 2 levels");
  SemiringDescriptor d{.kind = SemiringKind::QualPoss};
  d.levels = n;
  return d;
}

SemiringDescriptor SemiringDescriptor::kappa() { return {.kind = SemiringKind::Kappa}; }

SemiringDescriptor SemiringDescriptor::lexprob(std::uint32_t k) {
  if (k < 1) bad_descriptor("lexprob needs length >= 1");
  SemiringDescriptor d{.kind = SemiringKind::LexProb};
  d.length = k;
  return d;
}

SemiringDescriptor SemiringDescriptor::product(SemiringDescriptor a,
                                               SemiringDescriptor b) {
  SemiringDescriptor d{.kind = SemiringKind::Product};
  d.components.push_back(std::move(a));
  d.components.push_back(std::move(b));
  return d;
}

std::string SemiringDescriptor::str() const {
  switch (kind) {
    case SemiringKind::Prob:
      return "prob";
    case SemiringKind::QuantPoss:
      return "quantposs";
    case SemiringKind::QualPoss:
      return "qualposs:" + std::to_string(levels);
    case SemiringKind::Kappa:
      return "kappa";
    case SemiringKind::LexProb:
      return "lexprob:" + std::to_string(length);
    case SemiringKind::Product:
      return "product:" + components[0].str() + ":" + components[1].str();
  }
  bad_descriptor("unknown kind");
}

namespace {

SemiringDescriptor parse_descriptor_tokens(const std::vector<std::string>& toks,
                                           std::size_t& pos,
                                           std::string_view full) {
  auto fail = [&]() -> SemiringDescriptor {
    throw InputError("bad semiring descriptor: '" + std::string(full) + "'");
  };
  if (pos >= toks.size()) return fail();
  const std::string& head = toks[pos++];
  auto take_number = [&]() -> std::uint32_t {
    if (pos >= toks.size()) fail();
    const std::string& t = toks[pos++];
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) {
          return std::isdigit(c);
        }))
      fail();
    return static_cast<std::uint32_t>(std::stoul(t));
  };
  if (head == "prob") return SemiringDescriptor::prob();
  if (head == "quantposs") return SemiringDescriptor::quantposs();
  if (head == "kappa") return SemiringDescriptor::kappa();
  if (head == "qualposs") {
    const auto n = take_number();
    if (n < 2) fail();
    return SemiringDescriptor::qualposs(n);
  }
  if (head == "lexprob") {
    const auto k = take_number();
    if (k < 1) fail();
    return SemiringDescriptor::lexprob(k);
  }
  if (head == "product") {
    SemiringDescriptor a = parse_descriptor_tokens(toks, pos, full);
    SemiringDescriptor b = parse_descriptor_tokens(toks, pos, full);
    return SemiringDescriptor::product(std::move(a), std::move(b));
  }
  return fail();
}

}  // namespace

SemiringDescriptor SemiringDescriptor::parse(std::string_view s) {
  std::vector<std::string> toks;
  std::string cur;
  for (char c : s) {
    if (c == ':') {
      toks.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  toks.push_back(cur);
  std::size_t pos = 0;
  SemiringDescriptor d = parse_descriptor_tokens(toks, pos, s);
  if (pos != toks.size())
    throw InputError("bad semiring descriptor: '" + std::string(s) + "'");
  return d;
}

bool SemiringDescriptor::finite_carrier() const {
  switch (kind) {
    case SemiringKind::QualPoss:
      return true;
    case SemiringKind::Product:
      return components[0].finite_carrier() && components[1].finite_carrier();
    default:
      return false;
  }
}

bool SemiringDescriptor::exhaustively_enumerable() const {
  switch (kind) {
    case SemiringKind::QualPoss:
    case SemiringKind::Kappa:
      return true;
    case SemiringKind::Product:
      return components[0].exhaustively_enumerable() &&
             components[1].exhaustively_enumerable();
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// Values

SemiringValue::SemiringValue(SemiringDescriptor desc, Payload payload)
    : desc_(std::move(desc)), payload_(std::move(payload)) {
  switch (desc_.kind) {
    case SemiringKind::Prob: {
      const auto* r = std::get_if<Rational>(&payload_);
      if (!r || r->is_negative())
        throw InvariantViolation("prob payload must be a nonnegative rational");
      break;
    }
    case SemiringKind::QuantPoss: {
      const auto* r = std::get_if<Rational>(&payload_);
      if (!r || r->is_negative() || *r > kOne)
        throw InvariantViolation("quantposs payload must lie in [0,1]");
      break;
    }
    case SemiringKind::QualPoss: {
      const auto* l = std::get_if<std::uint32_t>(&payload_);
      if (!l || *l >= desc_.levels)
        throw InvariantViolation("qualposs level out of range");
      break;
    }
    case SemiringKind::Kappa: {
      const auto* k = std::get_if<KappaValue>(&payload_);
      if (!k) throw InvariantViolation("kappa payload must be a rank");
      if (k->infinite && k->rank != 0)
        payload_ = KappaValue::inf();  // canonical form
      break;
    }
    case SemiringKind::LexProb: {
      const auto* v = std::get_if<std::vector<Rational>>(&payload_);
      if (!v || v->size() != desc_.length)
        throw InvariantViolation("lexprob payload has wrong length");
      for (const Rational& r : *v)
        if (r.is_negative())
          throw InvariantViolation("lexprob coordinates must be nonnegative");
      break;
    }
    case SemiringKind::Product: {
      const auto* v = std::get_if<std::vector<SemiringValue>>(&payload_);
      if (!v || v->size() != 2)
        throw InvariantViolation("product payload must hold two components");
      if (!((*v)[0].descriptor() == desc_.components[0]) ||
          !((*v)[1].descriptor() == desc_.components[1]))
        throw InvariantViolation("product component instance mismatch");
      break;
    }
  }
}

void require_same_instance(const SemiringDescriptor& a,
                           const SemiringDescriptor& b, const char* op) {
  if (!(a == b))
    throw InstanceMismatchError(std::string(op) + ": instance mismatch (" +
                                a.str() + " vs " + b.str() + ")");
}

SemiringValue zero(const SemiringDescriptor& d) {
  switch (d.kind) {
    case SemiringKind::Prob:
    case SemiringKind::QuantPoss:
      return {d, kZero};
    case SemiringKind::QualPoss:
      return {d, std::uint32_t{0}};
    case SemiringKind::Kappa:
      return {d, KappaValue::inf()};
    case SemiringKind::LexProb:
      return {d, std::vector<Rational>(d.length, kZero)};
    case SemiringKind::Product:
      return {d, std::vector<SemiringValue>{zero(d.components[0]),
                                            zero(d.components[1])}};
  }
  bad_descriptor("zero");
}

SemiringValue one(const SemiringDescriptor& d) {
  switch (d.kind) {
    case SemiringKind::Prob:
    case SemiringKind::QuantPoss:
      return {d, kOne};
    case SemiringKind::QualPoss:
      return {d, d.levels - 1};
    case SemiringKind::Kappa:
      return {d, KappaValue::of(0)};
    case SemiringKind::LexProb:
      return {d, std::vector<Rational>(d.length, kOne)};
    case SemiringKind::Product:
      return {d, std::vector<SemiringValue>{one(d.components[0]),
                                            one(d.components[1])}};
  }
  bad_descriptor("one");
}

SemiringValue add(const SemiringValue& a, const SemiringValue& b) {
  require_same_instance(a.descriptor(), b.descriptor(), "add");
  const SemiringDescriptor& d = a.descriptor();
  switch (d.kind) {
    case SemiringKind::Prob:
      return {d, a.rational() + b.rational()};
    case SemiringKind::QuantPoss:
      return {d, std::max(a.rational(), b.rational())};
    case SemiringKind::QualPoss:
      return {d, std::max(a.level(), b.level())};
    case SemiringKind::Kappa: {
      const KappaValue& x = a.kappa();
      const KappaValue& y = b.kappa();
      if (x.infinite) return b;
      if (y.infinite) return a;
      return {d, KappaValue::of(std::min(x.rank, y.rank))};
    }
    case SemiringKind::LexProb: {
      std::vector<Rational> out(d.length);
      for (std::uint32_t i = 0; i < d.length; ++i)
        out[i] = a.coords()[i] + b.coords()[i];
      return {d, std::move(out)};
    }
    case SemiringKind::Product:
      return {d, std::vector<SemiringValue>{add(a.parts()[0], b.parts()[0]),
                                            add(a.parts()[1], b.parts()[1])}};
  }
  bad_descriptor("add");
}

SemiringValue mul(const SemiringValue& a, const SemiringValue& b) {
  require_same_instance(a.descriptor(), b.descriptor(), "mul");
  const SemiringDescriptor& d = a.descriptor();
  switch (d.kind) {
    case SemiringKind::Prob:
    case SemiringKind::QuantPoss:
      return {d, a.rational() * b.rational()};
    case SemiringKind::QualPoss:
      return {d, std::min(a.level(), b.level())};
    case SemiringKind::Kappa: {
      const KappaValue& x = a.kappa();
      const KappaValue& y = b.kappa();
      if (x.infinite || y.infinite) return {d, KappaValue::inf()};
      return {d, KappaValue::of(x.rank + y.rank)};
    }
    case SemiringKind::LexProb: {
      std::vector<Rational> out(d.length);
      for (std::uint32_t i = 0; i < d.length; ++i)
        out[i] = a.coords()[i] * b.coords()[i];
      return {d, std::move(out)};
    }
    case SemiringKind::Product:
      return {d, std::vector<SemiringValue>{mul(a.parts()[0], b.parts()[0]),
                                            mul(a.parts()[1], b.parts()[1])}};
  }
  bad_descriptor("mul");
}

namespace {

Comparison from_three_way(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return Comparison::Less;
  if (o == std::strong_ordering::greater) return Comparison::Greater;
  return Comparison::Equivalent;
}

Comparison combine_componentwise(Comparison a, Comparison b) {
  if (a == Comparison::Equivalent) return b;
  if (b == Comparison::Equivalent) return a;
  if (a == b) return a;
  return Comparison::Incomparable;
}

}  // namespace

Comparison leq(const SemiringValue& a, const SemiringValue& b) {
  require_same_instance(a.descriptor(), b.descriptor(), "leq");
  const SemiringDescriptor& d = a.descriptor();
  switch (d.kind) {
    case SemiringKind::Prob:
    case SemiringKind::QuantPoss:
      return from_three_way(a.rational() <=> b.rational());
    case SemiringKind::QualPoss:
      return from_three_way(a.level() <=> b.level());
    case SemiringKind::Kappa: {
      // Smaller rank means more plausible; infinity is the least element.
      const KappaValue& x = a.kappa();
      const KappaValue& y = b.kappa();
      if (x.infinite && y.infinite) return Comparison::Equivalent;
      if (x.infinite) return Comparison::Less;
      if (y.infinite) return Comparison::Greater;
      return from_three_way(y.rank <=> x.rank);
    }
    case SemiringKind::LexProb: {
      for (std::uint32_t i = 0; i < d.length; ++i) {
        if (a.coords()[i] == b.coords()[i]) continue;
        return from_three_way(a.coords()[i] <=> b.coords()[i]);
      }
      return Comparison::Equivalent;
    }
    case SemiringKind::Product:
      return combine_componentwise(leq(a.parts()[0], b.parts()[0]),
                                   leq(a.parts()[1], b.parts()[1]));
  }
  bad_descriptor("leq");
}

std::optional<SemiringValue> solve_add(const SemiringValue& target,
                                       const SemiringValue& known) {
  require_same_instance(target.descriptor(), known.descriptor(), "solve_add");
  const SemiringDescriptor& d = target.descriptor();
  switch (d.kind) {
    case SemiringKind::Prob: {
      const Rational diff = target.rational() - known.rational();
      if (diff.is_negative()) return std::nullopt;
      return SemiringValue{d, diff};
    }
    case SemiringKind::QuantPoss: {
      // max(known, delta) == target
      if (known.rational() > target.rational()) return std::nullopt;
      if (known.rational() == target.rational()) return SemiringValue{d, kZero};
      return SemiringValue{d, target.rational()};
    }
    case SemiringKind::QualPoss: {
      if (known.level() > target.level()) return std::nullopt;
      if (known.level() == target.level())
        return SemiringValue{d, std::uint32_t{0}};
      return SemiringValue{d, target.level()};
    }
    case SemiringKind::Kappa: {
      // min(known, delta) == target; ranks compare reversed, so the
      // order-minimal solution at equality is infinity (the zero element).
      const KappaValue& t = target.kappa();
      const KappaValue& k = known.kappa();
      if (k.infinite) return SemiringValue{d, t};
      if (t.infinite) return std::nullopt;  // min(finite, _) is finite
      if (t.rank > k.rank) return std::nullopt;
      if (t.rank == k.rank) return SemiringValue{d, KappaValue::inf()};
      return SemiringValue{d, t};
    }
    case SemiringKind::LexProb: {
      std::vector<Rational> out(d.length);
      for (std::uint32_t i = 0; i < d.length; ++i) {
        out[i] = target.coords()[i] - known.coords()[i];
        if (out[i].is_negative()) return std::nullopt;
      }
      return SemiringValue{d, std::move(out)};
    }
    case SemiringKind::Product: {
      auto left = solve_add(target.parts()[0], known.parts()[0]);
      if (!left) return std::nullopt;
      auto right = solve_add(target.parts()[1], known.parts()[1]);
      if (!right) return std::nullopt;
      return SemiringValue{
          d, std::vector<SemiringValue>{std::move(*left), std::move(*right)}};
    }
  }
  bad_descriptor("solve_add");
}

std::pair<SemiringValue, SemiringValue> solve_scale_parts(
    const SemiringValue& lambda, const SemiringValue& mu) {
  require_same_instance(lambda.descriptor(), mu.descriptor(), "solve_scale");
  const SemiringDescriptor& d = lambda.descriptor();
  switch (d.kind) {
    case SemiringKind::Prob: {
      const Rational total = lambda.rational() + mu.rational();
      if (total.is_zero())
        return {SemiringValue{d, kOne}, SemiringValue{d, kZero}};
      return {SemiringValue{d, lambda.rational() / total},
              SemiringValue{d, mu.rational() / total}};
    }
    case SemiringKind::QuantPoss: {
      const Rational total = std::max(lambda.rational(), mu.rational());
      if (total.is_zero())
        return {SemiringValue{d, kOne}, SemiringValue{d, kZero}};
      return {SemiringValue{d, lambda.rational() / total},
              SemiringValue{d, mu.rational() / total}};
    }
    case SemiringKind::QualPoss: {
      const std::uint32_t total = std::max(lambda.level(), mu.level());
      const std::uint32_t top = d.levels - 1;
      if (total == 0)
        return {SemiringValue{d, top}, SemiringValue{d, std::uint32_t{0}}};
      return {SemiringValue{d, lambda.level() == total ? top : lambda.level()},
              SemiringValue{d, mu.level() == total ? top : mu.level()}};
    }
    case SemiringKind::Kappa: {
      const KappaValue& x = lambda.kappa();
      const KappaValue& y = mu.kappa();
      if (x.infinite && y.infinite)
        return {SemiringValue{d, KappaValue::of(0)},
                SemiringValue{d, KappaValue::inf()}};
      auto minus = [](const KappaValue& v, std::uint64_t s) {
        return v.infinite ? KappaValue::inf() : KappaValue::of(v.rank - s);
      };
      const std::uint64_t total =
          x.infinite ? y.rank : (y.infinite ? x.rank : std::min(x.rank, y.rank));
      return {SemiringValue{d, minus(x, total)}, SemiringValue{d, minus(y, total)}};
    }
    case SemiringKind::LexProb: {
      std::vector<Rational> p(d.length), q(d.length);
      for (std::uint32_t i = 0; i < d.length; ++i) {
        const Rational total = lambda.coords()[i] + mu.coords()[i];
        if (total.is_zero()) {
          p[i] = kOne;
          q[i] = kZero;
        } else {
          p[i] = lambda.coords()[i] / total;
          q[i] = mu.coords()[i] / total;
        }
      }
      return {SemiringValue{d, std::move(p)}, SemiringValue{d, std::move(q)}};
    }
    case SemiringKind::Product: {
      auto left = solve_scale_parts(lambda.parts()[0], mu.parts()[0]);
      auto right = solve_scale_parts(lambda.parts()[1], mu.parts()[1]);
      return {SemiringValue{d, std::vector<SemiringValue>{left.first,
                                                          right.first}},
              SemiringValue{d, std::vector<SemiringValue>{left.second,
                                                          right.second}}};
    }
  }
  bad_descriptor("solve_scale");
}

// ---------------------------------------------------------------------------
// Literals

namespace {

// Splits "a,b" at the top-level comma, respecting () and [] nesting.
std::pair<std::string_view, std::string_view> split_pair(std::string_view s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) return {s.substr(0, i), s.substr(i + 1)};
  }
  throw InputError("expected a ',' in literal: '" + std::string(s) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

}  // namespace

std::string to_literal(const SemiringValue& v) {
  switch (v.descriptor().kind) {
    case SemiringKind::Prob:
    case SemiringKind::QuantPoss:
      return v.rational().str();
    case SemiringKind::QualPoss:
      return std::to_string(v.level());
    case SemiringKind::Kappa:
      return v.kappa().str();
    case SemiringKind::LexProb: {
      std::string out = "[";
      for (std::size_t i = 0; i < v.coords().size(); ++i) {
        if (i) out += ",";
        out += v.coords()[i].str();
      }
      return out + "]";
    }
    case SemiringKind::Product:
      return "(" + to_literal(v.parts()[0]) + "," + to_literal(v.parts()[1]) +
             ")";
  }
  bad_descriptor("to_literal");
}

SemiringValue parse_literal(const SemiringDescriptor& d, std::string_view s) {
  const std::string_view body = trim(s);
  auto fail = [&]() -> SemiringValue {
    throw InputError("bad " + d.str() + " literal: '" + std::string(s) + "'");
  };
  try {
    switch (d.kind) {
      case SemiringKind::Prob:
      case SemiringKind::QuantPoss:
        return {d, Rational::parse(body)};
      case SemiringKind::QualPoss: {
        const Rational r = Rational::parse(body);
        if (r.den() != 1 || r.is_negative()) return fail();
        return {d, static_cast<std::uint32_t>(r.num())};
      }
      case SemiringKind::Kappa: {
        if (body == "inf") return {d, KappaValue::inf()};
        const Rational r = Rational::parse(body);
        if (r.den() != 1 || r.is_negative()) return fail();
        return {d, KappaValue::of(static_cast<std::uint64_t>(r.num()))};
      }
      case SemiringKind::LexProb: {
        if (body.size() < 2 || body.front() != '[' || body.back() != ']')
          return fail();
        const auto items = split_list(body.substr(1, body.size() - 2));
        if (items.size() != d.length) return fail();
        std::vector<Rational> coords;
        coords.reserve(items.size());
        for (const auto item : items) coords.push_back(Rational::parse(item));
        return {d, std::move(coords)};
      }
      case SemiringKind::Product: {
        if (body.size() < 2 || body.front() != '(' || body.back() != ')')
          return fail();
        const auto [left, right] = split_pair(body.substr(1, body.size() - 2));
        return {d, std::vector<SemiringValue>{
                       parse_literal(d.components[0], left),
                       parse_literal(d.components[1], right)}};
      }
    }
  } catch (const InvariantViolation& e) {
    throw InputError("literal outside carrier for " + d.str() + ": '" +
                     std::string(s) + "' (" + e.what() + ")");
  }
  return fail();
}

}  // namespace aeu
