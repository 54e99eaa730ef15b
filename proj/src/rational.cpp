#include "aeu/rational.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace aeu {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw OverflowError("rational overflows 64-bit storage");
  return static_cast<std::int64_t>(v);
}

}  // namespace

void Rational::assign(i128 n, i128 d) {
  if (d == 0) throw Error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    num_ = 0;
    den_ = 1;
    return;
  }
  const i128 g = gcd128(n, d);
  num_ = narrow(n / g);
  den_ = narrow(d / g);
}

Rational Rational::parse(std::string_view s) {
  auto fail = [&] { throw InputError("bad rational literal: '" + std::string(s) + "'"); };
  std::size_t begin = 0, end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  if (begin == end) fail();
  const std::string_view body = s.substr(begin, end - begin);

  auto parse_int = [&](std::string_view t) {
    std::int64_t v = 0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc{} || res.ptr != t.data() + t.size()) fail();
    return v;
  };

  const auto slash = body.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(body));
  const std::int64_t n = parse_int(body.substr(0, slash));
  const std::int64_t d = parse_int(body.substr(slash + 1));
  if (d == 0) fail();
  return Rational(n, d);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace aeu
