#pragma once

// Test-only oracles, deliberately independent of the library's arithmetic:
// a separate fraction type for exact expectation checks, a max-min utility
// oracle on raw level indices, and a min-plus oracle on raw ranks.

#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

namespace oracle {

struct Frac {
  long long n = 0;
  long long d = 1;

  static Frac make(long long n, long long d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const long long g = std::gcd(n < 0 ? -n : n, d);
    return g == 0 ? Frac{0, 1} : Frac{n / g, d / g};
  }
  friend Frac operator+(Frac a, Frac b) {
    return make(a.n * b.d + b.n * a.d, a.d * b.d);
  }
  friend Frac operator-(Frac a, Frac b) {
    return make(a.n * b.d - b.n * a.d, a.d * b.d);
  }
  friend Frac operator*(Frac a, Frac b) { return make(a.n * b.n, a.d * b.d); }
  friend Frac operator/(Frac a, Frac b) { return make(a.n * b.d, a.d * b.n); }
  friend bool operator==(Frac a, Frac b) { return a.n == b.n && a.d == b.d; }
  friend bool operator<(Frac a, Frac b) { return a.n * b.d < b.n * a.d; }
};

inline Frac frac(long long n, long long d = 1) { return Frac::make(n, d); }

/// Classical expected value of the first utility component.
inline Frac expected_value(const std::vector<std::pair<Frac, Frac>>& terms) {
  Frac total{0, 1};
  for (const auto& [mass, value] : terms) total = total + mass * value;
  return total;
}

/// Binary possibilistic utility on a finite level scale: componentwise
/// max over min(mass, utility component).
struct MaxMinPair {
  unsigned best = 0;
  unsigned worst = 0;
};

inline MaxMinPair maxmin_utility(
    const std::vector<std::pair<unsigned, MaxMinPair>>& terms) {
  MaxMinPair out{0, 0};
  for (const auto& [mass, u] : terms) {
    out.best = std::max(out.best, std::min(mass, u.best));
    out.worst = std::max(out.worst, std::min(mass, u.worst));
  }
  return out;
}

/// Disbelief-rank utility: componentwise min over mass + utility component,
/// with the usual saturating infinity.
constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t rank_add(std::uint64_t a, std::uint64_t b) {
  return (a == kInf || b == kInf) ? kInf : a + b;
}

struct RankPair {
  std::uint64_t best = kInf;
  std::uint64_t worst = kInf;
};

inline RankPair minplus_utility(
    const std::vector<std::pair<std::uint64_t, RankPair>>& terms) {
  RankPair out;
  for (const auto& [mass, u] : terms) {
    out.best = std::min(out.best, rank_add(mass, u.best));
    out.worst = std::min(out.worst, rank_add(mass, u.worst));
  }
  return out;
}

}  // namespace oracle
