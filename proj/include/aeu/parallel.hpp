#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#ifdef AEU_HAVE_OPENMP
#include <omp.h>
#endif

namespace aeu {

/// Execution mode for enumeration scans. Serial is the reference
/// implementation: both modes must produce identical reports, which the test
/// suite checks and the benchmark target times against each other.
enum class ExecMode { Serial, Parallel };

/// Number of workers parallel scans may use: the OpenMP default, optionally
/// capped by the AEU_THREADS environment variable. Has no semantic effect.
int worker_count();

struct ScanOutcome {
  std::uint64_t domain_size = 0;
  std::optional<std::uint64_t> first_failure;  // smallest failing index
  bool passed() const { return !first_failure.has_value(); }
};

/// Scans indices [0, n) against a pure predicate and reports the first
/// failing index in enumeration order. The parallel variant partitions the
/// index space; the merge keeps the minimum failing index, so both modes
/// agree bit for bit. Exceptions inside the predicate count as failures and
/// are re-raised by the caller's rematerialization of the failing case.
template <class Pred>
ScanOutcome scan_first_failure(std::uint64_t n, ExecMode mode, Pred&& pred) {
  ScanOutcome out;
  out.domain_size = n;
  if (n == 0) return out;

  auto safe = [&pred](std::uint64_t i) -> bool {
    try {
      return pred(i);
    } catch (...) {
      return false;
    }
  };

#ifdef AEU_HAVE_OPENMP
  if (mode == ExecMode::Parallel && worker_count() > 1) {
    std::atomic<std::uint64_t> first{n};
    const std::int64_t count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 64) num_threads(worker_count())
    for (std::int64_t i = 0; i < count; ++i) {
      const std::uint64_t idx = static_cast<std::uint64_t>(i);
      if (idx >= first.load(std::memory_order_relaxed)) continue;
      if (safe(idx)) continue;
      std::uint64_t cur = first.load(std::memory_order_relaxed);
      while (idx < cur && !first.compare_exchange_weak(cur, idx)) {
      }
    }
    if (first.load() < n) out.first_failure = first.load();
    return out;
  }
#else
  (void)mode;
#endif

  for (std::uint64_t i = 0; i < n; ++i) {
    if (!safe(i)) {
      out.first_failure = i;
      break;
    }
  }
  return out;
}

/// Evaluates fn(i) for every index and returns the results in order. Used to
/// cache pure per-element computations (lottery evaluations) before the
/// quadratic checks; results are identical in both modes by construction.
template <class T, class Fn>
std::vector<T> indexed_map(std::uint64_t n, ExecMode mode, Fn&& fn) {
  std::vector<std::optional<T>> slots(static_cast<std::size_t>(n));
#ifdef AEU_HAVE_OPENMP
  if (mode == ExecMode::Parallel && worker_count() > 1 && n > 1) {
    std::atomic<bool> failed{false};
    const std::int64_t count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 64) num_threads(worker_count())
    for (std::int64_t i = 0; i < count; ++i) {
      if (failed.load(std::memory_order_relaxed)) continue;
      try {
        slots[static_cast<std::size_t>(i)].emplace(
            fn(static_cast<std::uint64_t>(i)));
      } catch (...) {
        failed.store(true, std::memory_order_relaxed);
      }
    }
    if (failed.load()) {
      // Rerun serially so the original exception surfaces.
      for (std::uint64_t i = 0; i < n; ++i)
        if (!slots[static_cast<std::size_t>(i)])
          slots[static_cast<std::size_t>(i)].emplace(fn(i));
    }
  }
#endif
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::uint64_t i = 0; i < n; ++i) {
    auto& slot = slots[static_cast<std::size_t>(i)];
    if (!slot) slot.emplace(fn(i));
    out.push_back(std::move(*slot));
  }
  return out;
}

}  // namespace aeu
