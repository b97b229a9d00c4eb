#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "horn/count.hpp"
#include "horn/encoder.hpp"
#include "horn/error.hpp"

namespace horn {

/// How the next decision variable is chosen. Every rule yields the same count.
enum class Branching {
  MostFrequent,  ///< most open-clause occurrences, ties to the lowest id
  LowestId,      ///< lowest unassigned id that occurs in an open clause
  HighestId,     ///< highest unassigned id that occurs in an open clause
};

struct CounterOptions {
  Branching branching = Branching::MostFrequent;
  /// Split the residual formula into variable-disjoint components and
  /// multiply their counts.
  bool components = false;
  /// Memoize component counts (only with `components`).
  bool cache = true;
  /// Approximate cache footprint; the cache is flushed when it is exceeded.
  std::size_t cache_bytes = std::size_t{1} << 30;
  /// 1 = single-threaded. Larger values split the root into cubes that are
  /// counted concurrently and summed.
  unsigned threads = 1;
  /// Wall-clock budget; nullopt = unlimited.
  std::optional<std::chrono::duration<double>> budget = std::chrono::minutes(10);
};

struct CounterStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t components = 0;
  std::uint64_t cache_hits = 0;

  CounterStats& operator+=(const CounterStats& o) {
    decisions += o.decisions;
    propagations += o.propagations;
    conflicts += o.conflicts;
    components += o.components;
    cache_hits += o.cache_hits;
    return *this;
  }
};

/// Budget exhausted. Carries the statistics gathered so far, never a count.
class BudgetExceeded : public ResourceError {
 public:
  BudgetExceeded(const std::string& what, CounterStats stats)
      : ResourceError(what), stats_(stats) {}
  const CounterStats& stats() const noexcept { return stats_; }

 private:
  CounterStats stats_;
};

struct CountResult {
  Count count;
  CounterStats stats;
};

/// Exact number of satisfying assignments over all var_count variables
/// (variables in no clause contribute a factor 2 each). DPLL with unit
/// propagation, summing both branches; no pure-literal rule.
/// Throws InputError for literals outside 1..var_count, BudgetExceeded when
/// the time budget runs out.
CountResult count_models_with_stats(const Cnf& formula, const CounterOptions& options = {});

inline Count count_models(const Cnf& formula, const CounterOptions& options = {}) {
  return count_models_with_stats(formula, options).count;
}

}  // namespace horn
