#pragma once

#include <chrono>
#include <optional>
#include <string_view>

#include "horn/count.hpp"
#include "horn/counter.hpp"
#include "horn/encoder.hpp"
#include "horn/external.hpp"
#include "horn/variant.hpp"

namespace horn {

enum class Method { Dpll, BruteForce, IdentityDerived, External };

/// `dpll`, `bruteforce`, `identity-derived`, `external`.
std::string_view method_name(Method m);
/// Accepts the names above plus `identity`.
std::optional<Method> parse_method(std::string_view text);

struct CountReport {
  Variant variant = Variant::H;
  unsigned n = 0;
  Method method = Method::Dpll;
  Count count;
  std::chrono::duration<double> elapsed{};
  CounterStats stats;
};

struct CountOptions {
  CounterOptions counter;
  unsigned encode_cap = kDefaultEncodeCap;
  /// Required for Method::External.
  std::optional<ExternalCounterConfig> external;
};

/// Counts the variant's families at n by the given method:
///  - dpll: encode, then count_models
///  - bruteforce: exhaustive oracle (n <= 4)
///  - identity-derived: from other variants' DPLL counts, H0 = 2H,
///    H01 = 2H1, H1 = sum_k C(n,k) H(k), H = H0 / 2
///  - external: DIMACS through the configured external counter
CountReport count_variant(unsigned n, Variant variant, Method method,
                          const CountOptions& options = {});

/// Published labeled counts of H and H1 for n = 0..6; nullopt elsewhere.
std::optional<Count> known_count(Variant variant, unsigned n);
inline constexpr unsigned kKnownCountMaxN = 6;

}  // namespace horn
