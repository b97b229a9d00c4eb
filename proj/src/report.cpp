#include "horn/report.hpp"

#include "horn/error.hpp"
#include "horn/identities.hpp"
#include "horn/oracle.hpp"

namespace horn {

namespace {

using Clock = std::chrono::steady_clock;

CountReport dpll(unsigned n, Variant variant, const CountOptions& options) {
  CountReport r;
  const CountResult result =
      count_models_with_stats(encode(n, variant, options.encode_cap).formula, options.counter);
  r.count = result.count;
  r.stats = result.stats;
  return r;
}

CountReport identity_derived(unsigned n, Variant variant, const CountOptions& options) {
  CountReport r;
  const auto base = [&](unsigned k, Variant v) {
    CountReport sub = dpll(k, v, options);
    r.stats += sub.stats;
    return sub.count;
  };
  switch (variant) {
    case Variant::H0:
      r.count = doubling(base(n, Variant::H));
      break;
    case Variant::H01:
      r.count = doubling(base(n, Variant::H1));
      break;
    case Variant::H1: {
      std::vector<Count> h;
      for (unsigned k = 0; k <= n; ++k) h.push_back(base(k, Variant::H));
      r.count = binomial_sum(h);
      break;
    }
    case Variant::H: {
      const Count h0 = base(n, Variant::H0);
      if (h0 % 2 != 0) throw std::logic_error("H0 count is odd");
      r.count = h0 / 2;
      break;
    }
  }
  return r;
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Dpll: return "dpll";
    case Method::BruteForce: return "bruteforce";
    case Method::IdentityDerived: return "identity-derived";
    case Method::External: return "external";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view text) {
  if (text == "dpll") return Method::Dpll;
  if (text == "bruteforce") return Method::BruteForce;
  if (text == "identity" || text == "identity-derived") return Method::IdentityDerived;
  if (text == "external") return Method::External;
  return std::nullopt;
}

CountReport count_variant(unsigned n, Variant variant, Method method,
                          const CountOptions& options) {
  const auto start = Clock::now();
  CountReport r;
  switch (method) {
    case Method::Dpll:
      r = dpll(n, variant, options);
      break;
    case Method::BruteForce:
      r.count = brute_count(n, variant, options.counter.threads);
      break;
    case Method::IdentityDerived:
      r = identity_derived(n, variant, options);
      break;
    case Method::External:
      if (!options.external) throw ExternalError("no external counter configured", "");
      r.count = run_external_counter(encode(n, variant, options.encode_cap).formula,
                                     *options.external);
      break;
  }
  r.variant = variant;
  r.n = n;
  r.method = method;
  r.elapsed = Clock::now() - start;
  return r;
}

std::optional<Count> known_count(Variant variant, unsigned n) {
  static const char* const h[] = {"1", "1", "4", "45", "2271", "1373701", "75965474236"};
  static const char* const h1[] = {"1", "2", "7", "61", "2480", "1385552", "75973751474"};
  if (n > kKnownCountMaxN) return std::nullopt;
  if (variant == Variant::H) return Count(h[n]);
  if (variant == Variant::H1) return Count(h1[n]);
  return std::nullopt;
}

}  // namespace horn
