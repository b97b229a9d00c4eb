#pragma once

// Independent reference implementations used only by tests. Nothing here
// calls into the library code it is compared against.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "horn/encoder.hpp"
#include "horn/theory.hpp"

namespace horn::test {

/// Assignment as a vector<bool>, a[i] = value of x(i+1).
using Assignment = std::vector<bool>;

inline Assignment assignment_of(std::uint64_t value, unsigned n) {
  // value uses x1 as the most significant bit
  Assignment a(n);
  for (unsigned i = 0; i < n; ++i) a[i] = ((value >> (n - 1 - i)) & 1U) != 0;
  return a;
}

inline bool ref_eval(const Monomial& m, const Assignment& a) {
  if (m.is_zero()) return false;
  for (unsigned i = 0; i < 64; ++i) {
    if (((m.vars() >> i) & 1U) != 0 && !a.at(i)) return false;
  }
  return true;
}

inline bool ref_holds(const BinomialEquation& eq, const Assignment& a) {
  return ref_eval(eq.lhs(), a) == ref_eval(eq.rhs(), a);
}

inline bool ref_holds(const HornClause& c, const Assignment& a) {
  for (unsigned i = 0; i < 64; ++i) {
    if (((c.body() >> i) & 1U) != 0 && !a.at(i)) return true;
  }
  return c.head() && a.at(*c.head());
}

/// Model set as ascending x1-most-significant values.
template <typename Set>
std::vector<std::uint64_t> ref_models(const Set& theory, unsigned n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    const Assignment a = assignment_of(v, n);
    bool ok = true;
    for (const auto& item : theory) ok = ok && ref_holds(item, a);
    if (ok) out.push_back(v);
  }
  return out;
}

inline std::vector<std::uint64_t> values_of(const VectorFamily& f) {
  std::vector<std::uint64_t> out;
  for (const auto& v : f) out.push_back(v.value());
  return out;
}

/// Number of satisfying assignments by enumerating all of them.
inline std::uint64_t ref_count(const Cnf& cnf) {
  std::uint64_t total = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << cnf.var_count); ++a) {
    bool ok = true;
    for (const auto& clause : cnf.clauses) {
      bool sat = false;
      for (Literal lit : clause) {
        const bool value = ((a >> (std::abs(lit) - 1)) & 1U) != 0;
        sat = sat || (lit > 0 ? value : !value);
      }
      if (!sat) {
        ok = false;
        break;
      }
    }
    total += ok ? 1 : 0;
  }
  return total;
}

inline Cnf random_cnf(std::mt19937_64& rng, unsigned max_vars = 12, unsigned max_clauses = 30) {
  Cnf cnf;
  cnf.var_count = std::uniform_int_distribution<unsigned>(1, max_vars)(rng);
  const unsigned m = std::uniform_int_distribution<unsigned>(0, max_clauses)(rng);
  std::uniform_int_distribution<int> var(1, static_cast<int>(cnf.var_count));
  std::uniform_int_distribution<int> len(1, 4);
  std::bernoulli_distribution sign(0.5);
  for (unsigned c = 0; c < m; ++c) {
    Clause clause;
    for (int k = len(rng); k > 0; --k) clause.push_back(sign(rng) ? var(rng) : -var(rng));
    cnf.clauses.push_back(clause);
  }
  return cnf;
}

inline Monomial random_monomial(std::mt19937_64& rng, unsigned n) {
  std::uniform_int_distribution<int> kind(0, 7);
  if (kind(rng) == 0) return Monomial::zero();
  std::uniform_int_distribution<std::uint64_t> vars(0, (std::uint64_t{1} << n) - 1);
  return Monomial::product(vars(rng));
}

inline EquationSet random_equations(std::mt19937_64& rng, unsigned n) {
  EquationSet out;
  const int count = std::uniform_int_distribution<int>(0, 5)(rng);
  for (int i = 0; i < count; ++i) {
    if (auto eq = BinomialEquation::make(random_monomial(rng, n), random_monomial(rng, n))) {
      out.insert(*eq);
    }
  }
  return out;
}

inline ClauseSet random_clauses(std::mt19937_64& rng, unsigned n) {
  ClauseSet out;
  const int count = std::uniform_int_distribution<int>(0, 5)(rng);
  std::uniform_int_distribution<std::uint64_t> body(0, (std::uint64_t{1} << n) - 1);
  std::uniform_int_distribution<unsigned> head(0, n);  // n means "false"
  for (int i = 0; i < count; ++i) {
    const unsigned h = head(rng);
    if (h == n) {
      out.insert(HornClause::denies(body(rng)));
    } else if (auto c = HornClause::implies(body(rng), h)) {
      out.insert(*c);
    }
  }
  return out;
}

}  // namespace horn::test
