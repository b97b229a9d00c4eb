#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "horn/families.hpp"
#include "horn/variant.hpp"

namespace horn {

/// DIMACS-style literal: +v / -v for variable v >= 1.
using Literal = int;
using Clause = std::vector<Literal>;

/// A plain CNF formula over variables 1..var_count.
struct Cnf {
  std::size_t var_count = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const Cnf&, const Cnf&) = default;
};

/// Meet-closure instance over predicates P_mu, one per mu in {0,1}^n.
/// The variant's unit clauses come first, then the ternary closure clauses
/// (-P_r -P_s P_meet) in ascending (r, s) order.
struct CnfInstance {
  unsigned n = 0;
  Variant variant = Variant::H01;
  Cnf formula;
  std::size_t unit_count = 0;

  std::size_t predicate_count() const noexcept { return formula.var_count; }
  std::span<const Clause> units() const& noexcept {
    return std::span(formula.clauses).first(unit_count);
  }
  std::span<const Clause> ternary() const& noexcept {
    return std::span(formula.clauses).subspan(unit_count);
  }
  std::span<const Clause> units() const&& = delete;
  std::span<const Clause> ternary() const&& = delete;
};

inline constexpr unsigned kDefaultEncodeCap = 6;
/// Hard ceiling regardless of the configured cap (4^n clauses in memory).
inline constexpr unsigned kMaxEncodeWidth = 12;

/// Throws ResourceError when n exceeds `cap` (or kMaxEncodeWidth).
CnfInstance encode(unsigned n, Variant variant, unsigned cap = kDefaultEncodeCap);

/// 1 + numeric value of mu (x1 most significant).
int predicate_id(const BitVector& mu);
/// Inverse of predicate_id; throws InputError for id outside [1, 2^n].
BitVector vector_of(int id, unsigned n);

/// The family {mu : P_mu true} for an assignment indexed by predicate id - 1.
VectorFamily family_of_model(std::span<const bool> model, unsigned n);

/// DIMACS text: comment lines, `p cnf V C`, one clause per line ending in 0.
std::string emit_dimacs(const Cnf& formula, std::span<const std::string> comments = {});
/// `c variant=<v> n=<n>` followed by the instance.
std::string emit_dimacs(const CnfInstance& instance);

/// Reads DIMACS CNF. Clauses may span lines; `c` lines and a trailing `%`
/// section are ignored. Throws InputError on malformed input or literals
/// beyond the declared variable count.
Cnf parse_dimacs(std::string_view text);

}  // namespace horn
