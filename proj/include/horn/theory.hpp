#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "horn/families.hpp"

namespace horn {

/// Set of 0-based variable indices, bit i = x(i+1).
using VarSet = std::uint64_t;

inline constexpr unsigned kMaxTheoryVariables = 64;
/// Default ceiling on n for model-set enumeration.
inline constexpr unsigned kDefaultModelCap = 16;

VarSet var_set(std::initializer_list<unsigned> indices);

/// A conjunction of variables, or the constant 0. The empty product is the
/// constant 1.
class Monomial {
 public:
  enum class Kind { Zero, Product };

  static Monomial zero() { return Monomial(Kind::Zero, 0); }
  static Monomial one() { return Monomial(Kind::Product, 0); }
  static Monomial product(VarSet vars) { return Monomial(Kind::Product, vars); }
  static Monomial product(std::initializer_list<unsigned> indices) {
    return product(var_set(indices));
  }

  Kind kind() const noexcept { return kind_; }
  bool is_zero() const noexcept { return kind_ == Kind::Zero; }
  bool is_one() const noexcept { return kind_ == Kind::Product && vars_ == 0; }
  /// Meaningful only for products.
  VarSet vars() const noexcept { return vars_; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Zero < products; products by cardinality, then lexicographically by
  /// their ascending index lists.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  Monomial(Kind kind, VarSet vars) : kind_(kind), vars_(kind == Kind::Zero ? 0 : vars) {}

  Kind kind_;
  VarSet vars_;
};

/// m1 = m2, stored with lhs < rhs.
class BinomialEquation {
 public:
  /// Orients the sides; returns nullopt for a reflexive equation.
  static std::optional<BinomialEquation> make(const Monomial& a, const Monomial& b);

  const Monomial& lhs() const noexcept { return lhs_; }
  const Monomial& rhs() const noexcept { return rhs_; }

  friend bool operator==(const BinomialEquation&, const BinomialEquation&) = default;
  friend auto operator<=>(const BinomialEquation&, const BinomialEquation&) = default;

 private:
  BinomialEquation(Monomial lhs, Monomial rhs) : lhs_(lhs), rhs_(rhs) {}

  Monomial lhs_;
  Monomial rhs_;
};

/// body => head, where head is a variable or false.
class HornClause {
 public:
  /// Returns nullopt when the head occurs in the body (a tautology).
  static std::optional<HornClause> implies(VarSet body, unsigned head);
  static HornClause denies(VarSet body) { return HornClause(body, std::nullopt); }

  VarSet body() const noexcept { return body_; }
  /// nullopt means the head is false.
  std::optional<unsigned> head() const noexcept { return head_; }

  friend bool operator==(const HornClause&, const HornClause&) = default;
  /// Ordered by body (as a monomial), then head with false first.
  friend std::strong_ordering operator<=>(const HornClause& a, const HornClause& b);

 private:
  HornClause(VarSet body, std::optional<unsigned> head) : body_(body), head_(head) {}

  VarSet body_;
  std::optional<unsigned> head_;
};

using EquationSet = std::set<BinomialEquation>;
using ClauseSet = std::set<HornClause>;

bool eval_monomial(const Monomial& m, const BitVector& v);
bool satisfies(const BitVector& v, const BinomialEquation& eq);
bool satisfies(const BitVector& v, const HornClause& clause);

/// One past the largest variable index mentioned (0 if none).
unsigned variables_used(const EquationSet& eqs);
unsigned variables_used(const ClauseSet& clauses);

/// m1 = m2 becomes c(m1) => x for x in m2 and c(m2) => y for y in m1, where
/// the constant 1 contributes no heads, 0 contributes the head false, and
/// clauses with body c(0) are vacuous and dropped.
ClauseSet equations_to_horn(const EquationSet& eqs);

/// B => y becomes B = B*y; B => false becomes B = 0.
EquationSet horn_to_equations(const ClauseSet& clauses);

/// The model set {v in {0,1}^n : v satisfies everything}. Throws ResourceError
/// when n > cap, InputError when a variable index is >= n.
VectorFamily models(const EquationSet& eqs, unsigned n, unsigned cap = kDefaultModelCap);
VectorFamily models(const ClauseSet& clauses, unsigned n, unsigned cap = kDefaultModelCap);

/// Canonical representative of the theory: its model set. Two presentations
/// are equivalent iff their canonical forms are equal.
VectorFamily canonical_form(const EquationSet& eqs, unsigned n, unsigned cap = kDefaultModelCap);
VectorFamily canonical_form(const ClauseSet& clauses, unsigned n,
                            unsigned cap = kDefaultModelCap);

// Text formats. Equations: `x1 x2 = x1`, `x1*x2 = 0`, `1 = x3`.
// Clauses: `x1 & x2 -> x3`, `-> x3`, `x1 -> false`. '#' starts a comment line.
// Syntax errors throw InputError("line L, column C: ...").

EquationSet parse_equations(std::string_view text);
std::string format_monomial(const Monomial& m);
std::string format_equation(const BinomialEquation& eq);
std::string format_equations(const EquationSet& eqs);

ClauseSet parse_clauses(std::string_view text);
std::string format_clause(const HornClause& clause);
std::string format_clauses(const ClauseSet& clauses);

}  // namespace horn
