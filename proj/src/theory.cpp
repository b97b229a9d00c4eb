#include "horn/theory.hpp"

#include <bit>
#include <cctype>
#include <sstream>
#include <vector>

#include "horn/error.hpp"

namespace horn {

namespace {

std::vector<unsigned> indices_of(VarSet vars) {
  std::vector<unsigned> out;
  while (vars != 0) {
    out.push_back(static_cast<unsigned>(std::countr_zero(vars)));
    vars &= vars - 1;
  }
  return out;
}

std::strong_ordering compare_var_sets(VarSet a, VarSet b) {
  if (auto c = std::popcount(a) <=> std::popcount(b); c != 0) return c;
  // Equal cardinality: the first differing position in the ascending index
  // lists is decided by the lowest index in the symmetric difference.
  const VarSet diff = a ^ b;
  if (diff == 0) return std::strong_ordering::equal;
  const VarSet lowest = diff & (~diff + 1);
  return (a & lowest) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

unsigned width_needed(VarSet vars) {
  return vars == 0 ? 0 : 64 - static_cast<unsigned>(std::countl_zero(vars));
}

/// Values true in v, as a VarSet.
VarSet true_vars(const BitVector& v) {
  VarSet out = 0;
  for (unsigned i = 0; i < v.width(); ++i) {
    if (v.test(i)) out |= VarSet{1} << i;
  }
  return out;
}

void check_width(VarSet vars, const BitVector& v) {
  if (width_needed(vars) > v.width()) {
    throw InputError("variable x" + std::to_string(width_needed(vars)) +
                     " out of range for vectors of width " + std::to_string(v.width()));
  }
}

template <typename Set>
VectorFamily enumerate_models(const Set& items, unsigned n, unsigned cap) {
  if (n > cap) {
    throw ResourceError("model enumeration over " + std::to_string(n) +
                        " variables exceeds cap " + std::to_string(cap));
  }
  if (variables_used(items) > n) {
    throw InputError("theory mentions x" + std::to_string(variables_used(items)) +
                     " but n = " + std::to_string(n));
  }
  std::vector<BitVector> members;
  const std::uint64_t points = std::uint64_t{1} << n;
  for (std::uint64_t value = 0; value < points; ++value) {
    const BitVector v(n, value);
    bool ok = true;
    for (const auto& item : items) {
      if (!satisfies(v, item)) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(v);
  }
  return {n, std::move(members)};
}

// Line-oriented scanner shared by both text formats.
class Cursor {
 public:
  Cursor(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  void skip_space() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= line_.size();
  }
  char peek() {
    skip_space();
    return pos_ < line_.size() ? line_[pos_] : '\0';
  }
  bool consume(std::string_view token) {
    skip_space();
    if (line_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  /// Consumes an identifier-like word [A-Za-z0-9_]+.
  std::string_view word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < line_.size() &&
           (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_')) {
      ++pos_;
    }
    return line_.substr(start, pos_ - start);
  }
  std::size_t column() const { return pos_ + 1; }

  [[noreturn]] void fail(const std::string& message, std::size_t column) const {
    throw InputError("line " + std::to_string(line_no_) + ", column " + std::to_string(column) +
                     ": " + message);
  }
  [[noreturn]] void fail(const std::string& message) {
    skip_space();
    fail(message, column());
  }

  /// Parses `x<digits>` into a 0-based index.
  unsigned variable() {
    skip_space();
    const std::size_t col = column();
    const std::string_view w = word();
    if (w.size() < 2 || w[0] != 'x') fail("expected a variable x<digits>", col);
    unsigned long index = 0;
    for (char c : w.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected a variable x<digits>", col);
      index = index * 10 + static_cast<unsigned long>(c - '0');
      if (index > kMaxTheoryVariables) break;
    }
    if (index == 0 || index > kMaxTheoryVariables) {
      fail("variable index must be in 1.." + std::to_string(kMaxTheoryVariables), col);
    }
    return static_cast<unsigned>(index - 1);
  }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

Monomial parse_side(Cursor& cur) {
  const char c = cur.peek();
  if (c == '0' || c == '1') {
    const std::size_t col = cur.column();
    const std::string_view w = cur.word();
    if (w == "0") return Monomial::zero();
    if (w == "1") return Monomial::one();
    cur.fail("expected 0, 1 or a product of variables", col);
  }
  if (c != 'x') cur.fail("expected 0, 1 or a product of variables");
  VarSet vars = VarSet{1} << cur.variable();
  while (true) {
    if (cur.consume("*")) {
      vars |= VarSet{1} << cur.variable();
    } else if (cur.peek() == 'x') {
      vars |= VarSet{1} << cur.variable();
    } else {
      break;
    }
  }
  return Monomial::product(vars);
}

template <typename F>
void for_each_content_line(std::string_view text, F&& f) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    Cursor cur(line, line_no);
    f(cur);
  }
}

}  // namespace

VarSet var_set(std::initializer_list<unsigned> indices) {
  VarSet out = 0;
  for (unsigned i : indices) {
    if (i >= kMaxTheoryVariables) throw InputError("variable index out of range");
    out |= VarSet{1} << i;
  }
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.kind_ != b.kind_) return a.kind_ == Monomial::Kind::Zero ? std::strong_ordering::less
                                                                 : std::strong_ordering::greater;
  return compare_var_sets(a.vars_, b.vars_);
}

std::optional<BinomialEquation> BinomialEquation::make(const Monomial& a, const Monomial& b) {
  const auto order = a <=> b;
  if (order == 0) return std::nullopt;
  return order < 0 ? BinomialEquation(a, b) : BinomialEquation(b, a);
}

std::optional<HornClause> HornClause::implies(VarSet body, unsigned head) {
  if (head >= kMaxTheoryVariables) throw InputError("variable index out of range");
  if ((body >> head) & 1U) return std::nullopt;
  return HornClause(body, head);
}

std::strong_ordering operator<=>(const HornClause& a, const HornClause& b) {
  if (auto c = compare_var_sets(a.body_, b.body_); c != 0) return c;
  if (a.head_ == b.head_) return std::strong_ordering::equal;
  if (!a.head_) return std::strong_ordering::less;
  if (!b.head_) return std::strong_ordering::greater;
  return *a.head_ <=> *b.head_;
}

bool eval_monomial(const Monomial& m, const BitVector& v) {
  if (m.is_zero()) return false;
  check_width(m.vars(), v);
  return (m.vars() & ~true_vars(v)) == 0;
}

bool satisfies(const BitVector& v, const BinomialEquation& eq) {
  return eval_monomial(eq.lhs(), v) == eval_monomial(eq.rhs(), v);
}

bool satisfies(const BitVector& v, const HornClause& clause) {
  const VarSet head = clause.head() ? VarSet{1} << *clause.head() : 0;
  check_width(clause.body() | head, v);
  const VarSet on = true_vars(v);
  if ((clause.body() & ~on) != 0) return true;
  return (head & on) != 0;
}

unsigned variables_used(const EquationSet& eqs) {
  unsigned n = 0;
  for (const auto& eq : eqs) {
    n = std::max({n, width_needed(eq.lhs().vars()), width_needed(eq.rhs().vars())});
  }
  return n;
}

unsigned variables_used(const ClauseSet& clauses) {
  unsigned n = 0;
  for (const auto& c : clauses) {
    n = std::max(n, width_needed(c.body()));
    if (c.head()) n = std::max(n, *c.head() + 1);
  }
  return n;
}

ClauseSet equations_to_horn(const EquationSet& eqs) {
  ClauseSet out;
  // c(body) => each element of `heads`, where body is never the constant 0
  // here (those clauses are vacuous).
  const auto emit = [&out](const Monomial& body, const Monomial& heads) {
    if (body.is_zero()) return;
    if (heads.is_zero()) {
      out.insert(HornClause::denies(body.vars()));
      return;
    }
    for (unsigned x : indices_of(heads.vars())) {
      if (auto clause = HornClause::implies(body.vars(), x)) out.insert(*clause);
    }
  };
  for (const auto& eq : eqs) {
    emit(eq.lhs(), eq.rhs());
    emit(eq.rhs(), eq.lhs());
  }
  return out;
}

EquationSet horn_to_equations(const ClauseSet& clauses) {
  EquationSet out;
  for (const auto& c : clauses) {
    const Monomial body = Monomial::product(c.body());
    const Monomial other =
        c.head() ? Monomial::product(c.body() | (VarSet{1} << *c.head())) : Monomial::zero();
    if (auto eq = BinomialEquation::make(body, other)) out.insert(*eq);
  }
  return out;
}

VectorFamily models(const EquationSet& eqs, unsigned n, unsigned cap) {
  return enumerate_models(eqs, n, cap);
}

VectorFamily models(const ClauseSet& clauses, unsigned n, unsigned cap) {
  return enumerate_models(clauses, n, cap);
}

VectorFamily canonical_form(const EquationSet& eqs, unsigned n, unsigned cap) {
  return models(eqs, n, cap);
}

VectorFamily canonical_form(const ClauseSet& clauses, unsigned n, unsigned cap) {
  return models(clauses, n, cap);
}

EquationSet parse_equations(std::string_view text) {
  EquationSet out;
  for_each_content_line(text, [&out](Cursor& cur) {
    const Monomial lhs = parse_side(cur);
    if (!cur.consume("=")) cur.fail("expected '='");
    const Monomial rhs = parse_side(cur);
    if (!cur.at_end()) cur.fail("unexpected trailing input");
    if (auto eq = BinomialEquation::make(lhs, rhs)) out.insert(*eq);
  });
  return out;
}

std::string format_monomial(const Monomial& m) {
  if (m.is_zero()) return "0";
  if (m.is_one()) return "1";
  std::string out;
  for (unsigned i : indices_of(m.vars())) {
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(i + 1);
  }
  return out;
}

std::string format_equation(const BinomialEquation& eq) {
  // Zero sorts first but reads better on the right.
  if (eq.lhs().is_zero()) return format_monomial(eq.rhs()) + " = 0";
  return format_monomial(eq.lhs()) + " = " + format_monomial(eq.rhs());
}

std::string format_equations(const EquationSet& eqs) {
  std::string out;
  for (const auto& eq : eqs) out += format_equation(eq) + '\n';
  return out;
}

ClauseSet parse_clauses(std::string_view text) {
  ClauseSet out;
  for_each_content_line(text, [&out](Cursor& cur) {
    VarSet body = 0;
    if (!cur.consume("->")) {
      body |= VarSet{1} << cur.variable();
      while (cur.consume("&")) body |= VarSet{1} << cur.variable();
      if (!cur.consume("->")) cur.fail("expected '&' or '->'");
    }
    const std::size_t col = (cur.skip_space(), cur.column());
    if (cur.peek() == 'f') {
      if (cur.word() != "false") cur.fail("expected a variable or 'false'", col);
      out.insert(HornClause::denies(body));
    } else {
      const unsigned head = cur.variable();
      if (auto c = HornClause::implies(body, head)) out.insert(*c);
    }
    if (!cur.at_end()) cur.fail("unexpected trailing input");
  });
  return out;
}

std::string format_clause(const HornClause& clause) {
  std::string out;
  for (unsigned i : indices_of(clause.body())) {
    if (!out.empty()) out += " & ";
    out += 'x' + std::to_string(i + 1);
  }
  out += out.empty() ? "-> " : " -> ";
  out += clause.head() ? 'x' + std::to_string(*clause.head() + 1) : std::string("false");
  return out;
}

std::string format_clauses(const ClauseSet& clauses) {
  std::string out;
  for (const auto& c : clauses) out += format_clause(c) + '\n';
  return out;
}

}  // namespace horn
