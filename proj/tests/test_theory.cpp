#include <doctest.h>

#include <random>

#include "horn/error.hpp"
#include "horn/families.hpp"
#include "horn/theory.hpp"
#include "test_support.hpp"

using namespace horn;

namespace {

BinomialEquation eq(const Monomial& a, const Monomial& b) { return *BinomialEquation::make(a, b); }
HornClause imp(std::initializer_list<unsigned> body, unsigned head) {
  return *HornClause::implies(var_set(body), head);
}

BitVector v(std::string_view bits) { return BitVector::parse(bits); }

}  // namespace

TEST_SUITE("theory") {
  TEST_CASE("monomial evaluation") {
    for (std::uint64_t x = 0; x < 4; ++x) {
      CHECK(eval_monomial(Monomial::one(), BitVector(2, x)));
      CHECK_FALSE(eval_monomial(Monomial::zero(), BitVector(2, x)));
    }
    CHECK(eval_monomial(Monomial::product({0, 1}), v("110")));
    CHECK_FALSE(eval_monomial(Monomial::product({0, 1}), v("100")));
    CHECK_THROWS_AS(eval_monomial(Monomial::product({2}), v("11")), InputError);
  }

  TEST_CASE("monomial order: zero, then by size, then lexicographic") {
    CHECK(Monomial::zero() < Monomial::one());
    CHECK(Monomial::one() < Monomial::product({5}));
    CHECK(Monomial::product({0}) < Monomial::product({1}));
    CHECK(Monomial::product({3}) < Monomial::product({0, 1}));
    CHECK(Monomial::product({0, 2}) < Monomial::product({1, 2}));
    CHECK(Monomial::product({0, 3}) < Monomial::product({1, 2}));
    CHECK(Monomial::product({0, 1, 5}) < Monomial::product({0, 2, 3}));
    CHECK(Monomial::product(0) == Monomial::one());
    CHECK(Monomial::zero() != Monomial::one());
  }

  TEST_CASE("equations are oriented and reflexive ones vanish") {
    const auto e = eq(Monomial::product({0, 1}), Monomial::product({0}));
    CHECK(e.lhs() == Monomial::product({0}));
    CHECK(e.rhs() == Monomial::product({0, 1}));
    CHECK_FALSE(BinomialEquation::make(Monomial::zero(), Monomial::zero()));
    CHECK_FALSE(BinomialEquation::make(Monomial::product({1, 0}), Monomial::product({0, 1})));
    CHECK_FALSE(HornClause::implies(var_set({0, 2}), 2));
  }

  TEST_CASE("equations to Horn clauses") {
    // x.y = x gives x => y; checked against the model sets by enumeration.
    const EquationSet xy{eq(Monomial::product({0, 1}), Monomial::product({0}))};
    CHECK(equations_to_horn(xy) == ClauseSet{imp({0}, 1)});
    CHECK(test::ref_models(xy, 2) == test::ref_models(ClauseSet{imp({0}, 1)}, 2));

    CHECK(equations_to_horn({eq(Monomial::product({0}), Monomial::one())}) ==
          ClauseSet{imp({}, 0)});
    CHECK(equations_to_horn({eq(Monomial::product({0, 1}), Monomial::zero())}) ==
          ClauseSet{HornClause::denies(var_set({0, 1}))});
    CHECK(equations_to_horn({eq(Monomial::one(), Monomial::zero())}) ==
          ClauseSet{HornClause::denies(0)});
    // x = y gives both directions.
    CHECK(equations_to_horn({eq(Monomial::product({0}), Monomial::product({1}))}) ==
          ClauseSet{imp({0}, 1), imp({1}, 0)});
  }

  TEST_CASE("Horn clauses to equations") {
    CHECK(horn_to_equations({imp({0, 1}, 2)}) ==
          EquationSet{eq(Monomial::product({0, 1}), Monomial::product({0, 1, 2}))});
    CHECK(horn_to_equations({imp({}, 1)}) ==
          EquationSet{eq(Monomial::one(), Monomial::product({1}))});
    const ClauseSet deny{HornClause::denies(var_set({0}))};
    CHECK(horn_to_equations(deny) == EquationSet{eq(Monomial::product({0}), Monomial::zero())});
    CHECK(test::ref_models(deny, 1) == test::ref_models(horn_to_equations(deny), 1));
  }

  TEST_CASE("model sets") {
    CHECK(models(EquationSet{}, 2) == VectorFamily::full(2));
    CHECK(models(EquationSet{eq(Monomial::product({0, 1}), Monomial::product({0}))}, 2) ==
          VectorFamily(2, {"00", "01", "11"}));
    CHECK(models(EquationSet{eq(Monomial::one(), Monomial::zero())}, 2).empty());
    CHECK_THROWS_AS(models(EquationSet{}, 17), ResourceError);
    CHECK_NOTHROW(models(EquationSet{}, 17, 17));
    CHECK_THROWS_AS(models(ClauseSet{imp({0}, 3)}, 2), InputError);
  }

  TEST_CASE("canonical form decides equivalence") {
    const EquationSet xy{eq(Monomial::product({0, 1}), Monomial::product({0}))};
    CHECK(canonical_form(xy, 2) == canonical_form(horn_to_equations(equations_to_horn(xy)), 2));
    const EquationSet same{eq(Monomial::product({0}), Monomial::product({1}))};
    const EquationSet pair{eq(Monomial::product({0, 1}), Monomial::product({0})),
                           eq(Monomial::product({0, 1}), Monomial::product({1}))};
    CHECK(canonical_form(same, 2) == canonical_form(pair, 2));
    CHECK(test::ref_models(same, 2) == std::vector<std::uint64_t>{0b00, 0b11});
    CHECK(canonical_form(EquationSet{}, 3) == VectorFamily::full(3));
  }

  TEST_CASE("translations preserve model sets (random, n <= 4)") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
      const unsigned n = std::uniform_int_distribution<unsigned>(0, 4)(rng);
      const EquationSet eqs = test::random_equations(rng, n);
      const ClauseSet from_eqs = equations_to_horn(eqs);
      CHECK(test::ref_models(eqs, n) == test::ref_models(from_eqs, n));
      CHECK(test::values_of(models(eqs, n)) == test::ref_models(eqs, n));

      const ClauseSet clauses = test::random_clauses(rng, n);
      CHECK(test::ref_models(clauses, n) == test::ref_models(horn_to_equations(clauses), n));
      CHECK(test::values_of(models(clauses, n)) == test::ref_models(clauses, n));

      // Every Horn model set is meet-closed.
      CHECK(is_meet_closed(models(eqs, n)));
      CHECK(is_meet_closed(models(clauses, n)));
    }
  }

  TEST_CASE("equation syntax") {
    CHECK(parse_equations("x1 x2 = x1") ==
          EquationSet{eq(Monomial::product({0, 1}), Monomial::product({0}))});
    CHECK(parse_equations("x1*x2 = x1\n") == parse_equations("x1 x2 = x1"));
    CHECK(parse_equations("x1 = 0") == EquationSet{eq(Monomial::product({0}), Monomial::zero())});
    CHECK(parse_equations("x2 x1 = x1 x2").empty());
    CHECK(parse_equations("# comment\n\n1 = x3\n").size() == 1);
    CHECK(format_equations(parse_equations("x1 x2 = x1\nx3 = 0\n1 = 0")) ==
          "1 = 0\nx3 = 0\nx1 = x1 x2\n");
    CHECK_THROWS_WITH_AS(parse_equations("x1 x2 x1"), "line 1, column 9: expected '='",
                         InputError);
    CHECK_THROWS_WITH_AS(parse_equations("x1 = y"),
                         "line 1, column 6: expected 0, 1 or a product of variables", InputError);
    CHECK_THROWS_WITH_AS(parse_equations("\nx0 = 1"),
                         "line 2, column 1: variable index must be in 1..64", InputError);
    CHECK_THROWS_AS(parse_equations("x1 = 1 x2"), InputError);
    CHECK_THROWS_AS(parse_equations("x1 = 2"), InputError);
  }

  TEST_CASE("clause syntax") {
    CHECK(parse_clauses("x1 & x2 -> x3") == ClauseSet{imp({0, 1}, 2)});
    CHECK(parse_clauses("-> x3") == ClauseSet{imp({}, 2)});
    CHECK(parse_clauses("x1 -> false") == ClauseSet{HornClause::denies(var_set({0}))});
    CHECK(parse_clauses("x1 & x2 -> x2").empty());
    CHECK(format_clauses(parse_clauses("x1 & x2 -> x3\n-> x3\nx1 -> false\n-> false")) ==
          "-> false\n-> x3\nx1 -> false\nx1 & x2 -> x3\n");
    CHECK_THROWS_WITH_AS(parse_clauses("x1 x2 -> x3"), "line 1, column 4: expected '&' or '->'",
                         InputError);
    CHECK_THROWS_WITH_AS(parse_clauses("x1 -> true"),
                         "line 1, column 7: expected a variable x<digits>", InputError);
    CHECK_THROWS_AS(parse_clauses("x1 -> x2 x3"), InputError);
  }

  TEST_CASE("formatting round-trips through the parser (random)") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
      const unsigned n = std::uniform_int_distribution<unsigned>(0, 6)(rng);
      const EquationSet eqs = test::random_equations(rng, n);
      CHECK(parse_equations(format_equations(eqs)) == eqs);
      const ClauseSet clauses = test::random_clauses(rng, n);
      CHECK(parse_clauses(format_clauses(clauses)) == clauses);
    }
  }
}
