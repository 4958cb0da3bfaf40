#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "holam/definability.hpp"
#include "holam/error.hpp"
#include "holam/kernel.hpp"
#include "holam/limits.hpp"
#include "holam/semantics.hpp"
#include "holam/syntax.hpp"

using namespace holam;

namespace {

Value endo(unsigned q, std::vector<std::uint32_t> table) {
  return Value(endo_type(), q, std::move(table));
}

// Size law computed independently, with no budget.
std::uint64_t size_law(const Type& t, std::uint64_t q) {
  switch (t.kind()) {
    case Type::Kind::Base: return q;
    case Type::Kind::Unit: return 1;
    case Type::Kind::Product: return size_law(t.left(), q) * size_law(t.right(), q);
    case Type::Kind::Arrow: {
      std::uint64_t r = 1;
      std::uint64_t cod = size_law(t.codomain(), q);
      for (std::uint64_t i = 0, n = size_law(t.domain(), q); i < n; ++i) r *= cod;
      return r;
    }
  }
  return 0;
}

}  // namespace

TEST_CASE("space sizes") {
  CHECK(space_size(Type::base(), 3) == 3);
  CHECK(space_size(endo_type(), 2) == 4);
  CHECK(space_size(nat_type(), 2) == 256);
  CHECK(space_size(Type::unit(), 5) == 1);
  CHECK(space_size(parse_type("o * o -> o"), 2) == 16);
  CHECK_THROWS_AS(space_size(nat_type(), 3), Error);
  CHECK_FALSE(try_space_size(word_type(2), 2).has_value());

  SUBCASE("q = 1 collapses every space") {
    for (const char* t : {"o", "(o->o)->o->o", "((o->o)->o)->o", "o*o->1", "1->o"}) {
      CHECK(space_size(parse_type(t), 1) == 1);
    }
  }
  SUBCASE("budget override") {
    Limits l;
    l.space_budget = 100;
    ScopedLimits guard(l);
    CHECK_THROWS_AS(space_size(nat_type(), 2), Error);
    CHECK(space_size(parse_type("o->o->o"), 2) == 16);
  }
  SUBCASE("random types follow the law") {
    std::mt19937_64 rng(7);
    std::function<Type(int)> gen = [&](int depth) -> Type {
      int k = depth == 0 ? static_cast<int>(rng() % 2) : static_cast<int>(rng() % 4);
      if (k == 0) return Type::base();
      if (k == 1) return Type::unit();
      if (k == 2) return Type::product(gen(depth - 1), gen(depth - 1));
      return Type::arrow(gen(depth - 1), gen(depth - 1));
    };
    for (int i = 0; i < 200; ++i) {
      Type t = gen(3);
      for (unsigned q = 1; q <= 2; ++q) {
        auto s = try_space_size(t, q);
        if (s) CHECK(*s == size_law(t, q));
      }
    }
  }
}

TEST_CASE("value encoding") {
  const Type nat = nat_type();
  for (std::uint64_t i = 0; i < 256; i += 17) {
    CHECK(Value::from_index(nat, 2, i).index() == i);
  }
  Value p = pair_value(Value::state(3, 2), Value::state(3, 1));
  CHECK(p.index() == 2 * 3 + 1);
  CHECK(first_value(p) == Value::state(3, 2));
  CHECK(second_value(p) == Value::state(3, 1));
  CHECK(endo(3, {1, 0, 2}).index() == 1 * 9 + 0 * 3 + 2);
  CHECK_THROWS_AS(Value(endo_type(), 2, {0, 2}), Error);
}

TEST_CASE("apply_value") {
  CHECK(apply_value(endo(2, {0, 1}), Value::state(2, 1)) == Value::state(2, 1));
  CHECK(apply_value(endo(2, {0, 0}), Value::state(2, 1)) == Value::state(2, 0));
  try {
    apply_value(endo(2, {0, 1}), Value::state(3, 1));
    FAIL("expected SpaceMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SpaceMismatch);
  }
}

TEST_CASE("interpret") {
  CHECK(interpret_closed(parse_term("\\x:o. x"), 2) == endo(2, {0, 1}));

  Value two = interpret_closed(church_numeral(2), 2);
  Value swap = endo(2, {1, 0});
  CHECK(apply_value(two, swap) == endo(2, {0, 1}));

  const Alphabet ab = Alphabet::standard(2);
  Term cat = apps(concat_term(ab), {church_word(ab, "a"), church_word(ab, "b")});
  CHECK(flatten(evaluate_closed(cat, 2), word_type(2), 2) == interpret_closed(church_word(ab, "ab"), 2));

  SUBCASE("open terms read the environment") {
    Context ctx = parse_context("f:o->o, x:o");
    Term t = parse_term("f (f x)", ctx);
    CHECK(interpret(t, ctx, {swap, Value::state(2, 1)}, 2) == Value::state(2, 1));
    CHECK(interpret(t, ctx, {endo(2, {1, 1}), Value::state(2, 0)}, 2) == Value::state(2, 1));
    CHECK_THROWS_AS(interpret(t, ctx, {swap}, 2), Error);
  }
  SUBCASE("ill-typed input") {
    Term bad = Term::app(Term::lam("x", Type::base(), Term::var(0)), Term::unit());
    try {
      interpret_closed(bad, 2);
      FAIL("expected IllTyped");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::IllTyped);
    }
  }
  SUBCASE("abstraction agrees with substitution") {
    Context ctx = parse_context("x:o->o");
    Term body = parse_term("\\y:o. x (x y)", ctx);
    Term lam = Term::lam("x", endo_type(), body);
    for (std::uint64_t i = 0; i < 9; ++i) {
      Value v = Value::from_index(endo_type(), 3, i);
      CHECK(apply_value(interpret_closed(lam, 3), v) == interpret(body, ctx, {v}, 3));
    }
  }
}

TEST_CASE("sem_eq") {
  CHECK(sem_eq(church_numeral(2), church_numeral(4), 2));
  CHECK_FALSE(sem_eq(church_numeral(1), church_numeral(2), 2));
  CHECK(sem_eq(church_numeral(3), church_numeral(3), 3));
  CHECK(sem_eq(church_numeral(0), church_numeral(7), 1));
  CHECK_THROWS_AS(sem_eq(church_numeral(1), parse_term("\\x:o. x"), 2), Error);
}

TEST_CASE("βη-invariance over enumerated terms") {
  for (const char* ty : {"o->o", "(o->o)->o->o", "o*o->o", "(o->o)*o->o", "((o->o)->o)->o"}) {
    Type t = parse_type(ty);
    for (const auto& m : enum_normal_forms({}, t, 3)) {
      // A β-redex and an η-redex around the normal form.
      Term redex = Term::app(Term::lam("y", t, Term::var(0)), m);
      for (unsigned q = 1; q <= 2; ++q) {
        if (!try_space_size(t, q)) continue;
        CHECK(interpret_closed(redex, q) == interpret_closed(m, q));
        CHECK(interpret_closed(normalize(redex), q) == interpret_closed(m, q));
      }
    }
  }
}

TEST_CASE("π monotonicity on numerals") {
  for (std::size_t n = 0; n <= 8; ++n) {
    for (std::size_t m = n + 1; m <= 8; ++m) {
      Term a = church_numeral(n);
      Term b = church_numeral(m);
      if (sem_eq(a, b, 3)) CHECK(sem_eq(a, b, 2));
      if (sem_eq(a, b, 2)) CHECK(sem_eq(a, b, 1));
    }
  }
}
