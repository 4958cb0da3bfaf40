#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "holam/kernel.hpp"
#include "holam/limits.hpp"
#include "holam/syntax.hpp"

using namespace holam;

namespace {

Term T(const std::string& s) { return parse_term(s); }

std::vector<std::string> words_up_to(const std::string& letters, std::size_t max_len) {
  std::vector<std::string> out{""};
  std::vector<std::string> frontier{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& w : frontier) {
      for (char c : letters) next.push_back(w + c);
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("typecheck") {
  CHECK(typecheck({}, T("\\x:o. x")) == endo_type());
  CHECK(typecheck({}, church_word(Alphabet::standard(2), "ab")) ==
        parse_type("(o->o)->(o->o)->(o->o)"));
  CHECK(word_type(2) == parse_type("(o->o)->(o->o)->o->o"));

  SUBCASE("self application is rejected") {
    try {
      typecheck({}, Term::lam("x", Type::base(), Term::app(Term::var(0), Term::var(0))));
      FAIL("expected a type error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::TypeMismatch);
      CHECK(std::string(e.what()).find("/body") != std::string::npos);
    }
  }
  SUBCASE("unbound index") {
    CHECK_THROWS_AS(typecheck({}, Term::var(0)), Error);
    Context ctx{{"y", Type::base()}};
    CHECK(typecheck(ctx, Term::var(0)) == Type::base());
  }
  SUBCASE("projections and unit") {
    CHECK(typecheck({}, T("\\p:o*o. fst p")) == parse_type("o*o->o"));
    CHECK(typecheck({}, T("()")) == Type::unit());
    CHECK_THROWS_AS(typecheck({}, T("\\x:o. fst x")), Error);
  }
}

TEST_CASE("normalize") {
  SUBCASE("beta step") {
    Term redex = T("\\f:o->o. (\\g:o->o. g) (\\x:o. x)");
    CHECK(normalize(redex) == T("\\f:o->o. \\x:o. x"));
  }
  SUBCASE("eta long numerals") {
    Term one_short = T("\\s:o->o. s");
    CHECK(normalize(one_short) == T("\\s:o->o. \\x:o. s x"));
    CHECK(normalize(one_short) == church_numeral(1));
  }
  SUBCASE("surjective pairing and unit") {
    CHECK(normalize(T("\\p:o*o. p")) == T("\\p:o*o. (fst p, snd p)"));
    CHECK(normalize(T("\\u:1. u")) == T("\\u:1. ()"));
  }
  SUBCASE("concat of letters") {
    Alphabet ab = Alphabet::standard(2);
    Term t = apps(concat_term(ab), {church_word(ab, "a"), church_word(ab, "b")});
    CHECK(normalize(t) == church_word(ab, "ab"));
  }
  SUBCASE("open terms") {
    Context ctx{{"f", endo_type()}};
    CHECK(normalize(parse_term("f", ctx), ctx) == Term::lam("x", Type::base(), Term::app(Term::var(1), Term::var(0))));
  }
  SUBCASE("ill typed input") {
    CHECK_THROWS_AS(normalize(Term::var(3)), Error);
  }
  SUBCASE("node budget") {
    Limits tight;
    tight.node_budget = 50;
    ScopedLimits guard(tight);
    Term big = apps(concat_term(Alphabet::standard(1)),
                    {church_numeral(30), church_numeral(30)});
    try {
      normalize(big);
      FAIL("expected ResourceExhausted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ResourceExhausted);
    }
  }
}

TEST_CASE("term equality") {
  Alphabet ab = Alphabet::standard(2);
  CHECK(term_eq(T("\\x:o. x"), T("\\y:o. y")));
  CHECK_FALSE(term_eq(church_word(ab, "ab"), church_word(ab, "ba")));
  CHECK(term_eq(apps(concat_term(ab), {church_word(ab, ""), church_word(ab, "ab")}),
                church_word(ab, "ab")));
  try {
    term_eq(T("\\x:o. x"), church_numeral(0));
    FAIL("expected TypeDisagreement");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TypeDisagreement);
  }
}

TEST_CASE("church words and numerals") {
  Alphabet ab = Alphabet::standard(2);
  CHECK(church_word(ab, "") == T("\\a:o->o. \\b:o->o. \\x:o. x"));
  CHECK(church_word(ab, "ab") == T("\\a:o->o. \\b:o->o. \\x:o. b (a x)"));
  CHECK(church_word(Alphabet::standard(1), "aaa") == T("\\a:o->o. \\x:o. a (a (a x))"));
  CHECK(church_numeral(0) == T("\\s:o->o. \\x:o. x"));
  CHECK(church_numeral(2) == T("\\s:o->o. \\x:o. s (s x)"));
  for (std::size_t n = 0; n <= 10; ++n) {
    CHECK(term_eq(church_numeral(n), church_word(Alphabet({"s"}), Word(n, 0))));
  }
  CHECK_THROWS_AS(church_word(ab, "abc"), Error);
}

TEST_CASE("church trees") {
  RankedAlphabet c0({{"c", 0}});
  CHECK(church_tree(c0, Tree{0, {}}) == T("\\cs:o. cs"));

  RankedAlphabet fc({{"f", 2}, {"c", 0}});
  Tree fcc{0, {Tree{1, {}}, Tree{1, {}}}};
  Term hand = T("\\cs:(o->o->o)*o. fst cs (snd cs) (snd cs)");
  CHECK(typecheck({}, church_tree(fc, fcc)) == tree_type(fc));
  CHECK(normalize(church_tree(fc, fcc)) == normalize(hand));

  RankedAlphabet unary({{"f", 1}, {"c", 0}});
  Tree ffc{0, {Tree{0, {Tree{1, {}}}}}};
  CHECK(normalize(church_tree(unary, ffc)) ==
        normalize(T("\\cs:(o->o)*o. fst cs (fst cs (snd cs))")));

  CHECK_THROWS_AS(church_tree(unary, Tree{0, {}}), Error);
  CHECK_THROWS_AS(church_tree(unary, Tree{5, {}}), Error);
}

TEST_CASE("builtins") {
  Alphabet ab = Alphabet::standard(2);
  SUBCASE("concat agrees with direct encodings") {
    auto words = words_up_to("ab", 4);
    Term cat = concat_term(ab);
    for (const auto& u : words) {
      for (const auto& v : words) {
        Term t = apps(cat, {church_word(ab, u), church_word(ab, v)});
        REQUIRE(normalize(t) == church_word(ab, u + v));
      }
    }
  }
  SUBCASE("counter") {
    Term t = Term::app(counter_term(), church_word(ab, "aab"));
    CHECK(typecheck({}, counter_term()) == Type::arrow(word_type(2), Type::product(nat_type(), nat_type())));
    CHECK(normalize(t) == Term::pair(church_numeral(2), church_numeral(1)));
  }
  SUBCASE("diagonal") {
    Term t = Term::app(diagonal_term(nat_type()), church_numeral(3));
    CHECK(normalize(t) == Term::pair(church_numeral(3), church_numeral(3)));
  }
  SUBCASE("evaluation and successor") {
    Term t = Term::app(evaluation_term(nat_type(), nat_type()),
                       Term::pair(successor_term(), church_numeral(2)));
    CHECK(normalize(t) == church_numeral(3));
  }
  SUBCASE("homomorphism") {
    Alphabet c({"c"});
    Term h = homomorphism_term(ab, c, {Word{0, 0}, Word{}});
    CHECK(normalize(Term::app(h, church_word(ab, "aba"))) == church_word(c, "cccc"));
    Term id = homomorphism_term(ab, ab, {Word{0}, Word{1}});
    CHECK(term_eq(id, identity_term(word_type(2))));
  }
  SUBCASE("lookup by name") {
    BuiltinParams p;
    p.alphabet = ab;
    CHECK(builtin_term("concat", p) == concat_term(ab));
    CHECK_THROWS_AS(builtin_term("nope", p), Error);
    CHECK_THROWS_AS(builtin_term("diagonal", p), Error);
  }
}

TEST_CASE("church bijection at desk scale") {
  Alphabet ab = Alphabet::standard(2);
  auto words = words_up_to("ab", 6);
  std::vector<Term> normal;
  for (const auto& w : words) normal.push_back(normalize(church_word(ab, w)));
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) REQUIRE(normal[i] != normal[j]);
  }
}

TEST_CASE("concat is associative with unit") {
  Alphabet ab = Alphabet::standard(2);
  Term cat = concat_term(ab);
  auto words = words_up_to("ab", 3);
  for (const auto& u : words) {
    CHECK(term_eq(apps(cat, {church_word(ab, ""), church_word(ab, u)}), church_word(ab, u)));
    for (const auto& v : words) {
      for (const auto& w : words) {
        Term left = apps(cat, {church_word(ab, u), apps(cat, {church_word(ab, v), church_word(ab, w)})});
        Term right = apps(cat, {apps(cat, {church_word(ab, u), church_word(ab, v)}), church_word(ab, w)});
        REQUIRE(term_eq(left, right));
      }
    }
  }
}

TEST_CASE("graft substitutes into the hole") {
  RankedAlphabet sigma({{"f", 1}, {"g", 2}, {"c", 0}});
  RankedAlphabet plus = sigma.with_hole();
  const std::size_t hole = plus.size() - 1;
  Term graft = graft_term(sigma);
  CHECK(typecheck({}, graft) ==
        arrows({tree_type(plus), tree_type(sigma)}, tree_type(sigma)));
  auto contexts = enumerate_trees(plus, 3);
  auto trees = enumerate_trees(sigma, 2);
  for (const auto& k : contexts) {
    for (const auto& t : trees) {
      Term grafted = apps(graft, {church_tree(plus, k), church_tree(sigma, t)});
      REQUIRE(normalize(grafted) == normalize(church_tree(sigma, graft_tree(k, hole, t))));
    }
  }
}

TEST_CASE("surface syntax") {
  CHECK(parse_type("(o->o)->(o->o)") == nat_type());
  CHECK(parse_type("o * o -> o") == Type::arrow(Type::product(Type::base(), Type::base()), Type::base()));
  CHECK(parse_type("o -> o -> o") == first_order_type(2));
  CHECK(print_type(parse_type("(o*o)*o -> (o->o) -> 1")) == "(o * o) * o -> (o -> o) -> 1");

  CHECK(T("\\x:o. x") == identity_term(Type::base()));
  CHECK(T("num 2") == church_numeral(2));
  CHECK(T("word ab") == church_word(Alphabet::standard(2), "ab"));
  CHECK(parse_term("word a", {}, {Alphabet::standard(2)}) == church_word(Alphabet::standard(2), "a"));
  CHECK(parse_term("word eps", {}, {Alphabet::standard(1)}) == church_numeral(0));
  CHECK(T("\xce\xbbx:o. x") == identity_term(Type::base()));

  SUBCASE("errors carry positions") {
    try {
      T("\\x:o. y");
      FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
      CHECK(e.line() == 1);
      CHECK(e.column() == 7);
    }
    CHECK_THROWS_AS(T("\\x:o."), SyntaxError);
    CHECK_THROWS_AS(T("(x"), SyntaxError);
    CHECK_THROWS_AS(parse_type("o ->"), SyntaxError);
  }

  SUBCASE("print parse round trip") {
    std::vector<Term> corpus = {
        T("\\x:o. x"),
        church_word(Alphabet::standard(3), "abcab"),
        concat_term(Alphabet::standard(2)),
        graft_term(RankedAlphabet({{"f", 1}, {"c", 0}})),
        counter_term(),
        evaluation_term(nat_type(), Type::unit()),
        T("\\p:o*(o->o). (snd p (fst p), ())"),
        T("\\x:o. \\x:o. x"),
        T("\\f:(o->o)*o. fst f (snd f)"),
        T("\\f:o->o. (\\g:o->o. g) f"),
    };
    for (const auto& t : corpus) {
      std::string printed = print_term(t);
      CAPTURE(printed);
      REQUIRE(parse_term(printed) == t);
    }
  }

  SUBCASE("context parsing") {
    Context ctx = parse_context("x:o, f:o->o");
    CHECK(ctx.size() == 2);
    CHECK(typecheck(ctx, parse_term("f x", ctx)) == Type::base());
    CHECK(print_term(parse_term("f x", ctx), ctx) == "f x");
  }
}
