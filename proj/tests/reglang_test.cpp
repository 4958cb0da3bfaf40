#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "holam/bridge.hpp"
#include "holam/error.hpp"
#include "holam/kernel.hpp"
#include "holam/reglang.hpp"
#include "holam/syntax.hpp"

using namespace holam;

namespace {

const Alphabet kUnary({"s"});
const Alphabet kAB({"a", "b"});

// Parity of the number of letters, with `pad` unreachable extra states.
Dfa parity(bool even, std::size_t pad = 0) {
  std::vector<std::vector<std::size_t>> delta{{1}, {0}};
  for (std::size_t i = 0; i < pad; ++i) delta.push_back({2 + i});
  std::vector<bool> acc{even, !even};
  acc.resize(2 + pad, false);
  return Dfa(2 + pad, kUnary, delta, 0, acc);
}

Language even() { return Language::leaf(dfa_to_recognizer(parity(true))); }
Language odd() { return Language::leaf(dfa_to_recognizer(parity(false))); }

Term num(std::size_t n) { return church_numeral(n); }

Term pair_of(const Term& a, const Term& b) { return Term::pair(a, b); }

Value random_value(const Type& t, unsigned q, std::mt19937_64& rng) {
  std::vector<std::uint32_t> cells(cell_count(t, q));
  for (auto& c : cells) c = static_cast<std::uint32_t>(rng() % q);
  return Value(t, q, std::move(cells));
}

ValueSet random_set(const Type& t, unsigned q, std::mt19937_64& rng) {
  std::vector<Value> vs;
  std::size_t n = rng() % 6;
  if (auto size = try_space_size(t, q); size && *size <= 64) {
    for (std::uint64_t i = 0; i < *size; ++i) {
      if (rng() & 1) vs.push_back(Value::from_index(t, q, i));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) vs.push_back(random_value(t, q, rng));
  }
  ValueSet s = ValueSet::finite(t, q, std::move(vs));
  return (rng() & 1) ? ValueSet::complement(s) : s;
}

std::vector<Word> words_upto(std::size_t letters, std::size_t len) {
  std::vector<Word> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == len) continue;
    for (std::size_t c = 0; c < letters; ++c) {
      Word w = out[i];
      w.push_back(c);
      out.push_back(w);
    }
  }
  return out;
}

const char* kDoubling = "\\n:(o->o)->o->o. \\s:o->o. \\x:o. n (\\y:o. s (s y)) x";

}  // namespace

TEST_CASE("membership") {
  for (std::size_t n = 0; n <= 10; ++n) {
    CHECK(member(even(), num(n)) == (n % 2 == 0));
    CHECK(member(Language::negate(even()), num(n)) == (n % 2 == 1));
    CHECK(member(Language::all(nat_type()), num(n)));
    CHECK_FALSE(member(Language::none(nat_type()), num(n)));
    CHECK(member(Language::conj(even(), Language::all(nat_type())), num(n)) == member(even(), num(n)));
    CHECK(member(Language::negate(Language::negate(even())), num(n)) == member(even(), num(n)));
    CHECK_FALSE(member(Language::conj(even(), Language::negate(even())), num(n)));
  }
  CHECK_THROWS_AS(member(even(), parse_term("\\x:o. x")), Error);

  SUBCASE("invariance under normalization") {
    Term succ = successor_term();
    for (std::size_t n = 0; n <= 6; ++n) {
      Term m = Term::app(succ, Term::app(succ, num(n)));
      CHECK(member(even(), m) == member(even(), normalize(m)));
      CHECK(member(even(), m) == (n % 2 == 0));
    }
  }
  SUBCASE("boolean_combine") {
    Language l = boolean_combine(BoolOp::Or, {even(), odd()});
    for (std::size_t n = 0; n <= 6; ++n) CHECK(member(l, num(n)));
    CHECK_THROWS_AS(boolean_combine(BoolOp::Not, {even(), odd()}), Error);
    CHECK_THROWS_AS(Language::conj(even(), Language::all(endo_type())), Error);
  }
}

TEST_CASE("boolean algebra on accepting sets") {
  std::mt19937_64 rng(7);
  struct Space {
    Type type;
    unsigned q;
  };
  std::vector<Space> spaces{{endo_type(), 1}, {endo_type(), 2}, {endo_type(), 3},
                            {nat_type(), 1},  {nat_type(), 2},  {nat_type(), 3},
                            {word_type(2), 2}};
  for (const auto& sp : spaces) {
    for (int i = 0; i < 30; ++i) {
      ValueSet a = random_set(sp.type, sp.q, rng);
      ValueSet b = random_set(sp.type, sp.q, rng);
      ValueSet c = random_set(sp.type, sp.q, rng);
      auto neg = ValueSet::complement;
      auto meet = ValueSet::meet;
      auto join = ValueSet::join;
      CHECK(set_equal(neg(meet(a, b)), join(neg(a), neg(b))));
      CHECK(set_equal(neg(join(a, b)), meet(neg(a), neg(b))));
      CHECK(set_equal(neg(neg(a)), a));
      CHECK(set_equal(meet(a, join(b, c)), join(meet(a, b), meet(a, c))));
      CHECK(set_equal(join(a, meet(b, c)), meet(join(a, b), join(a, c))));
      CHECK(set_equal(meet(a, neg(a)), ValueSet::none(sp.type, sp.q)));
      CHECK(set_equal(join(a, neg(a)), ValueSet::all(sp.type, sp.q)));
    }
  }
  CHECK_THROWS_AS(ValueSet::meet(ValueSet::all(nat_type(), 2), ValueSet::all(nat_type(), 3)), Error);
}

TEST_CASE("product languages") {
  DefProvider defs;
  auto p = product_lang(even(), odd(), defs);
  CHECK(p.exactness == Exactness::Exact);
  for (std::size_t n = 0; n <= 6; ++n) {
    for (std::size_t m = 0; m <= 6; ++m) {
      CHECK(member(p.value, pair_of(num(n), num(m))) == (n % 2 == 0 && m % 2 == 1));
    }
  }
  CHECK(member(p.value, pair_of(num(2), num(3))));
  CHECK_FALSE(member(p.value, pair_of(num(2), num(2))));
  Type nn = Type::product(nat_type(), nat_type());
  auto all = product_lang(Language::all(nat_type()), Language::all(nat_type()), defs);
  auto none = product_lang(Language::none(nat_type()), even(), defs);
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(member(all.value, pair_of(num(n), num(n + 1))));
    CHECK_FALSE(member(none.value, pair_of(num(n), num(n + 1))));
  }
  CHECK(all.value.type() == nn);
}

TEST_CASE("arrow languages") {
  DefProvider defs;
  Term doubling = parse_term(kDoubling);
  Term succ = successor_term();
  Term id = identity_term(nat_type());

  auto a = arrow_lang(Language::all(nat_type()), even(), defs);
  CHECK(a.exactness == Exactness::Exact);
  CHECK(member(a.value, doubling));
  CHECK_FALSE(member(a.value, succ));

  auto ee = arrow_lang(even(), even(), defs);
  CHECK(member(ee.value, id));
  CHECK_FALSE(member(ee.value, succ));
  CHECK(member(arrow_lang(odd(), even(), defs).value, succ));

  auto vac = arrow_lang(Language::none(nat_type()), even(), defs);
  CHECK(member(vac.value, succ));
  CHECK(member(vac.value, id));

  SUBCASE("definition on enumerated terms") {
    Type nn = Type::arrow(nat_type(), nat_type());
    auto reps = def_set(nat_type(), 2);
    for (const auto& m : enum_normal_forms({}, nn, 3)) {
      bool expected = true;
      for (const auto& e : reps.entries()) {
        if (member(even(), e.representative) && !member(even(), Term::app(m, e.representative))) {
          expected = false;
        }
      }
      CHECK(member(ee.value, m) == expected);
    }
  }
}

TEST_CASE("pullback") {
  Term succ = successor_term();
  Language p = pullback(succ, even());
  for (std::size_t n = 0; n <= 10; ++n) CHECK(member(p, num(n)) == member(odd(), num(n)));
  Language idp = pullback(identity_term(nat_type()), even());
  for (std::size_t n = 0; n <= 10; ++n) CHECK(member(idp, num(n)) == member(even(), num(n)));
  CHECK_THROWS_AS(pullback(parse_term("\\x:o. x"), even()), Error);

  SUBCASE("counter") {
    DefProvider defs;
    auto l = product_lang(even(), Language::all(nat_type()), defs);
    Language c = pullback(counter_term(), l.value);
    for (const auto& w : words_upto(2, 6)) {
      std::size_t as = std::count(w.begin(), w.end(), 0u);
      CHECK(member(c, church_word(kAB, w)) == (as % 2 == 0));
    }
  }
  SUBCASE("definition") {
    Language q = pullback(succ, Language::conj(even(), Language::negate(odd())));
    for (std::size_t n = 0; n <= 6; ++n) {
      CHECK(member(q, num(n)) == member(Language::conj(even(), Language::negate(odd())), Term::app(succ, num(n))));
    }
  }
}

TEST_CASE("lifting") {
  DefProvider defs;
  Recognizer r = dfa_to_recognizer(parity(true));
  auto l3 = lift_to_q(r, 3, defs);
  CHECK(l3.exactness == Exactness::Exact);
  CHECK(l3.value.q() == 3);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(l3.value.member(num(n)) == (n % 2 == 0));
  auto l4 = lift_to_q(r, 4, defs);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(l4.value.member(num(n)) == (n % 2 == 0));

  auto same = lift_to_q(r, 2, defs);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(same.value.member(num(n)) == r.member(num(n)));

  Recognizer empty(ValueSet::none(nat_type(), 2));
  auto e3 = lift_to_q(empty, 3, defs);
  CHECK(e3.value.accepting().kind() == ValueSet::Kind::None);
  CHECK_THROWS_AS(lift_to_q(r, 1, defs), Error);

  SUBCASE("explicit finite sets over first-order types") {
    Recognizer f(ValueSet::from_indices(endo_type(), 2, {1}));  // constant 1
    auto f3 = lift_to_q(f, 3, defs);
    CHECK(f3.value.accepting().kind() == ValueSet::Kind::Finite);
  }
  SUBCASE("word recognizers") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
      Dfa d = random_dfa(rng, 2, kAB);
      Recognizer rd = dfa_to_recognizer(d);
      auto up = lift_to_q(rd, 3, defs);
      for (const auto& w : words_upto(2, 5)) {
        CHECK(up.value.member(church_word(kAB, w)) == d.run(w));
      }
    }
  }
}

TEST_CASE("normalization to one recognizer") {
  DefProvider defs;
  Language odd3 = Language::leaf(dfa_to_recognizer(parity(false, 1)));
  auto r = to_recognizer(Language::conj(even(), odd3), defs);
  CHECK(r.value.q() == 3);
  for (std::size_t n = 0; n <= 10; ++n) CHECK_FALSE(r.value.member(num(n)));

  Recognizer f(ValueSet::from_indices(endo_type(), 2, {1, 2}));
  auto nf = to_recognizer(Language::negate(Language::leaf(f)), defs);
  CHECK(nf.value.accepting().indices() == std::vector<std::uint64_t>{0, 3});
  auto single = to_recognizer(Language::leaf(f), defs);
  CHECK(single.value.accepting().indices() == f.accepting().indices());
}

TEST_CASE("containment") {
  DefProvider defs;
  auto t = contains(even(), Language::all(nat_type()), defs);
  CHECK(t.verdict == Containment::Verdict::True);
  auto f = contains(even(), odd(), defs);
  REQUIRE(f.verdict == Containment::Verdict::False);
  REQUIRE(f.witness.has_value());
  CHECK(term_eq(*f.witness, num(0)));
  CHECK(contains(even(), even(), defs).verdict == Containment::Verdict::True);
  CHECK(contains(Language::none(nat_type()), odd(), defs).verdict == Containment::Verdict::True);
  CHECK(std::string(to_string(Containment::Verdict::Unknown)) == "unknown");

  SUBCASE("agrees with DFA inclusion") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 30; ++i) {
      Dfa a = random_dfa(rng, 3, kAB);
      Dfa b = random_dfa(rng, 3, kAB);
      auto c = contains(Language::leaf(dfa_to_recognizer(a)), Language::leaf(dfa_to_recognizer(b)), defs);
      bool included = true;
      for (const auto& w : words_upto(2, 8)) {
        if (a.run(w) && !b.run(w)) included = false;
      }
      CHECK(c.verdict == (included ? Containment::Verdict::True : Containment::Verdict::False));
      if (c.witness) {
        CHECK(member(Language::leaf(dfa_to_recognizer(a)), *c.witness));
        CHECK_FALSE(member(Language::leaf(dfa_to_recognizer(b)), *c.witness));
      }
    }
  }
  SUBCASE("non-word types") {
    Type nn = Type::product(nat_type(), nat_type());
    auto p = product_lang(even(), odd(), defs);
    CHECK(contains(p.value, Language::all(nn), defs).verdict == Containment::Verdict::True);
    auto q = contains(Language::all(nn), p.value, defs);
    CHECK(q.verdict == Containment::Verdict::False);
    REQUIRE(q.witness.has_value());
    CHECK_FALSE(member(p.value, *q.witness));
  }
}

TEST_CASE("projection quantifiers") {
  DefProvider defs;
  Type nn = Type::product(nat_type(), nat_type());
  auto p = product_lang(even(), odd(), defs);
  auto ex = quantify_along_projection(p.value, Quantifier::Exists, defs);
  CHECK(ex.exactness == Exactness::Exact);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(member(ex.value, num(n)) == (n % 2 == 0));
  auto fa = quantify_along_projection(p.value, Quantifier::Forall, defs);
  for (std::size_t n = 0; n <= 10; ++n) CHECK_FALSE(member(fa.value, num(n)));
  auto all = quantify_along_projection(Language::all(nn), Quantifier::Forall, defs);
  auto none = quantify_along_projection(Language::none(nn), Quantifier::Exists, defs);
  for (std::size_t n = 0; n <= 6; ++n) {
    CHECK(member(all.value, num(n)));
    CHECK_FALSE(member(none.value, num(n)));
  }
  CHECK_THROWS_AS(quantify_along_projection(even(), Quantifier::Exists, defs), Error);

  SUBCASE("adjunction with the first projection") {
    std::mt19937_64 rng(5);
    auto reps = def_set(nn, 2);
    Term fst = parse_term("\\p:((o->o)->o->o)*((o->o)->o->o). fst p");
    for (int i = 0; i < 20; ++i) {
      std::vector<Value> chosen;
      for (const auto& e : reps.entries()) {
        if (rng() % 3 == 0) chosen.push_back(e.value);
      }
      Language l = Language::leaf(Recognizer(ValueSet::finite(nn, 2, chosen)));
      Language la = Language::leaf(dfa_to_recognizer(random_dfa(rng, 2, kUnary)));
      auto exists = quantify_along_projection(l, Quantifier::Exists, defs);
      bool left = contains(l, pullback(fst, la), defs).verdict == Containment::Verdict::True;
      bool right = contains(exists.value, la, defs).verdict == Containment::Verdict::True;
      CHECK(left == right);
    }
  }
}

TEST_CASE("diagonal witness") {
  CHECK(diagonal_non_openness_witness(1, 10) == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(diagonal_non_openness_witness(2, 10) == std::pair<std::size_t, std::size_t>{1, 3});
  auto [n, m] = diagonal_non_openness_witness(3, 20);
  CHECK(n < m);
  CHECK(m <= 3 + 6);
  CHECK(sem_eq(num(n), num(m), 3));
  CHECK_THROWS_AS(diagonal_non_openness_witness(3, 2), Error);
  CHECK_THROWS_AS(diagonal_non_openness_witness(2, 0), Error);
}
