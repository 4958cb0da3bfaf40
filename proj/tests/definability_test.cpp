#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "holam/definability.hpp"
#include "holam/error.hpp"
#include "holam/kernel.hpp"
#include "holam/syntax.hpp"

using namespace holam;

namespace {

std::set<std::string> printed(const std::vector<Term>& ts) {
  std::set<std::string> out;
  for (const auto& t : ts) out.insert(print_term(t));
  return out;
}

std::vector<Word> all_words(std::size_t letters, std::size_t max_len) {
  std::vector<Word> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max_len) continue;
    for (std::size_t c = 0; c < letters; ++c) {
      Word w = out[i];
      w.push_back(c);
      out.push_back(std::move(w));
    }
  }
  return out;
}

void check_sound(const DefSet& d) {
  for (const auto& e : d.entries()) {
    CHECK(flatten(evaluate_closed(e.representative, d.q()), d.type(), d.q()) == e.value);
    CHECK(typecheck({}, e.representative) == d.type());
  }
}

}  // namespace

TEST_CASE("normal form enumeration") {
  CHECK(enum_normal_forms({}, endo_type(), 2) == std::vector<Term>{parse_term("\\x:o. x")});
  for (unsigned f = 1; f <= 4; ++f) {
    auto units = enum_normal_forms({}, Type::unit(), f);
    REQUIRE(units.size() == 1);
    CHECK(units[0] == Term::unit());
  }
  auto nats = enum_normal_forms({}, nat_type(), 3);
  CHECK(nats.size() == 3);
  for (std::size_t n = 0; n < 3; ++n) {
    CHECK(std::find(nats.begin(), nats.end(), normalize(church_numeral(n))) != nats.end());
  }
  CHECK(enum_normal_forms({}, Type::base(), 5).empty());
  CHECK(enum_normal_forms({}, parse_type("o->o->o"), 1).size() == 2);

  SUBCASE("open context") {
    Context ctx = parse_context("p:o*o");
    CHECK(enum_normal_forms(ctx, Type::base(), 1) ==
          std::vector<Term>{parse_term("fst p", ctx), parse_term("snd p", ctx)});
  }
  SUBCASE("results are normal, typed and distinct") {
    auto ts = enum_normal_forms({}, parse_type("((o->o)->o)->o"), 4);
    CHECK(printed(ts).size() == ts.size());
    for (const auto& t : ts) {
      CHECK(typecheck({}, t) == parse_type("((o->o)->o)->o"));
      CHECK(normalize(t) == t);
    }
  }
}

TEST_CASE("numeral definable values") {
  DefSet d2 = def_set(nat_type(), 2);
  CHECK(d2.exactness() == Exactness::Exact);
  CHECK(d2.size() == 3);
  check_sound(d2);
  // numeral 3 collapses onto 1
  CHECK(d2.find(interpret_closed(church_numeral(3), 2)) == d2.find(interpret_closed(church_numeral(1), 2)));
  std::set<std::uint64_t> direct;
  for (std::size_t n = 0; n <= 6; ++n) direct.insert(interpret_closed(church_numeral(n), 2).index());
  std::set<std::uint64_t> closure;
  for (const auto& e : d2.entries()) closure.insert(e.value.index());
  CHECK(direct == closure);

  CHECK(def_set(nat_type(), 1).size() == 1);
  CHECK(def_set(nat_type(), 3).size() == 8);
  CHECK(def_set(nat_type(), 4).size() == 15);
}

TEST_CASE("generic strategy") {
  DefSet d = def_set(endo_type(), 3, DefStrategy::generic(2));
  CHECK(d.exactness() == Exactness::FuelBounded);
  REQUIRE(d.size() == 1);
  CHECK(d.entries()[0].value == Value(endo_type(), 3, {0, 1, 2}));

  SUBCASE("fuel monotonicity") {
    for (unsigned f = 1; f < 4; ++f) {
      DefSet a = def_set(nat_type(), 2, DefStrategy::generic(f));
      DefSet b = def_set(nat_type(), 2, DefStrategy::generic(f + 1));
      DefSet exact = def_set(nat_type(), 2);
      for (const auto& e : a.entries()) {
        CHECK(b.contains(e.value));
        CHECK(exact.contains(e.value));
      }
    }
  }
  SUBCASE("other types fall back to enumeration") {
    DefSet h = def_set(parse_type("((o->o)->o)->o"), 2);
    CHECK(h.exactness() == Exactness::FuelBounded);
    CHECK(h.fuel() == 3);
    check_sound(h);
  }
}

TEST_CASE("word definable values") {
  const Type w2 = word_type(2);
  DefSet d = def_set(w2, 2);
  CHECK(d.exactness() == Exactness::Exact);
  CHECK(d.size() == 21);
  check_sound(d);

  // brute force over bounded words
  const Alphabet ab = Alphabet::standard(2);
  std::set<std::vector<std::uint32_t>> brute;
  for (const auto& w : all_words(2, 8)) brute.insert(interpret_closed(church_word(ab, w), 2).cells());
  std::set<std::vector<std::uint32_t>> closure;
  for (const auto& e : d.entries()) closure.insert(e.value.cells());
  CHECK(brute == closure);

  SUBCASE("representatives are shortest") {
    CHECK(print_term(d.entries()[0].representative) == print_term(church_word(ab, "")));
    for (std::size_t i = 1; i < d.size(); ++i) {
      CHECK(d.entries()[i - 1].representative.size() <= d.entries()[i].representative.size());
    }
  }
  SUBCASE("single letter alphabets at q = 1, 2") {
    for (unsigned q = 1; q <= 2; ++q) {
      DefSet u = def_set(word_type(1), q);
      std::set<std::vector<std::uint32_t>> b;
      for (std::size_t n = 0; n <= 2 * space_size(word_type(1), q); ++n) {
        b.insert(interpret_closed(church_numeral(n), q).cells());
      }
      CHECK(u.size() == b.size());
    }
  }
  SUBCASE("large closures overflow") {
    CHECK_THROWS_AS(def_set(w2, 3), Error);
  }
}

TEST_CASE("product law") {
  const Type w2 = word_type(2);
  DefSet p = def_set(Type::product(w2, w2), 2);
  DefSet w = def_set(w2, 2);
  CHECK(p.exactness() == Exactness::Exact);
  CHECK(p.size() == w.size() * w.size());
  check_sound(p);
  for (const auto& x : w.entries()) {
    for (const auto& y : w.entries()) CHECK(p.contains(pair_value(x.value, y.value)));
  }
  CHECK(def_set(Type::product(Type::unit(), nat_type()), 2).size() == 3);
  CHECK(def_set(Type::base(), 3).size() == 0);
}

TEST_CASE("tree definable values") {
  RankedAlphabet fc({{"f", 1}, {"c", 0}});
  const Type t = tree_type(fc);
  REQUIRE(tree_arities(t).has_value());
  CHECK(*tree_arities(t) == std::vector<std::size_t>{1, 0});
  DefSet d = def_set(t, 2);
  CHECK(d.exactness() == Exactness::Exact);
  check_sound(d);
  std::set<std::vector<std::uint32_t>> brute;
  for (const auto& tree : enumerate_trees(fc, 8)) brute.insert(interpret_closed(church_tree(fc, tree), 2).cells());
  CHECK(d.size() == brute.size());

  RankedAlphabet g({{"f", 1}, {"g", 1}, {"c", 0}});
  DefSet dg = def_set(tree_type(g), 2);
  check_sound(dg);
  std::set<std::vector<std::uint32_t>> bg;
  for (const auto& tree : enumerate_trees(g, 7)) bg.insert(interpret_closed(church_tree(g, tree), 2).cells());
  for (const auto& e : dg.entries()) CHECK(bg.count(e.value.cells()) == 1);
}

TEST_CASE("word automaton at probes") {
  // Parity of a's: probe δa = swap, δb = id.
  const unsigned q = 2;
  std::uint32_t swap = endo_index({1, 0}, q);
  std::uint32_t id = endo_index({0, 1}, q);
  WordAutomaton aut(2, {ProbeGroup{q, {{swap, id}}}});
  CHECK(aut.state_count() == 2);
  CHECK(aut.next(0, 0) == 1);
  CHECK(aut.next(0, 1) == 0);
  CHECK(aut.representative(1) == Word{0});
  CHECK(endo_table(endo_index({2, 0, 1}, 3), 3) == std::vector<std::uint32_t>{2, 0, 1});
  CHECK(all_endo_tuples(2, 2).size() == 16);
}
