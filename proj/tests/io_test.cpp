#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "holam/brzozowski.hpp"
#include "holam/error.hpp"
#include "holam/io.hpp"
#include "holam/kernel.hpp"
#include "holam/syntax.hpp"

using namespace holam;

namespace {

const Alphabet kAB({"a", "b"});

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

Json reparse(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

TEST_CASE("explicit recognizers") {
  Recognizer r(ValueSet::from_indices(endo_type(), 3, {0, 5, 26}));
  Json j = to_json(r);
  CHECK(j["type"] == "o -> o");
  CHECK(j["q"] == 3);
  CHECK(j["accepting"] == Json::array({0, 5, 26}));
  Recognizer back = recognizer_from_json(reparse(j));
  CHECK(set_equal(back.accepting(), r.accepting()));

  Json literal = Json::parse(R"({"type": "(o -> o) -> o -> o", "q": 1, "accepting": [0]})");
  CHECK(recognizer_from_json(literal).member(church_numeral(5)));
  CHECK_THROWS_AS(recognizer_from_json(Json::parse(R"({"type": "o", "q": 2, "accepting": [2]})")), Error);
  CHECK_THROWS_AS(recognizer_from_json(Json::parse(R"({"type": "o", "accepting": [0]})")), Error);
  CHECK_THROWS_AS(recognizer_from_json(Json::parse(R"({"type": "o ->", "q": 2, "accepting": []})")), Error);
}

TEST_CASE("symbolic recognizers") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    Dfa d = random_dfa(rng, 4, kAB);
    Recognizer r = dfa_to_recognizer(d);
    Json j = to_json(r);
    if (r.q() > 1) CHECK(j.contains("set"));
    Recognizer back = recognizer_from_json(reparse(j));
    for (const auto& w : words_upto(2, 6)) CHECK(back.member(church_word(kAB, w)) == d.run(w));
  }
  SUBCASE("pullbacks and residuals keep their terms") {
    DefProvider defs;
    Dfa ends_a(2, kAB, {{1, 0}, {1, 0}}, 0, {false, true});
    Language a = Language::leaf(singleton_language(kAB, Word{0}));
    auto res = word_residual(kAB, Side::Right, a, Language::leaf(dfa_to_recognizer(ends_a)), defs);
    Language back = language_from_json(reparse(to_json(res.value)));
    for (const auto& w : words_upto(2, 5)) {
      CHECK(member(back, church_word(kAB, w)) == member(res.value, church_word(kAB, w)));
    }
  }
  SUBCASE("projection quantifiers") {
    DefProvider defs;
    Type nn = Type::product(nat_type(), nat_type());
    Recognizer even = dfa_to_recognizer(Dfa(2, Alphabet({"s"}), {{1}, {0}}, 0, {true, false}));
    auto p = product_lang(Language::leaf(even), Language::all(nat_type()), defs);
    auto ex = quantify_along_projection(p.value, Quantifier::Exists, defs);
    Language back = language_from_json(reparse(to_json(ex.value)));
    for (std::size_t n = 0; n <= 6; ++n) CHECK(member(back, church_numeral(n)) == (n % 2 == 0));
    CHECK(back.type() == nat_type());
    (void)nn;
  }
}

TEST_CASE("languages") {
  Recognizer r(ValueSet::from_indices(endo_type(), 2, {1}));
  Language l = Language::disj(Language::negate(Language::leaf(r)),
                              Language::conj(Language::all(endo_type()), Language::none(endo_type())));
  Json j = to_json(l);
  CHECK(j["op"] == "or");
  CHECK(j["args"][0]["op"] == "not");
  Language back = language_from_json(reparse(j));
  CHECK(to_json(back) == j);
  CHECK(member(back, identity_term(Type::base())) == member(l, identity_term(Type::base())));
  CHECK(language_from_json(to_json(r)).op() == Language::Op::Leaf);
  CHECK_THROWS_AS(language_from_json(Json::parse(R"({"op": "xor", "args": []})")), Error);
}

TEST_CASE("automata") {
  Dfa d(3, kAB, {{1, 0}, {1, 2}, {2, 2}}, 0, {false, false, true});
  Json j = to_json(d);
  CHECK(j == Json::parse(R"({"states": 3, "alphabet": ["a", "b"], "delta": [[1, 0], [1, 2], [2, 2]],
                             "initial": 0, "accepting": [2]})"));
  Dfa back = dfa_from_json(reparse(j));
  CHECK(dfa_equiv(back, d).equivalent);
  CHECK_THROWS_AS(dfa_from_json(Json::parse(R"({"states": 1, "alphabet": ["a"], "delta": [[3]],
                                                "initial": 0, "accepting": []})")),
                  Error);

  RankedAlphabet g({{"g", 2}, {"c", 0}});
  TreeAutomaton t(2, g, {{1, 0, 0, 1}, {0}}, {true, false});
  Json tj = to_json(t);
  CHECK(tj["tables"][0] == Json::parse("[[1, 0], [0, 1]]"));
  CHECK(tj["tables"][1] == 0);
  TreeAutomaton tb = tree_automaton_from_json(reparse(tj));
  CHECK(tb.tables() == t.tables());
  CHECK(tb.accepting() == t.accepting());
  CHECK(tb.ranked() == t.ranked());
}

TEST_CASE("definable sets") {
  Json j = to_json(def_set(nat_type(), 2));
  CHECK(j["exactness"] == "exact");
  CHECK(j["values"].size() == 3);
  CHECK(j["representatives"][0] == print_term(def_set(nat_type(), 2).entries()[0].representative));
  for (const auto& rep : j["representatives"]) CHECK(typecheck({}, parse_term(rep.get<std::string>())) == nat_type());
  Json g = to_json(def_set(endo_type(), 2, DefStrategy::generic(2)));
  CHECK(g["exactness"] == "fuel-bounded");
  CHECK(g["fuel"] == 2);
}
