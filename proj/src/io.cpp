#include "holam/io.hpp"

#include <fstream>
#include <sstream>

#include "holam/error.hpp"
#include "holam/kernel.hpp"
#include "holam/syntax.hpp"

namespace holam {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::BadFormat, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

template <class T>
T get(const Json& j, const char* name) {
  try {
    return field(j, name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("field \"") + name + "\": " + e.what());
  }
}

Type type_field(const Json& j) { return parse_type(get<std::string>(j, "type")); }

unsigned q_field(const Json& j) {
  auto q = get<long long>(j, "q");
  if (q < 1) bad("\"q\" must be positive");
  return static_cast<unsigned>(q);
}

const char* kind_name(ValueSet::Kind k) {
  switch (k) {
    case ValueSet::Kind::None: return "none";
    case ValueSet::Kind::All: return "all";
    case ValueSet::Kind::Finite: return "finite";
    case ValueSet::Kind::Not: return "not";
    case ValueSet::Kind::And: return "and";
    case ValueSet::Kind::Or: return "or";
    case ValueSet::Kind::Product: return "product";
    case ValueSet::Kind::Forall: return "forall";
    case ValueSet::Kind::Preimage: return "preimage";
    case ValueSet::Kind::Exists: return "exists";
    case ValueSet::Kind::ForallPairs: return "forall_pairs";
  }
  return "none";
}

Json cells_json(const Value& v) { return Json(v.cells()); }

Value value_from_cells(const Json& j, const Type& type, unsigned q) {
  try {
    return Value(type, q, j.get<std::vector<std::uint32_t>>());
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("value cells: ") + e.what());
  }
}

}  // namespace

// Points and sets --------------------------------------------------------------------------

Json to_json(const Point& p) {
  if (p.term) return Json{{"term", print_term(*p.term)}};
  return Json{{"cells", cells_json(p.flat())}};
}

Point point_from_json(const Json& j, const Type& type, unsigned q) {
  if (j.is_object() && j.contains("term")) {
    Point p = Point::of_term(parse_term(get<std::string>(j, "term")), q);
    if (p.type != type) bad("point term has type " + print_type(p.type) + ", expected " + print_type(type));
    return p;
  }
  return Point::of_value(value_from_cells(field(j, "cells"), type, q));
}

Json to_json(const ValueSet& s) {
  Json j{{"kind", kind_name(s.kind())}, {"type", print_type(s.type())}, {"q", s.q()}};
  if (s.kind() == ValueSet::Kind::Finite) {
    Json els = Json::array();
    for (const auto& v : s.elements()) els.push_back(cells_json(v));
    j["elements"] = els;
  }
  if (!s.children().empty()) {
    Json cs = Json::array();
    for (const auto& c : s.children()) cs.push_back(to_json(c));
    j["children"] = cs;
  }
  if (!s.points().empty()) {
    Json ps = Json::array();
    for (const auto& p : s.points()) ps.push_back(to_json(p));
    j["points"] = ps;
  }
  return j;
}

ValueSet value_set_from_json(const Json& j) {
  const std::string kind = get<std::string>(j, "kind");
  const Type type = type_field(j);
  const unsigned q = q_field(j);
  auto child = [&](std::size_t i) {
    const Json& cs = field(j, "children");
    if (!cs.is_array() || cs.size() <= i) bad("set \"" + kind + "\" lacks children");
    return value_set_from_json(cs[i]);
  };
  auto points = [&](const Type& pt) {
    std::vector<Point> out;
    const Json& ps = field(j, "points");
    if (!ps.is_array()) bad("\"points\" must be an array");
    for (const auto& p : ps) out.push_back(point_from_json(p, pt, q));
    return out;
  };
  ValueSet out = ValueSet::none(type, q);
  if (kind == "none") {
    out = ValueSet::none(type, q);
  } else if (kind == "all") {
    out = ValueSet::all(type, q);
  } else if (kind == "finite") {
    std::vector<Value> els;
    const Json& es = field(j, "elements");
    if (!es.is_array()) bad("\"elements\" must be an array");
    for (const auto& e : es) els.push_back(value_from_cells(e, type, q));
    out = ValueSet::finite(type, q, std::move(els));
  } else if (kind == "not") {
    out = ValueSet::complement(child(0));
  } else if (kind == "and") {
    out = ValueSet::meet(child(0), child(1));
  } else if (kind == "or") {
    out = ValueSet::join(child(0), child(1));
  } else if (kind == "product") {
    out = ValueSet::product(child(0), child(1));
  } else if (kind == "forall") {
    if (!type.is_arrow()) bad("\"forall\" needs an arrow type");
    out = ValueSet::forall_at(type, points(type.domain()), child(0));
  } else if (kind == "preimage") {
    ValueSet c = child(0);
    auto ps = points(Type::arrow(type, c.type()));
    if (ps.size() != 1) bad("\"preimage\" takes one point");
    out = ValueSet::preimage(ps[0], c);
  } else if (kind == "exists" || kind == "forall_pairs") {
    ValueSet c = child(0);
    if (!c.type().is_product()) bad("projection quantifier over a non-product set");
    auto ps = points(c.type().right());
    out = kind == "exists" ? ValueSet::exists_pairs(type, std::move(ps), c)
                           : ValueSet::forall_pairs(type, std::move(ps), c);
  } else {
    bad("unknown set kind \"" + kind + "\"");
  }
  if (out.type() != type || out.q() != q) bad("set \"" + kind + "\" does not match its declared space");
  return out;
}

// Recognizers and languages ------------------------------------------------------------------

Json to_json(const Recognizer& r) {
  Json j{{"type", print_type(r.type())}, {"q", r.q()}};
  if (auto idx = r.accepting().indices()) {
    j["accepting"] = *idx;
  } else {
    j["set"] = to_json(r.accepting());
  }
  return j;
}

Recognizer recognizer_from_json(const Json& j) {
  const Type type = type_field(j);
  const unsigned q = q_field(j);
  if (j.contains("accepting")) {
    return Recognizer(ValueSet::from_indices(type, q, get<std::vector<std::uint64_t>>(j, "accepting")));
  }
  ValueSet s = value_set_from_json(field(j, "set"));
  if (s.type() != type || s.q() != q) bad("recognizer set does not match its type and q");
  return Recognizer(s);
}

Json to_json(const Language& l) {
  switch (l.op()) {
    case Language::Op::All: return Json{{"op", "all"}, {"type", print_type(l.type())}};
    case Language::Op::None: return Json{{"op", "none"}, {"type", print_type(l.type())}};
    case Language::Op::Leaf: return Json{{"op", "leaf"}, {"recognizer", to_json(l.recognizer())}};
    case Language::Op::Not: return Json{{"op", "not"}, {"arg", to_json(l.children()[0])}};
    case Language::Op::And:
    case Language::Op::Or:
      return Json{{"op", l.op() == Language::Op::And ? "and" : "or"},
                  {"args", Json::array({to_json(l.children()[0]), to_json(l.children()[1])})}};
  }
  return Json();
}

Language language_from_json(const Json& j) {
  // A bare recognizer object is accepted as a leaf.
  if (j.is_object() && !j.contains("op") && j.contains("q")) return Language::leaf(recognizer_from_json(j));
  const std::string op = get<std::string>(j, "op");
  if (op == "all") return Language::all(type_field(j));
  if (op == "none") return Language::none(type_field(j));
  if (op == "leaf") return Language::leaf(recognizer_from_json(field(j, "recognizer")));
  if (op == "not") return Language::negate(language_from_json(field(j, "arg")));
  if (op == "and" || op == "or") {
    const Json& args = field(j, "args");
    if (!args.is_array() || args.empty()) bad("\"args\" must be a nonempty array");
    std::vector<Language> ls;
    for (const auto& a : args) ls.push_back(language_from_json(a));
    return boolean_combine(op == "and" ? BoolOp::And : BoolOp::Or, ls);
  }
  bad("unknown language op \"" + op + "\"");
}

// Automata ------------------------------------------------------------------------------------

Json to_json(const Dfa& d) {
  std::vector<std::size_t> acc;
  for (std::size_t s = 0; s < d.states(); ++s) {
    if (d.accepting(s)) acc.push_back(s);
  }
  return Json{{"states", d.states()},
              {"alphabet", d.alphabet().letters()},
              {"delta", d.delta()},
              {"initial", d.initial()},
              {"accepting", acc}};
}

Dfa dfa_from_json(const Json& j) {
  const auto states = get<std::size_t>(j, "states");
  std::vector<bool> acc(states, false);
  for (auto s : get<std::vector<std::size_t>>(j, "accepting")) {
    if (s >= states) bad("accepting state out of range");
    acc[s] = true;
  }
  try {
    return Dfa(states, Alphabet(get<std::vector<std::string>>(j, "alphabet")),
               get<std::vector<std::vector<std::size_t>>>(j, "delta"), get<std::size_t>(j, "initial"),
               std::move(acc));
  } catch (const Error& e) {
    bad(e.what());
  }
}

namespace {

Json nest(const std::vector<std::size_t>& flat, std::size_t& pos, std::size_t arity, std::size_t states) {
  if (arity == 0) return flat[pos++];
  Json out = Json::array();
  for (std::size_t i = 0; i < states; ++i) out.push_back(nest(flat, pos, arity - 1, states));
  return out;
}

void unnest(const Json& j, std::size_t arity, std::size_t states, std::vector<std::size_t>& out) {
  if (arity == 0) {
    if (!j.is_number_unsigned()) bad("transition targets must be state numbers");
    out.push_back(j.get<std::size_t>());
    return;
  }
  if (!j.is_array() || j.size() != states) bad("transition table has the wrong shape");
  for (const auto& x : j) unnest(x, arity - 1, states, out);
}

}  // namespace

Json to_json(const TreeAutomaton& a) {
  Json letters = Json::array();
  Json tables = Json::array();
  for (std::size_t i = 0; i < a.ranked().size(); ++i) {
    letters.push_back(Json{{"name", a.ranked()[i].name}, {"arity", a.ranked()[i].arity}});
    std::size_t pos = 0;
    tables.push_back(nest(a.tables()[i], pos, a.ranked()[i].arity, a.states()));
  }
  std::vector<std::size_t> acc;
  for (std::size_t s = 0; s < a.states(); ++s) {
    if (a.accepting()[s]) acc.push_back(s);
  }
  return Json{{"states", a.states()}, {"alphabet", letters}, {"tables", tables}, {"accepting", acc}};
}

TreeAutomaton tree_automaton_from_json(const Json& j) {
  const auto states = get<std::size_t>(j, "states");
  std::vector<RankedLetter> letters;
  const Json& al = field(j, "alphabet");
  if (!al.is_array()) bad("\"alphabet\" must be an array");
  for (const auto& l : al) letters.push_back(RankedLetter{get<std::string>(l, "name"), get<std::size_t>(l, "arity")});
  const Json& ts = field(j, "tables");
  if (!ts.is_array() || ts.size() != letters.size()) bad("one table per letter is required");
  std::vector<std::vector<std::size_t>> tables;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    std::vector<std::size_t> flat;
    unnest(ts[i], letters[i].arity, states, flat);
    tables.push_back(std::move(flat));
  }
  std::vector<bool> acc(states, false);
  for (auto s : get<std::vector<std::size_t>>(j, "accepting")) {
    if (s >= states) bad("accepting state out of range");
    acc[s] = true;
  }
  try {
    return TreeAutomaton(states, RankedAlphabet(std::move(letters)), std::move(tables), std::move(acc));
  } catch (const Error& e) {
    bad(e.what());
  }
}

Json to_json(const DefSet& d) {
  Json values = Json::array();
  Json reps = Json::array();
  const bool indexed = try_space_size(d.type(), d.q()).has_value();
  for (const auto& e : d.entries()) {
    values.push_back(indexed ? Json(e.value.index()) : cells_json(e.value));
    reps.push_back(print_term(e.representative));
  }
  Json j{{"type", print_type(d.type())},
         {"q", d.q()},
         {"exactness", to_string(d.exactness())},
         {"values", values},
         {"representatives", reps}};
  if (d.exactness() == Exactness::FuelBounded) j["fuel"] = d.fuel();
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    bad(path + ": " + e.what());
  }
}

}  // namespace holam
