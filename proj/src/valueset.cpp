#include <algorithm>
#include <unordered_set>

#include "holam/error.hpp"
#include "holam/kernel.hpp"
#include "holam/limits.hpp"
#include "holam/reglang.hpp"
#include "holam/syntax.hpp"

namespace holam {

// Points ------------------------------------------------------------------------------

Point Point::of_term(const Term& t, unsigned q) {
  Type type = [&] {
    try {
      return typecheck({}, t);
    } catch (const Error& e) {
      throw Error(ErrorKind::IllTyped, e.what());
    }
  }();
  return Point{type, q, evaluate_closed(t, q), t, std::nullopt};
}

Point Point::of_value(const Value& v) { return Point{v.type(), v.q(), Sem::flat(v), std::nullopt, v}; }

Value Point::flat() const { return value ? *value : flatten(sem, type, q); }

// Nodes ---------------------------------------------------------------------------------

struct ValueSet::Node {
  Kind kind = Kind::None;
  Type type = Type::base();
  unsigned q = 1;
  std::vector<ValueSet> children;
  std::vector<Point> points;
  std::vector<Value> elements;
  std::unordered_set<Value, ValueHash> lookup;
};

ValueSet ValueSet::make(Node node) { return ValueSet(std::make_shared<const Node>(std::move(node))); }

const Type& ValueSet::type() const { return node_->type; }
unsigned ValueSet::q() const { return node_->q; }
ValueSet::Kind ValueSet::kind() const { return node_->kind; }
const std::vector<ValueSet>& ValueSet::children() const { return node_->children; }
const std::vector<Point>& ValueSet::points() const { return node_->points; }
const std::vector<Value>& ValueSet::elements() const { return node_->elements; }

namespace {

void require_same_space(const ValueSet& a, const ValueSet& b) {
  if (a.type() != b.type() || a.q() != b.q()) {
    throw Error(ErrorKind::SpaceMismatch, "sets over [[" + print_type(a.type()) + "]]_" +
                                              std::to_string(a.q()) + " and [[" +
                                              print_type(b.type()) + "]]_" + std::to_string(b.q()));
  }
}

void require_point(const Point& p, const Type& type, unsigned q) {
  if (p.type != type || p.q != q) {
    throw Error(ErrorKind::SpaceMismatch, "point of type " + print_type(p.type) + " at q=" +
                                              std::to_string(p.q) + " where " + print_type(type) +
                                              " at q=" + std::to_string(q) + " is expected");
  }
}

bool is_cofinite(const ValueSet& s) {
  return s.kind() == ValueSet::Kind::Not && s.children()[0].kind() == ValueSet::Kind::Finite;
}

std::vector<Value> set_op(const std::vector<Value>& a, const std::vector<Value>& b, int op) {
  std::vector<Value> out;
  if (op == 0) std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  if (op == 1) std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  if (op == 2) std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

ValueSet ValueSet::none(const Type& type, unsigned q) {
  if (q == 0) throw Error(ErrorKind::BadParameters, "state count must be positive");
  Node n;
  n.kind = Kind::None;
  n.type = type;
  n.q = q;
  return make(std::move(n));
}

ValueSet ValueSet::all(const Type& type, unsigned q) {
  if (q == 0) throw Error(ErrorKind::BadParameters, "state count must be positive");
  Node n;
  n.kind = Kind::All;
  n.type = type;
  n.q = q;
  return make(std::move(n));
}

ValueSet ValueSet::finite(const Type& type, unsigned q, std::vector<Value> elements) {
  for (const auto& v : elements) {
    if (v.type() != type || v.q() != q) throw Error(ErrorKind::SpaceMismatch, "element outside the set's space");
  }
  if (elements.empty()) return none(type, q);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Node n;
  n.kind = Kind::Finite;
  n.type = type;
  n.q = q;
  n.lookup.insert(elements.begin(), elements.end());
  n.elements = std::move(elements);
  return make(std::move(n));
}

ValueSet ValueSet::from_indices(const Type& type, unsigned q, const std::vector<std::uint64_t>& indices) {
  std::vector<Value> elements;
  elements.reserve(indices.size());
  for (auto i : indices) elements.push_back(Value::from_index(type, q, i));
  return finite(type, q, std::move(elements));
}

ValueSet ValueSet::complement(const ValueSet& s) {
  switch (s.kind()) {
    case Kind::None: return all(s.type(), s.q());
    case Kind::All: return none(s.type(), s.q());
    case Kind::Not: return s.children()[0];
    default: break;
  }
  Node n;
  n.kind = Kind::Not;
  n.type = s.type();
  n.q = s.q();
  n.children = {s};
  return make(std::move(n));
}

ValueSet ValueSet::meet(const ValueSet& a, const ValueSet& b) {
  require_same_space(a, b);
  if (a.kind() == Kind::None || b.kind() == Kind::All) return a;
  if (b.kind() == Kind::None || a.kind() == Kind::All) return b;
  if (a.kind() == Kind::Finite && b.kind() == Kind::Finite) {
    return finite(a.type(), a.q(), set_op(a.elements(), b.elements(), 0));
  }
  if (is_cofinite(a) && is_cofinite(b)) {
    return complement(finite(a.type(), a.q(),
                             set_op(a.children()[0].elements(), b.children()[0].elements(), 1)));
  }
  if (a.kind() == Kind::Finite || b.kind() == Kind::Finite) {
    const ValueSet& f = a.kind() == Kind::Finite ? a : b;
    const ValueSet& other = a.kind() == Kind::Finite ? b : a;
    std::vector<Value> kept;
    for (const auto& v : f.elements()) {
      if (other.contains(v)) kept.push_back(v);
    }
    return finite(a.type(), a.q(), std::move(kept));
  }
  Node n;
  n.kind = Kind::And;
  n.type = a.type();
  n.q = a.q();
  n.children = {a, b};
  return make(std::move(n));
}

ValueSet ValueSet::join(const ValueSet& a, const ValueSet& b) {
  require_same_space(a, b);
  if (a.kind() == Kind::All || b.kind() == Kind::None) return a;
  if (b.kind() == Kind::All || a.kind() == Kind::None) return b;
  if (a.kind() == Kind::Finite && b.kind() == Kind::Finite) {
    return finite(a.type(), a.q(), set_op(a.elements(), b.elements(), 1));
  }
  if (is_cofinite(a) && is_cofinite(b)) {
    return complement(finite(a.type(), a.q(),
                             set_op(a.children()[0].elements(), b.children()[0].elements(), 0)));
  }
  if ((is_cofinite(a) && b.kind() == Kind::Finite) || (is_cofinite(b) && a.kind() == Kind::Finite)) {
    const ValueSet& co = is_cofinite(a) ? a : b;
    const ValueSet& f = is_cofinite(a) ? b : a;
    return complement(finite(a.type(), a.q(), set_op(co.children()[0].elements(), f.elements(), 2)));
  }
  Node n;
  n.kind = Kind::Or;
  n.type = a.type();
  n.q = a.q();
  n.children = {a, b};
  return make(std::move(n));
}

ValueSet ValueSet::product(const ValueSet& a, const ValueSet& b) {
  if (a.q() != b.q()) throw Error(ErrorKind::SpaceMismatch, "product of sets at different q");
  Type t = Type::product(a.type(), b.type());
  if (a.kind() == Kind::None || b.kind() == Kind::None) return none(t, a.q());
  if (a.kind() == Kind::All && b.kind() == Kind::All) return all(t, a.q());
  Node n;
  n.kind = Kind::Product;
  n.type = t;
  n.q = a.q();
  n.children = {a, b};
  return make(std::move(n));
}

ValueSet ValueSet::forall_at(const Type& arrow, std::vector<Point> points, const ValueSet& codomain_set) {
  if (!arrow.is_arrow() || arrow.codomain() != codomain_set.type()) {
    throw Error(ErrorKind::SpaceMismatch, "codomain set does not match " + print_type(arrow));
  }
  const unsigned q = codomain_set.q();
  for (const auto& p : points) require_point(p, arrow.domain(), q);
  if (points.empty() || codomain_set.kind() == Kind::All) return all(arrow, q);
  Node n;
  n.kind = Kind::Forall;
  n.type = arrow;
  n.q = q;
  n.points = std::move(points);
  n.children = {codomain_set};
  return make(std::move(n));
}

ValueSet ValueSet::preimage(const Point& fn, const ValueSet& codomain_set) {
  if (!fn.type.is_arrow() || fn.type.codomain() != codomain_set.type() || fn.q != codomain_set.q()) {
    throw Error(ErrorKind::SpaceMismatch, "function point does not land in the set's space");
  }
  const Type& a = fn.type.domain();
  if (codomain_set.kind() == Kind::All) return all(a, fn.q);
  if (codomain_set.kind() == Kind::None) return none(a, fn.q);
  Node n;
  n.kind = Kind::Preimage;
  n.type = a;
  n.q = fn.q;
  n.points = {fn};
  n.children = {codomain_set};
  return make(std::move(n));
}

namespace {

// Trivial cases of a projection quantifier, or nullopt when a node is needed.
std::optional<ValueSet> projection_shortcut(bool exists, const Type& a, const std::vector<Point>& witnesses,
                                            const ValueSet& pairs) {
  if (!pairs.type().is_product() || pairs.type().left() != a) {
    throw Error(ErrorKind::SpaceMismatch, "pair set does not project onto " + print_type(a));
  }
  for (const auto& w : witnesses) require_point(w, pairs.type().right(), pairs.q());
  if (pairs.kind() == ValueSet::Kind::All) return ValueSet::all(a, pairs.q());
  if (pairs.kind() == ValueSet::Kind::None) return ValueSet::none(a, pairs.q());
  if (witnesses.empty()) return exists ? ValueSet::none(a, pairs.q()) : ValueSet::all(a, pairs.q());
  return std::nullopt;
}

}  // namespace

ValueSet ValueSet::exists_pairs(const Type& a, std::vector<Point> witnesses, const ValueSet& pairs) {
  if (auto s = projection_shortcut(true, a, witnesses, pairs)) return *s;
  Node n;
  n.kind = Kind::Exists;
  n.type = a;
  n.q = pairs.q();
  n.points = std::move(witnesses);
  n.children = {pairs};
  return make(std::move(n));
}

ValueSet ValueSet::forall_pairs(const Type& a, std::vector<Point> witnesses, const ValueSet& pairs) {
  if (auto s = projection_shortcut(false, a, witnesses, pairs)) return *s;
  Node n;
  n.kind = Kind::ForallPairs;
  n.type = a;
  n.q = pairs.q();
  n.points = std::move(witnesses);
  n.children = {pairs};
  return make(std::move(n));
}

// Membership ------------------------------------------------------------------------------

bool ValueSet::contains(const Sem& v) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::None: return false;
    case Kind::All: return true;
    case Kind::Finite: return n.lookup.count(flatten(v, n.type, n.q)) > 0;
    case Kind::Not: return !n.children[0].contains(v);
    case Kind::And: return n.children[0].contains(v) && n.children[1].contains(v);
    case Kind::Or: return n.children[0].contains(v) || n.children[1].contains(v);
    case Kind::Product:
      return n.children[0].contains(sem_first(v, n.q)) && n.children[1].contains(sem_second(v, n.q));
    case Kind::Forall:
      for (const auto& p : n.points) {
        if (!n.children[0].contains(apply(v, p.sem, n.q))) return false;
      }
      return true;
    case Kind::Preimage:
      return n.children[0].contains(apply(n.points[0].sem, v, n.q));
    case Kind::Exists:
      for (const auto& w : n.points) {
        if (n.children[0].contains(Sem::pair(v, w.sem))) return true;
      }
      return false;
    case Kind::ForallPairs:
      for (const auto& w : n.points) {
        if (!n.children[0].contains(Sem::pair(v, w.sem))) return false;
      }
      return true;
  }
  return false;
}

bool ValueSet::contains(const Value& v) const {
  if (v.type() != type() || v.q() != q()) throw Error(ErrorKind::SpaceMismatch, "value outside the set's space");
  if (kind() == Kind::Finite) return node_->lookup.count(v) > 0;
  return contains(Sem::flat(v));
}

std::optional<std::vector<std::uint64_t>> ValueSet::indices() const {
  auto size = try_space_size(type(), q());
  if (!size) return std::nullopt;
  std::vector<std::uint64_t> out;
  if (kind() == Kind::Finite) {
    for (const auto& v : elements()) out.push_back(v.index());
    std::sort(out.begin(), out.end());
    return out;
  }
  for (std::uint64_t i = 0; i < *size; ++i) {
    if ((i & 0xff) == 0xff) check_cancelled();
    if (contains(Value::from_index(type(), q(), i))) out.push_back(i);
  }
  return out;
}

bool set_equal(const ValueSet& a, const ValueSet& b) {
  require_same_space(a, b);
  if (auto ia = a.indices()) return *ia == *b.indices();
  auto normal = [](const ValueSet& s) -> std::optional<std::pair<bool, std::vector<Value>>> {
    switch (s.kind()) {
      case ValueSet::Kind::None: return std::pair{false, std::vector<Value>{}};
      case ValueSet::Kind::All: return std::pair{true, std::vector<Value>{}};
      case ValueSet::Kind::Finite: return std::pair{false, s.elements()};
      default:
        if (is_cofinite(s)) return std::pair{true, s.children()[0].elements()};
        return std::nullopt;
    }
  };
  auto na = normal(a);
  auto nb = normal(b);
  if (!na || !nb) throw Error(ErrorKind::BadParameters, "cannot compare symbolic sets over a large space");
  return *na == *nb;
}

// Recognizers and languages -------------------------------------------------------------

namespace {

Type closed_type(const Term& m) {
  try {
    return typecheck({}, m);
  } catch (const Error& e) {
    throw Error(ErrorKind::IllTyped, e.what());
  }
}

}  // namespace

bool Recognizer::member(const Term& m) const {
  Type t = closed_type(m);
  if (t != type()) throw Error(ErrorKind::TypeDisagreement, print_type(t) + " vs " + print_type(type()));
  return accepting_.contains(evaluate_closed(m, q()));
}

struct Language::Node {
  Op op = Op::All;
  Type type = Type::base();
  std::optional<Recognizer> recognizer;
  std::vector<Language> children;
};

Language Language::all(const Type& type) {
  Node n;
  n.op = Op::All;
  n.type = type;
  return Language(std::make_shared<const Node>(std::move(n)));
}

Language Language::none(const Type& type) {
  Node n;
  n.op = Op::None;
  n.type = type;
  return Language(std::make_shared<const Node>(std::move(n)));
}

Language Language::leaf(const Recognizer& r) {
  Node n;
  n.op = Op::Leaf;
  n.type = r.type();
  n.recognizer = r;
  return Language(std::make_shared<const Node>(std::move(n)));
}

Language Language::negate(const Language& l) {
  Node n;
  n.op = Op::Not;
  n.type = l.type();
  n.children = {l};
  return Language(std::make_shared<const Node>(std::move(n)));
}

namespace {

void require_same_type(const Language& a, const Language& b) {
  if (a.type() != b.type()) {
    throw Error(ErrorKind::TypeDisagreement,
                "languages over " + print_type(a.type()) + " and " + print_type(b.type()));
  }
}

}  // namespace

Language Language::conj(const Language& a, const Language& b) {
  require_same_type(a, b);
  Node n;
  n.op = Op::And;
  n.type = a.type();
  n.children = {a, b};
  return Language(std::make_shared<const Node>(std::move(n)));
}

Language Language::disj(const Language& a, const Language& b) {
  require_same_type(a, b);
  Node n;
  n.op = Op::Or;
  n.type = a.type();
  n.children = {a, b};
  return Language(std::make_shared<const Node>(std::move(n)));
}

const Type& Language::type() const { return node_->type; }
Language::Op Language::op() const { return node_->op; }
const Recognizer& Language::recognizer() const { return *node_->recognizer; }
const std::vector<Language>& Language::children() const { return node_->children; }

std::vector<Recognizer> Language::leaves() const {
  std::vector<Recognizer> out;
  if (op() == Op::Leaf) out.push_back(recognizer());
  for (const auto& c : children()) {
    auto sub = c.leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

}  // namespace holam
