#include "holam/reglang.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "holam/error.hpp"
#include "holam/kernel.hpp"
#include "holam/limits.hpp"
#include "holam/syntax.hpp"

namespace holam {

const char* to_string(Containment::Verdict v) {
  switch (v) {
    case Containment::Verdict::True: return "true";
    case Containment::Verdict::False: return "false";
    case Containment::Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

// Definable values ------------------------------------------------------------------------

std::shared_ptr<const DefSet> DefProvider::get(const Type& a, unsigned q) {
  std::lock_guard<std::mutex> lock(mutex_);
  for (const auto& [key, d] : cache_) {
    if (key.first == a && key.second == q) return d;
  }
  auto d = std::make_shared<const DefSet>(def_set(a, q, strategy_));
  cache_.push_back({{a, q}, d});
  return d;
}

namespace {

Type closed_type(const Term& m) {
  try {
    return typecheck({}, m);
  } catch (const Error& e) {
    throw Error(ErrorKind::IllTyped, e.what());
  }
}

Point entry_point(const DefEntry& e) {
  return Point{e.value.type(), e.value.q(), Sem::flat(e.value), e.representative, e.value};
}

std::shared_ptr<const DefSet> needed_defs(DefProvider& defs, const Type& a, unsigned q) {
  try {
    return defs.get(a, q);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SizeOverflow) throw;
    throw Error(ErrorKind::NormalizationNeedsDefs, "definable values of " + print_type(a) + " at q=" +
                                                       std::to_string(q) + " are out of reach: " + e.what());
  }
}

using Tuples = std::set<std::vector<std::uint32_t>>;

// Probe tuples read off the structure of `s`. Nodes whose dependence on the word is not
// visible (preimages, explicit sets, ...) set `traced` and are probed by tracing.
Tuples probes_at(const ValueSet& s, std::size_t remaining, bool& traced) {
  if (remaining == 0) return {{}};
  switch (s.kind()) {
    case ValueSet::Kind::None:
    case ValueSet::Kind::All:
      return {};
    case ValueSet::Kind::Not:
      return probes_at(s.children()[0], remaining, traced);
    case ValueSet::Kind::And:
    case ValueSet::Kind::Or: {
      Tuples a = probes_at(s.children()[0], remaining, traced);
      Tuples b = probes_at(s.children()[1], remaining, traced);
      a.insert(b.begin(), b.end());
      return a;
    }
    case ValueSet::Kind::Forall: {
      Tuples sub = probes_at(s.children()[0], remaining - 1, traced);
      Tuples out;
      for (const auto& p : s.points()) {
        std::uint32_t d = endo_index(p.flat().cells(), s.q());
        for (const auto& t : sub) {
          std::vector<std::uint32_t> full{d};
          full.insert(full.end(), t.begin(), t.end());
          out.insert(std::move(full));
        }
      }
      return out;
    }
    default:
      traced = true;
      return {};
  }
}

// The value of `w` as a function that records every argument tuple it is applied to.
Sem traced_word(const Word& w, std::size_t letters, unsigned q, std::vector<std::uint32_t> prefix,
                Tuples& seen) {
  return Sem::native([w, letters, q, prefix, &seen](const Sem& arg) {
    std::vector<std::uint32_t> t = prefix;
    t.push_back(static_cast<std::uint32_t>(flatten(arg, endo_type(), q).index()));
    if (t.size() < letters) return traced_word(w, letters, q, std::move(t), seen);
    seen.insert(t);
    std::vector<std::vector<std::uint32_t>> tables;
    for (auto d : t) tables.push_back(endo_table(d, q));
    std::vector<std::uint32_t> cells(q);
    for (std::uint32_t x = 0; x < q; ++x) {
      std::uint32_t y = x;
      for (auto c : w) y = tables[c][y];
      cells[x] = y;
    }
    return Sem::flat(Value(endo_type(), q, std::move(cells)));
  });
}

// Word automaton whose observations decide membership in every set. Probes start from
// the structure of the sets; traced sets are evaluated on each state's representative
// and the probes they touch are added until nothing new appears. Evaluation only sees
// a word through its applications, so two words agreeing on the probes touched by one
// of them get the same answer.
WordAutomaton sets_word_automaton(std::size_t letters, const std::vector<ValueSet>& sets) {
  std::map<unsigned, Tuples> by_q;
  std::vector<const ValueSet*> traced_sets;
  for (const auto& s : sets) {
    bool traced = false;
    Tuples t = probes_at(s, letters, traced);
    by_q[s.q()].insert(t.begin(), t.end());
    if (traced) traced_sets.push_back(&s);
  }
  while (true) {
    std::vector<ProbeGroup> groups;
    for (auto& [q, t] : by_q) groups.push_back(ProbeGroup{q, {t.begin(), t.end()}});
    WordAutomaton aut(letters, std::move(groups));
    bool grown = false;
    for (const ValueSet* s : traced_sets) {
      Tuples& known = by_q[s->q()];
      for (std::size_t st = 0; st < aut.state_count(); ++st) {
        Tuples seen;
        s->contains(traced_word(aut.representative(st), letters, s->q(), {}, seen));
        for (const auto& t : seen) grown = known.insert(t).second || grown;
      }
    }
    if (!grown) return aut;
  }
}

std::size_t require_word_type(const Type& t) {
  std::size_t n = word_letters(t);
  if (n == 0) throw Error(ErrorKind::NotWordType, print_type(t) + " is not a word type");
  return n;
}

// Finite languages are enumerated explicitly; beyond this many words the full
// definable set is used instead.
constexpr std::size_t kMaxListedWords = 4096;

std::optional<std::vector<Word>> finite_language(const WordAutomaton& aut, const std::vector<bool>& accepting) {
  const std::size_t n = aut.state_count();
  const std::size_t letters = aut.letters();
  std::vector<std::vector<std::size_t>> reverse(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t c = 0; c < letters; ++c) reverse[aut.next(s, c)].push_back(s);
  }
  std::vector<bool> useful(accepting);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (accepting[s]) stack.push_back(s);
  }
  while (!stack.empty()) {
    std::size_t s = stack.back();
    stack.pop_back();
    for (auto p : reverse[s]) {
      if (!useful[p]) {
        useful[p] = true;
        stack.push_back(p);
      }
    }
  }
  if (!useful[aut.initial()]) return std::vector<Word>{};

  // A cycle through useful states means infinitely many accepted words.
  std::vector<int> colour(n, 0);
  std::function<bool(std::size_t)> cyclic = [&](std::size_t s) {
    colour[s] = 1;
    for (std::size_t c = 0; c < letters; ++c) {
      std::size_t t = aut.next(s, c);
      if (!useful[t]) continue;
      if (colour[t] == 1) return true;
      if (colour[t] == 0 && cyclic(t)) return true;
    }
    colour[s] = 2;
    return false;
  };
  if (cyclic(aut.initial())) return std::nullopt;

  std::vector<Word> words;
  Word cur;
  bool overflow = false;
  std::function<void(std::size_t)> walk = [&](std::size_t s) {
    if (overflow) return;
    if (accepting[s]) {
      if (words.size() == kMaxListedWords) {
        overflow = true;
        return;
      }
      words.push_back(cur);
    }
    for (std::size_t c = 0; c < letters; ++c) {
      std::size_t t = aut.next(s, c);
      if (!useful[t]) continue;
      cur.push_back(c);
      walk(t);
      cur.pop_back();
    }
  };
  walk(aut.initial());
  if (overflow) return std::nullopt;
  return words;
}

}  // namespace

WordAutomaton language_word_automaton(const Language& l) {
  const std::size_t n = require_word_type(l.type());
  std::vector<ValueSet> sets;
  for (const auto& r : l.leaves()) sets.push_back(r.accepting());
  return sets_word_automaton(n, sets);
}

Reported<std::vector<Point>> definable_in(const ValueSet& f, DefProvider& defs) {
  const unsigned q = f.q();
  if (std::size_t n = word_letters(f.type()); n > 0) {
    try {
      WordAutomaton aut = sets_word_automaton(n, {f});
      const Alphabet alphabet = Alphabet::standard(n);
      std::vector<bool> accepting(aut.state_count());
      for (std::size_t s = 0; s < aut.state_count(); ++s) {
        accepting[s] = f.contains(evaluate_closed(church_word(alphabet, aut.representative(s)), q));
      }
      if (auto words = finite_language(aut, accepting)) {
        std::vector<Point> points;
        for (const auto& w : *words) points.push_back(Point::of_term(church_word(alphabet, w), q));
        return {std::move(points), Exactness::Exact};
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SizeOverflow) throw;
    }
  }
  auto d = needed_defs(defs, f.type(), q);
  std::vector<Point> points;
  for (const auto& e : d->entries()) {
    if (f.contains(e.value)) points.push_back(entry_point(e));
  }
  return {std::move(points), d->exactness()};
}

// Membership and Boolean structure -----------------------------------------------------------

bool member(const Language& l, const Term& m) {
  Type t = closed_type(m);
  if (t != l.type()) throw Error(ErrorKind::TypeDisagreement, print_type(t) + " vs " + print_type(l.type()));
  std::map<unsigned, Sem> at_q;
  std::function<bool(const Language&)> eval = [&](const Language& x) -> bool {
    switch (x.op()) {
      case Language::Op::All: return true;
      case Language::Op::None: return false;
      case Language::Op::Leaf: {
        unsigned q = x.recognizer().q();
        auto it = at_q.find(q);
        if (it == at_q.end()) it = at_q.emplace(q, evaluate_closed(m, q)).first;
        return x.recognizer().accepting().contains(it->second);
      }
      case Language::Op::Not: return !eval(x.children()[0]);
      case Language::Op::And: return eval(x.children()[0]) && eval(x.children()[1]);
      case Language::Op::Or: return eval(x.children()[0]) || eval(x.children()[1]);
    }
    return false;
  };
  return eval(l);
}

Language boolean_combine(BoolOp op, const std::vector<Language>& args) {
  if (op == BoolOp::Not) {
    if (args.size() != 1) throw Error(ErrorKind::BadParameters, "negation takes one language");
    return Language::negate(args[0]);
  }
  if (args.empty()) throw Error(ErrorKind::BadParameters, "empty Boolean combination");
  Language acc = args[0];
  for (std::size_t i = 1; i < args.size(); ++i) {
    acc = op == BoolOp::And ? Language::conj(acc, args[i]) : Language::disj(acc, args[i]);
  }
  return acc;
}

// Lifting ---------------------------------------------------------------------------------------
//
// A definable value at q2 is related to its value at q by the logical relation generated
// by x' ~ x ⟺ ρ(x') = x, with ρ(x') = x' for x' < q and 0 otherwise. Points at
// first-order types embed as ι∘p∘ρ, points with terms are re-evaluated, and a set over
// a first-order type pulls back along restriction r ↦ ρ∘r∘ι.

namespace {

std::uint32_t rho(std::uint32_t x, unsigned q) { return x < q ? x : 0; }

bool embeddable(const Type& t) {
  if (t.is_unit() || is_first_order(t)) return true;
  return t.is_product() && embeddable(t.left()) && embeddable(t.right());
}

void embed_cells(const Type& t, const std::uint32_t* cells, unsigned q, unsigned q2,
                 std::vector<std::uint32_t>& out) {
  std::size_t k = 0;
  if (t.is_product()) {
    embed_cells(t.left(), cells, q, q2, out);
    embed_cells(t.right(), cells + cell_count(t.left(), q), q, q2, out);
    return;
  }
  if (t.is_unit()) return;
  is_first_order(t, &k);
  std::vector<std::uint32_t> args(k, 0);
  std::uint64_t rows = 1;
  for (std::size_t i = 0; i < k; ++i) rows *= q2;
  for (std::uint64_t r = 0; r < rows; ++r) {
    std::vector<std::uint32_t> restricted(k);
    for (std::size_t i = 0; i < k; ++i) restricted[i] = rho(args[i], q);
    out.push_back(cells[tuple_index(restricted, q)]);
    for (std::size_t i = k; i-- > 0;) {
      if (++args[i] < q2) break;
      args[i] = 0;
    }
  }
}

Value embed(const Value& v, unsigned q2) {
  std::vector<std::uint32_t> cells;
  embed_cells(v.type(), v.cells().data(), v.q(), q2, cells);
  return Value(v.type(), q2, std::move(cells));
}

void restrict_cells(const Type& t, const std::uint32_t* cells, unsigned q2, unsigned q,
                    std::vector<std::uint32_t>& out) {
  std::size_t k = 0;
  if (t.is_product()) {
    restrict_cells(t.left(), cells, q2, q, out);
    restrict_cells(t.right(), cells + cell_count(t.left(), q2), q2, q, out);
    return;
  }
  if (t.is_unit()) return;
  is_first_order(t, &k);
  std::vector<std::uint32_t> args(k, 0);
  std::uint64_t rows = 1;
  for (std::size_t i = 0; i < k; ++i) rows *= q;
  for (std::uint64_t r = 0; r < rows; ++r) {
    out.push_back(rho(cells[tuple_index(args, q2)], q));
    for (std::size_t i = k; i-- > 0;) {
      if (++args[i] < q) break;
      args[i] = 0;
    }
  }
}

Value restrict_value(const Value& v, unsigned q) {
  std::vector<std::uint32_t> cells;
  restrict_cells(v.type(), v.cells().data(), v.q(), q, cells);
  return Value(v.type(), q, std::move(cells));
}

std::optional<Point> lift_point(const Point& p, unsigned q2) {
  if (p.term) return Point::of_term(*p.term, q2);
  if (!embeddable(p.type)) return std::nullopt;
  return Point::of_value(embed(p.flat(), q2));
}

std::optional<std::vector<Point>> lift_points(const std::vector<Point>& ps, unsigned q2) {
  std::vector<Point> out;
  for (const auto& p : ps) {
    auto l = lift_point(p, q2);
    if (!l) return std::nullopt;
    out.push_back(std::move(*l));
  }
  return out;
}

constexpr std::uint64_t kMaxLiftConstraints = 1 << 16;

std::optional<ValueSet> lift_finite(const Type& t, const std::vector<Value>& elements, unsigned q,
                                    unsigned q2) {
  if (embeddable(t)) {
    auto size = try_space_size(t, q2);
    if (!size) return std::nullopt;
    std::unordered_set<Value, ValueHash> wanted(elements.begin(), elements.end());
    std::vector<Value> kept;
    for (std::uint64_t i = 0; i < *size; ++i) {
      Value v = Value::from_index(t, q2, i);
      if (wanted.count(restrict_value(v, q))) kept.push_back(std::move(v));
    }
    return ValueSet::finite(t, q2, std::move(kept));
  }
  if (t.is_arrow() && embeddable(t.domain())) {
    auto dom = try_space_size(t.domain(), q);
    if (!dom || *dom * elements.size() > kMaxLiftConstraints) return std::nullopt;
    ValueSet result = ValueSet::none(t, q2);
    for (const auto& v : elements) {
      ValueSet one = ValueSet::all(t, q2);
      for (std::uint64_t i = 0; i < *dom; ++i) {
        Value d = Value::from_index(t.domain(), q, i);
        auto inner = lift_finite(t.codomain(), {apply_value(v, d)}, q, q2);
        if (!inner) return std::nullopt;
        one = ValueSet::meet(one, ValueSet::forall_at(t, {Point::of_value(embed(d, q2))}, *inner));
      }
      result = ValueSet::join(result, one);
    }
    return result;
  }
  if (t.is_product()) {
    ValueSet result = ValueSet::none(t, q2);
    for (const auto& v : elements) {
      auto a = lift_finite(t.left(), {first_value(v)}, q, q2);
      auto b = lift_finite(t.right(), {second_value(v)}, q, q2);
      if (!a || !b) return std::nullopt;
      result = ValueSet::join(result, ValueSet::product(*a, *b));
    }
    return result;
  }
  return std::nullopt;
}

std::optional<ValueSet> lift_set(const ValueSet& s, unsigned q2) {
  const Type& t = s.type();
  const unsigned q = s.q();
  auto child = [&](std::size_t i) { return lift_set(s.children()[i], q2); };
  switch (s.kind()) {
    case ValueSet::Kind::None: return ValueSet::none(t, q2);
    case ValueSet::Kind::All: return ValueSet::all(t, q2);
    case ValueSet::Kind::Finite: return lift_finite(t, s.elements(), q, q2);
    case ValueSet::Kind::Not: {
      auto c = child(0);
      if (!c) return std::nullopt;
      return ValueSet::complement(*c);
    }
    case ValueSet::Kind::And:
    case ValueSet::Kind::Or:
    case ValueSet::Kind::Product: {
      auto a = child(0);
      auto b = child(1);
      if (!a || !b) return std::nullopt;
      if (s.kind() == ValueSet::Kind::And) return ValueSet::meet(*a, *b);
      if (s.kind() == ValueSet::Kind::Or) return ValueSet::join(*a, *b);
      return ValueSet::product(*a, *b);
    }
    case ValueSet::Kind::Forall:
    case ValueSet::Kind::Preimage:
    case ValueSet::Kind::Exists:
    case ValueSet::Kind::ForallPairs: {
      auto c = child(0);
      auto ps = lift_points(s.points(), q2);
      if (!c || !ps) return std::nullopt;
      switch (s.kind()) {
        case ValueSet::Kind::Forall: return ValueSet::forall_at(t, std::move(*ps), *c);
        case ValueSet::Kind::Preimage: return ValueSet::preimage((*ps)[0], *c);
        case ValueSet::Kind::Exists: return ValueSet::exists_pairs(t, std::move(*ps), *c);
        default: return ValueSet::forall_pairs(t, std::move(*ps), *c);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Reported<Recognizer> lift_to_q(const Recognizer& r, unsigned q2, DefProvider& defs) {
  if (q2 < r.q()) {
    throw Error(ErrorKind::StateCountDecrease, "cannot lift from q=" + std::to_string(r.q()) +
                                                   " to q=" + std::to_string(q2));
  }
  if (q2 == r.q()) return {r, Exactness::Exact};
  if (auto s = lift_set(r.accepting(), q2)) return {Recognizer(*s), Exactness::Exact};
  auto d = defs.get(r.type(), q2);
  std::vector<Value> kept;
  for (const auto& e : d->entries()) {
    if (r.accepting().contains(evaluate_closed(e.representative, r.q()))) kept.push_back(e.value);
  }
  return {Recognizer(ValueSet::finite(r.type(), q2, std::move(kept))), d->exactness()};
}

namespace {

unsigned max_leaf_q(const Language& l) {
  unsigned q = 1;
  for (const auto& r : l.leaves()) q = std::max(q, r.q());
  return q;
}

Reported<ValueSet> normalize_at(const Language& l, unsigned q, DefProvider& defs) {
  switch (l.op()) {
    case Language::Op::All: return {ValueSet::all(l.type(), q), Exactness::Exact};
    case Language::Op::None: return {ValueSet::none(l.type(), q), Exactness::Exact};
    case Language::Op::Leaf: {
      auto r = lift_to_q(l.recognizer(), q, defs);
      return {r.value.accepting(), r.exactness};
    }
    case Language::Op::Not: {
      auto c = normalize_at(l.children()[0], q, defs);
      return {ValueSet::complement(c.value), c.exactness};
    }
    case Language::Op::And:
    case Language::Op::Or: {
      auto a = normalize_at(l.children()[0], q, defs);
      auto b = normalize_at(l.children()[1], q, defs);
      ValueSet s = l.op() == Language::Op::And ? ValueSet::meet(a.value, b.value) : ValueSet::join(a.value, b.value);
      return {s, a.exactness & b.exactness};
    }
  }
  throw Error(ErrorKind::BadParameters, "unknown language node");
}

Reported<Recognizer> recognizer_at(const Language& l, unsigned q, DefProvider& defs) {
  auto s = normalize_at(l, q, defs);
  return {Recognizer(s.value), s.exactness};
}

}  // namespace

Reported<Recognizer> to_recognizer(const Language& l, DefProvider& defs) {
  return recognizer_at(l, max_leaf_q(l), defs);
}

// Closure operations ---------------------------------------------------------------------------

Reported<Language> product_lang(const Language& la, const Language& lb, DefProvider& defs) {
  const unsigned q = std::max(max_leaf_q(la), max_leaf_q(lb));
  auto a = recognizer_at(la, q, defs);
  auto b = recognizer_at(lb, q, defs);
  return {Language::leaf(Recognizer(ValueSet::product(a.value.accepting(), b.value.accepting()))),
          a.exactness & b.exactness};
}

Reported<Language> arrow_lang(const Language& la, const Language& lb, DefProvider& defs) {
  const unsigned q = std::max(max_leaf_q(la), max_leaf_q(lb));
  auto a = recognizer_at(la, q, defs);
  auto b = recognizer_at(lb, q, defs);
  auto points = definable_in(a.value.accepting(), defs);
  Type arrow = Type::arrow(la.type(), lb.type());
  ValueSet f = ValueSet::forall_at(arrow, std::move(points.value), b.value.accepting());
  return {Language::leaf(Recognizer(f)), a.exactness & b.exactness & points.exactness};
}

Language pullback(const Term& m, const Language& lb) {
  Type t = closed_type(m);
  if (!t.is_arrow() || t.codomain() != lb.type()) {
    throw Error(ErrorKind::TypeMismatch,
                "cannot pull back along " + print_type(t) + " into " + print_type(lb.type()));
  }
  std::map<unsigned, Point> at_q;
  std::function<Language(const Language&)> go = [&](const Language& l) -> Language {
    switch (l.op()) {
      case Language::Op::All: return Language::all(t.domain());
      case Language::Op::None: return Language::none(t.domain());
      case Language::Op::Leaf: {
        unsigned q = l.recognizer().q();
        auto it = at_q.find(q);
        if (it == at_q.end()) it = at_q.emplace(q, Point::of_term(m, q)).first;
        return Language::leaf(Recognizer(ValueSet::preimage(it->second, l.recognizer().accepting())));
      }
      case Language::Op::Not: return Language::negate(go(l.children()[0]));
      case Language::Op::And: return Language::conj(go(l.children()[0]), go(l.children()[1]));
      case Language::Op::Or: return Language::disj(go(l.children()[0]), go(l.children()[1]));
    }
    throw Error(ErrorKind::BadParameters, "unknown language node");
  };
  return go(lb);
}

Containment contains(const Language& l1, const Language& l2, DefProvider& defs) {
  if (l1.type() != l2.type()) {
    throw Error(ErrorKind::TypeDisagreement, print_type(l1.type()) + " vs " + print_type(l2.type()));
  }
  if (std::size_t n = word_letters(l1.type()); n > 0) {
    try {
      WordAutomaton aut = language_word_automaton(Language::conj(l1, l2));
      const Alphabet alphabet = Alphabet::standard(n);
      for (std::size_t s = 0; s < aut.state_count(); ++s) {
        Term w = church_word(alphabet, aut.representative(s));
        if (member(l1, w) && !member(l2, w)) return {Containment::Verdict::False, w};
      }
      return {Containment::Verdict::True, std::nullopt};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SizeOverflow) throw;
    }
  }
  const unsigned q = std::max(max_leaf_q(l1), max_leaf_q(l2));
  auto d = needed_defs(defs, l1.type(), q);
  for (const auto& e : d->entries()) {
    if (member(l1, e.representative) && !member(l2, e.representative)) {
      return {Containment::Verdict::False, e.representative};
    }
  }
  if (d->exactness() == Exactness::Exact) return {Containment::Verdict::True, std::nullopt};
  return {Containment::Verdict::Unknown, std::nullopt};
}

Reported<Language> quantify_along_projection(const Language& l, Quantifier mode, DefProvider& defs) {
  if (!l.type().is_product()) {
    throw Error(ErrorKind::TypeMismatch, print_type(l.type()) + " is not a product type");
  }
  auto r = to_recognizer(l, defs);
  const Type& a = l.type().left();
  const Type& b = l.type().right();
  auto d = needed_defs(defs, b, r.value.q());
  std::vector<Point> witnesses;
  for (const auto& e : d->entries()) witnesses.push_back(entry_point(e));
  ValueSet f = mode == Quantifier::Exists
                   ? ValueSet::exists_pairs(a, std::move(witnesses), r.value.accepting())
                   : ValueSet::forall_pairs(a, std::move(witnesses), r.value.accepting());
  return {Language::leaf(Recognizer(f)), r.exactness & d->exactness()};
}

std::pair<std::size_t, std::size_t> diagonal_non_openness_witness(unsigned q, std::size_t budget) {
  if (budget == 0) throw Error(ErrorKind::BadParameters, "search budget must be positive");
  std::unordered_map<Value, std::size_t, ValueHash> seen;
  for (std::size_t m = 0; m <= budget; ++m) {
    check_cancelled();
    Value v = interpret_closed(church_numeral(m), q);
    auto [it, fresh] = seen.emplace(v, m);
    if (!fresh) return {it->second, m};
  }
  throw Error(ErrorKind::BudgetExhausted, "no colliding numerals up to " + std::to_string(budget) +
                                              " at q=" + std::to_string(q));
}

}  // namespace holam
