#include "holam/semantics.hpp"

#include <algorithm>
#include <variant>

#include "holam/error.hpp"
#include "holam/kernel.hpp"
#include "holam/limits.hpp"
#include "holam/syntax.hpp"

namespace holam {

namespace {

constexpr std::uint64_t kOver = ~std::uint64_t{0};

std::uint64_t mul_capped(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  if (a == kOver || b == kOver) return (a == 0 || b == 0) ? 0 : kOver;
  if (a != 0 && b > cap / a) return kOver;
  std::uint64_t r = a * b;
  return r > cap ? kOver : r;
}

std::uint64_t add_capped(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  if (a == kOver || b == kOver) return kOver;
  std::uint64_t r = a + b;
  return (r < a || r > cap) ? kOver : r;
}

// Cardinality, or kOver when it exceeds `cap`.
std::uint64_t size_capped(const Type& t, unsigned q, std::uint64_t cap) {
  switch (t.kind()) {
    case Type::Kind::Base: return q > cap ? kOver : q;
    case Type::Kind::Unit: return 1;
    case Type::Kind::Product:
      return mul_capped(size_capped(t.left(), q, cap), size_capped(t.right(), q, cap), cap);
    case Type::Kind::Arrow: {
      std::uint64_t cod = size_capped(t.codomain(), q, cap);
      if (cod == 1) return 1;
      std::uint64_t dom = size_capped(t.domain(), q, cap);
      if (dom == kOver || cod == kOver) return kOver;
      std::uint64_t r = 1;
      for (std::uint64_t i = 0; i < dom; ++i) {
        r = mul_capped(r, cod, cap);
        if (r == kOver) return kOver;
      }
      return r;
    }
  }
  return kOver;
}

std::uint64_t cells_capped(const Type& t, unsigned q, std::uint64_t cap) {
  switch (t.kind()) {
    case Type::Kind::Base: return 1;
    case Type::Kind::Unit: return 0;
    case Type::Kind::Product:
      return add_capped(cells_capped(t.left(), q, cap), cells_capped(t.right(), q, cap), cap);
    case Type::Kind::Arrow: {
      std::uint64_t cod = cells_capped(t.codomain(), q, cap);
      if (cod == 0) return 0;
      return mul_capped(size_capped(t.domain(), q, cap), cod, cap);
    }
  }
  return kOver;
}

std::string space_name(const Type& t, unsigned q) {
  return "[[" + print_type(t) + "]]_" + std::to_string(q);
}

std::uint64_t checked_size(const Type& t, unsigned q) {
  if (q == 0) throw Error(ErrorKind::BadParameters, "state count must be positive");
  std::uint64_t s = size_capped(t, q, current_limits().space_budget);
  if (s == kOver) {
    throw Error(ErrorKind::SizeOverflow, space_name(t, q) + " exceeds the space budget of " +
                                             std::to_string(current_limits().space_budget));
  }
  return s;
}

std::uint64_t checked_cells(const Type& t, unsigned q) {
  if (q == 0) throw Error(ErrorKind::BadParameters, "state count must be positive");
  std::uint64_t c = cells_capped(t, q, current_limits().space_budget);
  if (c == kOver) {
    throw Error(ErrorKind::SizeOverflow, "flat values of " + space_name(t, q) +
                                             " exceed the space budget of " +
                                             std::to_string(current_limits().space_budget));
  }
  return c;
}

std::uint64_t index_at(const Type& t, unsigned q, const std::vector<std::uint32_t>& cells,
                       std::size_t& offset) {
  switch (t.kind()) {
    case Type::Kind::Base: return cells[offset++];
    case Type::Kind::Unit: return 0;
    case Type::Kind::Product: {
      std::uint64_t a = index_at(t.left(), q, cells, offset);
      std::uint64_t b = index_at(t.right(), q, cells, offset);
      return a * checked_size(t.right(), q) + b;
    }
    case Type::Kind::Arrow: {
      std::uint64_t rows = checked_size(t.domain(), q);
      std::uint64_t cod = checked_size(t.codomain(), q);
      std::uint64_t acc = 0;
      for (std::uint64_t d = 0; d < rows; ++d) acc = acc * cod + index_at(t.codomain(), q, cells, offset);
      return acc;
    }
  }
  return 0;
}

void write_index(const Type& t, unsigned q, std::uint64_t index, std::uint32_t* out) {
  switch (t.kind()) {
    case Type::Kind::Base:
      *out = static_cast<std::uint32_t>(index);
      return;
    case Type::Kind::Unit:
      return;
    case Type::Kind::Product: {
      std::uint64_t rs = checked_size(t.right(), q);
      write_index(t.left(), q, index / rs, out);
      write_index(t.right(), q, index % rs, out + checked_cells(t.left(), q));
      return;
    }
    case Type::Kind::Arrow: {
      std::uint64_t rows = checked_size(t.domain(), q);
      std::uint64_t cod = checked_size(t.codomain(), q);
      std::uint64_t row_cells = checked_cells(t.codomain(), q);
      for (std::uint64_t d = rows; d-- > 0;) {
        write_index(t.codomain(), q, index % cod, out + d * row_cells);
        index /= cod;
      }
      return;
    }
  }
}

std::size_t hash_cells(const std::vector<std::uint32_t>& cells, std::size_t seed) {
  std::size_t h = seed;
  for (auto c : cells) h = h * 1000003u ^ c;
  return h;
}

}  // namespace

std::uint64_t space_size(const Type& a, unsigned q) { return checked_size(a, q); }

std::optional<std::uint64_t> try_space_size(const Type& a, unsigned q) {
  if (q == 0) return std::nullopt;
  std::uint64_t s = size_capped(a, q, current_limits().space_budget);
  if (s == kOver) return std::nullopt;
  return s;
}

std::uint64_t cell_count(const Type& a, unsigned q) { return checked_cells(a, q); }

ValueSpace::ValueSpace(Type type, unsigned q)
    : type_(std::move(type)), q_(q), size_(checked_size(type_, q)), cells_(checked_cells(type_, q)) {}

// Values -------------------------------------------------------------------------

Value::Value(Type type, unsigned q, std::vector<std::uint32_t> cells)
    : type_(std::move(type)), q_(q) {
  if (cells.size() != checked_cells(type_, q)) {
    throw Error(ErrorKind::SpaceMismatch, "wrong number of cells for " + space_name(type_, q));
  }
  for (auto c : cells) {
    if (c >= q) throw Error(ErrorKind::SpaceMismatch, "state out of range in " + space_name(type_, q));
  }
  hash_ = hash_cells(cells, type_.hash() ^ q);
  cells_ = std::make_shared<const std::vector<std::uint32_t>>(std::move(cells));
}

Value Value::from_index(const Type& type, unsigned q, std::uint64_t index) {
  if (index >= checked_size(type, q)) {
    throw Error(ErrorKind::SpaceMismatch,
                "index " + std::to_string(index) + " outside " + space_name(type, q));
  }
  std::vector<std::uint32_t> cells(checked_cells(type, q));
  write_index(type, q, index, cells.data());
  return Value(type, q, std::move(cells));
}

Value Value::state(unsigned q, std::uint32_t s) { return Value(Type::base(), q, {s}); }

Value Value::unit(unsigned q) { return Value(Type::unit(), q, {}); }

Value Value::table(const Type& arrow, unsigned q, const std::vector<Value>& rows) {
  if (!arrow.is_arrow() || rows.size() != checked_size(arrow.domain(), q)) {
    throw Error(ErrorKind::SpaceMismatch, "table does not match " + space_name(arrow, q));
  }
  std::vector<std::uint32_t> cells;
  for (const auto& r : rows) {
    if (r.type() != arrow.codomain() || r.q() != q) {
      throw Error(ErrorKind::SpaceMismatch, "table row outside the codomain");
    }
    cells.insert(cells.end(), r.cells().begin(), r.cells().end());
  }
  return Value(arrow, q, std::move(cells));
}

std::uint64_t Value::index() const {
  checked_size(type_, q_);
  std::size_t offset = 0;
  return index_at(type_, q_, *cells_, offset);
}

bool operator==(const Value& a, const Value& b) {
  return a.hash_ == b.hash_ && a.q_ == b.q_ && a.type_ == b.type_ && *a.cells_ == *b.cells_;
}

bool operator<(const Value& a, const Value& b) { return *a.cells_ < *b.cells_; }

std::uint64_t tuple_index(const std::vector<std::uint32_t>& states, unsigned q) {
  std::uint64_t idx = 0;
  for (auto s : states) idx = idx * q + s;
  return idx;
}

namespace {

Value slice(const Value& v, const Type& type, std::size_t offset) {
  std::size_t n = checked_cells(type, v.q());
  std::vector<std::uint32_t> cells(v.cells().begin() + offset, v.cells().begin() + offset + n);
  return Value(type, v.q(), std::move(cells));
}

}  // namespace

Value apply_value(const Value& f, const Value& a) {
  if (!f.type().is_arrow() || f.type().domain() != a.type() || f.q() != a.q()) {
    throw Error(ErrorKind::SpaceMismatch, "cannot apply a value of " + space_name(f.type(), f.q()) +
                                              " to one of " + space_name(a.type(), a.q()));
  }
  std::uint64_t row = a.index();
  return slice(f, f.type().codomain(), row * checked_cells(f.type().codomain(), f.q()));
}

Value pair_value(const Value& a, const Value& b) {
  if (a.q() != b.q()) throw Error(ErrorKind::SpaceMismatch, "pair components at different q");
  std::vector<std::uint32_t> cells = a.cells();
  cells.insert(cells.end(), b.cells().begin(), b.cells().end());
  return Value(Type::product(a.type(), b.type()), a.q(), std::move(cells));
}

Value first_value(const Value& p) {
  if (!p.type().is_product()) throw Error(ErrorKind::SpaceMismatch, "not a pair value");
  return slice(p, p.type().left(), 0);
}

Value second_value(const Value& p) {
  if (!p.type().is_product()) throw Error(ErrorKind::SpaceMismatch, "not a pair value");
  return slice(p, p.type().right(), checked_cells(p.type().left(), p.q()));
}

// Lazy evaluation ----------------------------------------------------------------

struct SemEnv {
  Sem value;
  std::shared_ptr<const SemEnv> next;
};
using SemEnvPtr = std::shared_ptr<const SemEnv>;

struct StateN {
  std::uint32_t s;
};
struct UnitN {};
struct PairN {
  Sem first;
  Sem second;
};
struct ClosureN {
  Term body;
  SemEnvPtr env;
};
struct FlatN {
  std::shared_ptr<const std::vector<std::uint32_t>> cells;
  std::size_t offset;
  Type type;
};

struct NativeN {
  std::function<Sem(const Sem&)> fn;
};

struct Sem::Node {
  std::variant<StateN, UnitN, PairN, ClosureN, FlatN, NativeN> v;
};

struct SemAccess {
  template <class T>
  static Sem make(T&& x) {
    return Sem(std::make_shared<const Sem::Node>(Sem::Node{std::forward<T>(x)}));
  }
};

Sem Sem::state(std::uint32_t s) { return SemAccess::make(StateN{s}); }
Sem Sem::unit() { return SemAccess::make(UnitN{}); }
Sem Sem::pair(Sem first, Sem second) { return SemAccess::make(PairN{std::move(first), std::move(second)}); }
Sem Sem::flat(const Value& v) { return SemAccess::make(FlatN{v.shared_cells(), 0, v.type()}); }
Sem Sem::native(std::function<Sem(const Sem&)> fn) { return SemAccess::make(NativeN{std::move(fn)}); }

namespace {

Sem eval(const Term& t, const SemEnvPtr& env, unsigned q) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      const SemEnv* e = env.get();
      for (std::size_t i = 0; i < t.index(); ++i) {
        if (!e) break;
        e = e->next.get();
      }
      if (!e) throw Error(ErrorKind::IllTyped, "unbound variable during evaluation");
      return e->value;
    }
    case Term::Kind::Lam:
      return SemAccess::make(ClosureN{t.body(), env});
    case Term::Kind::App:
      return apply(eval(t.fn(), env, q), eval(t.arg(), env, q), q);
    case Term::Kind::Pair:
      return Sem::pair(eval(t.first(), env, q), eval(t.second(), env, q));
    case Term::Kind::Fst:
      return sem_first(eval(t.operand(), env, q), q);
    case Term::Kind::Snd:
      return sem_second(eval(t.operand(), env, q), q);
    case Term::Kind::Unit:
      return Sem::unit();
  }
  throw Error(ErrorKind::IllTyped, "unknown term node");
}

Sem flat_at(const FlatN& f, const Type& type, std::size_t offset) {
  return SemAccess::make(FlatN{f.cells, offset, type});
}

std::uint64_t sem_index(const Sem& v, const Type& type, unsigned q) {
  const auto& n = v.node().v;
  if (const auto* s = std::get_if<StateN>(&n)) return s->s;
  if (const auto* f = std::get_if<FlatN>(&n)) {
    if (f->type == type) {
      std::size_t offset = f->offset;
      return index_at(type, q, *f->cells, offset);
    }
  }
  return flatten(v, type, q).index();
}

void flatten_into(const Sem& v, const Type& type, unsigned q, std::vector<std::uint32_t>& out) {
  const auto& n = v.node().v;
  if (const auto* f = std::get_if<FlatN>(&n)) {
    if (f->type == type) {
      std::size_t len = checked_cells(type, q);
      out.insert(out.end(), f->cells->begin() + f->offset, f->cells->begin() + f->offset + len);
      return;
    }
  }
  switch (type.kind()) {
    case Type::Kind::Base:
      out.push_back(sem_state(v));
      return;
    case Type::Kind::Unit:
      return;
    case Type::Kind::Product:
      flatten_into(sem_first(v, q), type.left(), q, out);
      flatten_into(sem_second(v, q), type.right(), q, out);
      return;
    case Type::Kind::Arrow: {
      std::uint64_t rows = checked_size(type.domain(), q);
      for (std::uint64_t d = 0; d < rows; ++d) {
        if ((d & 0x3ff) == 0x3ff) check_cancelled();
        Sem arg = type.domain().is_base() ? Sem::state(static_cast<std::uint32_t>(d))
                                          : Sem::flat(Value::from_index(type.domain(), q, d));
        flatten_into(apply(v, arg, q), type.codomain(), q, out);
      }
      return;
    }
  }
}

}  // namespace

Sem apply(const Sem& fn, const Sem& arg, unsigned q) {
  const auto& n = fn.node().v;
  if (const auto* c = std::get_if<ClosureN>(&n)) {
    return eval(c->body, std::make_shared<const SemEnv>(SemEnv{arg, c->env}), q);
  }
  if (const auto* f = std::get_if<FlatN>(&n)) {
    if (!f->type.is_arrow()) throw Error(ErrorKind::SpaceMismatch, "applying a non-function value");
    const Type& cod = f->type.codomain();
    std::uint64_t row = sem_index(arg, f->type.domain(), q);
    return flat_at(*f, cod, f->offset + row * checked_cells(cod, q));
  }
  if (const auto* f = std::get_if<NativeN>(&n)) return f->fn(arg);
  throw Error(ErrorKind::SpaceMismatch, "applying a non-function value");
}

Sem sem_first(const Sem& p, unsigned) {
  const auto& n = p.node().v;
  if (const auto* pr = std::get_if<PairN>(&n)) return pr->first;
  if (const auto* f = std::get_if<FlatN>(&n)) {
    if (f->type.is_product()) return flat_at(*f, f->type.left(), f->offset);
  }
  throw Error(ErrorKind::SpaceMismatch, "projection from a non-pair value");
}

Sem sem_second(const Sem& p, unsigned q) {
  const auto& n = p.node().v;
  if (const auto* pr = std::get_if<PairN>(&n)) return pr->second;
  if (const auto* f = std::get_if<FlatN>(&n)) {
    if (f->type.is_product()) {
      return flat_at(*f, f->type.right(), f->offset + checked_cells(f->type.left(), q));
    }
  }
  throw Error(ErrorKind::SpaceMismatch, "projection from a non-pair value");
}

std::uint32_t sem_state(const Sem& v) {
  const auto& n = v.node().v;
  if (const auto* s = std::get_if<StateN>(&n)) return s->s;
  if (const auto* f = std::get_if<FlatN>(&n)) {
    if (f->type.is_base()) return (*f->cells)[f->offset];
  }
  throw Error(ErrorKind::SpaceMismatch, "expected a base state");
}

Sem evaluate(const Term& t, const std::vector<Sem>& env, unsigned q) {
  if (q == 0) throw Error(ErrorKind::BadParameters, "state count must be positive");
  SemEnvPtr e;
  for (const auto& v : env) e = std::make_shared<const SemEnv>(SemEnv{v, e});
  return eval(t, e, q);
}

Sem evaluate_closed(const Term& t, unsigned q) { return evaluate(t, {}, q); }

Value flatten(const Sem& v, const Type& type, unsigned q) {
  std::vector<std::uint32_t> cells;
  cells.reserve(checked_cells(type, q));
  flatten_into(v, type, q, cells);
  return Value(type, q, std::move(cells));
}

Value interpret(const Term& t, const Context& ctx, const std::vector<Value>& env, unsigned q) {
  Type type = [&] {
    try {
      return typecheck(ctx, t);
    } catch (const Error& e) {
      throw Error(ErrorKind::IllTyped, e.what());
    }
  }();
  if (env.size() != ctx.size()) {
    throw Error(ErrorKind::SpaceMismatch, "environment does not match the context");
  }
  std::vector<Sem> sems;
  for (std::size_t i = 0; i < env.size(); ++i) {
    if (env[i].type() != ctx.entries()[i].second || env[i].q() != q) {
      throw Error(ErrorKind::SpaceMismatch, "environment value for '" + ctx.entries()[i].first +
                                                "' lies in the wrong space");
    }
    sems.push_back(Sem::flat(env[i]));
  }
  return flatten(evaluate(t, sems, q), type, q);
}

Value interpret_closed(const Term& t, unsigned q) { return interpret(t, {}, {}, q); }

bool sem_eq(const Term& m, const Term& n, unsigned q) {
  Type tm = [&] {
    try {
      return typecheck({}, m);
    } catch (const Error& e) {
      throw Error(ErrorKind::IllTyped, e.what());
    }
  }();
  Type tn = [&] {
    try {
      return typecheck({}, n);
    } catch (const Error& e) {
      throw Error(ErrorKind::IllTyped, e.what());
    }
  }();
  if (tm != tn) throw Error(ErrorKind::TypeDisagreement, print_type(tm) + " vs " + print_type(tn));
  return flatten(evaluate_closed(m, q), tm, q) == flatten(evaluate_closed(n, q), tn, q);
}

}  // namespace holam
