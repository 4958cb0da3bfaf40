#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "holam/term.hpp"
#include "holam/type.hpp"

namespace holam {

// Value spaces ---------------------------------------------------------------------
//
// ⟦o⟧_q = {0..q-1}, ⟦1⟧ = {()}, ⟦A*B⟧ = ⟦A⟧×⟦B⟧, ⟦A->B⟧ = ⟦B⟧^⟦A⟧.
//
// A value is stored flat as the sequence of base states at its leaves: a pair is
// its components' cells concatenated, a function is its table rows concatenated
// in domain-index order. Indices are mixed-radix and lexicographic: a pair (a, b)
// has index a*|B| + b, a function table t has index Σ t[d]·|B|^(|A|-1-d).

/// |⟦A⟧_q|. Throws SizeOverflow beyond the active space budget.
std::uint64_t space_size(const Type& a, unsigned q);
/// |⟦A⟧_q|, or nullopt beyond the budget.
std::optional<std::uint64_t> try_space_size(const Type& a, unsigned q);
/// Number of cells of a flat value. Throws SizeOverflow beyond the budget.
std::uint64_t cell_count(const Type& a, unsigned q);

/// Shape of a value space: the type, q, cardinality and cell count.
class ValueSpace {
 public:
  ValueSpace(Type type, unsigned q);

  const Type& type() const { return type_; }
  unsigned q() const { return q_; }
  std::uint64_t size() const { return size_; }
  std::uint64_t cells() const { return cells_; }

 private:
  Type type_;
  unsigned q_;
  std::uint64_t size_;
  std::uint64_t cells_;
};

/// An element of ⟦A⟧_q in canonical flat form.
class Value {
 public:
  Value(Type type, unsigned q, std::vector<std::uint32_t> cells);
  static Value from_index(const Type& type, unsigned q, std::uint64_t index);
  static Value state(unsigned q, std::uint32_t s);
  static Value unit(unsigned q);
  /// Function value from an explicit table of codomain values.
  static Value table(const Type& arrow, unsigned q, const std::vector<Value>& rows);

  const Type& type() const { return type_; }
  unsigned q() const { return q_; }
  const std::vector<std::uint32_t>& cells() const { return *cells_; }
  const std::shared_ptr<const std::vector<std::uint32_t>>& shared_cells() const { return cells_; }

  /// Index in ⟦type⟧_q. Throws SizeOverflow when the space exceeds the budget.
  std::uint64_t index() const;
  std::size_t hash() const { return hash_; }

  friend bool operator==(const Value& a, const Value& b);
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
  friend bool operator<(const Value& a, const Value& b);

 private:
  Type type_;
  unsigned q_;
  std::shared_ptr<const std::vector<std::uint32_t>> cells_;
  std::size_t hash_;
};

struct ValueHash {
  std::size_t operator()(const Value& v) const { return v.hash(); }
};

/// Table lookup. Throws SpaceMismatch when `a` is not in the domain of `f`.
Value apply_value(const Value& f, const Value& a);
Value pair_value(const Value& a, const Value& b);
Value first_value(const Value& p);
Value second_value(const Value& p);

/// Lexicographic index of a first-order argument tuple (s_1..s_k) in ⟦o^k⟧_q.
std::uint64_t tuple_index(const std::vector<std::uint32_t>& states, unsigned q);

// Lazy semantic values ------------------------------------------------------------
//
// Evaluation is environment-passing: abstractions become closures and are only
// tabulated when a flat value is requested, so huge function spaces can still be
// probed at a few points.

class Sem {
 public:
  struct Node;

  static Sem state(std::uint32_t s);
  static Sem unit();
  static Sem pair(Sem first, Sem second);
  static Sem flat(const Value& v);
  /// Function value computed by `fn`; used to observe how a value is applied.
  static Sem native(std::function<Sem(const Sem&)> fn);

  const Node& node() const { return *node_; }

 private:
  friend struct SemAccess;
  explicit Sem(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Evaluates `t` under `env` (one entry per context binding, outermost first).
Sem evaluate(const Term& t, const std::vector<Sem>& env, unsigned q);
Sem evaluate_closed(const Term& t, unsigned q);

Sem apply(const Sem& fn, const Sem& arg, unsigned q);
Sem sem_first(const Sem& p, unsigned q);
Sem sem_second(const Sem& p, unsigned q);
std::uint32_t sem_state(const Sem& v);

/// Tabulates `v` as an element of ⟦type⟧_q.
Value flatten(const Sem& v, const Type& type, unsigned q);

/// ⟦t⟧_q under `env`; the env values must lie in the context entries' spaces.
Value interpret(const Term& t, const Context& ctx, const std::vector<Value>& env, unsigned q);
Value interpret_closed(const Term& t, unsigned q);

/// ⟦m⟧_q = ⟦n⟧_q for closed terms of the same type.
bool sem_eq(const Term& m, const Term& n, unsigned q);

}  // namespace holam
