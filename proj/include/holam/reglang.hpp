#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "holam/definability.hpp"
#include "holam/semantics.hpp"
#include "holam/term.hpp"
#include "holam/type.hpp"

namespace holam {

/// An element of ⟦A⟧_q given lazily, optionally with a closed term defining it and
/// its flat form.
struct Point {
  Type type;
  unsigned q = 1;
  Sem sem;
  std::optional<Term> term;
  std::optional<Value> value;

  static Point of_term(const Term& t, unsigned q);
  static Point of_value(const Value& v);

  /// Flat form, tabulating the lazy value if needed.
  Value flat() const;
};

/// Symbolic subset F of ⟦A⟧_q. Spaces such as ⟦Word_{a,b}⟧_2 (2^32 elements) are far
/// too large to list, so accepting sets are kept as formulas and tested lazily.
class ValueSet {
 public:
  enum class Kind {
    None,
    All,
    Finite,      // explicit elements
    Not,
    And,
    Or,
    Product,     // {(a, b) | a ∈ X, b ∈ Y}
    Forall,      // over A -> B: {f | f(p) ∈ Y for every point p}
    Preimage,    // {a | g(a) ∈ Y} for a point g : A -> B
    Exists,      // over A: {a | (a, w) ∈ Y for some witness w}
    ForallPairs  // over A: {a | (a, w) ∈ Y for every witness w}
  };

  static ValueSet none(const Type& type, unsigned q);
  static ValueSet all(const Type& type, unsigned q);
  static ValueSet finite(const Type& type, unsigned q, std::vector<Value> elements);
  static ValueSet from_indices(const Type& type, unsigned q, const std::vector<std::uint64_t>& indices);
  static ValueSet complement(const ValueSet& s);
  static ValueSet meet(const ValueSet& a, const ValueSet& b);
  static ValueSet join(const ValueSet& a, const ValueSet& b);
  static ValueSet product(const ValueSet& a, const ValueSet& b);
  static ValueSet forall_at(const Type& arrow, std::vector<Point> points, const ValueSet& codomain_set);
  static ValueSet preimage(const Point& fn, const ValueSet& codomain_set);
  static ValueSet exists_pairs(const Type& a, std::vector<Point> witnesses, const ValueSet& pairs);
  static ValueSet forall_pairs(const Type& a, std::vector<Point> witnesses, const ValueSet& pairs);

  const Type& type() const;
  unsigned q() const;
  Kind kind() const;
  const std::vector<ValueSet>& children() const;
  const std::vector<Point>& points() const;
  /// Finite: elements in increasing cell order.
  const std::vector<Value>& elements() const;

  bool contains(const Sem& v) const;
  bool contains(const Value& v) const;

  /// Sorted member indices when ⟦A⟧_q fits the space budget.
  std::optional<std::vector<std::uint64_t>> indices() const;

 private:
  struct Node;
  explicit ValueSet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static ValueSet make(Node node);
  std::shared_ptr<const Node> node_;
};

/// Set equality, decided by enumeration or on finite/cofinite forms. Throws
/// BadParameters when neither applies.
bool set_equal(const ValueSet& a, const ValueSet& b);

/// (type A, state count q, accepting set F ⊆ ⟦A⟧_q).
class Recognizer {
 public:
  explicit Recognizer(ValueSet accepting) : accepting_(std::move(accepting)) {}

  const Type& type() const { return accepting_.type(); }
  unsigned q() const { return accepting_.q(); }
  const ValueSet& accepting() const { return accepting_; }

  /// ⟦m⟧_q ∈ F for a closed term of the recognizer's type.
  bool member(const Term& m) const;

 private:
  ValueSet accepting_;
};

/// Boolean formula over recognizers of a common type.
class Language {
 public:
  enum class Op { All, None, Leaf, Not, And, Or };

  static Language all(const Type& type);
  static Language none(const Type& type);
  static Language leaf(const Recognizer& r);
  static Language negate(const Language& l);
  static Language conj(const Language& a, const Language& b);
  static Language disj(const Language& a, const Language& b);

  const Type& type() const;
  Op op() const;
  const Recognizer& recognizer() const;  // Leaf
  const std::vector<Language>& children() const;

  /// Leaves in left-to-right order.
  std::vector<Recognizer> leaves() const;

 private:
  struct Node;
  explicit Language(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Memoized, thread-safe source of definable-value sets.
class DefProvider {
 public:
  explicit DefProvider(DefStrategy strategy = {}) : strategy_(strategy) {}

  std::shared_ptr<const DefSet> get(const Type& a, unsigned q);
  const DefStrategy& strategy() const { return strategy_; }

 private:
  DefStrategy strategy_;
  std::mutex mutex_;
  std::vector<std::pair<std::pair<Type, unsigned>, std::shared_ptr<const DefSet>>> cache_;
};

/// Definable values inside F, each as a point carrying its representative term.
Reported<std::vector<Point>> definable_in(const ValueSet& f, DefProvider& defs);

enum class BoolOp { Not, And, Or };

bool member(const Language& l, const Term& m);
Language boolean_combine(BoolOp op, const std::vector<Language>& args);

/// Same recognized language at a larger state count.
Reported<Recognizer> lift_to_q(const Recognizer& r, unsigned q2, DefProvider& defs);
/// Single recognizer at the largest leaf q.
Reported<Recognizer> to_recognizer(const Language& l, DefProvider& defs);

Reported<Language> product_lang(const Language& la, const Language& lb, DefProvider& defs);
/// {M | M P ∈ L_B for every P ∈ L_A}. May over-approximate when the definable values
/// of A are only fuel-bounded; the report says so.
Reported<Language> arrow_lang(const Language& la, const Language& lb, DefProvider& defs);
/// {P | m P ∈ L}.
Language pullback(const Term& m, const Language& lb);

struct Containment {
  enum class Verdict { True, False, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::optional<Term> witness;
};
const char* to_string(Containment::Verdict v);

/// L1 ⊆ L2, decided on definable values.
Containment contains(const Language& l1, const Language& l2, DefProvider& defs);

enum class Quantifier { Exists, Forall };
/// Quantifies the second component of a language over A * B.
Reported<Language> quantify_along_projection(const Language& l, Quantifier mode, DefProvider& defs);

/// n ≠ m with equal numeral values at q, searching numerals up to `budget`.
std::pair<std::size_t, std::size_t> diagonal_non_openness_witness(unsigned q, std::size_t budget);

// Word-type helpers shared with the automata bridge.

/// Deterministic automaton of word values, observed at probe tuples that decide
/// membership in every leaf.
WordAutomaton language_word_automaton(const Language& l);

}  // namespace holam
