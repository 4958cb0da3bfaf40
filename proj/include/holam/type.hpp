#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace holam {

/// Simple type over one base type `o`: o, 1, A * B, A -> B.
class Type {
 public:
  enum class Kind { Base, Unit, Product, Arrow };

  struct Node;

  static Type base();
  static Type unit();
  static Type product(Type left, Type right);
  static Type arrow(Type domain, Type codomain);

  Kind kind() const;
  bool is_base() const { return kind() == Kind::Base; }
  bool is_unit() const { return kind() == Kind::Unit; }
  bool is_product() const { return kind() == Kind::Product; }
  bool is_arrow() const { return kind() == Kind::Arrow; }

  // Children; valid only for Product (left/right) and Arrow (domain/codomain).
  const Type& left() const;
  const Type& right() const;
  const Type& domain() const { return left(); }
  const Type& codomain() const { return right(); }

  std::size_t hash() const;
  std::size_t depth() const;

  friend bool operator==(const Type& a, const Type& b);
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }

 private:
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Type::Node {
  Kind kind;
  std::vector<Type> children;
  std::size_t hash;
};

struct TypeHash {
  std::size_t operator()(const Type& t) const { return t.hash(); }
};

/// A1 -> A2 -> ... -> An -> result
Type arrows(const std::vector<Type>& domains, Type result);

/// o -> o
Type endo_type();

/// (o->o) -> ... -> (o->o) -> (o->o) with `letters` leading arguments.
Type word_type(std::size_t letters);

/// Church numerals: (o->o) -> (o->o).
Type nat_type();

/// o -> ... -> o -> o with `arity` arguments.
Type first_order_type(std::size_t arity);

/// Right-nested product of `components`; a single component is itself, none is 1.
Type nested_product(const std::vector<Type>& components);

/// Splits a right-nested product into `count` components (inverse of nested_product).
std::vector<Type> split_nested_product(const Type& t, std::size_t count);

/// Number of leading `o->o` arguments if `t` has the shape of a word type, else 0.
std::size_t word_letters(const Type& t);

/// True when `t` is o^k -> o for some k (including o itself).
bool is_first_order(const Type& t, std::size_t* arity = nullptr);

}  // namespace holam

template <>
struct std::hash<holam::Type> {
  std::size_t operator()(const holam::Type& t) const { return t.hash(); }
};
