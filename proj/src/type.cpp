#include "holam/type.hpp"

#include <algorithm>

#include "holam/error.hpp"

namespace holam {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Type Type::base() {
  static const Type instance(std::make_shared<const Node>(Node{Kind::Base, {}, 0x51}));
  return instance;
}

Type Type::unit() {
  static const Type instance(std::make_shared<const Node>(Node{Kind::Unit, {}, 0x37}));
  return instance;
}

Type Type::product(Type left, Type right) {
  std::size_t h = mix(mix(0x91, left.hash()), right.hash());
  return Type(std::make_shared<const Node>(Node{Kind::Product, {std::move(left), std::move(right)}, h}));
}

Type Type::arrow(Type domain, Type codomain) {
  std::size_t h = mix(mix(0x2b, domain.hash()), codomain.hash());
  return Type(
      std::make_shared<const Node>(Node{Kind::Arrow, {std::move(domain), std::move(codomain)}, h}));
}

Type::Kind Type::kind() const { return node_->kind; }
std::size_t Type::hash() const { return node_->hash; }

const Type& Type::left() const { return node_->children.at(0); }
const Type& Type::right() const { return node_->children.at(1); }

std::size_t Type::depth() const {
  std::size_t d = 0;
  for (const auto& c : node_->children) d = std::max(d, c.depth());
  return d + 1;
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind || a.node_->hash != b.node_->hash) return false;
  for (std::size_t i = 0; i < a.node_->children.size(); ++i) {
    if (a.node_->children[i] != b.node_->children[i]) return false;
  }
  return true;
}

Type arrows(const std::vector<Type>& domains, Type result) {
  for (auto it = domains.rbegin(); it != domains.rend(); ++it) result = Type::arrow(*it, result);
  return result;
}

Type endo_type() { return Type::arrow(Type::base(), Type::base()); }

Type word_type(std::size_t letters) {
  return arrows(std::vector<Type>(letters, endo_type()), endo_type());
}

Type nat_type() { return word_type(1); }

Type first_order_type(std::size_t arity) {
  return arrows(std::vector<Type>(arity, Type::base()), Type::base());
}

Type nested_product(const std::vector<Type>& components) {
  if (components.empty()) return Type::unit();
  Type result = components.back();
  for (std::size_t i = components.size() - 1; i-- > 0;) result = Type::product(components[i], result);
  return result;
}

std::vector<Type> split_nested_product(const Type& t, std::size_t count) {
  std::vector<Type> out;
  if (count == 0) return out;
  Type cur = t;
  for (std::size_t i = 0; i + 1 < count; ++i) {
    if (!cur.is_product()) throw Error(ErrorKind::TypeMismatch, "bundle is not a nested product");
    out.push_back(cur.left());
    cur = cur.right();
  }
  out.push_back(cur);
  return out;
}

std::size_t word_letters(const Type& t) {
  std::size_t n = 0;
  Type cur = t;
  const Type endo = endo_type();
  while (cur.is_arrow() && cur.domain() == endo && cur.codomain() != Type::base()) {
    ++n;
    cur = cur.codomain();
  }
  return (n > 0 && cur == endo) ? n : 0;
}

bool is_first_order(const Type& t, std::size_t* arity) {
  std::size_t k = 0;
  Type cur = t;
  while (cur.is_arrow()) {
    if (!cur.domain().is_base()) return false;
    ++k;
    cur = cur.codomain();
  }
  if (!cur.is_base()) return false;
  if (arity) *arity = k;
  return true;
}

}  // namespace holam
