#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holam/type.hpp"

namespace holam {

/// λ-term with nameless (de Bruijn) variables. Binder names are kept only as printing
/// hints and are ignored by equality and hashing.
class Term {
 public:
  enum class Kind { Var, Lam, App, Pair, Fst, Snd, Unit };

  static Term var(std::size_t index);
  static Term lam(std::string name, Type domain, Term body);
  static Term app(Term fn, Term arg);
  static Term pair(Term first, Term second);
  static Term fst(Term t);
  static Term snd(Term t);
  static Term unit();

  Kind kind() const { return node_->kind; }

  std::size_t index() const { return node_->index; }        // Var
  const std::string& name() const { return node_->name; }   // Lam
  const Type& domain() const { return *node_->domain; }     // Lam
  const Term& body() const { return node_->children[0]; }   // Lam
  const Term& fn() const { return node_->children[0]; }     // App
  const Term& arg() const { return node_->children[1]; }    // App
  const Term& first() const { return node_->children[0]; }  // Pair
  const Term& second() const { return node_->children[1]; } // Pair
  const Term& operand() const { return node_->children[0]; } // Fst, Snd

  /// Number of syntax nodes.
  std::size_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }

  /// Structural equality up to binder names (i.e. α-equivalence).
  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind = Kind::Unit;
    std::size_t index = 0;
    std::string name;
    std::optional<Type> domain;
    std::vector<Term> children;
    std::size_t size = 1;
    std::size_t hash = 0;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(Node node);
  std::shared_ptr<const Node> node_;
};

/// Applies `fn` to each argument in turn.
Term apps(Term fn, const std::vector<Term>& args);

/// Shifts free variables at or above `cutoff` by `amount`.
Term shift(const Term& t, std::ptrdiff_t amount, std::size_t cutoff = 0);

/// Typing context. Entry i is the i-th binding from the outside; de Bruijn index k
/// refers to entry size()-1-k.
class Context {
 public:
  Context() = default;
  Context(std::initializer_list<std::pair<std::string, Type>> entries);

  Context extended(std::string name, Type type) const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const std::pair<std::string, Type>& at_index(std::size_t de_bruijn) const;
  const std::vector<std::pair<std::string, Type>>& entries() const { return entries_; }
  std::optional<std::size_t> lookup(const std::string& name) const;

 private:
  std::vector<std::pair<std::string, Type>> entries_;
};

/// Ordered list of distinct letter names; the order fixes the argument order of
/// word types.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> letters);
  /// Alphabet "a", "b", ... of the given size.
  static Alphabet standard(std::size_t size);

  std::size_t size() const { return letters_.size(); }
  const std::string& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<std::string>& letters() const { return letters_; }
  std::optional<std::size_t> find(const std::string& letter) const;

  /// Splits `text` into letters of this alphabet (single-character letters are the
  /// common case; longer names are matched greedily).
  std::vector<std::size_t> parse_word(const std::string& text) const;
  std::string format_word(const std::vector<std::size_t>& word) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> letters_;
};

using Word = std::vector<std::size_t>;

struct RankedLetter {
  std::string name;
  std::size_t arity;
  friend bool operator==(const RankedLetter&, const RankedLetter&) = default;
};

class RankedAlphabet {
 public:
  explicit RankedAlphabet(std::vector<RankedLetter> letters);

  std::size_t size() const { return letters_.size(); }
  const RankedLetter& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<RankedLetter>& letters() const { return letters_; }
  std::optional<std::size_t> find(const std::string& name) const;

  /// Σ+1: this alphabet with a fresh constant appended.
  RankedAlphabet with_hole(const std::string& hole_name = "b") const;

  friend bool operator==(const RankedAlphabet&, const RankedAlphabet&) = default;

 private:
  std::vector<RankedLetter> letters_;
};

/// Finite ranked tree; letter is an index into a RankedAlphabet.
struct Tree {
  std::size_t letter = 0;
  std::vector<Tree> children;

  std::size_t depth() const;
  friend bool operator==(const Tree&, const Tree&) = default;
};

/// Substitutes `replacement` for every occurrence of the constant `hole`.
Tree graft_tree(const Tree& context, std::size_t hole, const Tree& replacement);

/// All trees over `ranked` of depth at most `max_depth` (a leaf has depth 1).
std::vector<Tree> enumerate_trees(const RankedAlphabet& ranked, std::size_t max_depth);

std::string format_tree(const RankedAlphabet& ranked, const Tree& t);

}  // namespace holam

template <>
struct std::hash<holam::Term> {
  std::size_t operator()(const holam::Term& t) const { return t.hash(); }
};
