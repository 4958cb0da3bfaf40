#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "holam/semantics.hpp"
#include "holam/term.hpp"
#include "holam/type.hpp"

namespace holam {

enum class Exactness { Exact, FuelBounded };

const char* to_string(Exactness e);

/// Exact only when both are.
inline Exactness operator&(Exactness a, Exactness b) {
  return (a == Exactness::Exact && b == Exactness::Exact) ? Exactness::Exact
                                                           : Exactness::FuelBounded;
}

/// A result together with how trustworthy it is.
template <class T>
struct Reported {
  T value;
  Exactness exactness = Exactness::Exact;
};

/// η-long β-normal forms of type `a` in `ctx`, with application nesting at most
/// `fuel`. Deterministic order, no duplicates.
std::vector<Term> enum_normal_forms(const Context& ctx, const Type& a, unsigned fuel);

struct DefEntry {
  Value value;
  Term representative;
};

/// Definable values of ⟦A⟧_q with one closed representative each.
class DefSet {
 public:
  DefSet(Type type, unsigned q, std::vector<DefEntry> entries, Exactness exactness,
         unsigned fuel = 0);

  const Type& type() const { return type_; }
  unsigned q() const { return q_; }
  const std::vector<DefEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  Exactness exactness() const { return exactness_; }
  /// Fuel used when FuelBounded.
  unsigned fuel() const { return fuel_; }

  std::optional<std::size_t> find(const Value& v) const;
  bool contains(const Value& v) const { return find(v).has_value(); }

 private:
  Type type_;
  unsigned q_;
  std::vector<DefEntry> entries_;
  Exactness exactness_;
  unsigned fuel_;
  std::unordered_map<Value, std::size_t, ValueHash> index_;
};

struct DefStrategy {
  enum class Kind { Auto, ForceGeneric };
  Kind kind = Kind::Auto;
  unsigned fuel = 3;

  static DefStrategy automatic(unsigned fuel = 3) { return {Kind::Auto, fuel}; }
  static DefStrategy generic(unsigned fuel) { return {Kind::ForceGeneric, fuel}; }
};

/// Def_q(A). Exact for word, numeral and tree types, unit, o and products of these;
/// fuel-bounded enumeration otherwise. Throws SizeOverflow when the closure outgrows
/// the budget.
DefSet def_set(const Type& a, unsigned q, const DefStrategy& strategy = {});

// Elements of ⟦o -> o⟧_q are handled by their index ("T_q index") below.

std::uint32_t endo_index(const std::vector<std::uint32_t>& table, unsigned q);
std::vector<std::uint32_t> endo_table(std::uint32_t index, unsigned q);
/// All tuples (δ_1..δ_n) of ⟦o -> o⟧_q in lexicographic order, first letter major.
std::vector<std::vector<std::uint32_t>> all_endo_tuples(std::size_t letters, unsigned q);

/// Word values observed at a list of letter-interpretation tuples, all at one q.
struct ProbeGroup {
  unsigned q = 1;
  std::vector<std::vector<std::uint32_t>> tuples;
};

/// Deterministic automaton whose states are the distinct observations of word values
/// (the value of w at each probe tuple), with "append letter" transitions. With the
/// full tuple list at one q the states are exactly Def_q(Word_Σ).
class WordAutomaton {
 public:
  WordAutomaton(std::size_t letters, std::vector<ProbeGroup> groups);

  std::size_t letters() const { return letters_; }
  std::size_t state_count() const { return reps_.size(); }
  std::size_t initial() const { return 0; }
  std::size_t next(std::size_t state, std::size_t letter) const { return delta_[state][letter]; }
  /// Shortest, then lexicographically least, word reaching `state`.
  const Word& representative(std::size_t state) const { return reps_[state]; }
  const std::vector<std::uint32_t>& observation(std::size_t state) const { return obs_[state]; }
  const std::vector<ProbeGroup>& groups() const { return groups_; }

  /// Flat value of a state when the automaton has a single full group.
  Value full_value(std::size_t state, const Type& word) const;

 private:
  std::size_t letters_;
  std::vector<ProbeGroup> groups_;
  std::vector<std::vector<std::uint32_t>> obs_;
  std::vector<Word> reps_;
  std::vector<std::vector<std::size_t>> delta_;
};

/// Decomposition of a tree type B -> o with B a right-nested product of first-order
/// components; nullopt when `t` has another shape.
std::optional<std::vector<std::size_t>> tree_arities(const Type& t);

/// Values of trees observed at a list of constructor bundles (bundle-space indices).
/// States are reached bottom-up; representatives are the first trees found.
class TreeClosure {
 public:
  TreeClosure(std::vector<std::size_t> arities, unsigned q, std::vector<std::uint64_t> bundles);

  std::size_t state_count() const { return reps_.size(); }
  const Tree& representative(std::size_t state) const { return reps_[state]; }
  const std::vector<std::uint32_t>& observation(std::size_t state) const { return obs_[state]; }
  /// State of the tree whose root is `letter` over the given child states.
  std::size_t step(std::size_t letter, const std::vector<std::size_t>& children) const;

 private:
  std::vector<std::size_t> arities_;
  unsigned q_;
  std::vector<std::uint64_t> bundles_;
  // components_[j][i]: table of component i of bundle j.
  std::vector<std::vector<std::vector<std::uint32_t>>> components_;
  std::vector<std::vector<std::uint32_t>> obs_;
  std::vector<Tree> reps_;
  std::unordered_map<std::string, std::size_t> ids_;

  std::vector<std::uint32_t> apply_letter(std::size_t letter,
                                          const std::vector<std::size_t>& children) const;
};

}  // namespace holam
