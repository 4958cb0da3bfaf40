#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "holam/reglang.hpp"
#include "holam/term.hpp"

namespace holam {

/// Complete deterministic finite automaton.
class Dfa {
 public:
  Dfa(std::size_t states, Alphabet alphabet, std::vector<std::vector<std::size_t>> delta,
      std::size_t initial, std::vector<bool> accepting);

  std::size_t states() const { return delta_.size(); }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t next(std::size_t state, std::size_t letter) const { return delta_[state][letter]; }
  const std::vector<std::vector<std::size_t>>& delta() const { return delta_; }
  std::size_t initial() const { return initial_; }
  bool accepting(std::size_t state) const { return accepting_[state]; }
  const std::vector<bool>& accepting() const { return accepting_; }

  std::size_t run_from(std::size_t state, const Word& w) const;
  bool run(const Word& w) const { return accepting_[run_from(initial_, w)]; }
  bool run(const std::string& w) const { return run(alphabet_.parse_word(w)); }

 private:
  Alphabet alphabet_;
  std::vector<std::vector<std::size_t>> delta_;
  std::size_t initial_;
  std::vector<bool> accepting_;
};

/// Moore partition refinement; unreachable states are dropped and the states are
/// numbered in breadth-first order from the initial state.
Dfa dfa_minimize(const Dfa& d);

struct Equivalence {
  bool equivalent = true;
  std::optional<Word> witness;  // shortest word accepted by exactly one side
};
Equivalence dfa_equiv(const Dfa& a, const Dfa& b);

Dfa dfa_complement(const Dfa& d);

enum class Side { Left, Right };

/// Left: a\L = {w | aw ∈ L}. Right: L/a = {w | wa ∈ L}.
Dfa classical_derivative(const Dfa& d, Side side, const std::string& letter);

/// Uniformly random DFA with 1..max_states states; state 0 is initial.
Dfa random_dfa(std::mt19937_64& rng, std::size_t max_states, const Alphabet& alphabet);

/// Recognizer over Word_Σ at q = number of states:
/// F = {v | v(δ_1, ..., δ_n)(q0) is accepting}.
Recognizer dfa_to_recognizer(const Dfa& d);
/// Automaton of word values observed by the recognizer. Not necessarily minimal.
Dfa recognizer_to_dfa(const Recognizer& r, const std::optional<Alphabet>& alphabet = std::nullopt);
Dfa language_to_dfa(const Language& l, const std::optional<Alphabet>& alphabet = std::nullopt);

/// Minimal DFA for the single word `w`.
Dfa word_dfa(const Alphabet& alphabet, const Word& w);

/// Deterministic bottom-up tree automaton. tables[a] lists the target state for
/// every tuple of child states, in lexicographic order.
class TreeAutomaton {
 public:
  TreeAutomaton(std::size_t states, RankedAlphabet ranked, std::vector<std::vector<std::size_t>> tables,
                std::vector<bool> accepting);

  std::size_t states() const { return states_; }
  const RankedAlphabet& ranked() const { return ranked_; }
  const std::vector<std::vector<std::size_t>>& tables() const { return tables_; }
  const std::vector<bool>& accepting() const { return accepting_; }

  std::size_t state_of(const Tree& t) const;
  bool run(const Tree& t) const { return accepting_[state_of(t)]; }

 private:
  std::size_t states_;
  RankedAlphabet ranked_;
  std::vector<std::vector<std::size_t>> tables_;
  std::vector<bool> accepting_;
};

/// Recognizer over Tree_Σ at q = number of states: constructors are read as the
/// transition tables.
Recognizer tree_automaton_to_recognizer(const TreeAutomaton& a);
TreeAutomaton recognizer_to_tree_automaton(const Recognizer& r, const RankedAlphabet& ranked);

/// Monoid homomorphism Σ* -> Γ* given by the images of the letters.
struct Homomorphism {
  Alphabet source;
  Alphabet target;
  std::vector<Word> images;

  Word apply(const Word& w) const;
  bool letter_to_letter() const;
};

/// λw.λc̄. w [h(a_1)] ... [h(a_n)] : Word_Σ -> Word_Γ
Term hom_to_term(const Homomorphism& h);
/// h⁻¹(L(d)) for d over the target alphabet.
Dfa preimage_dfa(const Homomorphism& h, const Dfa& d);
/// h(L(d)) for a letter-to-letter h and d over the source alphabet (subset construction).
Dfa letter_image_dfa(const Homomorphism& h, const Dfa& d);
Homomorphism random_homomorphism(std::mt19937_64& rng, const Alphabet& source, const Alphabet& target,
                                 std::size_t max_image_length);

}  // namespace holam
