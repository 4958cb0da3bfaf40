#pragma once

#include <map>
#include <string>
#include <vector>

#include "holam/error.hpp"
#include "holam/term.hpp"
#include "holam/type.hpp"

namespace holam {

/// Unique type of `t` in `ctx`. Throws UnboundVariable or TypeMismatch; the message
/// carries the path from the root to the offending subterm.
Type typecheck(const Context& ctx, const Term& t);

/// βη-long normal form (η for arrows, surjective pairing, unit law). Aborts with
/// ResourceExhausted beyond the active node budget.
Term normalize(const Term& t, const Context& ctx = {});

/// βη-equality. Both terms must have the same type in `ctx`.
bool term_eq(const Term& a, const Term& b, const Context& ctx = {});

// Church encodings --------------------------------------------------------------

/// [w] = λa1..λan.λx. a_{wk}(... (a_{w1} x)); letters curried in alphabet order.
Term church_word(const Alphabet& alphabet, const Word& w);
Term church_word(const Alphabet& alphabet, const std::string& w);
Term church_numeral(std::size_t n);

/// Constructor bundle type (right-nested product of curried o^n -> o) and the tree
/// type bundle -> o.
Type bundle_type(const RankedAlphabet& ranked);
Type tree_type(const RankedAlphabet& ranked);

/// Projection of component `i` out of a bundle term with `count` components.
Term bundle_component(const Term& bundle, std::size_t i, std::size_t count);

/// Throws ArityMismatch / UnknownLetter when `t` is not well formed over `ranked`.
Term church_tree(const RankedAlphabet& ranked, const Tree& t);

// Named terms -------------------------------------------------------------------

/// λu.λv.λā.λx. v ā (u ā x) : Word -> Word -> Word, so that concat [u] [v] = [uv].
Term concat_term(const Alphabet& alphabet);
/// λk.λt.λā. k (ā, t ā) : Tree_{Σ+1} -> Tree_Σ -> Tree_Σ, hole appended last.
Term graft_term(const RankedAlphabet& ranked);
/// λx.(x, x) : A -> A * A
Term diagonal_term(const Type& a);
/// λp. (fst p) (snd p) : (A -> B) * A -> B
Term evaluation_term(const Type& a, const Type& b);
/// λw. (λs. w s id, λs. w id s) : Word_{a,b} -> Nat * Nat
Term counter_term();
/// λn.λs.λx. s (n s x) : Nat -> Nat
Term successor_term();
Term identity_term(const Type& a);
/// λp. m (fst p) (snd p) for m : A -> B -> C.
Term uncurry_term(const Term& m, const Type& a, const Type& b);
/// λw.λc1..λcm. w [h(a1)] .. [h(an)] : Word_Σ -> Word_Γ
Term homomorphism_term(const Alphabet& source, const Alphabet& target,
                       const std::vector<Word>& images);

/// Parameters for builtin lookup by name (CLI surface).
struct BuiltinParams {
  std::vector<Type> types;
  std::optional<Alphabet> alphabet;
  std::optional<Alphabet> target;
  std::optional<RankedAlphabet> ranked;
  std::vector<Word> images;
};

/// Named builtin: concat, graft, diagonal, evaluation, counter, successor, identity,
/// homomorphism. Throws UnknownBuiltin or BadParameters.
Term builtin_term(const std::string& name, const BuiltinParams& params);

}  // namespace holam
