#pragma once

#include "holam/bridge.hpp"
#include "holam/reglang.hpp"

namespace holam {

/// L_A\L_C = {N_B | M (N_A, N_B) ∈ L_C for every N_A ∈ L_A}, for m : A * B -> C.
/// Computed as the pullback of L_A => L_C along λx_B.λx_A. m (x_A, x_B).
Reported<Language> left_residual(const Term& m, const Language& la, const Language& lc, DefProvider& defs);

/// L_C/L_B = {N_A | M (N_A, N_B) ∈ L_C for every N_B ∈ L_B}.
Reported<Language> right_residual(const Term& m, const Language& lb, const Language& lc, DefProvider& defs);

/// Residuals through concatenation. Left: divisor\L, Right: L/divisor.
Reported<Language> word_residual(const Alphabet& alphabet, Side side, const Language& divisor,
                                 const Language& l, DefProvider& defs);

/// Residuals through grafting, with contexts over Σ plus a hole constant appended last.
/// Left: K\L over trees (divisor over contexts). Right: L/L' over contexts (divisor over trees).
Reported<Language> tree_context_residual(const RankedAlphabet& ranked, Side side, const Language& divisor,
                                         const Language& l, DefProvider& defs);

/// Recognizer accepting exactly [w] among words. Searches the smallest q at which the
/// class of [w] holds no other word; falls back to the automaton of w.
Recognizer singleton_language(const Alphabet& alphabet, const Word& w);

}  // namespace holam
