#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "holam/term.hpp"
#include "holam/type.hpp"

namespace holam {

// Surface syntax:
//   types  o | 1 | A * B | A -> B | (A)        (* binds tighter; both right-assoc)
//   terms  \x:A. M | M N | (M, N) | fst M | snd M | () | (M)
// plus the abbreviations `word <letters>` (`word eps` for ε) and `num <n>`.

struct ParseOptions {
  /// Alphabet used to expand `word` abbreviations. Defaults to a, b, ... up to the
  /// largest letter that occurs.
  std::optional<Alphabet> word_alphabet;
};

Type parse_type(std::string_view text);
Term parse_term(std::string_view text, const Context& ctx = {}, const ParseOptions& options = {});

/// "x:o, f:o->o" -> context (leftmost is outermost).
Context parse_context(std::string_view text);

std::string print_type(const Type& t);
std::string print_term(const Term& t, const Context& ctx = {});

}  // namespace holam
