#include "holam/brzozowski.hpp"

#include "holam/error.hpp"
#include "holam/kernel.hpp"
#include "holam/syntax.hpp"

namespace holam {

namespace {

struct Split {
  Type a, b, c;
};

Split binary_shape(const Term& m) {
  Type t = [&] {
    try {
      return typecheck({}, m);
    } catch (const Error& e) {
      throw Error(ErrorKind::IllTyped, e.what());
    }
  }();
  if (!t.is_arrow() || !t.domain().is_product()) {
    throw Error(ErrorKind::TypeMismatch, print_type(t) + " is not of the form A * B -> C");
  }
  return {t.domain().left(), t.domain().right(), t.codomain()};
}

void require_type(const Language& l, const Type& t) {
  if (l.type() != t) throw Error(ErrorKind::TypeDisagreement, print_type(l.type()) + " vs " + print_type(t));
}

// λx_A.λx_B. m (x_A, x_B) or λx_B.λx_A. m (x_A, x_B).
Term curried(const Term& m, const Split& s, bool a_outer) {
  Term inner_m = shift(m, 2);
  Term pair = a_outer ? Term::pair(Term::var(1), Term::var(0)) : Term::pair(Term::var(0), Term::var(1));
  Term body = Term::app(inner_m, pair);
  if (a_outer) return Term::lam("xa", s.a, Term::lam("xb", s.b, body));
  return Term::lam("xb", s.b, Term::lam("xa", s.a, body));
}

}  // namespace

Reported<Language> left_residual(const Term& m, const Language& la, const Language& lc, DefProvider& defs) {
  Split s = binary_shape(m);
  require_type(la, s.a);
  require_type(lc, s.c);
  auto arrow = arrow_lang(la, lc, defs);
  return {pullback(curried(m, s, false), arrow.value), arrow.exactness};
}

Reported<Language> right_residual(const Term& m, const Language& lb, const Language& lc, DefProvider& defs) {
  Split s = binary_shape(m);
  require_type(lb, s.b);
  require_type(lc, s.c);
  auto arrow = arrow_lang(lb, lc, defs);
  return {pullback(curried(m, s, true), arrow.value), arrow.exactness};
}

Reported<Language> word_residual(const Alphabet& alphabet, Side side, const Language& divisor,
                                 const Language& l, DefProvider& defs) {
  const Type w = word_type(alphabet.size());
  Term m = uncurry_term(concat_term(alphabet), w, w);
  if (side == Side::Left) return left_residual(m, divisor, l, defs);
  return right_residual(m, divisor, l, defs);
}

Reported<Language> tree_context_residual(const RankedAlphabet& ranked, Side side, const Language& divisor,
                                         const Language& l, DefProvider& defs) {
  Term m = uncurry_term(graft_term(ranked), tree_type(ranked.with_hole()), tree_type(ranked));
  if (side == Side::Left) return left_residual(m, divisor, l, defs);
  return right_residual(m, divisor, l, defs);
}

Recognizer singleton_language(const Alphabet& alphabet, const Word& w) {
  const std::size_t n = alphabet.size();
  const Type type = word_type(n);
  for (unsigned q = 1; q <= w.size() + 2; ++q) {
    try {
      WordAutomaton aut(n, {ProbeGroup{q, all_endo_tuples(n, q)}});
      std::size_t target = aut.initial();
      for (auto c : w) target = aut.next(target, c);
      // [w] is alone in its class iff exactly one path reaches its state.
      const std::size_t states = aut.state_count();
      std::vector<std::size_t> paths(states, 0), indegree(states, 0);
      for (std::size_t s = 0; s < states; ++s) {
        for (std::size_t c = 0; c < n; ++c) ++indegree[aut.next(s, c)];
      }
      // Count up to 2 along a topological order; a cycle on the way means many paths.
      std::vector<std::size_t> order;
      std::vector<std::size_t> deg = indegree;
      for (std::size_t s = 0; s < states; ++s) {
        if (deg[s] == 0) order.push_back(s);
      }
      for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t c = 0; c < n; ++c) {
          if (--deg[aut.next(order[i], c)] == 0) order.push_back(aut.next(order[i], c));
        }
      }
      std::vector<bool> acyclic(states, false);
      for (auto s : order) acyclic[s] = true;
      if (!acyclic[target]) continue;
      paths[aut.initial()] = 1;
      for (auto s : order) {
        for (std::size_t c = 0; c < n; ++c) {
          std::size_t t = aut.next(s, c);
          paths[t] = std::min<std::size_t>(2, paths[t] + paths[s]);
        }
      }
      if (paths[target] == 1) {
        return Recognizer(ValueSet::finite(type, q, {aut.full_value(target, type)}));
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SizeOverflow) throw;
      break;
    }
  }
  return dfa_to_recognizer(word_dfa(alphabet, w));
}

}  // namespace holam
