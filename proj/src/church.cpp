#include "holam/kernel.hpp"

namespace holam {

namespace {

// Body of a composition a_{w_k}(... (a_{w_1} x)) where letter i sits at de Bruijn
// index letter_index(i) and x at index 0.
template <class IndexOf>
Term composition(const Word& w, IndexOf letter_index) {
  Term body = Term::var(0);
  for (auto letter : w) body = Term::app(Term::var(letter_index(letter)), body);
  return body;
}

Term nested_pair(const std::vector<Term>& components) {
  if (components.empty()) return Term::unit();
  Term result = components.back();
  for (std::size_t i = components.size() - 1; i-- > 0;) result = Term::pair(components[i], result);
  return result;
}

}  // namespace

Term church_word(const Alphabet& alphabet, const Word& w) {
  const std::size_t n = alphabet.size();
  for (auto l : w) {
    if (l >= n) throw Error(ErrorKind::UnknownLetter, "letter index " + std::to_string(l));
  }
  Term t = Term::lam("x", Type::base(), composition(w, [n](std::size_t i) { return n - i; }));
  for (std::size_t i = n; i-- > 0;) t = Term::lam(alphabet[i], endo_type(), t);
  return t;
}

Term church_word(const Alphabet& alphabet, const std::string& w) {
  return church_word(alphabet, alphabet.parse_word(w));
}

Term church_numeral(std::size_t n) {
  return church_word(Alphabet({"s"}), Word(n, 0));
}

Type bundle_type(const RankedAlphabet& ranked) {
  std::vector<Type> components;
  for (const auto& l : ranked.letters()) components.push_back(first_order_type(l.arity));
  return nested_product(components);
}

Type tree_type(const RankedAlphabet& ranked) {
  return Type::arrow(bundle_type(ranked), Type::base());
}

Term bundle_component(const Term& bundle, std::size_t i, std::size_t count) {
  Term cur = bundle;
  for (std::size_t k = 0; k < i; ++k) cur = Term::snd(cur);
  return i + 1 < count ? Term::fst(cur) : cur;
}

namespace {

Term encode_tree(const RankedAlphabet& ranked, const Tree& t, const Term& bundle) {
  if (t.letter >= ranked.size()) {
    throw Error(ErrorKind::UnknownLetter, "letter index " + std::to_string(t.letter));
  }
  const auto& letter = ranked[t.letter];
  if (t.children.size() != letter.arity) {
    throw Error(ErrorKind::ArityMismatch, "letter '" + letter.name + "' has arity " +
                                              std::to_string(letter.arity) + " but " +
                                              std::to_string(t.children.size()) + " children");
  }
  Term head = bundle_component(bundle, t.letter, ranked.size());
  for (const auto& c : t.children) head = Term::app(head, encode_tree(ranked, c, bundle));
  return head;
}

}  // namespace

Term church_tree(const RankedAlphabet& ranked, const Tree& t) {
  return Term::lam("cs", bundle_type(ranked), encode_tree(ranked, t, Term::var(0)));
}

Term concat_term(const Alphabet& alphabet) {
  const std::size_t n = alphabet.size();
  const Type word = word_type(n);
  // Inside the binders: x = 0, letter i = n - i, v = n + 1, u = n + 2. Words act
  // first letter first, so u runs before v.
  std::vector<Term> letters;
  for (std::size_t i = 0; i < n; ++i) letters.push_back(Term::var(n - i));
  Term inner = Term::app(apps(Term::var(n + 2), letters), Term::var(0));
  Term body = Term::app(apps(Term::var(n + 1), letters), inner);
  Term t = Term::lam("x", Type::base(), body);
  for (std::size_t i = n; i-- > 0;) t = Term::lam(alphabet[i], endo_type(), t);
  return Term::lam("u", word, Term::lam("v", word, t));
}

Term graft_term(const RankedAlphabet& ranked) {
  const std::size_t l = ranked.size();
  const RankedAlphabet extended = ranked.with_hole();
  // Inside: ā = 0, t = 1, k = 2. The Σ+1 bundle is Σ's components followed by t ā.
  std::vector<Term> components;
  for (std::size_t i = 0; i < l; ++i) components.push_back(bundle_component(Term::var(0), i, l));
  components.push_back(Term::app(Term::var(1), Term::var(0)));
  Term body = Term::app(Term::var(2), nested_pair(components));
  return Term::lam("k", tree_type(extended),
                   Term::lam("t", tree_type(ranked), Term::lam("as", bundle_type(ranked), body)));
}

Term diagonal_term(const Type& a) {
  return Term::lam("x", a, Term::pair(Term::var(0), Term::var(0)));
}

Term evaluation_term(const Type& a, const Type& b) {
  Type p = Type::product(Type::arrow(a, b), a);
  return Term::lam("p", p, Term::app(Term::fst(Term::var(0)), Term::snd(Term::var(0))));
}

Term counter_term() {
  Term id = Term::lam("x", Type::base(), Term::var(0));
  // Inside λs: s = 0, w = 1.
  Term count_a = Term::lam("s", endo_type(), apps(Term::var(1), {Term::var(0), id}));
  Term count_b = Term::lam("s", endo_type(), apps(Term::var(1), {id, Term::var(0)}));
  return Term::lam("w", word_type(2), Term::pair(count_a, count_b));
}

Term successor_term() {
  Term body = Term::app(Term::var(1), apps(Term::var(2), {Term::var(1), Term::var(0)}));
  return Term::lam("n", nat_type(),
                   Term::lam("s", endo_type(), Term::lam("x", Type::base(), body)));
}

Term identity_term(const Type& a) { return Term::lam("x", a, Term::var(0)); }

Term uncurry_term(const Term& m, const Type& a, const Type& b) {
  Term p = Term::var(0);
  return Term::lam("p", Type::product(a, b), apps(shift(m, 1), {Term::fst(p), Term::snd(p)}));
}

Term homomorphism_term(const Alphabet& source, const Alphabet& target,
                       const std::vector<Word>& images) {
  const std::size_t n = source.size();
  const std::size_t m = target.size();
  if (images.size() != n) {
    throw Error(ErrorKind::BadParameters, "homomorphism needs one image per source letter");
  }
  // Inside λc1..λcm: c_j = m-1-j, w = m. Inside each λx image: c_j = m-j.
  std::vector<Term> args;
  for (const auto& image : images) {
    for (auto c : image) {
      if (c >= m) throw Error(ErrorKind::UnknownLetter, "image letter index " + std::to_string(c));
    }
    args.push_back(
        Term::lam("x", Type::base(), composition(image, [m](std::size_t j) { return m - j; })));
  }
  Term t = apps(Term::var(m), args);
  for (std::size_t j = m; j-- > 0;) t = Term::lam(target[j], endo_type(), t);
  return Term::lam("w", word_type(n), t);
}

Term builtin_term(const std::string& name, const BuiltinParams& params) {
  auto need_types = [&](std::size_t k) {
    if (params.types.size() != k) {
      throw Error(ErrorKind::BadParameters,
                  name + " expects " + std::to_string(k) + " type parameter(s)");
    }
  };
  if (name == "concat") {
    if (!params.alphabet) throw Error(ErrorKind::BadParameters, "concat needs an alphabet");
    return concat_term(*params.alphabet);
  }
  if (name == "graft") {
    if (!params.ranked) throw Error(ErrorKind::BadParameters, "graft needs a ranked alphabet");
    return graft_term(*params.ranked);
  }
  if (name == "diagonal") {
    need_types(1);
    return diagonal_term(params.types[0]);
  }
  if (name == "evaluation") {
    need_types(2);
    return evaluation_term(params.types[0], params.types[1]);
  }
  if (name == "counter") return counter_term();
  if (name == "successor") return successor_term();
  if (name == "identity") {
    need_types(1);
    return identity_term(params.types[0]);
  }
  if (name == "homomorphism") {
    if (!params.alphabet || !params.target) {
      throw Error(ErrorKind::BadParameters, "homomorphism needs source and target alphabets");
    }
    return homomorphism_term(*params.alphabet, *params.target, params.images);
  }
  throw Error(ErrorKind::UnknownBuiltin, name);
}

}  // namespace holam
