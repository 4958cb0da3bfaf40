#include "holam/bridge.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "holam/error.hpp"
#include "holam/kernel.hpp"
#include "holam/syntax.hpp"

namespace holam {

// DFAs --------------------------------------------------------------------------------------

Dfa::Dfa(std::size_t states, Alphabet alphabet, std::vector<std::vector<std::size_t>> delta,
         std::size_t initial, std::vector<bool> accepting)
    : alphabet_(std::move(alphabet)), delta_(std::move(delta)), initial_(initial),
      accepting_(std::move(accepting)) {
  if (states == 0) throw Error(ErrorKind::BadParameters, "a DFA needs at least one state");
  if (delta_.size() != states || accepting_.size() != states) {
    throw Error(ErrorKind::BadParameters, "transition table does not match the state count");
  }
  for (const auto& row : delta_) {
    if (row.size() != alphabet_.size()) throw Error(ErrorKind::BadParameters, "transition table is not total");
    for (auto t : row) {
      if (t >= states) throw Error(ErrorKind::BadParameters, "transition to an unknown state");
    }
  }
  if (initial_ >= states) throw Error(ErrorKind::BadParameters, "initial state out of range");
}

std::size_t Dfa::run_from(std::size_t state, const Word& w) const {
  for (auto c : w) {
    if (c >= alphabet_.size()) throw Error(ErrorKind::UnknownLetter, "letter index " + std::to_string(c));
    state = delta_[state][c];
  }
  return state;
}

namespace {

std::vector<std::size_t> reachable_bfs(const Dfa& d) {
  std::vector<std::size_t> order{d.initial()};
  std::vector<bool> seen(d.states(), false);
  seen[d.initial()] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t c = 0; c < d.alphabet().size(); ++c) {
      std::size_t t = d.next(order[i], c);
      if (!seen[t]) {
        seen[t] = true;
        order.push_back(t);
      }
    }
  }
  return order;
}

}  // namespace

Dfa dfa_minimize(const Dfa& d) {
  const std::size_t letters = d.alphabet().size();
  std::vector<std::size_t> order = reachable_bfs(d);
  std::vector<std::size_t> cls(d.states(), 0);
  for (auto s : order) cls[s] = d.accepting(s) ? 1 : 0;
  std::size_t count = 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> sig;
    std::vector<std::size_t> next(d.states(), 0);
    for (auto s : order) {
      std::vector<std::size_t> key{cls[s]};
      for (std::size_t c = 0; c < letters; ++c) key.push_back(cls[d.next(s, c)]);
      auto [it, fresh] = sig.emplace(std::move(key), sig.size());
      next[s] = it->second;
    }
    cls = std::move(next);
    if (sig.size() == count) break;
    count = sig.size();
  }
  // Renumber classes in breadth-first order.
  std::vector<std::size_t> id(count, count);
  std::vector<std::size_t> rep;
  std::deque<std::size_t> queue{d.initial()};
  id[cls[d.initial()]] = 0;
  rep.push_back(d.initial());
  while (!queue.empty()) {
    std::size_t s = queue.front();
    queue.pop_front();
    for (std::size_t c = 0; c < letters; ++c) {
      std::size_t t = d.next(s, c);
      if (id[cls[t]] == count) {
        id[cls[t]] = rep.size();
        rep.push_back(t);
        queue.push_back(t);
      }
    }
  }
  std::vector<std::vector<std::size_t>> delta(rep.size(), std::vector<std::size_t>(letters));
  std::vector<bool> accepting(rep.size());
  for (std::size_t i = 0; i < rep.size(); ++i) {
    accepting[i] = d.accepting(rep[i]);
    for (std::size_t c = 0; c < letters; ++c) delta[i][c] = id[cls[d.next(rep[i], c)]];
  }
  return Dfa(rep.size(), d.alphabet(), std::move(delta), 0, std::move(accepting));
}

Equivalence dfa_equiv(const Dfa& a, const Dfa& b) {
  if (a.alphabet() != b.alphabet()) throw Error(ErrorKind::BadParameters, "DFAs over different alphabets");
  const std::size_t letters = a.alphabet().size();
  std::map<std::pair<std::size_t, std::size_t>, Word> seen;
  std::deque<std::pair<std::size_t, std::size_t>> queue;
  seen[{a.initial(), b.initial()}] = {};
  queue.push_back({a.initial(), b.initial()});
  while (!queue.empty()) {
    auto p = queue.front();
    queue.pop_front();
    const Word w = seen[p];
    if (a.accepting(p.first) != b.accepting(p.second)) return {false, w};
    for (std::size_t c = 0; c < letters; ++c) {
      std::pair<std::size_t, std::size_t> n{a.next(p.first, c), b.next(p.second, c)};
      if (!seen.count(n)) {
        Word nw = w;
        nw.push_back(c);
        seen[n] = std::move(nw);
        queue.push_back(n);
      }
    }
  }
  return {true, std::nullopt};
}

Dfa dfa_complement(const Dfa& d) {
  std::vector<bool> acc(d.states());
  for (std::size_t s = 0; s < d.states(); ++s) acc[s] = !d.accepting(s);
  return Dfa(d.states(), d.alphabet(), d.delta(), d.initial(), std::move(acc));
}

Dfa classical_derivative(const Dfa& d, Side side, const std::string& letter) {
  auto c = d.alphabet().find(letter);
  if (!c) throw Error(ErrorKind::UnknownLetter, "unknown letter '" + letter + "'");
  if (side == Side::Left) return Dfa(d.states(), d.alphabet(), d.delta(), d.next(d.initial(), *c), d.accepting());
  std::vector<bool> acc(d.states());
  for (std::size_t s = 0; s < d.states(); ++s) acc[s] = d.accepting(d.next(s, *c));
  return Dfa(d.states(), d.alphabet(), d.delta(), d.initial(), std::move(acc));
}

Dfa random_dfa(std::mt19937_64& rng, std::size_t max_states, const Alphabet& alphabet) {
  if (max_states == 0) throw Error(ErrorKind::BadParameters, "max_states must be positive");
  std::size_t n = 1 + std::uniform_int_distribution<std::size_t>(0, max_states - 1)(rng);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::vector<std::size_t>> delta(n, std::vector<std::size_t>(alphabet.size()));
  for (auto& row : delta) {
    for (auto& t : row) t = pick(rng);
  }
  std::vector<bool> acc(n);
  for (std::size_t s = 0; s < n; ++s) acc[s] = (rng() & 1) != 0;
  return Dfa(n, alphabet, std::move(delta), 0, std::move(acc));
}

Dfa word_dfa(const Alphabet& alphabet, const Word& w) {
  // States 0..|w| follow the word; |w|+1 is the sink.
  const std::size_t n = w.size() + 2;
  const std::size_t sink = w.size() + 1;
  std::vector<std::vector<std::size_t>> delta(n, std::vector<std::size_t>(alphabet.size(), sink));
  for (std::size_t i = 0; i < w.size(); ++i) delta[i][w[i]] = i + 1;
  std::vector<bool> acc(n, false);
  acc[w.size()] = true;
  return Dfa(n, alphabet, std::move(delta), 0, std::move(acc));
}

// DFA <-> recognizer -----------------------------------------------------------------------------

Recognizer dfa_to_recognizer(const Dfa& d) {
  const unsigned q = static_cast<unsigned>(d.states());
  const std::size_t n = d.alphabet().size();
  std::vector<std::uint32_t> accepting;
  std::vector<Value> acc;
  for (std::size_t s = 0; s < d.states(); ++s) {
    if (d.accepting(s)) acc.push_back(Value::state(q, static_cast<std::uint32_t>(s)));
  }
  // Innermost first: F_o = Acc, then the initial state, then δ_n, ..., δ_1.
  ValueSet f = ValueSet::finite(Type::base(), q, std::move(acc));
  f = ValueSet::forall_at(endo_type(), {Point::of_value(Value::state(q, static_cast<std::uint32_t>(d.initial())))}, f);
  for (std::size_t c = n; c-- > 0;) {
    std::vector<std::uint32_t> table(q);
    for (std::size_t s = 0; s < d.states(); ++s) table[s] = static_cast<std::uint32_t>(d.next(s, c));
    Type t = Type::arrow(endo_type(), f.type());
    f = ValueSet::forall_at(t, {Point::of_value(Value(endo_type(), q, std::move(table)))}, f);
  }
  return Recognizer(f);
}

namespace {

Dfa automaton_dfa(const WordAutomaton& aut, const Alphabet& alphabet,
                  const std::function<bool(const Term&)>& accepts) {
  std::vector<std::vector<std::size_t>> delta(aut.state_count(), std::vector<std::size_t>(aut.letters()));
  std::vector<bool> acc(aut.state_count());
  for (std::size_t s = 0; s < aut.state_count(); ++s) {
    for (std::size_t c = 0; c < aut.letters(); ++c) delta[s][c] = aut.next(s, c);
    acc[s] = accepts(church_word(alphabet, aut.representative(s)));
  }
  return Dfa(aut.state_count(), alphabet, std::move(delta), aut.initial(), std::move(acc));
}

Alphabet word_alphabet(const Type& t, const std::optional<Alphabet>& alphabet) {
  std::size_t n = word_letters(t);
  if (n == 0) throw Error(ErrorKind::NotWordType, print_type(t) + " is not a word type");
  if (alphabet && alphabet->size() != n) {
    throw Error(ErrorKind::BadParameters, "alphabet size does not match " + print_type(t));
  }
  return alphabet ? *alphabet : Alphabet::standard(n);
}

}  // namespace

Dfa recognizer_to_dfa(const Recognizer& r, const std::optional<Alphabet>& alphabet) {
  Alphabet a = word_alphabet(r.type(), alphabet);
  WordAutomaton aut = language_word_automaton(Language::leaf(r));
  return automaton_dfa(aut, a, [&](const Term& w) { return r.member(w); });
}

Dfa language_to_dfa(const Language& l, const std::optional<Alphabet>& alphabet) {
  Alphabet a = word_alphabet(l.type(), alphabet);
  WordAutomaton aut = language_word_automaton(l);
  return automaton_dfa(aut, a, [&](const Term& w) { return member(l, w); });
}

// Tree automata ---------------------------------------------------------------------------------

TreeAutomaton::TreeAutomaton(std::size_t states, RankedAlphabet ranked,
                             std::vector<std::vector<std::size_t>> tables, std::vector<bool> accepting)
    : states_(states), ranked_(std::move(ranked)), tables_(std::move(tables)), accepting_(std::move(accepting)) {
  if (states_ == 0) throw Error(ErrorKind::BadParameters, "a tree automaton needs at least one state");
  if (tables_.size() != ranked_.size() || accepting_.size() != states_) {
    throw Error(ErrorKind::BadParameters, "tables do not match the alphabet or state count");
  }
  for (std::size_t a = 0; a < ranked_.size(); ++a) {
    std::size_t rows = 1;
    for (std::size_t i = 0; i < ranked_[a].arity; ++i) rows *= states_;
    if (tables_[a].size() != rows) {
      throw Error(ErrorKind::BadParameters, "table of '" + ranked_[a].name + "' is not total");
    }
    for (auto t : tables_[a]) {
      if (t >= states_) throw Error(ErrorKind::BadParameters, "transition to an unknown state");
    }
  }
}

std::size_t TreeAutomaton::state_of(const Tree& t) const {
  if (t.letter >= ranked_.size()) throw Error(ErrorKind::UnknownLetter, "letter index " + std::to_string(t.letter));
  if (t.children.size() != ranked_[t.letter].arity) {
    throw Error(ErrorKind::ArityMismatch, "letter '" + ranked_[t.letter].name + "' with wrong child count");
  }
  std::vector<std::uint32_t> args;
  for (const auto& c : t.children) args.push_back(static_cast<std::uint32_t>(state_of(c)));
  return tables_[t.letter][tuple_index(args, static_cast<unsigned>(states_))];
}

Recognizer tree_automaton_to_recognizer(const TreeAutomaton& a) {
  const unsigned q = static_cast<unsigned>(a.states());
  std::vector<std::uint32_t> cells;
  for (const auto& table : a.tables()) {
    for (auto t : table) cells.push_back(static_cast<std::uint32_t>(t));
  }
  Value bundle(bundle_type(a.ranked()), q, std::move(cells));
  std::vector<Value> acc;
  for (std::size_t s = 0; s < a.states(); ++s) {
    if (a.accepting()[s]) acc.push_back(Value::state(q, static_cast<std::uint32_t>(s)));
  }
  return Recognizer(ValueSet::forall_at(tree_type(a.ranked()), {Point::of_value(bundle)},
                                        ValueSet::finite(Type::base(), q, std::move(acc))));
}

namespace {

std::set<std::uint64_t> bundle_probes(const ValueSet& s, bool& everything) {
  switch (s.kind()) {
    case ValueSet::Kind::None:
    case ValueSet::Kind::All:
      return {};
    case ValueSet::Kind::Not:
      return bundle_probes(s.children()[0], everything);
    case ValueSet::Kind::And:
    case ValueSet::Kind::Or: {
      auto a = bundle_probes(s.children()[0], everything);
      auto b = bundle_probes(s.children()[1], everything);
      a.insert(b.begin(), b.end());
      return a;
    }
    case ValueSet::Kind::Forall: {
      std::set<std::uint64_t> out;
      for (const auto& p : s.points()) out.insert(p.flat().index());
      return out;
    }
    default:
      everything = true;
      return {};
  }
}

}  // namespace

TreeAutomaton recognizer_to_tree_automaton(const Recognizer& r, const RankedAlphabet& ranked) {
  auto arities = tree_arities(r.type());
  std::vector<std::size_t> expected;
  for (const auto& l : ranked.letters()) expected.push_back(l.arity);
  if (!arities || r.type() != tree_type(ranked)) {
    throw Error(ErrorKind::NotTreeType, print_type(r.type()) + " is not the tree type of the alphabet");
  }
  bool everything = false;
  auto probes = bundle_probes(r.accepting(), everything);
  std::vector<std::uint64_t> bundles;
  if (everything) {
    std::uint64_t n = space_size(r.type().domain(), r.q());
    for (std::uint64_t i = 0; i < n; ++i) bundles.push_back(i);
  } else {
    bundles.assign(probes.begin(), probes.end());
  }
  TreeClosure closure(expected, r.q(), std::move(bundles));
  const std::size_t n = closure.state_count();
  std::vector<std::vector<std::size_t>> tables;
  for (std::size_t a = 0; a < ranked.size(); ++a) {
    const std::size_t k = ranked[a].arity;
    std::vector<std::size_t> table;
    std::vector<std::size_t> children(k, 0);
    std::size_t rows = 1;
    for (std::size_t i = 0; i < k; ++i) rows *= n;
    for (std::size_t row = 0; row < rows; ++row) {
      table.push_back(closure.step(a, children));
      for (std::size_t i = k; i-- > 0;) {
        if (++children[i] < n) break;
        children[i] = 0;
      }
    }
    tables.push_back(std::move(table));
  }
  std::vector<bool> acc(n);
  for (std::size_t s = 0; s < n; ++s) acc[s] = r.member(church_tree(ranked, closure.representative(s)));
  return TreeAutomaton(n, ranked, std::move(tables), std::move(acc));
}

// Homomorphisms ------------------------------------------------------------------------------------

Word Homomorphism::apply(const Word& w) const {
  Word out;
  for (auto c : w) {
    if (c >= images.size()) throw Error(ErrorKind::UnknownLetter, "letter index " + std::to_string(c));
    out.insert(out.end(), images[c].begin(), images[c].end());
  }
  return out;
}

bool Homomorphism::letter_to_letter() const {
  return std::all_of(images.begin(), images.end(), [](const Word& w) { return w.size() == 1; });
}

Term hom_to_term(const Homomorphism& h) { return homomorphism_term(h.source, h.target, h.images); }

Dfa preimage_dfa(const Homomorphism& h, const Dfa& d) {
  if (d.alphabet() != h.target) throw Error(ErrorKind::BadParameters, "DFA is not over the target alphabet");
  std::vector<std::vector<std::size_t>> delta(d.states(), std::vector<std::size_t>(h.source.size()));
  for (std::size_t s = 0; s < d.states(); ++s) {
    for (std::size_t c = 0; c < h.source.size(); ++c) delta[s][c] = d.run_from(s, h.images[c]);
  }
  return Dfa(d.states(), h.source, std::move(delta), d.initial(), d.accepting());
}

Dfa letter_image_dfa(const Homomorphism& h, const Dfa& d) {
  if (!h.letter_to_letter()) throw Error(ErrorKind::BadParameters, "homomorphism is not letter-to-letter");
  if (d.alphabet() != h.source) throw Error(ErrorKind::BadParameters, "DFA is not over the source alphabet");
  using Subset = std::vector<bool>;
  std::map<Subset, std::size_t> ids;
  std::vector<Subset> subsets;
  Subset init(d.states(), false);
  init[d.initial()] = true;
  ids[init] = 0;
  subsets.push_back(init);
  std::vector<std::vector<std::size_t>> delta;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    delta.emplace_back(h.target.size());
    for (std::size_t g = 0; g < h.target.size(); ++g) {
      Subset next(d.states(), false);
      for (std::size_t s = 0; s < d.states(); ++s) {
        if (!subsets[i][s]) continue;
        for (std::size_t c = 0; c < h.source.size(); ++c) {
          if (h.images[c][0] == g) next[d.next(s, c)] = true;
        }
      }
      auto [it, fresh] = ids.emplace(next, subsets.size());
      if (fresh) subsets.push_back(next);
      delta[i][g] = it->second;
    }
  }
  std::vector<bool> acc(subsets.size(), false);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t s = 0; s < d.states(); ++s) {
      if (subsets[i][s] && d.accepting(s)) acc[i] = true;
    }
  }
  return Dfa(subsets.size(), h.target, std::move(delta), 0, std::move(acc));
}

Homomorphism random_homomorphism(std::mt19937_64& rng, const Alphabet& source, const Alphabet& target,
                                 std::size_t max_image_length) {
  std::uniform_int_distribution<std::size_t> len(0, max_image_length);
  std::uniform_int_distribution<std::size_t> letter(0, target.size() - 1);
  std::vector<Word> images;
  for (std::size_t c = 0; c < source.size(); ++c) {
    Word w(len(rng));
    for (auto& x : w) x = letter(rng);
    images.push_back(std::move(w));
  }
  return Homomorphism{source, target, std::move(images)};
}

}  // namespace holam
