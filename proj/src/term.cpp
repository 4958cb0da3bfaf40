#include "holam/term.hpp"

#include <algorithm>
#include <functional>

#include "holam/error.hpp"

namespace holam {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::make(Node node) {
  std::size_t h = mix(0x7f, static_cast<std::size_t>(node.kind));
  h = mix(h, node.index);
  if (node.domain) h = mix(h, node.domain->hash());
  for (const auto& c : node.children) {
    h = mix(h, c.hash());
    node.size += c.size();
  }
  node.hash = h;
  return Term(std::make_shared<const Node>(std::move(node)));
}

Term Term::var(std::size_t index) {
  Node n;
  n.kind = Kind::Var;
  n.index = index;
  return make(std::move(n));
}

Term Term::lam(std::string name, Type domain, Term body) {
  Node n;
  n.kind = Kind::Lam;
  n.name = std::move(name);
  n.domain = std::move(domain);
  n.children = {std::move(body)};
  return make(std::move(n));
}

Term Term::app(Term fn, Term arg) {
  Node n;
  n.kind = Kind::App;
  n.children = {std::move(fn), std::move(arg)};
  return make(std::move(n));
}

Term Term::pair(Term first, Term second) {
  Node n;
  n.kind = Kind::Pair;
  n.children = {std::move(first), std::move(second)};
  return make(std::move(n));
}

Term Term::fst(Term t) {
  Node n;
  n.kind = Kind::Fst;
  n.children = {std::move(t)};
  return make(std::move(n));
}

Term Term::snd(Term t) {
  Node n;
  n.kind = Kind::Snd;
  n.children = {std::move(t)};
  return make(std::move(n));
}

Term Term::unit() {
  static const Term instance = make([] { Node n; n.kind = Kind::Unit; return n; }());
  return instance;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.hash != y.hash || x.size != y.size || x.index != y.index) return false;
  if (x.domain.has_value() != y.domain.has_value()) return false;
  if (x.domain && *x.domain != *y.domain) return false;
  for (std::size_t i = 0; i < x.children.size(); ++i) {
    if (x.children[i] != y.children[i]) return false;
  }
  return true;
}

Term apps(Term fn, const std::vector<Term>& args) {
  for (const auto& a : args) fn = Term::app(std::move(fn), a);
  return fn;
}

Term shift(const Term& t, std::ptrdiff_t amount, std::size_t cutoff) {
  switch (t.kind()) {
    case Term::Kind::Var:
      if (t.index() >= cutoff) {
        return Term::var(static_cast<std::size_t>(static_cast<std::ptrdiff_t>(t.index()) + amount));
      }
      return t;
    case Term::Kind::Lam:
      return Term::lam(t.name(), t.domain(), shift(t.body(), amount, cutoff + 1));
    case Term::Kind::App:
      return Term::app(shift(t.fn(), amount, cutoff), shift(t.arg(), amount, cutoff));
    case Term::Kind::Pair:
      return Term::pair(shift(t.first(), amount, cutoff), shift(t.second(), amount, cutoff));
    case Term::Kind::Fst: return Term::fst(shift(t.operand(), amount, cutoff));
    case Term::Kind::Snd: return Term::snd(shift(t.operand(), amount, cutoff));
    case Term::Kind::Unit: return t;
  }
  return t;
}

// Context ------------------------------------------------------------------------

Context::Context(std::initializer_list<std::pair<std::string, Type>> entries)
    : entries_(entries) {}

Context Context::extended(std::string name, Type type) const {
  Context out = *this;
  out.entries_.emplace_back(std::move(name), std::move(type));
  return out;
}

const std::pair<std::string, Type>& Context::at_index(std::size_t de_bruijn) const {
  if (de_bruijn >= entries_.size()) {
    throw Error(ErrorKind::UnboundVariable, "index " + std::to_string(de_bruijn) + " not bound");
  }
  return entries_[entries_.size() - 1 - de_bruijn];
}

std::optional<std::size_t> Context::lookup(const std::string& name) const {
  for (std::size_t i = entries_.size(); i-- > 0;) {
    if (entries_[i].first == name) return entries_.size() - 1 - i;
  }
  return std::nullopt;
}

// Alphabets ----------------------------------------------------------------------

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw Error(ErrorKind::BadParameters, "alphabet must be nonempty");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].empty()) throw Error(ErrorKind::BadParameters, "empty letter name");
    for (std::size_t j = 0; j < i; ++j) {
      if (letters_[i] == letters_[j]) {
        throw Error(ErrorKind::BadParameters, "duplicate letter '" + letters_[i] + "'");
      }
    }
  }
}

Alphabet Alphabet::standard(std::size_t size) {
  std::vector<std::string> letters;
  for (std::size_t i = 0; i < size; ++i) letters.push_back(std::string(1, static_cast<char>('a' + i)));
  return Alphabet(std::move(letters));
}

std::optional<std::size_t> Alphabet::find(const std::string& letter) const {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] == letter) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> Alphabet::parse_word(const std::string& text) const {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t best = letters_.size();
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      const auto& l = letters_[i];
      if (l.size() > best_len && text.compare(pos, l.size(), l) == 0) {
        best = i;
        best_len = l.size();
      }
    }
    if (best == letters_.size()) {
      throw Error(ErrorKind::UnknownLetter, "no letter matches at position " + std::to_string(pos) +
                                                " of '" + text + "'");
    }
    out.push_back(best);
    pos += best_len;
  }
  return out;
}

std::string Alphabet::format_word(const std::vector<std::size_t>& word) const {
  std::string out;
  for (auto l : word) out += letters_.at(l);
  return out;
}

RankedAlphabet::RankedAlphabet(std::vector<RankedLetter> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (letters_[i].name == letters_[j].name) {
        throw Error(ErrorKind::BadParameters, "duplicate letter '" + letters_[i].name + "'");
      }
    }
  }
}

std::optional<std::size_t> RankedAlphabet::find(const std::string& name) const {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].name == name) return i;
  }
  return std::nullopt;
}

RankedAlphabet RankedAlphabet::with_hole(const std::string& hole_name) const {
  auto letters = letters_;
  letters.push_back({hole_name, 0});
  return RankedAlphabet(std::move(letters));
}

// Trees --------------------------------------------------------------------------

std::size_t Tree::depth() const {
  std::size_t d = 0;
  for (const auto& c : children) d = std::max(d, c.depth());
  return d + 1;
}

Tree graft_tree(const Tree& context, std::size_t hole, const Tree& replacement) {
  if (context.children.empty() && context.letter == hole) return replacement;
  Tree out{context.letter, {}};
  for (const auto& c : context.children) out.children.push_back(graft_tree(c, hole, replacement));
  return out;
}

std::vector<Tree> enumerate_trees(const RankedAlphabet& ranked, std::size_t max_depth) {
  std::vector<Tree> level;  // trees of depth <= current
  for (std::size_t d = 1; d <= max_depth; ++d) {
    std::vector<Tree> next;
    for (std::size_t l = 0; l < ranked.size(); ++l) {
      std::size_t arity = ranked[l].arity;
      if (arity == 0) {
        next.push_back(Tree{l, {}});
        continue;
      }
      if (level.empty()) continue;
      std::vector<std::size_t> choice(arity, 0);
      while (true) {
        Tree t{l, {}};
        for (auto c : choice) t.children.push_back(level[c]);
        next.push_back(std::move(t));
        std::size_t k = 0;
        while (k < arity && ++choice[k] == level.size()) choice[k++] = 0;
        if (k == arity) break;
      }
    }
    level = std::move(next);
  }
  return level;
}

std::string format_tree(const RankedAlphabet& ranked, const Tree& t) {
  std::string out = ranked[t.letter].name;
  if (!t.children.empty()) {
    out += "(";
    for (std::size_t i = 0; i < t.children.size(); ++i) {
      if (i) out += ",";
      out += format_tree(ranked, t.children[i]);
    }
    out += ")";
  }
  return out;
}

}  // namespace holam
