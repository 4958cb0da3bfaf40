#include "holam/definability.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "holam/error.hpp"
#include "holam/kernel.hpp"
#include "holam/limits.hpp"
#include "holam/syntax.hpp"

namespace holam {

const char* to_string(Exactness e) {
  return e == Exactness::Exact ? "exact" : "fuel-bounded";
}

// Enumeration ----------------------------------------------------------------------

namespace {

class Enumerator {
 public:
  std::vector<Term> terms(const Context& ctx, const Type& type, unsigned fuel) {
    std::string key = std::to_string(fuel) + "|" + print_type(type);
    for (const auto& e : ctx.entries()) key += "|" + print_type(e.second);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::vector<Term> out;
    switch (type.kind()) {
      case Type::Kind::Unit:
        out.push_back(Term::unit());
        break;
      case Type::Kind::Arrow: {
        std::string name = "x" + std::to_string(ctx.size());
        for (auto& body : terms(ctx.extended(name, type.domain()), type.codomain(), fuel)) {
          out.push_back(Term::lam(name, type.domain(), std::move(body)));
        }
        break;
      }
      case Type::Kind::Product: {
        auto lefts = terms(ctx, type.left(), fuel);
        if (lefts.empty()) break;
        auto rights = terms(ctx, type.right(), fuel);
        for (const auto& l : lefts) {
          for (const auto& r : rights) out.push_back(Term::pair(l, r));
        }
        break;
      }
      case Type::Kind::Base:
        if (fuel == 0) break;
        for (std::size_t i = 0; i < ctx.size(); ++i) {
          spines(ctx, Term::var(i), ctx.at_index(i).second, fuel, out);
        }
        break;
    }
    used_ += out.size();
    if (used_ > current_limits().node_budget) {
      throw Error(ErrorKind::ResourceExhausted, "term enumeration exceeded the node budget");
    }
    check_cancelled();
    memo_.emplace(key, out);
    return out;
  }

 private:
  void spines(const Context& ctx, const Term& head, const Type& type, unsigned fuel,
              std::vector<Term>& out) {
    switch (type.kind()) {
      case Type::Kind::Base:
        out.push_back(head);
        return;
      case Type::Kind::Unit:
        return;
      case Type::Kind::Product:
        spines(ctx, Term::fst(head), type.left(), fuel, out);
        spines(ctx, Term::snd(head), type.right(), fuel, out);
        return;
      case Type::Kind::Arrow:
        for (const auto& a : terms(ctx, type.domain(), fuel - 1)) {
          spines(ctx, Term::app(head, a), type.codomain(), fuel, out);
        }
        return;
    }
  }

  std::map<std::string, std::vector<Term>> memo_;
  std::uint64_t used_ = 0;
};

}  // namespace

std::vector<Term> enum_normal_forms(const Context& ctx, const Type& a, unsigned fuel) {
  Enumerator e;
  return e.terms(ctx, a, fuel);
}

// DefSet -----------------------------------------------------------------------------

DefSet::DefSet(Type type, unsigned q, std::vector<DefEntry> entries, Exactness exactness,
               unsigned fuel)
    : type_(std::move(type)), q_(q), entries_(std::move(entries)), exactness_(exactness),
      fuel_(fuel) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!index_.emplace(entries_[i].value, i).second) {
      throw Error(ErrorKind::BadParameters, "duplicate value in a definable set");
    }
  }
}

std::optional<std::size_t> DefSet::find(const Value& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

// Endofunction indices -----------------------------------------------------------------

std::uint32_t endo_index(const std::vector<std::uint32_t>& table, unsigned q) {
  std::uint64_t idx = 0;
  for (auto s : table) idx = idx * q + s;
  return static_cast<std::uint32_t>(idx);
}

std::vector<std::uint32_t> endo_table(std::uint32_t index, unsigned q) {
  std::vector<std::uint32_t> t(q);
  for (unsigned x = q; x-- > 0;) {
    t[x] = index % q;
    index /= q;
  }
  return t;
}

namespace {

std::uint64_t endo_count(unsigned q) {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < q; ++i) {
    n *= q;
    if (n > std::uint64_t{1} << 32) {
      throw Error(ErrorKind::SizeOverflow, "[[o -> o]]_" + std::to_string(q) + " is too large");
    }
  }
  return n;
}

std::uint64_t store_limit() { return 4 * current_limits().space_budget; }

// Composition d ∘ t on T_q indices, tabulated for small q.
class EndoOps {
 public:
  explicit EndoOps(unsigned q) : q_(q), n_(endo_count(q)) {
    if (n_ <= 1024) {
      table_.resize(n_ * n_);
      for (std::uint64_t d = 0; d < n_; ++d) {
        auto dt = endo_table(static_cast<std::uint32_t>(d), q);
        for (std::uint64_t t = 0; t < n_; ++t) {
          auto tt = endo_table(static_cast<std::uint32_t>(t), q);
          for (auto& x : tt) x = dt[x];
          table_[d * n_ + t] = endo_index(tt, q);
        }
      }
    }
  }

  std::uint32_t compose(std::uint32_t d, std::uint32_t t) const {
    if (!table_.empty()) return table_[d * n_ + t];
    auto dt = endo_table(d, q_);
    auto tt = endo_table(t, q_);
    for (auto& x : tt) x = dt[x];
    return endo_index(tt, q_);
  }

  std::uint32_t identity() const {
    std::vector<std::uint32_t> id(q_);
    for (unsigned x = 0; x < q_; ++x) id[x] = x;
    return endo_index(id, q_);
  }

 private:
  unsigned q_;
  std::uint64_t n_;
  std::vector<std::uint32_t> table_;
};

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = v.size();
    for (auto x : v) h = h * 1000003u ^ x;
    return h;
  }
};

}  // namespace

std::vector<std::vector<std::uint32_t>> all_endo_tuples(std::size_t letters, unsigned q) {
  std::uint64_t n = endo_count(q);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < letters; ++i) {
    total *= n;
    if (total > current_limits().space_budget) {
      throw Error(ErrorKind::SizeOverflow, "too many letter interpretations at q=" + std::to_string(q));
    }
  }
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(total);
  std::vector<std::uint32_t> cur(letters, 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    out.push_back(cur);
    for (std::size_t i = letters; i-- > 0;) {
      if (++cur[i] < n) break;
      cur[i] = 0;
    }
  }
  return out;
}

// Word automaton --------------------------------------------------------------------------

WordAutomaton::WordAutomaton(std::size_t letters, std::vector<ProbeGroup> groups)
    : letters_(letters), groups_(std::move(groups)) {
  std::vector<EndoOps> ops;
  std::vector<std::uint32_t> init;
  for (const auto& g : groups_) {
    ops.emplace_back(g.q);
    for (const auto& t : g.tuples) {
      if (t.size() != letters) throw Error(ErrorKind::BadParameters, "probe tuple of the wrong length");
    }
    init.insert(init.end(), g.tuples.size(), ops.back().identity());
  }
  const std::size_t width = init.size();
  std::unordered_map<std::vector<std::uint32_t>, std::size_t, VecHash> ids;
  ids.emplace(init, 0);
  obs_.push_back(std::move(init));
  reps_.emplace_back();

  for (std::size_t s = 0; s < obs_.size(); ++s) {
    check_cancelled();
    delta_.emplace_back(letters);
    for (std::size_t c = 0; c < letters; ++c) {
      std::vector<std::uint32_t> next(width);
      std::size_t k = 0;
      for (std::size_t g = 0; g < groups_.size(); ++g) {
        for (const auto& tuple : groups_[g].tuples) {
          next[k] = ops[g].compose(tuple[c], obs_[s][k]);
          ++k;
        }
      }
      auto [it, fresh] = ids.emplace(next, obs_.size());
      if (fresh) {
        if ((obs_.size() + 1) * std::max<std::size_t>(width, 1) > store_limit()) {
          throw Error(ErrorKind::SizeOverflow, "word value automaton exceeds the space budget");
        }
        Word w = reps_[s];
        w.push_back(c);
        obs_.push_back(std::move(next));
        reps_.push_back(std::move(w));
      }
      delta_[s][c] = it->second;
    }
  }
}

Value WordAutomaton::full_value(std::size_t state, const Type& word) const {
  if (groups_.size() != 1) throw Error(ErrorKind::BadParameters, "not a full observation");
  const unsigned q = groups_[0].q;
  std::vector<std::uint32_t> cells;
  for (auto idx : obs_[state]) {
    auto t = endo_table(idx, q);
    cells.insert(cells.end(), t.begin(), t.end());
  }
  return Value(word, q, std::move(cells));
}

// Tree closure --------------------------------------------------------------------------

std::optional<std::vector<std::size_t>> tree_arities(const Type& t) {
  if (!t.is_arrow() || !t.codomain().is_base()) return std::nullopt;
  std::vector<std::size_t> arities;
  Type b = t.domain();
  if (b.is_unit()) return arities;
  std::size_t k = 0;
  while (b.is_product()) {
    if (!is_first_order(b.left(), &k)) return std::nullopt;
    arities.push_back(k);
    b = b.right();
  }
  if (!is_first_order(b, &k)) return std::nullopt;
  arities.push_back(k);
  return arities;
}

namespace {

Type bundle_of(const std::vector<std::size_t>& arities) {
  std::vector<Type> comps;
  for (auto k : arities) comps.push_back(first_order_type(k));
  return nested_product(comps);
}

std::string obs_key(const std::vector<std::uint32_t>& v) {
  return std::string(reinterpret_cast<const char*>(v.data()), v.size() * sizeof(std::uint32_t));
}

}  // namespace

TreeClosure::TreeClosure(std::vector<std::size_t> arities, unsigned q,
                         std::vector<std::uint64_t> bundles)
    : arities_(std::move(arities)), q_(q), bundles_(std::move(bundles)) {
  const Type bundle = bundle_of(arities_);
  for (auto b : bundles_) {
    Value v = Value::from_index(bundle, q, b);
    std::vector<std::vector<std::uint32_t>> comps;
    std::size_t offset = 0;
    for (auto k : arities_) {
      std::size_t len = cell_count(first_order_type(k), q);
      comps.emplace_back(v.cells().begin() + offset, v.cells().begin() + offset + len);
      offset += len;
    }
    components_.push_back(std::move(comps));
  }

  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t known = reps_.size();
    for (std::size_t a = 0; a < arities_.size(); ++a) {
      const std::size_t k = arities_[a];
      if (k > 0 && known == 0) continue;
      std::vector<std::size_t> children(k, 0);
      while (true) {
        check_cancelled();
        auto o = apply_letter(a, children);
        std::string key = obs_key(o);
        if (!ids_.count(key)) {
          if ((obs_.size() + 1) * std::max<std::size_t>(o.size(), 1) > store_limit()) {
            throw Error(ErrorKind::SizeOverflow, "tree value closure exceeds the space budget");
          }
          Tree t{a, {}};
          for (auto c : children) t.children.push_back(reps_[c]);
          ids_.emplace(std::move(key), reps_.size());
          obs_.push_back(std::move(o));
          reps_.push_back(std::move(t));
          changed = true;
        }
        std::size_t i = k;
        while (i > 0) {
          if (++children[i - 1] < known) break;
          children[i - 1] = 0;
          --i;
        }
        if (i == 0) break;
      }
    }
  }
}

std::vector<std::uint32_t> TreeClosure::apply_letter(std::size_t letter,
                                                     const std::vector<std::size_t>& children) const {
  std::vector<std::uint32_t> out(bundles_.size());
  std::vector<std::uint32_t> args(children.size());
  for (std::size_t j = 0; j < bundles_.size(); ++j) {
    for (std::size_t i = 0; i < children.size(); ++i) args[i] = obs_[children[i]][j];
    out[j] = components_[j][letter][tuple_index(args, q_)];
  }
  return out;
}

std::size_t TreeClosure::step(std::size_t letter, const std::vector<std::size_t>& children) const {
  auto it = ids_.find(obs_key(apply_letter(letter, children)));
  if (it == ids_.end()) throw Error(ErrorKind::BadParameters, "tree closure is not closed");
  return it->second;
}

// def_set ---------------------------------------------------------------------------------

namespace {

RankedAlphabet generic_ranked(const std::vector<std::size_t>& arities) {
  std::vector<RankedLetter> letters;
  for (std::size_t i = 0; i < arities.size(); ++i) letters.push_back({"c" + std::to_string(i), arities[i]});
  return RankedAlphabet(std::move(letters));
}

DefSet generic_def_set(const Type& a, unsigned q, unsigned fuel) {
  cell_count(a, q);
  std::vector<DefEntry> entries;
  std::unordered_set<Value, ValueHash> seen;
  Enumerator e;
  for (unsigned f = 1; f <= std::max(fuel, 1u); ++f) {
    for (const auto& t : e.terms({}, a, f)) {
      Value v = flatten(evaluate_closed(t, q), a, q);
      if (seen.insert(v).second) entries.push_back({v, t});
    }
  }
  return DefSet(a, q, std::move(entries), Exactness::FuelBounded, fuel);
}

DefSet word_def_set(const Type& a, std::size_t letters, unsigned q) {
  cell_count(a, q);
  WordAutomaton aut(letters, {ProbeGroup{q, all_endo_tuples(letters, q)}});
  Alphabet alphabet = Alphabet::standard(letters);
  std::vector<DefEntry> entries;
  for (std::size_t s = 0; s < aut.state_count(); ++s) {
    entries.push_back({aut.full_value(s, a), church_word(alphabet, aut.representative(s))});
  }
  return DefSet(a, q, std::move(entries), Exactness::Exact);
}

DefSet tree_def_set(const Type& a, const std::vector<std::size_t>& arities, unsigned q) {
  cell_count(a, q);
  std::uint64_t n = space_size(a.domain(), q);
  std::vector<std::uint64_t> bundles(n);
  for (std::uint64_t i = 0; i < n; ++i) bundles[i] = i;
  TreeClosure closure(arities, q, std::move(bundles));
  RankedAlphabet ranked = generic_ranked(arities);
  std::vector<DefEntry> entries;
  for (std::size_t s = 0; s < closure.state_count(); ++s) {
    entries.push_back({Value(a, q, closure.observation(s)), church_tree(ranked, closure.representative(s))});
  }
  return DefSet(a, q, std::move(entries), Exactness::Exact);
}

DefSet auto_def_set(const Type& a, unsigned q, unsigned fuel) {
  if (std::size_t n = word_letters(a); n > 0) return word_def_set(a, n, q);
  if (auto arities = tree_arities(a)) return tree_def_set(a, *arities, q);
  switch (a.kind()) {
    case Type::Kind::Unit:
      return DefSet(a, q, {{Value::unit(q), Term::unit()}}, Exactness::Exact);
    case Type::Kind::Base:
      return DefSet(a, q, {}, Exactness::Exact);
    case Type::Kind::Product: {
      DefSet l = auto_def_set(a.left(), q, fuel);
      DefSet r = auto_def_set(a.right(), q, fuel);
      if (l.size() * r.size() * std::max<std::uint64_t>(cell_count(a, q), 1) > store_limit()) {
        throw Error(ErrorKind::SizeOverflow, "definable pairs exceed the space budget");
      }
      std::vector<DefEntry> entries;
      for (const auto& x : l.entries()) {
        for (const auto& y : r.entries()) {
          entries.push_back({pair_value(x.value, y.value), Term::pair(x.representative, y.representative)});
        }
      }
      return DefSet(a, q, std::move(entries), l.exactness() & r.exactness(),
                    std::max(l.fuel(), r.fuel()));
    }
    case Type::Kind::Arrow:
      break;
  }
  return generic_def_set(a, q, fuel);
}

}  // namespace

DefSet def_set(const Type& a, unsigned q, const DefStrategy& strategy) {
  if (q == 0) throw Error(ErrorKind::BadParameters, "state count must be positive");
  if (strategy.kind == DefStrategy::Kind::ForceGeneric) return generic_def_set(a, q, strategy.fuel);
  return auto_def_set(a, q, strategy.fuel);
}

}  // namespace holam
