#include <functional>
#include <memory>
#include <variant>

#include "holam/kernel.hpp"
#include "holam/limits.hpp"
#include "holam/syntax.hpp"

namespace holam {

// Typing -------------------------------------------------------------------------

namespace {

Type typecheck_at(const Context& ctx, const Term& t, const std::string& path) {
  auto here = [&] { return path.empty() ? std::string("<root>") : path; };
  switch (t.kind()) {
    case Term::Kind::Var:
      if (t.index() >= ctx.size()) {
        throw Error(ErrorKind::UnboundVariable,
                    "variable #" + std::to_string(t.index()) + " at " + here());
      }
      return ctx.at_index(t.index()).second;
    case Term::Kind::Lam: {
      Type body = typecheck_at(ctx.extended(t.name(), t.domain()), t.body(), path + "/body");
      return Type::arrow(t.domain(), body);
    }
    case Term::Kind::App: {
      Type fn = typecheck_at(ctx, t.fn(), path + "/fn");
      Type arg = typecheck_at(ctx, t.arg(), path + "/arg");
      if (!fn.is_arrow()) {
        throw Error(ErrorKind::TypeMismatch,
                    "applying a term of type " + print_type(fn) + " at " + here());
      }
      if (fn.domain() != arg) {
        throw Error(ErrorKind::TypeMismatch, "expected argument of type " + print_type(fn.domain()) +
                                                 ", got " + print_type(arg) + " at " + here());
      }
      return fn.codomain();
    }
    case Term::Kind::Pair:
      return Type::product(typecheck_at(ctx, t.first(), path + "/fst"),
                           typecheck_at(ctx, t.second(), path + "/snd"));
    case Term::Kind::Fst:
    case Term::Kind::Snd: {
      Type p = typecheck_at(ctx, t.operand(), path + "/proj");
      if (!p.is_product()) {
        throw Error(ErrorKind::TypeMismatch,
                    "projection from type " + print_type(p) + " at " + here());
      }
      return t.kind() == Term::Kind::Fst ? p.left() : p.right();
    }
    case Term::Kind::Unit:
      return Type::unit();
  }
  throw Error(ErrorKind::IllTyped, "unknown term node");
}

// Normalization by evaluation -----------------------------------------------------
//
// Values are closures, pairs, unit or base-type neutrals. Variables are reflected
// eagerly at their type, so neutrals only ever occur at o and reification produces
// η-long forms with surjective pairing and the unit law built in.

struct Value;
using ValuePtr = std::shared_ptr<const Value>;

struct Neutral;
using NeutralPtr = std::shared_ptr<const Neutral>;

struct Neutral {
  enum class Kind { Var, App, Fst, Snd } kind;
  std::size_t level = 0;
  NeutralPtr head;
  ValuePtr arg;
  std::optional<Type> arg_type;
};

struct Env {
  ValuePtr value;
  std::shared_ptr<const Env> next;
};
using EnvPtr = std::shared_ptr<const Env>;

struct Closure {
  std::string name;
  Term body;
  EnvPtr env;
};

struct NeutralFn {
  NeutralPtr head;
  Type domain;
  Type codomain;
};

struct PairV {
  ValuePtr first;
  ValuePtr second;
};

struct UnitV {};

struct Value {
  std::variant<Closure, NeutralFn, PairV, UnitV, NeutralPtr> v;
};

class Normalizer {
 public:
  explicit Normalizer(std::uint64_t budget) : budget_(budget) {}

  ValuePtr eval(const Term& t, const EnvPtr& env) {
    tick();
    switch (t.kind()) {
      case Term::Kind::Var: {
        const Env* e = env.get();
        for (std::size_t i = 0; i < t.index(); ++i) e = e->next.get();
        return e->value;
      }
      case Term::Kind::Lam:
        return make(Closure{t.name(), t.body(), env});
      case Term::Kind::App:
        return apply(eval(t.fn(), env), eval(t.arg(), env));
      case Term::Kind::Pair:
        return make(PairV{eval(t.first(), env), eval(t.second(), env)});
      case Term::Kind::Fst:
        return std::get<PairV>(eval(t.operand(), env)->v).first;
      case Term::Kind::Snd:
        return std::get<PairV>(eval(t.operand(), env)->v).second;
      case Term::Kind::Unit:
        return make(UnitV{});
    }
    throw Error(ErrorKind::IllTyped, "unknown term node");
  }

  ValuePtr apply(const ValuePtr& fn, const ValuePtr& arg) {
    tick();
    if (const auto* c = std::get_if<Closure>(&fn->v)) {
      return eval(c->body, std::make_shared<const Env>(Env{arg, c->env}));
    }
    const auto& n = std::get<NeutralFn>(fn->v);
    auto app = std::make_shared<const Neutral>(Neutral{Neutral::Kind::App, 0, n.head, arg, n.domain});
    return reflect(n.codomain, app);
  }

  ValuePtr reflect(const Type& type, const NeutralPtr& ne) {
    switch (type.kind()) {
      case Type::Kind::Base:
        return make(ne);
      case Type::Kind::Unit:
        return make(UnitV{});
      case Type::Kind::Product: {
        auto f = std::make_shared<const Neutral>(Neutral{Neutral::Kind::Fst, 0, ne, nullptr, {}});
        auto s = std::make_shared<const Neutral>(Neutral{Neutral::Kind::Snd, 0, ne, nullptr, {}});
        return make(PairV{reflect(type.left(), f), reflect(type.right(), s)});
      }
      case Type::Kind::Arrow:
        return make(NeutralFn{ne, type.domain(), type.codomain()});
    }
    throw Error(ErrorKind::IllTyped, "unknown type node");
  }

  Term reify(const Type& type, const ValuePtr& v, std::size_t depth) {
    tick();
    switch (type.kind()) {
      case Type::Kind::Base:
        return reify_neutral(std::get<NeutralPtr>(v->v), depth);
      case Type::Kind::Unit:
        return Term::unit();
      case Type::Kind::Product: {
        const auto& p = std::get<PairV>(v->v);
        return Term::pair(reify(type.left(), p.first, depth), reify(type.right(), p.second, depth));
      }
      case Type::Kind::Arrow: {
        std::string name = "x";
        if (const auto* c = std::get_if<Closure>(&v->v)) name = c->name;
        auto var = std::make_shared<const Neutral>(Neutral{Neutral::Kind::Var, depth, nullptr, nullptr, {}});
        ValuePtr body = apply(v, reflect(type.domain(), var));
        return Term::lam(name, type.domain(), reify(type.codomain(), body, depth + 1));
      }
    }
    throw Error(ErrorKind::IllTyped, "unknown type node");
  }

  Term reify_neutral(const NeutralPtr& ne, std::size_t depth) {
    tick();
    switch (ne->kind) {
      case Neutral::Kind::Var:
        return Term::var(depth - 1 - ne->level);
      case Neutral::Kind::App:
        return Term::app(reify_neutral(ne->head, depth), reify(*ne->arg_type, ne->arg, depth));
      case Neutral::Kind::Fst:
        return Term::fst(reify_neutral(ne->head, depth));
      case Neutral::Kind::Snd:
        return Term::snd(reify_neutral(ne->head, depth));
    }
    throw Error(ErrorKind::IllTyped, "unknown neutral node");
  }

 private:
  template <class T>
  static ValuePtr make(T&& x) {
    return std::make_shared<const Value>(Value{std::forward<T>(x)});
  }

  void tick() {
    if (++steps_ > budget_) {
      throw Error(ErrorKind::ResourceExhausted,
                  "normalization exceeded the node budget of " + std::to_string(budget_));
    }
    if ((steps_ & 0xfff) == 0) check_cancelled();
  }

  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
};

}  // namespace

Type typecheck(const Context& ctx, const Term& t) { return typecheck_at(ctx, t, ""); }

namespace {

Type checked_type(const Context& ctx, const Term& t) {
  try {
    return typecheck(ctx, t);
  } catch (const Error& e) {
    throw Error(ErrorKind::IllTyped, e.what());
  }
}

}  // namespace

Term normalize(const Term& t, const Context& ctx) {
  Type type = checked_type(ctx, t);
  Normalizer nbe(current_limits().node_budget);
  EnvPtr env;
  for (std::size_t level = 0; level < ctx.size(); ++level) {
    auto var = std::make_shared<const Neutral>(Neutral{Neutral::Kind::Var, level, nullptr, nullptr, {}});
    env = std::make_shared<const Env>(Env{nbe.reflect(ctx.entries()[level].second, var), env});
  }
  return nbe.reify(type, nbe.eval(t, env), ctx.size());
}

bool term_eq(const Term& a, const Term& b, const Context& ctx) {
  Type ta = checked_type(ctx, a);
  Type tb = checked_type(ctx, b);
  if (ta != tb) {
    throw Error(ErrorKind::TypeDisagreement, print_type(ta) + " vs " + print_type(tb));
  }
  return normalize(a, ctx) == normalize(b, ctx);
}

}  // namespace holam
