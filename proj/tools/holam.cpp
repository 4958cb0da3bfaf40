// holam: command-line front end for the higher-order regular language library.

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "holam/brzozowski.hpp"
#include "holam/error.hpp"
#include "holam/io.hpp"
#include "holam/kernel.hpp"
#include "holam/limits.hpp"
#include "holam/syntax.hpp"

using namespace holam;

namespace {

struct Globals {
  unsigned q = 0;
  unsigned fuel = 3;
  std::uint64_t budget = 0;
  std::uint64_t seed = 1;
  bool json = false;
  std::string out;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Alphabet alphabet_arg(const std::string& s) {
  auto letters = split(s, ',');
  if (letters.size() == 1 && letters[0].size() > 1) {
    letters.clear();
    for (char c : s) letters.emplace_back(1, c);
  }
  return Alphabet(letters);
}

RankedAlphabet ranked_arg(const std::string& s) {
  std::vector<RankedLetter> letters;
  for (const auto& item : split(s, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("ranked letters are written name:arity");
    letters.push_back(RankedLetter{item.substr(0, colon), std::stoul(item.substr(colon + 1))});
  }
  return RankedAlphabet(std::move(letters));
}

ParseOptions options_for(const std::optional<Type>& expected, const std::string& alphabet) {
  ParseOptions o;
  if (!alphabet.empty()) {
    o.word_alphabet = alphabet_arg(alphabet);
  } else if (expected) {
    if (std::size_t n = word_letters(*expected); n > 0) o.word_alphabet = Alphabet::standard(n);
  }
  return o;
}

// A closed term, or the name of a builtin that needs no parameters.
Term closed_term(const std::string& text) {
  if (!text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return std::islower(static_cast<unsigned char>(c)); })) {
    try {
      return builtin_term(text, {});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnknownBuiltin) throw;
    }
  }
  return parse_term(text);
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorKind::BadFormat, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void emit(const Globals& g, const Json& j, const std::string& text) {
  Output out(g.out);
  if (g.json) {
    out.stream() << j.dump(2) << "\n";
  } else {
    out.stream() << text << "\n";
  }
}

void emit_json(const Globals& g, const Json& j) {
  Output out(g.out);
  out.stream() << j.dump(2) << "\n";
}

void note_exactness(Exactness e) {
  if (e != Exactness::Exact) std::cerr << "note: result is fuel-bounded and may over-approximate\n";
}

Language load_language(const std::string& path) { return language_from_json(read_json_file(path)); }

std::string value_text(const Value& v) {
  if (try_space_size(v.type(), v.q())) return std::to_string(v.index());
  std::string s = "[";
  for (std::size_t i = 0; i < v.cells().size(); ++i) s += (i ? "," : "") + std::to_string(v.cells()[i]);
  return s + "]";
}

Json value_json(const Value& v) {
  Json j{{"type", print_type(v.type())}, {"q", v.q()}};
  if (try_space_size(v.type(), v.q())) {
    j["index"] = v.index();
  } else {
    j["cells"] = v.cells();
  }
  return j;
}

unsigned need_q(const Globals& g) {
  if (g.q == 0) throw UsageError("--q is required");
  return g.q;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher-order regular languages of simply-typed lambda-terms"};
  app.require_subcommand(1);
  Globals g;
  auto add_globals = [&](CLI::App* c) {
    c->add_option("--q", g.q, "state count");
    c->add_option("--fuel", g.fuel, "enumeration fuel for generic definable sets")->capture_default_str();
    c->add_option("--budget", g.budget, "space budget (largest enumerable value space)");
    c->add_option("--seed", g.seed, "random seed")->capture_default_str();
    c->add_flag("--json", g.json, "JSON output");
    c->add_option("-o,--out", g.out, "write output to a file");
  };

  std::string term, ctx, type, alphabet, ranked, word, op, mode, side, letter, div, dfa_path;
  std::vector<std::string> langs;
  bool generic = false, minimize = false;
  std::size_t search_budget = 64, states = 3;
  std::function<void()> run;

  auto* check = app.add_subcommand("check", "typecheck a term");
  check->add_option("--term", term, "term")->required();
  check->add_option("--ctx", ctx, "typing context, e.g. \"x:o, f:o->o\"");
  check->callback([&] {
    run = [&] {
      Context c = parse_context(ctx);
      Type t = typecheck(c, parse_term(term, c, options_for(std::nullopt, alphabet)));
      emit(g, Json{{"type", print_type(t)}}, print_type(t));
    };
  });

  auto* nf = app.add_subcommand("nf", "beta-eta long normal form");
  nf->add_option("--term", term, "term")->required();
  nf->add_option("--ctx", ctx, "typing context");
  nf->callback([&] {
    run = [&] {
      Context c = parse_context(ctx);
      Term n = normalize(parse_term(term, c, options_for(std::nullopt, alphabet)), c);
      emit(g, Json{{"term", print_term(n, c)}}, print_term(n, c));
    };
  });

  auto* eval = app.add_subcommand("eval", "value of a closed term at q");
  eval->add_option("--term", term, "closed term")->required();
  eval->callback([&] {
    run = [&] {
      Value v = interpret_closed(parse_term(term, {}, options_for(std::nullopt, alphabet)), need_q(g));
      emit(g, value_json(v), value_text(v));
    };
  });

  auto* mem = app.add_subcommand("member", "membership of a closed term");
  mem->add_option("--lang", langs, "language JSON")->required()->expected(1);
  mem->add_option("--term", term, "closed term")->required();
  mem->callback([&] {
    run = [&] {
      Language l = load_language(langs.at(0));
      bool m = member(l, parse_term(term, {}, options_for(l.type(), alphabet)));
      emit(g, Json{{"member", m}}, m ? "true" : "false");
    };
  });

  auto* lang = app.add_subcommand("lang", "language constructions");
  lang->add_option("op", op, "not|and|or|product|arrow|pullback|lift|quantify|contains|normalize")
      ->required()
      ->check(CLI::IsMember({"not", "and", "or", "product", "arrow", "pullback", "lift", "quantify", "contains",
                             "normalize"}));
  lang->add_option("--lang", langs, "language JSON (repeatable)")->required();
  lang->add_option("--term", term, "closed term or builtin name (successor, counter) for pullback");
  lang->add_option("--mode", mode, "exists|forall")->check(CLI::IsMember({"exists", "forall"}));
  lang->callback([&] {
    run = [&] {
      DefProvider defs(DefStrategy::automatic(g.fuel));
      std::vector<Language> ls;
      for (const auto& p : langs) ls.push_back(load_language(p));
      auto need = [&](std::size_t n) {
        if (ls.size() != n) throw UsageError("'" + op + "' takes " + std::to_string(n) + " --lang argument(s)");
      };
      if (op == "contains") {
        need(2);
        auto c = contains(ls[0], ls[1], defs);
        Json j{{"verdict", to_string(c.verdict)}};
        std::string text = to_string(c.verdict);
        if (c.witness) {
          j["witness"] = print_term(*c.witness);
          text += " " + print_term(*c.witness);
        }
        emit(g, j, text);
        return;
      }
      Reported<Language> result{Language::all(ls.at(0).type()), Exactness::Exact};
      if (op == "not") {
        need(1);
        result.value = Language::negate(ls[0]);
      } else if (op == "and" || op == "or") {
        result.value = boolean_combine(op == "and" ? BoolOp::And : BoolOp::Or, ls);
      } else if (op == "product") {
        need(2);
        result = product_lang(ls[0], ls[1], defs);
      } else if (op == "arrow") {
        need(2);
        result = arrow_lang(ls[0], ls[1], defs);
      } else if (op == "pullback") {
        need(1);
        if (term.empty()) throw UsageError("pullback needs --term");
        result.value = pullback(closed_term(term), ls[0]);
      } else if (op == "lift") {
        need(1);
        auto r = to_recognizer(ls[0], defs);
        auto lifted = lift_to_q(r.value, need_q(g), defs);
        result = {Language::leaf(lifted.value), r.exactness & lifted.exactness};
      } else if (op == "quantify") {
        need(1);
        if (mode.empty()) throw UsageError("quantify needs --mode");
        result = quantify_along_projection(ls[0], mode == "exists" ? Quantifier::Exists : Quantifier::Forall, defs);
      } else if (op == "normalize") {
        need(1);
        auto r = to_recognizer(ls[0], defs);
        result = {Language::leaf(r.value), r.exactness};
      }
      note_exactness(result.exactness);
      emit_json(g, to_json(result.value));
    };
  });

  auto* derive = app.add_subcommand("derive", "Brzozowski residuals");
  derive->add_option("--op", op, "left|right")->required()->check(CLI::IsMember({"left", "right"}));
  derive->add_option("--div", div, "divisor language JSON")->required();
  derive->add_option("--lang", langs, "language JSON")->required()->expected(1);
  derive->add_option("--kind", mode, "word|tree|general (default word)")
      ->check(CLI::IsMember({"word", "tree", "general"}));
  derive->add_option("--term", term, "binary term A * B -> C for general residuals");
  derive->add_option("--ranked", ranked, "ranked alphabet for tree residuals, e.g. f:1,c:0");
  derive->callback([&] {
    run = [&] {
      DefProvider defs(DefStrategy::automatic(g.fuel));
      Language d = load_language(div);
      Language l = load_language(langs.at(0));
      Side s = op == "left" ? Side::Left : Side::Right;
      Reported<Language> r{l, Exactness::Exact};
      if (mode.empty() || mode == "word") {
        std::size_t n = word_letters(l.type());
        if (n == 0) throw Error(ErrorKind::NotWordType, print_type(l.type()) + " is not a word type");
        r = word_residual(Alphabet::standard(n), s, d, l, defs);
      } else if (mode == "tree") {
        if (ranked.empty()) throw UsageError("tree residuals need --ranked");
        r = tree_context_residual(ranked_arg(ranked), s, d, l, defs);
      } else {
        if (term.empty()) throw UsageError("general residuals need --term");
        Term m = closed_term(term);
        r = s == Side::Left ? left_residual(m, d, l, defs) : right_residual(m, d, l, defs);
      }
      note_exactness(r.exactness);
      emit_json(g, to_json(r.value));
    };
  });

  auto* dfa2ho = app.add_subcommand("dfa2ho", "DFA to recognizer");
  dfa2ho->add_option("--dfa", dfa_path, "DFA JSON")->required();
  dfa2ho->callback([&] {
    run = [&] { emit_json(g, to_json(dfa_to_recognizer(dfa_from_json(read_json_file(dfa_path))))); };
  });

  auto* ho2dfa = app.add_subcommand("ho2dfa", "word language to DFA");
  ho2dfa->add_option("--lang", langs, "language JSON")->required()->expected(1);
  ho2dfa->add_option("--alphabet", alphabet, "letter names, e.g. a,b");
  ho2dfa->add_flag("--minimize", minimize, "minimize the result");
  ho2dfa->callback([&] {
    run = [&] {
      std::optional<Alphabet> a;
      if (!alphabet.empty()) a = alphabet_arg(alphabet);
      Dfa d = language_to_dfa(load_language(langs.at(0)), a);
      emit_json(g, to_json(minimize ? dfa_minimize(d) : d));
    };
  });

  auto* dfa_derive = app.add_subcommand("dfa-derive", "classical derivative of a DFA");
  dfa_derive->add_option("--dfa", dfa_path, "DFA JSON")->required();
  dfa_derive->add_option("--side", side, "left|right")->required()->check(CLI::IsMember({"left", "right"}));
  dfa_derive->add_option("--letter", letter, "letter")->required();
  dfa_derive->callback([&] {
    run = [&] {
      Dfa d = dfa_from_json(read_json_file(dfa_path));
      emit_json(g, to_json(classical_derivative(d, side == "left" ? Side::Left : Side::Right, letter)));
    };
  });

  auto* enum_def = app.add_subcommand("enum-def", "definable values of a type at q");
  enum_def->add_option("--type", type, "type")->required();
  enum_def->add_flag("--generic", generic, "use fuel-bounded enumeration");
  enum_def->callback([&] {
    run = [&] {
      DefStrategy st = generic ? DefStrategy::generic(g.fuel) : DefStrategy::automatic(g.fuel);
      DefSet d = def_set(parse_type(type), need_q(g), st);
      std::ostringstream text;
      text << d.size() << " values (" << to_string(d.exactness()) << ")";
      for (const auto& e : d.entries()) text << "\n" << value_text(e.value) << "\t" << print_term(e.representative);
      emit(g, to_json(d), text.str());
    };
  });

  auto* diag = app.add_subcommand("witness-diagonal", "colliding numerals certifying non-regularity");
  diag->add_option("--search-budget", search_budget, "largest numeral tried")->capture_default_str();
  diag->callback([&] {
    run = [&] {
      auto [n, m] = diagonal_non_openness_witness(need_q(g), search_budget);
      emit(g, Json{{"q", g.q}, {"n", n}, {"m", m}}, std::to_string(n) + " " + std::to_string(m));
    };
  });

  auto* single = app.add_subcommand("singleton", "recognizer of a single word");
  single->add_option("--word", word, "word (empty for epsilon)");
  single->add_option("--alphabet", alphabet, "letters, e.g. a,b")->required();
  single->callback([&] {
    run = [&] {
      Alphabet a = alphabet_arg(alphabet);
      emit_json(g, to_json(singleton_language(a, a.parse_word(word))));
    };
  });

  auto* rnd = app.add_subcommand("random-dfa", "seeded random DFA");
  rnd->add_option("--states", states, "maximum state count")->capture_default_str();
  rnd->add_option("--alphabet", alphabet, "letters, e.g. a,b")->required();
  rnd->callback([&] {
    run = [&] {
      std::mt19937_64 rng(g.seed);
      emit_json(g, to_json(random_dfa(rng, states, alphabet_arg(alphabet))));
    };
  });

  for (auto* c : app.get_subcommands({})) add_globals(c);
  for (auto* c : {check, nf, eval, mem}) c->add_option("--alphabet", alphabet, "alphabet for `word` abbreviations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    Limits limits = current_limits();
    if (g.budget > 0) limits.space_budget = g.budget;
    ScopedLimits scope(limits);
    run();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
