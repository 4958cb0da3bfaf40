#include "holam/syntax.hpp"

#include <cctype>
#include <set>
#include <vector>

#include "holam/error.hpp"
#include "holam/kernel.hpp"

namespace holam {

namespace {

struct Token {
  enum class Kind { Ident, Number, Symbol, End } kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      std::size_t line = line_, col = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Token::Kind::End, "", line, col});
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string id;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                      src_[pos_] == '_' || src_[pos_] == '\'')) {
          id += src_[pos_];
          advance();
        }
        out.push_back({Token::Kind::Ident, id, line, col});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          num += src_[pos_];
          advance();
        }
        out.push_back({Token::Kind::Number, num, line, col});
      } else if (src_.substr(pos_, 2) == "->") {
        advance();
        advance();
        out.push_back({Token::Kind::Symbol, "->", line, col});
      } else if (src_.substr(pos_, 2) == "\xce\xbb") {  // λ
        advance();
        advance();
        out.push_back({Token::Kind::Symbol, "\\", line, col});
      } else if (std::string_view("\\.:(),*").find(c) != std::string_view::npos) {
        advance();
        out.push_back({Token::Kind::Symbol, std::string(1, c), line, col});
      } else {
        throw SyntaxError(line, col, std::string("unexpected character '") + c + "'");
      }
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }

  std::string_view src_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

const std::set<std::string>& keywords() {
  static const std::set<std::string> k = {"fst", "snd", "word", "num", "o", "eps"};
  return k;
}

class Parser {
 public:
  Parser(std::string_view src, ParseOptions options)
      : tokens_(Lexer(src).run()), options_(std::move(options)) {}

  Type whole_type() {
    Type t = type();
    expect_end();
    return t;
  }

  Term whole_term(const Context& ctx) {
    std::vector<std::string> scope;
    for (const auto& e : ctx.entries()) scope.push_back(e.first);
    Term t = term(scope);
    expect_end();
    return t;
  }

  Context whole_context() {
    Context ctx;
    if (peek().kind == Token::Kind::End) return ctx;
    while (true) {
      std::string name = ident();
      expect(":");
      ctx = ctx.extended(name, type());
      if (!accept(",")) break;
    }
    expect_end();
    return ctx;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  bool is(const std::string& sym) const {
    return peek().kind == Token::Kind::Symbol && peek().text == sym;
  }
  bool accept(const std::string& sym) {
    if (!is(sym)) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(peek().line, peek().column, msg);
  }
  void expect(const std::string& sym) {
    if (!accept(sym)) fail("expected '" + sym + "'");
  }
  void expect_end() {
    if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "'");
  }
  std::string ident() {
    if (peek().kind != Token::Kind::Ident || keywords().count(peek().text)) fail("expected identifier");
    return next().text;
  }

  // type := prod ('->' type)?
  Type type() {
    Type left = product_type();
    if (accept("->")) return Type::arrow(left, type());
    return left;
  }
  Type product_type() {
    Type left = atom_type();
    if (accept("*")) return Type::product(left, product_type());
    return left;
  }
  Type atom_type() {
    if (accept("(")) {
      Type t = type();
      expect(")");
      return t;
    }
    if (peek().kind == Token::Kind::Ident && peek().text == "o") {
      ++pos_;
      return Type::base();
    }
    if (peek().kind == Token::Kind::Number && peek().text == "1") {
      ++pos_;
      return Type::unit();
    }
    fail("expected a type");
  }

  Term term(std::vector<std::string>& scope) {
    if (accept("\\")) {
      std::string name = ident();
      expect(":");
      Type dom = type();
      expect(".");
      scope.push_back(name);
      Term body = term(scope);
      scope.pop_back();
      return Term::lam(name, dom, body);
    }
    std::optional<Term> acc;
    while (starts_item()) {
      Term item = this->item(scope);
      acc = acc ? Term::app(*acc, item) : item;
    }
    if (!acc) fail("expected a term");
    if (is("\\")) acc = Term::app(*acc, term(scope));
    return *acc;
  }

  bool starts_item() const {
    const auto& t = peek();
    if (t.kind == Token::Kind::Ident) return true;
    return t.kind == Token::Kind::Symbol && t.text == "(";
  }

  Term item(std::vector<std::string>& scope) {
    const Token& t = peek();
    if (t.kind == Token::Kind::Ident && (t.text == "fst" || t.text == "snd")) {
      ++pos_;
      if (!starts_item()) fail("expected an operand");
      Term operand = item(scope);
      return t.text == "fst" ? Term::fst(operand) : Term::snd(operand);
    }
    if (t.kind == Token::Kind::Ident && t.text == "word") {
      ++pos_;
      if (peek().kind != Token::Kind::Ident) fail("expected letters after 'word'");
      std::string letters = next().text;
      if (letters == "eps") letters.clear();
      Alphabet alphabet = options_.word_alphabet ? *options_.word_alphabet : implied(letters);
      return shift(church_word(alphabet, letters), static_cast<std::ptrdiff_t>(scope.size()));
    }
    if (t.kind == Token::Kind::Ident && t.text == "num") {
      ++pos_;
      if (peek().kind != Token::Kind::Number) fail("expected a number after 'num'");
      return church_numeral(std::stoul(next().text));
    }
    if (t.kind == Token::Kind::Ident) {
      if (keywords().count(t.text)) fail("unexpected keyword '" + t.text + "'");
      for (std::size_t i = scope.size(); i-- > 0;) {
        if (scope[i] == t.text) {
          ++pos_;
          return Term::var(scope.size() - 1 - i);
        }
      }
      throw SyntaxError(t.line, t.column, "unbound variable '" + t.text + "'");
    }
    expect("(");
    if (accept(")")) return Term::unit();
    Term first = term(scope);
    if (accept(",")) {
      Term second = term(scope);
      expect(")");
      return Term::pair(first, second);
    }
    expect(")");
    return first;
  }

  Alphabet implied(const std::string& letters) const {
    char max = 'a';
    for (char c : letters) {
      if (c < 'a' || c > 'z') fail(std::string("letter '") + c + "' outside a-z");
      max = std::max(max, c);
    }
    return Alphabet::standard(static_cast<std::size_t>(max - 'a') + 1);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ParseOptions options_;
};

// Printing -----------------------------------------------------------------------

std::string print_type_prec(const Type& t, int prec) {
  // prec 0: arrow allowed, 1: product allowed, 2: atom
  switch (t.kind()) {
    case Type::Kind::Base: return "o";
    case Type::Kind::Unit: return "1";
    case Type::Kind::Product: {
      std::string s = print_type_prec(t.left(), 2) + " * " + print_type_prec(t.right(), 1);
      return prec > 1 ? "(" + s + ")" : s;
    }
    case Type::Kind::Arrow: {
      std::string s = print_type_prec(t.domain(), 1) + " -> " + print_type_prec(t.codomain(), 0);
      return prec > 0 ? "(" + s + ")" : s;
    }
  }
  return "?";
}

class Printer {
 public:
  explicit Printer(const Context& ctx) {
    for (const auto& e : ctx.entries()) scope_.push_back(e.first);
  }

  // prec 0: lambda allowed, 1: application allowed, 2: atom
  std::string print(const Term& t, int prec) {
    switch (t.kind()) {
      case Term::Kind::Var: {
        if (t.index() >= scope_.size()) return "#" + std::to_string(t.index());
        return scope_[scope_.size() - 1 - t.index()];
      }
      case Term::Kind::Lam: {
        std::string name = fresh(t.name());
        std::string head = "\\" + name + ":" + print_type(t.domain()) + ". ";
        scope_.push_back(name);
        std::string body = print(t.body(), 0);
        scope_.pop_back();
        std::string s = head + body;
        return prec > 0 ? "(" + s + ")" : s;
      }
      case Term::Kind::App: {
        std::string s = print(t.fn(), 1) + " " + print(t.arg(), 2);
        return prec > 1 ? "(" + s + ")" : s;
      }
      case Term::Kind::Pair:
        return "(" + print(t.first(), 0) + ", " + print(t.second(), 0) + ")";
      case Term::Kind::Fst:
      case Term::Kind::Snd: {
        std::string s =
            std::string(t.kind() == Term::Kind::Fst ? "fst " : "snd ") + print(t.operand(), 2);
        return prec > 1 ? "(" + s + ")" : s;
      }
      case Term::Kind::Unit:
        return "()";
    }
    return "?";
  }

 private:
  std::string fresh(const std::string& hint) {
    std::string base = hint.empty() || keywords().count(hint) ? "x" : hint;
    auto taken = [&](const std::string& n) {
      for (const auto& s : scope_) {
        if (s == n) return true;
      }
      return keywords().count(n) > 0;
    };
    if (!taken(base)) return base;
    for (std::size_t i = 1;; ++i) {
      std::string candidate = base + std::to_string(i);
      if (!taken(candidate)) return candidate;
    }
  }

  std::vector<std::string> scope_;
};

}  // namespace

Type parse_type(std::string_view text) { return Parser(text, {}).whole_type(); }

Term parse_term(std::string_view text, const Context& ctx, const ParseOptions& options) {
  return Parser(text, options).whole_term(ctx);
}

Context parse_context(std::string_view text) { return Parser(text, {}).whole_context(); }

std::string print_type(const Type& t) { return print_type_prec(t, 0); }

std::string print_term(const Term& t, const Context& ctx) { return Printer(ctx).print(t, 0); }

}  // namespace holam
