#include "klab/prob/parse.hpp"

#include <cctype>

namespace klab::prob {

namespace {

struct Token {
  enum class Kind { Id, PlusL, RBracket, Semi, LParen, RParen, Rat, End } kind;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { next(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    next();
    return t;
  }

 private:
  void advance() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void next() {
    while (i_ < s_.size() && std::isspace((unsigned char)s_[i_])) advance();
    tok_.line = line_;
    tok_.col = col_;
    tok_.text.clear();
    if (i_ >= s_.size()) {
      tok_.kind = Token::Kind::End;
      return;
    }
    char c = s_[i_];
    if (std::isalpha((unsigned char)c) || c == '_') {
      while (i_ < s_.size() &&
             (std::isalnum((unsigned char)s_[i_]) || s_[i_] == '_')) {
        tok_.text += s_[i_];
        advance();
      }
      tok_.kind = Token::Kind::Id;
      return;
    }
    if (std::isdigit((unsigned char)c)) {
      while (i_ < s_.size() && (std::isdigit((unsigned char)s_[i_]) ||
                                s_[i_] == '.' || s_[i_] == '/')) {
        tok_.text += s_[i_];
        advance();
      }
      tok_.kind = Token::Kind::Rat;
      return;
    }
    if (c == '+' && i_ + 1 < s_.size() && s_[i_ + 1] == '[') {
      advance();
      advance();
      tok_.kind = Token::Kind::PlusL;
      return;
    }
    advance();
    switch (c) {
      case ']': tok_.kind = Token::Kind::RBracket; return;
      case ';': tok_.kind = Token::Kind::Semi; return;
      case '(': tok_.kind = Token::Kind::LParen; return;
      case ')': tok_.kind = Token::Kind::RParen; return;
      default:
        throw ProbParseError(std::string("unexpected character '") + c + "'",
                             tok_.line, tok_.col);
    }
  }

  const std::string& s_;
  std::size_t i_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) {}

  ProbProg run() {
    ProbProg p = parse_seq();
    if (lex_.peek().kind != Token::Kind::End)
      throw ProbParseError("trailing input", lex_.peek().line, lex_.peek().col);
    return p;
  }

 private:
  // seq := choice (';' seq)?   (lowest precedence, right associated)
  ProbProg parse_seq() {
    ProbProg left = parse_choice();
    if (lex_.peek().kind == Token::Kind::Semi) {
      lex_.take();
      return ProbProg::seq(std::move(left), parse_seq());
    }
    return left;
  }

  // choice := unary ('+[' rat ']' choice)?
  ProbProg parse_choice() {
    ProbProg left = parse_unary();
    if (lex_.peek().kind == Token::Kind::PlusL) {
      Token plus = lex_.take();
      Token r = lex_.peek();
      if (r.kind != Token::Kind::Rat)
        throw ProbParseError("expected a rational weight", r.line, r.col);
      lex_.take();
      Rat lambda;
      try {
        lambda = Rat::parse(r.text);
      } catch (...) {
        throw ProbParseError("bad rational '" + r.text + "'", r.line, r.col);
      }
      if (lambda < Rat(0) || Rat(1) < lambda)
        throw ProbParseError("weight outside [0,1]", r.line, r.col);
      if (lex_.peek().kind != Token::Kind::RBracket)
        throw ProbParseError("expected ']'", lex_.peek().line, lex_.peek().col);
      lex_.take();
      (void)plus;
      return ProbProg::convex(lambda, std::move(left), parse_choice());
    }
    return left;
  }

  ProbProg parse_unary() {
    Token t = lex_.peek();
    if (t.kind == Token::Kind::LParen) {
      lex_.take();
      ProbProg inner = parse_seq();
      if (lex_.peek().kind != Token::Kind::RParen)
        throw ProbParseError("expected ')'", lex_.peek().line, lex_.peek().col);
      lex_.take();
      return inner;
    }
    if (t.kind == Token::Kind::Rat && t.text == "0") {
      lex_.take();
      ProbProg p;
      p.kind = ProbProg::Kind::Zero;
      return p;
    }
    if (t.kind != Token::Kind::Id)
      throw ProbParseError("expected a program", t.line, t.col);
    lex_.take();
    if (t.text == "skip") return ProbProg{};
    if (t.text == "test") {
      Token id = lex_.peek();
      if (id.kind != Token::Kind::Id)
        throw ProbParseError("expected a test name", id.line, id.col);
      lex_.take();
      ProbProg p;
      p.kind = ProbProg::Kind::TestStmt;
      p.name = id.text;
      return p;
    }
    if (t.text == "if") {
      Token id = lex_.peek();
      if (id.kind != Token::Kind::Id)
        throw ProbParseError("expected a test name", id.line, id.col);
      lex_.take();
      expect_kw("then");
      ProbProg thenb = parse_choice();
      expect_kw("else");
      ProbProg elseb = parse_seq();  // greedy else
      ProbProg p;
      p.kind = ProbProg::Kind::Ite;
      p.name = id.text;
      p.kids = {std::move(thenb), std::move(elseb)};
      return p;
    }
    return ProbProg::atom(t.text);
  }

  void expect_kw(const char* kw) {
    Token t = lex_.peek();
    if (t.kind != Token::Kind::Id || t.text != kw)
      throw ProbParseError(std::string("expected '") + kw + "'", t.line, t.col);
    lex_.take();
  }

  Lexer lex_;
};

}  // namespace

ProbProg parse_prob(const std::string& text) { return Parser(text).run(); }

}  // namespace klab::prob
