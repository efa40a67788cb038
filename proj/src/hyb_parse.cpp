#include "klab/hyb/parse.hpp"

#include <cctype>
#include <map>
#include <set>
#include <vector>

namespace klab::hyb {

namespace {

enum class Tok {
  Id, Number, LParen, RParen, LBrace, RBrace, Comma, Semi, Assign, Prime,
  Eq, Amp, AmpAmp, Bar, BarBar, Leq, Geq, Star, Plus, KwSkip, KwChoice, End
};

struct Token {
  Tok kind;
  std::string text;
  double num = 0.0;
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
  void next() {
    while (i_ < s_.size() && std::isspace((unsigned char)s_[i_])) advance();
    tok_.line = line_;
    tok_.col = col_;
    if (i_ >= s_.size()) {
      tok_.kind = Tok::End;
      return;
    }
    char c = s_[i_];
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::string id;
      while (i_ < s_.size() && (std::isalnum((unsigned char)s_[i_]) || s_[i_] == '_')) {
        id += s_[i_];
        advance();
      }
      tok_.text = id;
      tok_.kind = id == "skip" ? Tok::KwSkip : id == "choice" ? Tok::KwChoice : Tok::Id;
      return;
    }
    if (std::isdigit((unsigned char)c) || c == '.' ||
        (c == '-' && i_ + 1 < s_.size() &&
         (std::isdigit((unsigned char)s_[i_ + 1]) || s_[i_ + 1] == '.'))) {
      std::size_t start = i_;
      if (s_[i_] == '-') advance();
      while (i_ < s_.size() && (std::isdigit((unsigned char)s_[i_]) || s_[i_] == '.' ||
                                s_[i_] == 'e' || s_[i_] == 'E' ||
                                ((s_[i_] == '+' || s_[i_] == '-') &&
                                 (s_[i_ - 1] == 'e' || s_[i_ - 1] == 'E'))))
        advance();
      tok_.text = s_.substr(start, i_ - start);
      try {
        tok_.num = std::stod(tok_.text);
      } catch (...) {
        throw ParseError("bad number '" + tok_.text + "'", tok_.line, tok_.col);
      }
      tok_.kind = Tok::Number;
      return;
    }
    auto two = [&](char a, char b) {
      return c == a && i_ + 1 < s_.size() && s_[i_ + 1] == b;
    };
    if (two(':', '=')) { advance(); advance(); tok_.kind = Tok::Assign; return; }
    if (two('&', '&')) { advance(); advance(); tok_.kind = Tok::AmpAmp; return; }
    if (two('|', '|')) { advance(); advance(); tok_.kind = Tok::BarBar; return; }
    if (two('<', '=')) { advance(); advance(); tok_.kind = Tok::Leq; return; }
    if (two('>', '=')) { advance(); advance(); tok_.kind = Tok::Geq; return; }
    advance();
    switch (c) {
      case '(': tok_.kind = Tok::LParen; return;
      case ')': tok_.kind = Tok::RParen; return;
      case '{': tok_.kind = Tok::LBrace; return;
      case '}': tok_.kind = Tok::RBrace; return;
      case ',': tok_.kind = Tok::Comma; return;
      case ';': tok_.kind = Tok::Semi; return;
      case '\'': tok_.kind = Tok::Prime; return;
      case '=': tok_.kind = Tok::Eq; return;
      case '&': tok_.kind = Tok::Amp; return;
      case '|': tok_.kind = Tok::Bar; return;
      case '*': tok_.kind = Tok::Star; return;
      case '+': tok_.kind = Tok::Plus; return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", tok_.line,
                         tok_.col);
    }
  }

  void advance() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  const std::string& s_;
  std::size_t i_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

// terms with named variables, bound to indices after the whole parse
struct RawTerm {
  std::vector<std::pair<std::string, double>> monomials;
  double constant = 0.0;
};

struct RawPred {
  HybPred::Kind kind = HybPred::Kind::Leq;
  RawTerm lhs, rhs;
  std::vector<RawPred> kids;
};

struct RawAtom {
  HybAtom::Kind kind = HybAtom::Kind::Assign;
  std::vector<std::pair<std::string, RawTerm>> tuple;
  HybAtom::Trigger trigger = HybAtom::Trigger::Duration;
  double duration = 0.0;
  RawPred event;
  int line = 1, col = 1;
};

struct RawStmt {
  HybStmt::Kind kind = HybStmt::Kind::Skip;
  RawAtom atom;
  std::vector<RawStmt> kids;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) {}

  HybProgram run() {
    RawStmt prog = parse_prog();
    expect(Tok::End, "end of input");
    return bind(prog);
  }

 private:
  Token expect(Tok k, const char* what) {
    if (lex_.peek().kind != k)
      throw ParseError(std::string("expected ") + what, lex_.peek().line,
                       lex_.peek().col);
    return lex_.take();
  }

  void note_var(const std::string& name) {
    if (!var_index_.count(name)) {
      var_index_[name] = (int)vars_.size();
      vars_.push_back(name);
    }
  }

  RawStmt parse_prog() {
    RawStmt first = parse_stmt();
    if (lex_.peek().kind != Tok::Semi) return first;
    lex_.take();
    RawStmt rest = parse_prog();
    RawStmt seq;
    seq.kind = HybStmt::Kind::Seq;
    seq.kids = {std::move(first), std::move(rest)};
    return seq;
  }

  RawStmt parse_stmt() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::KwSkip: {
        lex_.take();
        return RawStmt{};
      }
      case Tok::LBrace: {
        lex_.take();
        RawStmt inner = parse_prog();
        expect(Tok::RBrace, "'}'");
        return inner;
      }
      case Tok::KwChoice: {
        lex_.take();
        expect(Tok::LBrace, "'{'");
        RawStmt left = parse_prog();
        expect(Tok::Bar, "'|'");
        RawStmt right = parse_prog();
        expect(Tok::RBrace, "'}'");
        RawStmt ch;
        ch.kind = HybStmt::Kind::Choice;
        ch.kids = {std::move(left), std::move(right)};
        return ch;
      }
      case Tok::LParen:
        return parse_atom();
      default:
        throw ParseError("expected a statement", t.line, t.col);
    }
  }

  RawStmt parse_atom() {
    Token open = expect(Tok::LParen, "'('");
    RawAtom atom;
    atom.line = open.line;
    atom.col = open.col;
    Token first = expect(Tok::Id, "variable");
    note_var(first.text);
    bool flow = lex_.peek().kind == Tok::Prime;
    atom.kind = flow ? HybAtom::Kind::Flow : HybAtom::Kind::Assign;
    if (flow) {
      lex_.take();
      expect(Tok::Eq, "'='");
    } else {
      expect(Tok::Assign, "':='");
    }
    atom.tuple.emplace_back(first.text, parse_term());
    while (lex_.peek().kind == Tok::Comma) {
      lex_.take();
      Token id = expect(Tok::Id, "variable");
      note_var(id.text);
      if (flow) {
        expect(Tok::Prime, "'");
        expect(Tok::Eq, "'='");
      } else {
        expect(Tok::Assign, "':='");
      }
      atom.tuple.emplace_back(id.text, parse_term());
    }
    if (flow) {
      expect(Tok::Amp, "'&'");
      parse_trigger(atom);
    }
    expect(Tok::RParen, "')'");
    RawStmt s;
    s.kind = HybStmt::Kind::Atom;
    s.atom = std::move(atom);
    return s;
  }

  void parse_trigger(RawAtom& atom) {
    RawTerm first = parse_term();
    if (lex_.peek().kind == Tok::Leq || lex_.peek().kind == Tok::Geq) {
      atom.trigger = HybAtom::Trigger::Event;
      atom.event = parse_pred_after(std::move(first));
    } else {
      if (!first.monomials.empty())
        throw ParseError("duration trigger must be a constant", lex_.peek().line,
                         lex_.peek().col);
      if (first.constant < 0)
        throw ParseError("duration must be nonnegative", lex_.peek().line,
                         lex_.peek().col);
      atom.trigger = HybAtom::Trigger::Duration;
      atom.duration = first.constant;
    }
  }

  // pred with '&&' binding tighter than '||'; first term already consumed
  RawPred parse_pred_after(RawTerm first) {
    RawPred cmp = parse_cmp_rest(std::move(first));
    return parse_pred_tail(std::move(cmp));
  }

  RawPred parse_pred_tail(RawPred left) {
    while (lex_.peek().kind == Tok::AmpAmp) {
      lex_.take();
      RawPred right = parse_cmp();
      RawPred node;
      node.kind = HybPred::Kind::And;
      node.kids = {std::move(left), std::move(right)};
      left = std::move(node);
    }
    if (lex_.peek().kind == Tok::BarBar) {
      lex_.take();
      RawPred right = parse_pred();
      RawPred node;
      node.kind = HybPred::Kind::Or;
      node.kids = {std::move(left), std::move(right)};
      return node;
    }
    return left;
  }

  RawPred parse_pred() {
    RawPred cmp = parse_cmp();
    return parse_pred_tail(std::move(cmp));
  }

  RawPred parse_cmp() { return parse_cmp_rest(parse_term()); }

  RawPred parse_cmp_rest(RawTerm lhs) {
    RawPred p;
    if (lex_.peek().kind == Tok::Leq)
      p.kind = HybPred::Kind::Leq;
    else if (lex_.peek().kind == Tok::Geq)
      p.kind = HybPred::Kind::Geq;
    else
      throw ParseError("expected '<=' or '>='", lex_.peek().line, lex_.peek().col);
    lex_.take();
    p.lhs = std::move(lhs);
    p.rhs = parse_term();
    return p;
  }

  RawTerm parse_term() {
    RawTerm t = parse_factor();
    while (lex_.peek().kind == Tok::Plus) {
      lex_.take();
      RawTerm r = parse_factor();
      t.constant += r.constant;
      for (auto& m : r.monomials) t.monomials.push_back(std::move(m));
    }
    return t;
  }

  // number | number '*' id | id | id '*' number
  RawTerm parse_factor() {
    RawTerm t;
    const Token& tok = lex_.peek();
    if (tok.kind == Tok::Number) {
      double r = lex_.take().num;
      if (lex_.peek().kind == Tok::Star) {
        lex_.take();
        Token id = expect(Tok::Id, "variable");
        note_var(id.text);
        t.monomials.emplace_back(id.text, r);
      } else {
        t.constant = r;
      }
      return t;
    }
    if (tok.kind == Tok::Id) {
      Token id = lex_.take();
      note_var(id.text);
      double r = 1.0;
      if (lex_.peek().kind == Tok::Star) {
        lex_.take();
        r = expect(Tok::Number, "number").num;
      }
      t.monomials.emplace_back(id.text, r);
      return t;
    }
    throw ParseError("expected a term", tok.line, tok.col);
  }

  // ----- binding to the collected variable order -----

  AffineTerm bind_term(const RawTerm& raw) const {
    AffineTerm t;
    t.coeff = Eigen::VectorXd::Zero((Eigen::Index)vars_.size());
    t.constant = raw.constant;
    for (auto& [name, c] : raw.monomials)
      t.coeff((Eigen::Index)var_index_.at(name)) += c;
    return t;
  }

  HybPred bind_pred(const RawPred& raw) const {
    HybPred p;
    p.kind = raw.kind;
    if (raw.kids.empty()) {
      p.lhs = bind_term(raw.lhs);
      p.rhs = bind_term(raw.rhs);
    } else {
      for (const RawPred& k : raw.kids) p.kids.push_back(bind_pred(k));
    }
    return p;
  }

  HybStmt bind_stmt(const RawStmt& raw, HybProgram& prog) const {
    HybStmt s;
    s.kind = raw.kind;
    if (raw.kind == HybStmt::Kind::Atom) {
      const RawAtom& a = raw.atom;
      s.atom.kind = a.kind;
      s.atom.trigger = a.trigger;
      s.atom.duration = a.duration;
      std::set<std::string> seen;
      for (auto& [name, term] : a.tuple)
        if (!seen.insert(name).second)
          throw ParseError("variable '" + name + "' appears twice in a tuple",
                           a.line, a.col);
      for (const std::string& v : vars_)
        if (!seen.count(v))
          throw ParseError("tuple does not cover variable '" + v + "'", a.line,
                           a.col);
      s.atom.terms.resize(vars_.size());
      for (auto& [name, term] : a.tuple)
        s.atom.terms[(std::size_t)var_index_.at(name)] = bind_term(term);
      if (a.trigger == HybAtom::Trigger::Event) {
        s.atom.event = bind_pred(a.event);
        prog.has_event = true;
      } else if (a.kind == HybAtom::Kind::Flow) {
        prog.has_duration = true;
      }
    } else if (raw.kind == HybStmt::Kind::Seq || raw.kind == HybStmt::Kind::Choice) {
      if (raw.kind == HybStmt::Kind::Choice) prog.has_choice = true;
      for (const RawStmt& k : raw.kids) s.kids.push_back(bind_stmt(k, prog));
    }
    return s;
  }

  HybProgram bind(const RawStmt& raw) {
    HybProgram prog;
    prog.vars = vars_;
    prog.root = bind_stmt(raw, prog);
    return prog;
  }

  Lexer lex_;
  std::vector<std::string> vars_;
  std::map<std::string, int> var_index_;
};

}  // namespace

HybProgram parse_hyb(const std::string& text) { return Parser(text).run(); }

}  // namespace klab::hyb
