// Recursive-descent parser for the function DSL (grammar in expr.hpp).

#include <cctype>
#include <charconv>
#include <string>

#include "fsc/expr.hpp"

namespace fsc {
namespace {

struct Token {
  enum class T {
    number,
    ident,
    lparen,
    rparen,
    comma,
    semicolon,
    plus,
    minus,
    star,
    slash,
    arrow,
    eq,
    lt,
    le,
    gt,
    ge,
    end,
  };
  T type = T::end;
  double num = 0.0;
  std::string ident;
  int line = 1;
  int col = 1;
};

const char* token_name(Token::T t) {
  switch (t) {
    case Token::T::number: return "number";
    case Token::T::ident: return "identifier";
    case Token::T::lparen: return "'('";
    case Token::T::rparen: return "')'";
    case Token::T::comma: return "','";
    case Token::T::semicolon: return "';'";
    case Token::T::plus: return "'+'";
    case Token::T::minus: return "'-'";
    case Token::T::star: return "'*'";
    case Token::T::slash: return "'/'";
    case Token::T::arrow: return "'->'";
    case Token::T::eq: return "'=='";
    case Token::T::lt: return "'<'";
    case Token::T::le: return "'<='";
    case Token::T::gt: return "'>'";
    case Token::T::ge: return "'>='";
    case Token::T::end: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      bump();
    current_ = Token{};
    current_.line = line_;
    current_.col = col_;
    if (pos_ >= text_.size()) {
      current_.type = Token::T::end;
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      lex_number();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isalnum(static_cast<unsigned char>(text_[pos_])))
        bump();
      current_.type = Token::T::ident;
      current_.ident = text_.substr(start, pos_ - start);
      return;
    }
    switch (c) {
      case '(': bump(); current_.type = Token::T::lparen; return;
      case ')': bump(); current_.type = Token::T::rparen; return;
      case ',': bump(); current_.type = Token::T::comma; return;
      case ';': bump(); current_.type = Token::T::semicolon; return;
      case '+': bump(); current_.type = Token::T::plus; return;
      case '*': bump(); current_.type = Token::T::star; return;
      case '/': bump(); current_.type = Token::T::slash; return;
      case '-':
        bump();
        if (pos_ < text_.size() && text_[pos_] == '>') {
          bump();
          current_.type = Token::T::arrow;
        } else {
          current_.type = Token::T::minus;
        }
        return;
      case '=':
        bump();
        if (pos_ < text_.size() && text_[pos_] == '=') {
          bump();
          current_.type = Token::T::eq;
          return;
        }
        throw ParseError("expected '==' at " + where(), line_, col_);
      case '<':
        bump();
        if (pos_ < text_.size() && text_[pos_] == '=') {
          bump();
          current_.type = Token::T::le;
        } else {
          current_.type = Token::T::lt;
        }
        return;
      case '>':
        bump();
        if (pos_ < text_.size() && text_[pos_] == '=') {
          bump();
          current_.type = Token::T::ge;
        } else {
          current_.type = Token::T::gt;
        }
        return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "' at " +
                             where(),
                         line_, col_);
    }
  }

  void lex_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      bump();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      bump();
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        bump();
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t mark = pos_;
      bump();
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-'))
        bump();
      if (pos_ < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
          bump();
      } else {
        // not an exponent after all (e.g. "2e" followed by junk)
        while (pos_ > mark) {
          --pos_;
          --col_;
        }
      }
    }
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    double v = 0.0;
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last)
      throw ParseError("bad number at " + where(), current_.line, current_.col);
    current_.type = Token::T::number;
    current_.num = v;
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string where() const {
    return std::to_string(line_) + ":" + std::to_string(col_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  FnPtr parse_function() {
    FnPtr f = fexpr();
    expect_end();
    return f;
  }

  ScalarExprPtr parse_scalar_only() {
    ScalarExprPtr g = sexpr();
    expect_end();
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, const Token& at) {
    throw ParseError("parse error at " + std::to_string(at.line) + ":" +
                         std::to_string(at.col) + ": " + msg,
                     at.line, at.col);
  }

  Token expect(Token::T type, const char* what) {
    Token t = lex_.next();
    if (t.type != type)
      fail(std::string("expected ") + what + ", found " + token_name(t.type),
           t);
    return t;
  }

  void expect_end() {
    Token t = lex_.peek();
    if (t.type != Token::T::end)
      fail(std::string("unexpected trailing input (") + token_name(t.type) +
               ")",
           t);
  }

  double signed_number() {
    Token t = lex_.peek();
    double sign = 1.0;
    if (t.type == Token::T::minus || t.type == Token::T::plus) {
      lex_.next();
      sign = t.type == Token::T::minus ? -1.0 : 1.0;
    }
    Token n = expect(Token::T::number, "number");
    return sign * n.num;
  }

  // ---- fractal expressions ----

  FnPtr fexpr() {
    FnPtr out = fterm();
    for (;;) {
      Token t = lex_.peek();
      if (t.type == Token::T::plus) {
        lex_.next();
        out = FnExpr::sum(out, fterm());
      } else if (t.type == Token::T::minus) {
        lex_.next();
        out = FnExpr::diff(out, fterm());
      } else {
        return out;
      }
    }
  }

  FnPtr fterm() {
    FnPtr out = ffact();
    while (lex_.peek().type == Token::T::star) {
      lex_.next();
      out = FnExpr::product(out, ffact());
    }
    return out;
  }

  FnPtr ffact() {
    Token t = lex_.next();
    if (t.type == Token::T::lparen) {
      FnPtr inner = fexpr();
      expect(Token::T::rparen, "')'");
      return inner;
    }
    if (t.type != Token::T::ident)
      fail(std::string("expected function factor, found ") +
               token_name(t.type),
           t);
    if (t.ident == "fb" || t.ident == "fv") {
      expect(Token::T::lparen, "'('");
      double x = signed_number();
      expect(Token::T::rparen, "')'");
      return FnExpr::constant(
          t.ident == "fb" ? ScalarMode::base : ScalarMode::value, x);
    }
    if (t.ident == "mono") {
      expect(Token::T::lparen, "'('");
      KExprPtr k = kexpr();
      expect(Token::T::rparen, "')'");
      return FnExpr::mono(k);
    }
    if (t.ident == "max") {
      expect(Token::T::lparen, "'('");
      FnPtr a = fexpr();
      expect(Token::T::comma, "','");
      FnPtr b = fexpr();
      expect(Token::T::rparen, "')'");
      return FnExpr::maxof(a, b);
    }
    if (t.ident == "subst") {
      expect(Token::T::lparen, "'('");
      FnPtr outer = fexpr();
      expect(Token::T::semicolon, "';'");
      ScalarExprPtr inner = sexpr();
      expect(Token::T::rparen, "')'");
      return FnExpr::subst(outer, inner);
    }
    if (t.ident == "pw") {
      expect(Token::T::lparen, "'('");
      std::vector<Branch> branches;
      branches.push_back(branch());
      while (lex_.peek().type == Token::T::semicolon) {
        lex_.next();
        branches.push_back(branch());
      }
      expect(Token::T::rparen, "')'");
      if (!piecewise_total(branches))
        fail("piecewise guards do not cover [0, +inf)", t);
      return FnExpr::piecewise(std::move(branches));
    }
    fail("unknown identifier '" + t.ident + "'", t);
  }

  Branch branch() {
    Guard g;
    Token t = lex_.peek();
    if (t.type == Token::T::ident && t.ident == "else") {
      lex_.next();
      g.op = GuardOp::always;
    } else if (t.type == Token::T::ident && t.ident == "u") {
      lex_.next();
      Token op = lex_.next();
      switch (op.type) {
        case Token::T::eq: g.op = GuardOp::eq; break;
        case Token::T::lt: g.op = GuardOp::lt; break;
        case Token::T::le: g.op = GuardOp::le; break;
        case Token::T::gt: g.op = GuardOp::gt; break;
        case Token::T::ge: g.op = GuardOp::ge; break;
        default:
          fail(std::string("expected comparison operator, found ") +
                   token_name(op.type),
               op);
      }
      g.c = signed_number();
    } else {
      fail("expected guard ('u <op> c' or 'else')", t);
    }
    expect(Token::T::arrow, "'->'");
    return Branch{g, fexpr()};
  }

  // ---- coefficient expressions ----

  KExprPtr kexpr() {
    KExprPtr out = kterm();
    for (;;) {
      Token t = lex_.peek();
      if (t.type == Token::T::plus) {
        lex_.next();
        out = KExpr::binary(KExpr::Kind::add, out, kterm());
      } else if (t.type == Token::T::minus) {
        lex_.next();
        out = KExpr::binary(KExpr::Kind::sub, out, kterm());
      } else {
        return out;
      }
    }
  }

  KExprPtr kterm() {
    KExprPtr out = kfact();
    for (;;) {
      Token t = lex_.peek();
      if (t.type == Token::T::star) {
        lex_.next();
        out = KExpr::binary(KExpr::Kind::mul, out, kfact());
      } else if (t.type == Token::T::slash) {
        lex_.next();
        out = KExpr::binary(KExpr::Kind::div, out, kfact());
      } else {
        return out;
      }
    }
  }

  KExprPtr kfact() {
    Token t = lex_.next();
    switch (t.type) {
      case Token::T::number:
        return KExpr::make_num(t.num);
      case Token::T::minus:
        return KExpr::negate(kfact());
      case Token::T::lparen: {
        KExprPtr inner = kexpr();
        expect(Token::T::rparen, "')'");
        return inner;
      }
      case Token::T::ident:
        if (t.ident == "s") return KExpr::make_s();
        fail("unknown identifier '" + t.ident +
                 "' in coefficient expression (only 's' is bound)",
             t);
      default:
        fail(std::string("expected coefficient factor, found ") +
                 token_name(t.type),
             t);
    }
  }

  // ---- scalar expressions ----

  ScalarExprPtr sexpr() {
    ScalarExprPtr out = sterm();
    for (;;) {
      Token t = lex_.peek();
      if (t.type == Token::T::plus) {
        lex_.next();
        out = ScalarExpr::binary(ScalarExpr::Kind::add, out, sterm());
      } else if (t.type == Token::T::minus) {
        lex_.next();
        out = ScalarExpr::binary(ScalarExpr::Kind::sub, out, sterm());
      } else {
        return out;
      }
    }
  }

  ScalarExprPtr sterm() {
    ScalarExprPtr out = sfact();
    for (;;) {
      Token t = lex_.peek();
      if (t.type == Token::T::star) {
        lex_.next();
        out = ScalarExpr::binary(ScalarExpr::Kind::mul, out, sfact());
      } else if (t.type == Token::T::slash) {
        lex_.next();
        out = ScalarExpr::binary(ScalarExpr::Kind::div, out, sfact());
      } else {
        return out;
      }
    }
  }

  ScalarExprPtr sfact() {
    Token t = lex_.next();
    switch (t.type) {
      case Token::T::number:
        return ScalarExpr::make_num(t.num);
      case Token::T::minus:
        return ScalarExpr::negate(sfact());
      case Token::T::lparen: {
        ScalarExprPtr inner = sexpr();
        expect(Token::T::rparen, "')'");
        return inner;
      }
      case Token::T::ident:
        if (t.ident == "u") return ScalarExpr::make_u();
        if (t.ident == "pow") {
          expect(Token::T::lparen, "'('");
          ScalarExprPtr base = sexpr();
          expect(Token::T::comma, "','");
          double r = signed_number();
          expect(Token::T::rparen, "')'");
          return ScalarExpr::make_pow(base, r);
        }
        fail("unknown identifier '" + t.ident +
                 "' in scalar expression (only 'u' and 'pow' are bound)",
             t);
      default:
        fail(std::string("expected scalar factor, found ") +
                 token_name(t.type),
             t);
    }
  }

  Lexer lex_;
};

}  // namespace

FnPtr parse(const std::string& text, const AlphaContext& ctx) {
  (void)ctx;  // parameters do not affect parsing; kept for interface symmetry
  Parser p(text);
  return p.parse_function();
}

ScalarExprPtr parse_scalar(const std::string& text) {
  Parser p(text);
  return p.parse_scalar_only();
}

}  // namespace fsc
