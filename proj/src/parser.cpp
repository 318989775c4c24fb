#include "qcoord/parser.hpp"

#include <cctype>
#include <limits>

#include "qcoord/errors.hpp"

namespace qcoord {

namespace {

enum class Tok { kInt, kQ, kT, kD, kLBracket, kRBracket, kComma, kLParen, kRParen, kPlus, kMinus, kStar, kCaret, kEnd };

struct Token {
  Tok kind;
  std::size_t offset;
  bool space_before;
  std::string_view text;
};

const std::vector<std::string> kFactorStart = {"integer", "'q'", "'t'", "'D'", "'('", "'-'"};

std::string describe(Tok t) {
  switch (t) {
    case Tok::kInt: return "integer";
    case Tok::kQ: return "'q'";
    case Tok::kT: return "'t'";
    case Tok::kD: return "'D'";
    case Tok::kLBracket: return "'['";
    case Tok::kRBracket: return "']'";
    case Tok::kComma: return "','";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kPlus: return "'+'";
    case Tok::kMinus: return "'-'";
    case Tok::kStar: return "'*'";
    case Tok::kCaret: return "'^'";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  bool space = false;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = true;
      ++i;
      continue;
    }
    Token t{Tok::kEnd, i, space, src.substr(i, 1)};
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::kInt;
      t.text = src.substr(i, j - i);
      i = j;
    } else {
      switch (c) {
        case 'q': t.kind = Tok::kQ; break;
        case 't': t.kind = Tok::kT; break;
        case 'D': t.kind = Tok::kD; break;
        case '[': t.kind = Tok::kLBracket; break;
        case ']': t.kind = Tok::kRBracket; break;
        case ',': t.kind = Tok::kComma; break;
        case '(': t.kind = Tok::kLParen; break;
        case ')': t.kind = Tok::kRParen; break;
        case '+': t.kind = Tok::kPlus; break;
        case '-': t.kind = Tok::kMinus; break;
        case '*': t.kind = Tok::kStar; break;
        case '^': t.kind = Tok::kCaret; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", i, kFactorStart);
      }
      ++i;
      // identifiers are single letters; "qq" or "tx" is not a token
      if ((c == 'q' || c == 'D' || c == 't') && i < src.size() &&
          std::isalpha(static_cast<unsigned char>(src[i]))) {
        throw ParseError(std::string("unexpected character '") + src[i] + "'", i,
                         c == 't' ? std::vector<std::string>{"'['"} : std::vector<std::string>{});
      }
    }
    out.push_back(t);
    space = false;
  }
  out.push_back({Tok::kEnd, src.size(), space, {}});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, const ParseOptions& options) : tokens_(lex(src)), options_(options) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    if (peek().kind != Tok::kEnd) {
      fail("unexpected " + describe(peek().kind), {"'+'", "'-'", "'*'", "'^'", "end of input"});
    }
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected) const {
    throw ParseError(message, peek().offset, std::move(expected));
  }

  const Token& expect(Tok kind) {
    if (peek().kind != kind) fail("expected " + describe(kind) + ", found " + describe(peek().kind), {describe(kind)});
    return take();
  }

  static ExprPtr node(Expr::Kind kind, std::size_t offset, std::vector<ExprPtr> args = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->offset = offset;
    e->args = std::move(args);
    return e;
  }

  int small_int(const Token& t, const std::string& what) const {
    if (t.text.size() > 9) throw ParseError(what + " too large", t.offset, {});
    return std::stoi(std::string(t.text));
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      const Token& op = take();
      ExprPtr rhs = term();
      lhs = node(op.kind == Tok::kPlus ? Expr::Kind::kAdd : Expr::Kind::kSub, op.offset, {lhs, rhs});
    }
    return lhs;
  }

  static bool starts_factor(Tok k) {
    return k == Tok::kInt || k == Tok::kQ || k == Tok::kT || k == Tok::kD || k == Tok::kLParen;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (true) {
      const Token& t = peek();
      if (t.kind == Tok::kStar) {
        take();
        lhs = node(Expr::Kind::kMul, t.offset, {lhs, unary()});
      } else if (starts_factor(t.kind)) {
        if (!t.space_before) {
          fail("juxtaposed factors need '*' or whitespace between them", {"'*'", "whitespace"});
        }
        lhs = node(Expr::Kind::kMul, t.offset, {lhs, unary()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    if (peek().kind == Tok::kMinus) {
      const Token& t = take();
      return node(Expr::Kind::kNeg, t.offset, {unary()});
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (peek().kind != Tok::kCaret) return base;
    const Token& caret = take();
    bool negative = false;
    const std::size_t exp_offset = peek().offset;
    if (peek().kind == Tok::kMinus) {
      take();
      negative = true;
    }
    if (peek().kind != Tok::kInt) fail("expected an integer exponent", negative ? std::vector<std::string>{"integer"} : std::vector<std::string>{"integer", "'-'"});
    const int k = small_int(take(), "exponent");
    if (negative && base->kind != Expr::Kind::kQ && base->kind != Expr::Kind::kDet) {
      throw ParseError(base->kind == Expr::Kind::kGenerator ? "negative power on a generator"
                                                              : "negative power is allowed on q and D only",
                       exp_offset, {"integer"});
    }
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::kPow;
    e->offset = caret.offset;
    e->exponent = negative ? -k : k;
    e->args = {base};
    return e;
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kInt: {
        take();
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::kInteger;
        e->offset = t.offset;
        e->value = Integer(std::string(t.text));
        return e;
      }
      case Tok::kQ:
        take();
        return node(Expr::Kind::kQ, t.offset);
      case Tok::kD:
        if (options_.variant == Variant::kMn) {
          fail("D is not invertible in O_q(M_n); use --variant gl or sl", {"integer", "'q'", "'t'", "'('"});
        }
        take();
        return node(Expr::Kind::kDet, t.offset);
      case Tok::kT: {
        take();
        expect(Tok::kLBracket);
        const Token& it = expect(Tok::kInt);
        expect(Tok::kComma);
        const Token& jt = expect(Tok::kInt);
        expect(Tok::kRBracket);
        const int i = small_int(it, "index");
        const int j = small_int(jt, "index");
        if (i < 1 || i > options_.n) throw ParseError("row index out of range 1.." + std::to_string(options_.n), it.offset, {});
        if (j < 1 || j > options_.n) throw ParseError("column index out of range 1.." + std::to_string(options_.n), jt.offset, {});
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::kGenerator;
        e->offset = t.offset;
        e->gen = {i, j};
        return e;
      }
      case Tok::kLParen: {
        take();
        ExprPtr inner = expr();
        expect(Tok::kRParen);
        return inner;
      }
      default:
        fail(t.kind == Tok::kEnd ? "unexpected end of input" : "unexpected " + describe(t.kind), kFactorStart);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ParseOptions options_;
};

}  // namespace

ExprPtr parse(std::string_view src, const ParseOptions& options) {
  return Parser(src, options).parse_all();
}

}  // namespace qcoord
