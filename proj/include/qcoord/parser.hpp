#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qcoord/config.hpp"
#include "qcoord/engine.hpp"
#include "qcoord/integer.hpp"

namespace qcoord {

/// Expression tree. Grammar:
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | whitespace) unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' '-'? integer)?
///   atom   := integer | 'q' | 't' '[' integer ',' integer ']' | 'D' | '(' expr ')'
///
/// Negative exponents are accepted on q and D only.
struct Expr {
  enum class Kind { kInteger, kQ, kGenerator, kDet, kNeg, kAdd, kSub, kMul, kPow };

  Kind kind;
  std::size_t offset = 0;
  Integer value;           // kInteger
  GenIndex gen;            // kGenerator
  int exponent = 0;        // kPow
  std::vector<std::shared_ptr<const Expr>> args;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// What the parser needs to know about the target algebra.
struct ParseOptions {
  int n = 2;
  Variant variant = Variant::kMn;
};

/// Throws ParseError with the byte offset of the offending token and the
/// set of tokens that would have been accepted there.
ExprPtr parse(std::string_view src, const ParseOptions& options);

/// Evaluates through the engine; the result is in normal form.
template <CoefficientRing Ring>
typename Engine<Ring>::Elem eval(const Expr& e, Engine<Ring>& eng) {
  using Elem = typename Engine<Ring>::Elem;
  switch (e.kind) {
    case Expr::Kind::kInteger:
      return eng.scalar(eng.ring().from_laurent(LaurentPoly(e.value)));
    case Expr::Kind::kQ:
      return eng.scalar(eng.ring().scalar_q_power(1));
    case Expr::Kind::kGenerator:
      return eng.generator(e.gen);
    case Expr::Kind::kDet:
      return eng.determinant_power(1);
    case Expr::Kind::kNeg:
      return -eval(*e.args[0], eng);
    case Expr::Kind::kAdd:
      return eval(*e.args[0], eng) + eval(*e.args[1], eng);
    case Expr::Kind::kSub:
      return eval(*e.args[0], eng) - eval(*e.args[1], eng);
    case Expr::Kind::kMul:
      return eng.multiply(eval(*e.args[0], eng), eval(*e.args[1], eng));
    case Expr::Kind::kPow: {
      const Expr& base = *e.args[0];
      if (base.kind == Expr::Kind::kQ) return eng.scalar(eng.ring().scalar_q_power(e.exponent));
      if (base.kind == Expr::Kind::kDet) return eng.determinant_power(e.exponent);
      if (e.exponent < 0) throw ParseError("negative power", e.offset, {});
      return eng.power(eval(base, eng), static_cast<unsigned>(e.exponent));
    }
  }
  return Elem{};
}

}  // namespace qcoord
