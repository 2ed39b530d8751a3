#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "menichetti/error.hpp"

namespace menichetti {

// Small arithmetic expression AST: integers, identifiers, + - * / ^ and parentheses.
struct Expr {
  enum class Op { Number, Var, Add, Sub, Mul, Div, Neg, Pow };
  Op op = Op::Number;
  mpz_class number;
  std::string name;
  long exponent = 0;
  std::vector<std::shared_ptr<const Expr>> args;
};
using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expression(std::string_view text);

// Ctx supplies: T constant(const mpz_class&), T variable(const std::string&),
// T divide(const T&, const T&), T power(const T&, long).
template <class T, class Ctx>
T evaluate(const Expr& e, const Ctx& ctx) {
  switch (e.op) {
    case Expr::Op::Number: return ctx.constant(e.number);
    case Expr::Op::Var: return ctx.variable(e.name);
    case Expr::Op::Add: return evaluate<T>(*e.args[0], ctx) + evaluate<T>(*e.args[1], ctx);
    case Expr::Op::Sub: return evaluate<T>(*e.args[0], ctx) - evaluate<T>(*e.args[1], ctx);
    case Expr::Op::Mul: return evaluate<T>(*e.args[0], ctx) * evaluate<T>(*e.args[1], ctx);
    case Expr::Op::Div: return ctx.divide(evaluate<T>(*e.args[0], ctx), evaluate<T>(*e.args[1], ctx));
    case Expr::Op::Neg: return -evaluate<T>(*e.args[0], ctx);
    case Expr::Op::Pow: return ctx.power(evaluate<T>(*e.args[0], ctx), e.exponent);
  }
  throw Error(ErrorCode::Parse, "bad expression node");
}

}  // namespace menichetti
