#include "menichetti/expr.hpp"

#include <cctype>

namespace menichetti {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ExprPtr parse() {
    auto e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Parse, msg + " at column " + std::to_string(pos_ + 1) + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static ExprPtr node(Expr::Op op, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->args = std::move(args);
    return e;
  }

  ExprPtr sum() {
    auto lhs = product();
    for (;;) {
      if (accept('+')) lhs = node(Expr::Op::Add, {lhs, product()});
      else if (accept('-')) lhs = node(Expr::Op::Sub, {lhs, product()});
      else return lhs;
    }
  }

  ExprPtr product() {
    auto lhs = unary();
    for (;;) {
      if (accept('*')) lhs = node(Expr::Op::Mul, {lhs, unary()});
      else if (accept('/')) lhs = node(Expr::Op::Div, {lhs, unary()});
      else return lhs;
    }
  }

  ExprPtr unary() {
    if (accept('-')) return node(Expr::Op::Neg, {unary()});
    if (accept('+')) return unary();
    return power();
  }

  ExprPtr power() {
    auto base = primary();
    if (!accept('^')) return base;
    bool neg = false;
    bool paren = accept('(');
    if (accept('-')) neg = true;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    if (pos_ - start > 9) fail("exponent too large");
    long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (paren && !accept(')')) fail("expected ')'");
    auto n = std::make_shared<Expr>();
    n->op = Expr::Op::Pow;
    n->exponent = neg ? -e : e;
    n->args = {base};
    return n;
  }

  ExprPtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = sum();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto n = std::make_shared<Expr>();
      n->op = Expr::Op::Number;
      n->number = mpz_class(std::string(s_.substr(start, pos_ - start)));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      auto n = std::make_shared<Expr>();
      n->op = Expr::Op::Var;
      n->name = std::string(s_.substr(start, pos_ - start));
      return n;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace menichetti
