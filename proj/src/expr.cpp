#include "zarcons/expr.hpp"

#include <cctype>
#include <memory>
#include <string>

#include "zarcons/error.hpp"

namespace zarcons {

namespace {

struct Node {
  enum class Kind { Num, Var, Sqrt, Irr, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind;
  Int value;  // Num literal, Pow exponent
  char var = 0;
  std::unique_ptr<Node> lhs, rhs;
};
using NodePtr = std::unique_ptr<Node>;

NodePtr make(Node::Kind k, NodePtr l = nullptr, NodePtr r = nullptr) {
  auto n = std::make_unique<Node>();
  n->kind = k;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::InvalidInput, "cannot parse '" + std::string(s_) + "' at " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  bool starts_primary() {
    const char c = peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  NodePtr expr() {
    NodePtr e = term();
    while (true) {
      if (accept('+')) e = make(Node::Kind::Add, std::move(e), term());
      else if (accept('-')) e = make(Node::Kind::Sub, std::move(e), term());
      else return e;
    }
  }

  NodePtr term() {
    NodePtr e = unary();
    while (true) {
      if (accept('*')) e = make(Node::Kind::Mul, std::move(e), unary());
      else if (accept('/')) e = make(Node::Kind::Div, std::move(e), unary());
      else if (starts_primary()) e = make(Node::Kind::Mul, std::move(e), power());
      else return e;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Node::Kind::Neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (!accept('^')) return base;
    bool paren = accept('(');
    bool negative = accept('-');
    if (!std::isdigit(static_cast<unsigned char>(peek()))) error("exponent must be an integer");
    NodePtr p = make(Node::Kind::Pow, std::move(base));
    p->value = number();
    if (negative) p->value = -p->value;
    if (paren) expect(')');
    if (abs(p->value) > 10000) error("exponent too large");
    return p;
  }

  Int number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Int(std::string(s_.substr(start, pos_ - start)));
  }

  NodePtr primary() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      NodePtr n = make(Node::Kind::Num);
      n->value = number();
      return n;
    }
    if (accept('(')) {
      NodePtr e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string word(s_.substr(start, pos_ - start));
      if (word == "sqrt" || word == "irr") {
        expect('(');
        NodePtr arg = expr();
        expect(')');
        return make(word == "sqrt" ? Node::Kind::Sqrt : Node::Kind::Irr, std::move(arg));
      }
      if (word.size() != 1) {
        pos_ = start;
        error("unknown identifier '" + word + "'");
      }
      NodePtr n = make(Node::Kind::Var);
      n->var = word[0];
      return n;
    }
    error(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

Rat parse_rational_node(const Node& n);

template <class T, class Ctx>
T evaluate(const Node& n, Ctx& ctx) {
  switch (n.kind) {
    case Node::Kind::Num:
      return ctx.num(Rat(n.value));
    case Node::Kind::Var:
      return ctx.var(n.var);
    case Node::Kind::Sqrt: {
      Rat arg = parse_rational_node(*n.lhs);
      if (!arg.is_integer()) fail(ErrorKind::InvalidInput, "sqrt expects an integer");
      return ctx.sqrt(arg.num());
    }
    case Node::Kind::Irr: {
      T v = evaluate<T>(*n.lhs, ctx);
      ctx.irr(v);
      return v;
    }
    case Node::Kind::Add: {
      T v = evaluate<T>(*n.lhs, ctx) + evaluate<T>(*n.rhs, ctx);
      ctx.sum(v);
      return v;
    }
    case Node::Kind::Sub: {
      T v = evaluate<T>(*n.lhs, ctx) - evaluate<T>(*n.rhs, ctx);
      ctx.sum(v);
      return v;
    }
    case Node::Kind::Mul:
      return evaluate<T>(*n.lhs, ctx) * evaluate<T>(*n.rhs, ctx);
    case Node::Kind::Div: {
      T d = evaluate<T>(*n.rhs, ctx);
      if (d.is_zero()) fail(ErrorKind::InvalidInput, "division by zero");
      return evaluate<T>(*n.lhs, ctx) / d;
    }
    case Node::Kind::Neg:
      return -evaluate<T>(*n.lhs, ctx);
    case Node::Kind::Pow: {
      T base = evaluate<T>(*n.lhs, ctx);
      long e = n.value.get_si();
      const bool invert = e < 0;
      if (invert) e = -e;
      T result = ctx.num(Rat(1));
      T b = base;
      while (e) {
        if (e & 1) result = result * b;
        e >>= 1;
        if (e) b = b * b;
      }
      if (invert) {
        if (result.is_zero()) fail(ErrorKind::InvalidInput, "division by zero");
        result = ctx.num(Rat(1)) / result;
      }
      return result;
    }
  }
  fail(ErrorKind::InvalidInput, "malformed expression");
}

struct RatCtx {
  Rat num(const Rat& r) { return r; }
  Rat var(char v) { fail(ErrorKind::InvalidInput, std::string("unexpected variable '") + v + "' in a rational constant"); }
  Rat sqrt(const Int&) { fail(ErrorKind::InvalidInput, "sqrt is not allowed in a rational constant"); }
  void irr(const Rat&) {}
  void sum(const Rat&) {}
};

Rat parse_rational_node(const Node& n) {
  RatCtx ctx;
  return evaluate<Rat>(n, ctx);
}

struct QuadCtx {
  QuadElem num(const Rat& r) { return QuadElem(r); }
  QuadElem var(char v) { fail(ErrorKind::InvalidInput, std::string("unexpected variable '") + v + "' in a constant"); }
  QuadElem sqrt(const Int& n) { return QuadElem::sqrt_of(n); }
  void irr(const QuadElem&) {}
  void sum(const QuadElem&) {}
};

struct UniCtx {
  Field field;
  char var_name;
  ParseHints* hints;
  RatFunc num(const Rat& r) { return RatFunc::constant(field, field.normalize(r)); }
  RatFunc var(char v) {
    if (std::toupper(static_cast<unsigned char>(v)) != std::toupper(static_cast<unsigned char>(var_name)))
      fail(ErrorKind::InvalidInput, std::string("unexpected variable '") + v + "'; expected " + var_name);
    return RatFunc::variable(field);
  }
  RatFunc sqrt(const Int&) { fail(ErrorKind::InvalidInput, "sqrt is not allowed in rational functions"); }
  void irr(const RatFunc& f) {
    if (!f.is_polynomial() || f.num().degree() < 1)
      fail(ErrorKind::InvalidInput, "irr(...) must wrap a nonconstant polynomial");
    if (hints) hints->irreducible.push_back(f.num().monic());
  }
  void sum(const RatFunc&) {}
};

struct BiCtx {
  Field field;
  ParseHints* hints;
  BivarRatFunc num(const Rat& r) { return BivarRatFunc(BivarPoly::constant(field, field.normalize(r))); }
  BivarRatFunc var(char v) {
    if (v == 'x' || v == 'X') return BivarRatFunc(BivarPoly::x(field));
    if (v == 'y' || v == 'Y') return BivarRatFunc(BivarPoly::y(field));
    fail(ErrorKind::InvalidInput, std::string("unexpected variable '") + v + "'; expected x or y");
  }
  BivarRatFunc sqrt(const Int&) { fail(ErrorKind::InvalidInput, "sqrt is not allowed in rational functions"); }
  void irr(const BivarRatFunc& f) {
    if (!f.den().is_constant() || f.num().is_constant())
      fail(ErrorKind::InvalidInput, "irr(...) must wrap a nonconstant polynomial");
    if (hints) hints->atoms.push_back(f.num().normalized());
  }
  void sum(const BivarRatFunc& f) {
    if (hints && !f.is_zero() && !f.num().is_constant()) hints->atoms.push_back(f.num().normalized());
  }
};

}  // namespace

Rat parse_rational(std::string_view text) {
  NodePtr n = Parser(text).parse();
  return parse_rational_node(*n);
}

QuadElem parse_quad(std::string_view text) {
  NodePtr n = Parser(text).parse();
  QuadCtx ctx;
  return evaluate<QuadElem>(*n, ctx);
}

RatFunc parse_ratfunc(std::string_view text, const Field& field, char var, ParseHints* hints) {
  NodePtr n = Parser(text).parse();
  UniCtx ctx{field, var, hints};
  return evaluate<RatFunc>(*n, ctx);
}

Poly parse_poly(std::string_view text, const Field& field, char var, ParseHints* hints) {
  RatFunc f = parse_ratfunc(text, field, var, hints);
  if (!f.is_polynomial()) fail(ErrorKind::InvalidInput, "expected a polynomial, got " + std::string(text));
  return f.num();
}

BivarRatFunc parse_bivar(std::string_view text, const Field& field, ParseHints* hints) {
  NodePtr n = Parser(text).parse();
  BiCtx ctx{field, hints};
  return evaluate<BivarRatFunc>(*n, ctx);
}

BivarPoly parse_bivar_poly(std::string_view text, const Field& field, ParseHints* hints) {
  BivarRatFunc f = parse_bivar(text, field, hints);
  if (!f.den().is_constant()) fail(ErrorKind::InvalidInput, "expected a polynomial, got " + std::string(text));
  return f.num();
}

}  // namespace zarcons
