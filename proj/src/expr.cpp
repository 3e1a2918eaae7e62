#include "weyl/expr.hpp"

#include <cctype>
#include <set>

#include "weyl/errors.hpp"

namespace weyl {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

struct Token {
  enum class Type { integer, ident, symbol, end };
  Type type;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l = line;
    const std::size_t k = col;
    std::size_t j = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Type::integer, src.substr(i, j - i), l, k});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Token::Type::ident, src.substr(i, j - i), l, k});
    } else if (std::string("+-*^/()[],").find(c) != std::string::npos) {
      j = i + 1;
      out.push_back({Token::Type::symbol, std::string(1, c), l, k});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", l, k);
    }
    advance(j - i);
  }
  out.push_back({Token::Type::end, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(const std::string& src, const PolyRing& ring) : tokens_(tokenize(src)), ring_(ring) {}

  Expr parse_all() {
    if (peek().type == Token::Type::end) fail("empty expression", peek());
    Expr e = expr();
    if (peek().type != Token::Type::end) fail("unexpected '" + peek().text + "'", peek());
    return e;
  }

 private:
  [[noreturn]] static void fail(const std::string& what, const Token& t) {
    throw ParseError(what, t.line, t.column);
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  bool at_symbol(const char* s) const { return peek().type == Token::Type::symbol && peek().text == s; }

  void expect(const char* s) {
    if (!at_symbol(s)) {
      fail(std::string("expected '") + s + "'" + (peek().type == Token::Type::end ? " before end of input" : ""),
           peek());
    }
    take();
  }

  static Expr node(Expr::Kind kind, const Token& at) {
    Expr e;
    e.kind = kind;
    e.line = at.line;
    e.column = at.column;
    return e;
  }

  static Expr binary(Expr::Kind kind, Expr lhs, Expr rhs, const Token& at) {
    Expr e = node(kind, at);
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    while (at_symbol("+") || at_symbol("-")) {
      const Token& op = take();
      Expr rhs = term();
      lhs = binary(op.text == "+" ? Expr::Kind::sum : Expr::Kind::difference, std::move(lhs), std::move(rhs), op);
    }
    return lhs;
  }

  bool starts_atom() const {
    return peek().type == Token::Type::integer || peek().type == Token::Type::ident || at_symbol("(");
  }

  Expr term() {
    Expr lhs = unary();
    while (true) {
      if (at_symbol("*")) {
        const Token& op = take();
        lhs = binary(Expr::Kind::product, std::move(lhs), unary(), op);
      } else if (starts_atom()) {
        const Token& at = peek();
        lhs = binary(Expr::Kind::product, std::move(lhs), unary(), at);
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    if (at_symbol("-")) {
      const Token& op = take();
      Expr e = node(Expr::Kind::negate, op);
      e.children.push_back(unary());
      return e;
    }
    return power();
  }

  std::uint64_t natural(const Token& t) {
    try {
      return std::stoull(t.text);
    } catch (const std::out_of_range&) {
      fail("integer too large", t);
    }
  }

  Expr power() {
    Expr base = atom();
    if (!at_symbol("^")) return base;
    const Token& op = take();
    if (at_symbol("-")) fail("negative exponent", peek());
    if (peek().type != Token::Type::integer) fail("expected a natural exponent", peek());
    Expr e = node(Expr::Kind::power, op);
    e.power = natural(take());
    e.children.push_back(std::move(base));
    return e;
  }

  Expr atom() {
    const Token& t = peek();
    if (t.type == Token::Type::integer) {
      take();
      Expr e = node(Expr::Kind::literal, t);
      e.literal = mpq_class(mpz_class(t.text));
      if (at_symbol("/")) {
        take();
        if (peek().type != Token::Type::integer) fail("expected a denominator", peek());
        const Token& d = take();
        const mpz_class den(d.text);
        if (den == 0) fail("zero denominator", d);
        e.literal = mpq_class(mpz_class(t.text), den);
        e.literal.canonicalize();
      }
      return e;
    }
    if (t.type == Token::Type::ident) {
      take();
      return identifier(t);
    }
    if (at_symbol("(")) {
      take();
      Expr e = expr();
      expect(")");
      return e;
    }
    if (t.type == Token::Type::end) fail("unexpected end of input", t);
    fail("unexpected '" + t.text + "'", t);
  }

  Expr identifier(const Token& t) {
    const auto& names = ring_.var_names();
    const std::size_t n = names.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (names[i] == t.text) {
        Expr e = node(Expr::Kind::variable, t);
        e.var = i;
        return e;
      }
    }
    if (t.text == "d" && at_symbol("[")) {
      take();
      std::vector<std::uint32_t> entries;
      while (true) {
        if (peek().type != Token::Type::integer) fail("expected an exponent", peek());
        const Token& k = take();
        const std::uint64_t v = natural(k);
        if (v > UINT32_MAX) fail("exponent too large", k);
        entries.push_back(static_cast<std::uint32_t>(v));
        if (at_symbol(",")) {
          take();
          continue;
        }
        expect("]");
        break;
      }
      if (entries.size() != n) {
        fail("symbol has " + std::to_string(entries.size()) + " entries, expected " + std::to_string(n), t);
      }
      Expr e = node(Expr::Kind::symbol, t);
      e.exponent = MultiExp(std::move(entries));
      return e;
    }
    if (t.text.size() > 1 && t.text[0] == 'd') {
      const std::string rest = t.text.substr(1);
      std::size_t index = n;
      for (std::size_t i = 0; i < n; ++i)
        if (names[i] == rest) index = i;
      if (index == n && rest.find_first_not_of("0123456789") == std::string::npos && rest[0] != '0' &&
          rest.size() < 10) {
        const std::size_t k = std::stoul(rest);
        if (k >= 1 && k <= n) index = k - 1;
      }
      if (index < n) {
        Expr e = node(Expr::Kind::symbol, t);
        e.exponent = MultiExp::unit(n, index);
        return e;
      }
    }
    fail("unknown identifier '" + t.text + "'", t);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const PolyRing& ring_;
};

}  // namespace

std::vector<std::string> default_var_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

PolyRing SessionConfig::ring() const {
  if (var_names.empty()) throw DomainError("at least one variable is required");
  for (const auto& name : var_names) {
    if (!is_identifier(name)) throw DomainError("invalid variable name '" + name + "'");
    if (name == "d") throw DomainError("'d' is reserved for derivative symbols");
  }
  return PolyRing(field, var_names);
}

Expr parse(const std::string& src, const PolyRing& ring) { return Parser(src, ring).parse_all(); }

DiffOp eval(const Expr& expr, const PolyRing& ring) {
  using K = Expr::Kind;
  switch (expr.kind) {
    case K::literal:
      return DiffOp::multiplication(Polynomial::constant(ring, FieldElem(ring.spec(), expr.literal)));
    case K::variable:
      return DiffOp::multiplication(Polynomial::variable(ring, expr.var));
    case K::symbol:
      return DiffOp::divided_power(ring, expr.exponent);
    case K::sum:
      return eval(expr.children[0], ring) + eval(expr.children[1], ring);
    case K::difference:
      return eval(expr.children[0], ring) - eval(expr.children[1], ring);
    case K::product:
      return mul(eval(expr.children[0], ring), eval(expr.children[1], ring));
    case K::negate:
      return -eval(expr.children[0], ring);
    case K::power:
      return weyl::power(eval(expr.children[0], ring), expr.power);
  }
  throw DomainError("malformed expression");
}

DiffOp parse_operator(const std::string& src, const PolyRing& ring) { return eval(parse(src, ring), ring); }

Polynomial parse_polynomial(const std::string& src, const PolyRing& ring) {
  const DiffOp op = parse_operator(src, ring);
  if (!op.is_multiplication()) throw ParseError("expected a polynomial, got an operator", 1, 1);
  return op.coefficient(MultiExp(ring.nvars()));
}

}  // namespace weyl
