#include "polyfock/parser.hpp"

#include <cctype>
#include <sstream>

namespace pfx {

namespace {

struct Token {
  enum class Kind { integer, ident, plus, minus, caret, lparen, rparen, comma, slash, eof };
  Kind kind;
  std::string text;
  unsigned line;
  unsigned col;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  unsigned line = 1, col = 1;
  size_t i = 0;
  auto push = [&](Token::Kind k, std::string text, unsigned l, unsigned c) {
    out.push_back({k, std::move(text), l, c});
  };
  while (i < src.size()) {
    char ch = src[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++col;
      ++i;
      continue;
    }
    unsigned tl = line, tc = col;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string num;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        num += src[i++];
        ++col;
      }
      push(Token::Kind::integer, std::move(num), tl, tc);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::string word;
      while (i < src.size() && std::isalnum(static_cast<unsigned char>(src[i]))) {
        word += src[i++];
        ++col;
      }
      push(Token::Kind::ident, std::move(word), tl, tc);
      continue;
    }
    ++i;
    ++col;
    switch (ch) {
      case '+': push(Token::Kind::plus, "+", tl, tc); break;
      case '-': push(Token::Kind::minus, "-", tl, tc); break;
      case '^': push(Token::Kind::caret, "^", tl, tc); break;
      case '(': push(Token::Kind::lparen, "(", tl, tc); break;
      case ')': push(Token::Kind::rparen, ")", tl, tc); break;
      case ',': push(Token::Kind::comma, ",", tl, tc); break;
      case '/': push(Token::Kind::slash, "/", tl, tc); break;
      default:
        throw ParseError(tl, tc, std::string("unexpected character '") + ch + "'");
    }
  }
  out.push_back({Token::Kind::eof, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : t_(std::move(tokens)) {}

  OperatorExpr parse() {
    OperatorExpr e = parse_expr();
    if (cur().kind != Token::Kind::eof)
      throw ParseError(cur().line, cur().col, "unexpected trailing input '" + cur().text + "'");
    return e;
  }

 private:
  const Token& cur() const { return t_[pos_]; }
  const Token& peek(size_t n = 1) const { return t_[std::min(pos_ + n, t_.size() - 1)]; }
  const Token& advance() { return t_[pos_++]; }

  bool starts_term() const {
    switch (cur().kind) {
      case Token::Kind::minus:
      case Token::Kind::integer:
      case Token::Kind::lparen:
      case Token::Kind::ident:
        return true;
      default:
        return false;
    }
  }

  OperatorExpr parse_expr() {
    OperatorExpr sum;
    sum.node = OperatorExpr::Node::sum;
    sum.line = cur().line;
    sum.col = cur().col;
    sum.children.push_back(parse_term());
    sum.signs.push_back(+1);
    while (cur().kind == Token::Kind::plus || cur().kind == Token::Kind::minus) {
      Token op = advance();
      if (!starts_term())
        throw ParseError(op.line, op.col, "expected a term after '" + op.text + "'");
      sum.children.push_back(parse_term());
      sum.signs.push_back(op.kind == Token::Kind::plus ? +1 : -1);
    }
    if (sum.children.size() == 1 && sum.signs[0] == +1) return sum.children[0];
    return sum;
  }

  // '(' rational ',' -- bounded lookahead distinguishing a complex scalar
  // literal from a parenthesized expression.
  bool lparen_opens_scalar_pair() const {
    size_t n = 1;
    if (peek(n).kind == Token::Kind::minus) ++n;
    if (peek(n).kind != Token::Kind::integer) return false;
    ++n;
    if (peek(n).kind == Token::Kind::slash) {
      ++n;
      if (peek(n).kind != Token::Kind::integer) return false;
      ++n;
    }
    return peek(n).kind == Token::Kind::comma;
  }

  bool starts_scalar() const {
    if (cur().kind == Token::Kind::integer) return true;
    if (cur().kind == Token::Kind::lparen) return lparen_opens_scalar_pair();
    return false;
  }

  Rational parse_rational() {
    bool neg = false;
    if (cur().kind == Token::Kind::minus) {
      advance();
      neg = true;
    }
    if (cur().kind != Token::Kind::integer)
      throw ParseError(cur().line, cur().col, "expected a number");
    BigInt num(advance().text);
    BigInt den(1);
    if (cur().kind == Token::Kind::slash) {
      advance();
      if (cur().kind != Token::Kind::integer)
        throw ParseError(cur().line, cur().col, "expected a denominator");
      den = BigInt(advance().text);
      if (den.is_zero()) throw ParseError(cur().line, cur().col, "zero denominator");
    }
    Rational r(num, den);
    return neg ? -r : r;
  }

  GaussianRational parse_scalar() {
    if (cur().kind == Token::Kind::lparen) {
      advance();
      Rational re = parse_rational();
      if (cur().kind != Token::Kind::comma)
        throw ParseError(cur().line, cur().col, "expected ',' in complex literal");
      advance();
      Rational im = parse_rational();
      if (cur().kind != Token::Kind::rparen)
        throw ParseError(cur().line, cur().col, "expected ')' closing complex literal");
      advance();
      return {std::move(re), std::move(im)};
    }
    Rational r = parse_rational();
    if (cur().kind == Token::Kind::ident && cur().text == "i") {
      advance();
      return {Rational(0), std::move(r)};
    }
    return {std::move(r)};
  }

  OperatorExpr parse_term() {
    OperatorExpr term;
    term.node = OperatorExpr::Node::term;
    term.line = cur().line;
    term.col = cur().col;
    GaussianRational scalar(1);
    bool negated = false;
    if (cur().kind == Token::Kind::minus) {
      if (peek().kind == Token::Kind::integer) {
        scalar = parse_scalar();  // signed numeric literal
      } else {
        advance();
        negated = true;
        if (starts_scalar()) scalar = parse_scalar();
      }
    } else if (starts_scalar()) {
      scalar = parse_scalar();
    }
    if (negated) scalar = -scalar;
    term.scalar = std::move(scalar);
    if (!starts_factor())
      throw ParseError(cur().line, cur().col, "expected an operator factor");
    while (starts_factor()) term.children.push_back(parse_factor());
    return term;
  }

  bool starts_factor() const {
    if (cur().kind == Token::Kind::ident) return true;
    return cur().kind == Token::Kind::lparen && !lparen_opens_scalar_pair();
  }

  OperatorExpr parse_factor() {
    if (cur().kind == Token::Kind::lparen) {
      Token open = advance();
      OperatorExpr inner = parse_expr();
      if (cur().kind != Token::Kind::rparen)
        throw ParseError(cur().line, cur().col, "expected ')' closing group opened at " +
                                                    std::to_string(open.line) + ":" +
                                                    std::to_string(open.col));
      advance();
      OperatorExpr group;
      group.node = OperatorExpr::Node::group;
      group.line = open.line;
      group.col = open.col;
      group.children.push_back(std::move(inner));
      return maybe_power(std::move(group));
    }
    Token atom = advance();
    OperatorExpr e;
    e.node = OperatorExpr::Node::atom;
    e.line = atom.line;
    e.col = atom.col;
    if (atom.text == "a")
      e.atom = OperatorExpr::Atom::a;
    else if (atom.text == "ad")
      e.atom = OperatorExpr::Atom::ad;
    else if (atom.text == "Jp")
      e.atom = OperatorExpr::Atom::Jp;
    else if (atom.text == "J0")
      e.atom = OperatorExpr::Atom::J0;
    else if (atom.text == "Jm")
      e.atom = OperatorExpr::Atom::Jm;
    else if (atom.text == "I")
      e.atom = OperatorExpr::Atom::I;
    else
      throw ParseError(atom.line, atom.col, "unknown atom '" + atom.text + "'");
    return maybe_power(std::move(e));
  }

  OperatorExpr maybe_power(OperatorExpr base) {
    if (cur().kind != Token::Kind::caret) return base;
    advance();
    if (cur().kind != Token::Kind::integer)
      throw ParseError(cur().line, cur().col, "expected an exponent");
    Token expo = advance();
    OperatorExpr p;
    p.node = OperatorExpr::Node::power;
    p.line = base.line;
    p.col = base.col;
    p.exponent = static_cast<unsigned>(std::stoul(expo.text));
    p.children.push_back(std::move(base));
    return p;
  }

  std::vector<Token> t_;
  size_t pos_ = 0;
};

NormalForm elaborate_node(const OperatorExpr& e, const std::optional<Rational>& k) {
  switch (e.node) {
    case OperatorExpr::Node::sum: {
      NormalForm acc(1);
      for (size_t i = 0; i < e.children.size(); ++i) {
        NormalForm child = elaborate_node(e.children[i], k);
        acc = e.signs[i] > 0 ? acc + child : acc - child;
      }
      return acc;
    }
    case OperatorExpr::Node::term: {
      NormalForm acc = NormalForm::scalar(e.scalar, 1);
      for (const auto& f : e.children) acc = compose(acc, elaborate_node(f, k));
      return acc;
    }
    case OperatorExpr::Node::power: {
      NormalForm base = elaborate_node(e.children[0], k);
      NormalForm acc = NormalForm::identity(1);
      for (unsigned i = 0; i < e.exponent; ++i) acc = compose(acc, base);
      return acc;
    }
    case OperatorExpr::Node::group:
      return elaborate_node(e.children[0], k);
    case OperatorExpr::Node::atom: {
      switch (e.atom) {
        case OperatorExpr::Atom::a: return NormalForm::lowering(1, 1);
        case OperatorExpr::Atom::ad: return NormalForm::raising(1, 1);
        case OperatorExpr::Atom::I: return NormalForm::identity(1);
        default: break;
      }
      if (!k)
        throw ParseError(e.line, e.col, "J atom requires the mark k (pass --k)");
      Sl2Triple gen = sl2_generators(*k);
      if (e.atom == OperatorExpr::Atom::Jp) return gen.raising;
      if (e.atom == OperatorExpr::Atom::J0) return gen.cartan;
      return gen.lowering;
    }
  }
  throw std::logic_error("elaborate: unreachable node kind");
}

}  // namespace

OperatorExpr parse_expression(const std::string& src) { return Parser(lex(src)).parse(); }

NormalForm elaborate(const OperatorExpr& expr, const std::optional<Rational>& k) {
  return elaborate_node(expr, k);
}

NormalForm parse_operator(const std::string& src, const std::optional<Rational>& k) {
  return elaborate(parse_expression(src), k);
}

namespace {

/// Scalar prefix for one rendered term. Empty string for +1 coefficients.
std::string scalar_prefix(const GaussianRational& c) {
  if (c.is_real()) {
    if (c.re == Rational(1)) return "";
    if (c.re == Rational(-1)) return "-";
    return c.re.to_string() + " ";
  }
  if (c.re.is_zero()) {
    if (c.im == Rational(1)) return "1 i ";
    if (c.im == Rational(-1)) return "-1 i ";
    return c.im.to_string() + " i ";
  }
  return "(" + c.re.to_string() + ", " + c.im.to_string() + ") ";
}

std::string word_text(const WordKey& key) {
  std::string s;
  if (key.adag[0]) {
    s += "ad";
    if (key.adag[0] > 1) s += "^" + std::to_string(key.adag[0]);
  }
  if (key.a[0]) {
    if (!s.empty()) s += " ";
    s += "a";
    if (key.a[0] > 1) s += "^" + std::to_string(key.a[0]);
  }
  if (s.empty()) s = "I";
  return s;
}

}  // namespace

std::string pretty_print(const NormalForm& nf) {
  if (nf.dims() != 1) throw std::domain_error("pretty_print: d = 1 only");
  if (nf.is_zero()) return "0 I";
  std::ostringstream os;
  bool first = true;
  // Highest-degree words first.
  for (auto it = nf.terms().rbegin(); it != nf.terms().rend(); ++it) {
    GaussianRational c = it->second;
    if (!first) {
      // Fold a negative real (or negative pure-imaginary) sign into the join.
      bool neg = (c.is_real() && c.re.is_negative()) || (c.re.is_zero() && c.im.is_negative());
      if (neg) {
        os << " - ";
        c = -c;
      } else {
        os << " + ";
      }
    }
    first = false;
    os << scalar_prefix(c) << word_text(it->first);
  }
  return os.str();
}

}  // namespace pfx
