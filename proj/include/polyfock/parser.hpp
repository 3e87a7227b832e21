#pragma once

#include "polyfock/normal_form.hpp"
#include "polyfock/scalars.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfx {

/// Parse failure with 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(unsigned line, unsigned col, const std::string& what)
      : std::runtime_error("syntax error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + what),
        line_(line),
        col_(col) {}
  unsigned line() const { return line_; }
  unsigned col() const { return col_; }

 private:
  unsigned line_, col_;
};

/// Operator expression AST.
///
/// Grammar:
///   expr   := term (("+" | "-") term)*
///   term   := sign? scalar? factor+
///   factor := atom ("^" uint)? | "(" expr ")"
///   atom   := "a" | "ad" | "Jp" | "J0" | "Jm" | "I"
///   scalar := rational ("i")? | "(" rational "," rational ")"
///
/// Juxtaposition composes operators left to right as written.
struct OperatorExpr {
  enum class Node { sum, term, power, atom, group };
  enum class Atom { a, ad, Jp, J0, Jm, I };

  Node node;
  Atom atom = Atom::I;                              // node == atom
  GaussianRational scalar = GaussianRational(1);    // node == term
  unsigned exponent = 1;                            // node == power
  std::vector<OperatorExpr> children;

  /// signs[i] is +1/-1 for the i-th summand of a sum node.
  std::vector<int> signs;

  // source position, for elaboration-time diagnostics
  unsigned line = 1;
  unsigned col = 1;
};

OperatorExpr parse_expression(const std::string& src);

/// Elaborates an AST to a normal-ordered operator. J atoms need the mark k;
/// omitting it while the expression uses them is an error.
NormalForm elaborate(const OperatorExpr& expr, const std::optional<Rational>& k);

/// Parse + elaborate in one step.
NormalForm parse_operator(const std::string& src, const std::optional<Rational>& k);

/// Renders a normal form back into the expression grammar (d = 1 only).
/// parse_operator(pretty_print(nf), k) == nf for any k.
std::string pretty_print(const NormalForm& nf);

}  // namespace pfx
