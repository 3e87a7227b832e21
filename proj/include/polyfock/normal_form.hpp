#pragma once

#include "polyfock/exp_poly.hpp"
#include "polyfock/scalars.hpp"

#include <map>
#include <string>
#include <vector>

namespace pfx {

/// Multi-indexed word exponents: sum_{p,q} c_{p,q} (adag)^p a^q.
struct WordKey {
  std::vector<unsigned> adag;
  std::vector<unsigned> a;

  unsigned total_degree() const;
  friend bool operator==(const WordKey& x, const WordKey& y) {
    return x.adag == y.adag && x.a == y.a;
  }
  friend bool operator<(const WordKey& x, const WordKey& y);
};

/// An operator in Wick normal form: all raising factors to the left of all
/// lowering factors, with exact coefficients. The normal form is unique, so
/// operator equality is decidable structurally.
class NormalForm {
 public:
  using TermMap = std::map<WordKey, GaussianRational>;

  explicit NormalForm(unsigned dims = 1);

  static NormalForm zero(unsigned dims = 1) { return NormalForm(dims); }
  static NormalForm identity(unsigned dims = 1);
  static NormalForm scalar(GaussianRational c, unsigned dims = 1);
  /// a_j or adag_j, 1-indexed coordinate.
  static NormalForm lowering(unsigned dims = 1, unsigned j = 1);
  static NormalForm raising(unsigned dims = 1, unsigned j = 1);

  unsigned dims() const { return dims_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void set_term(WordKey k, GaussianRational c);

  NormalForm operator-() const;
  friend NormalForm operator+(const NormalForm& x, const NormalForm& y);
  friend NormalForm operator-(const NormalForm& x, const NormalForm& y);
  NormalForm scaled(const GaussianRational& c) const;

  friend bool operator==(const NormalForm& x, const NormalForm& y) {
    return x.dims_ == y.dims_ && x.terms_ == y.terms_;
  }
  friend bool operator!=(const NormalForm& x, const NormalForm& y) { return !(x == y); }

  std::string to_string() const;

 private:
  void prune();
  unsigned dims_;
  TermMap terms_;
};

/// A free word: scalar * product of letters, kept in the order written
/// (leftmost letter acts last). Input form for normal ordering.
struct OperatorWord {
  struct Letter {
    bool raising;
    unsigned coord;  // 1-indexed
  };
  unsigned dims = 1;
  GaussianRational scalar = GaussianRational(1);
  std::vector<Letter> letters;
};

/// Wick-orders a free word via the closed-form reordering rule
/// a^q (adag)^p = sum_j C(q,j) C(p,j) j! (adag)^{p-j} a^{q-j}.
NormalForm normal_order(const OperatorWord& w);

/// Normal-ordered product x . y (x applied after y).
NormalForm compose(const NormalForm& x, const NormalForm& y);

/// x . y - y . x.
NormalForm commutator(const NormalForm& x, const NormalForm& y);

struct Sl2Triple {
  NormalForm raising;  // J+ = (adag)^2 a - (k-1) adag
  NormalForm cartan;   // J0 = adag a - (k-1)/2
  NormalForm lowering; // J- = a
};

/// One-dimensional sl(2) generators with rational mark k.
Sl2Triple sl2_generators(const Rational& k);

/// Euler-Cartan operator adag a - m.
NormalForm euler_cartan(unsigned m, unsigned dims = 1, unsigned coord = 1);

/// Number operator sum_j adag_j a_j over all d coordinates.
NormalForm number_operator(unsigned dims);

struct SldFamily {
  unsigned dims;
  Rational k;
  std::vector<NormalForm> lowering;              // J_i^- = a_i
  std::vector<std::vector<NormalForm>> neutral;  // J0_{i,j} = adag_i a_j
  std::vector<NormalForm> raising;               // J_i^+ = adag_i (sum_j adag_j a_j - k)
};

/// sl(d+1) generator family in the symmetric ladder-operator realization.
SldFamily sld_generators(unsigned d, const Rational& k);

/// Exact action of a normal form on a function.
ExpPoly apply(const NormalForm& x, const ExpPoly& f);

}  // namespace pfx
