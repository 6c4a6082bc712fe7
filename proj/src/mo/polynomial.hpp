#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mo/rational.hpp"

namespace mo {

// Dense univariate polynomial with exact rational coefficients.
// Canonical form: no trailing zero coefficient; the zero polynomial is {}.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  static UniPoly constant(Rat c) { return UniPoly({std::move(c)}); }
  static UniPoly variable() { return UniPoly({Rat(0), Rat(1)}); }

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rat coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Rat(0);
  }

  Rat operator()(const Rat& x) const;
  Rat operator()(const Int& x) const { return (*this)(Rat(x)); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rat> coeffs_;
};

// Exponent-vector ordering: total degree first, then lexicographic.
struct GradedLexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse multivariate polynomial in a fixed number of variables. Terms map
// exponent vectors to nonzero coefficients; iteration order is graded-lex
// ascending (serialization renders terms in descending order).
class MultiPoly {
 public:
  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(int nvars, Rat c);

  int nvars() const { return nvars_; }
  const std::map<std::vector<int>, Rat, GradedLexLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  void add_term(const std::vector<int>& exponents, const Rat& coeff);

  Rat evaluate(const std::vector<Rat>& point) const;
  Rat evaluate_at_integers(const std::vector<long long>& point) const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  int nvars_ = 0;
  std::map<std::vector<int>, Rat, GradedLexLess> terms_;
};

// u(x) as a polynomial in variable `var` of an nvars-variate ring.
MultiPoly embed(const UniPoly& u, int var, int nvars);

// Unique polynomial of degree < |points| through all (x, y); x pairwise distinct.
UniPoly interpolate(const std::vector<std::pair<Int, Rat>>& points);

// g(n) = f(c_1 n, ..., c_r n); c must be nonnegative.
UniPoly specialize_dilation(const MultiPoly& f, const std::vector<long long>& c);

struct NonnegativityReport {
  bool nonnegative = true;
  // Offending monomial -> negative coefficient. For UniPoly the key is {degree}.
  std::vector<std::pair<std::vector<int>, Rat>> offenders;
};
NonnegativityReport coefficient_nonnegative(const UniPoly& p);
NonnegativityReport coefficient_nonnegative(const MultiPoly& p);

// Canonical text: terms in descending graded-lex order, "p/q" coefficients,
// unit coefficients omitted, e.g. "1/2*n^2 + 1/2*n" or "t1*t2 + t1 - 1".
std::string to_string(const UniPoly& p, const std::string& var = "n");
std::string to_string(const MultiPoly& p, const std::string& var_prefix = "t");
std::string to_string(const MultiPoly& p, const std::vector<std::string>& var_names);

}  // namespace mo
