#ifndef ORBITKIT_POLYNOMIAL_HPP
#define ORBITKIT_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "orbitkit/types.hpp"

namespace orbitkit {

/// One monomial term: coeff * prod_i x_i^exps[i]. exps has one entry per
/// input variable (zeros included).
struct Term {
  double coeff = 0.0;
  std::vector<int> exps;
};

/// Real polynomial in a fixed number of variables, kept in a canonical form:
/// terms sorted by (total degree, exponent lex), duplicates merged, exact
/// zeros dropped. The multi-index term list is the serializable form of all
/// smooth maps in this project.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(int nvars);
  Polynomial(int nvars, std::vector<Term> terms);

  static Polynomial constant(int nvars, double c);
  static Polynomial variable(int nvars, int index);

  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;

  double operator()(const Vec& x) const;
  Polynomial derivative(int var) const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial scaled(double c) const;
  Polynomial pow(int k) const;

  /// Substitute subs[i] for variable i. All subs must share an arity, which
  /// becomes the arity of the result.
  Polynomial substitute(const std::vector<Polynomial>& subs) const;

  /// Drop terms with |coeff| <= tol.
  Polynomial pruned(double tol) const;

  /// Max |coeff| over terms; 0 for the zero polynomial.
  double max_abs_coeff() const;

  bool same_terms(const Polynomial& rhs) const;

  /// Human-readable form, e.g. "2*s0 - s1^2". Optional variable names.
  std::string to_string(const std::vector<std::string>& names = {}) const;

private:
  void normalize();

  int nvars_ = 0;
  std::vector<Term> terms_;
};

} // namespace orbitkit

#endif
