#pragma once

#include "g1n/rational.hpp"

#include <map>
#include <string>

namespace g1n {

// Monomial l^l_pow * c2^c2_pow in the Chern classes of the tautological
// rank-2 quotient bundle E: l = c1(E), c2 = c2(E). The weighted degree
// l_pow + 2*c2_pow is the codimension of the class it represents.
struct LC2Monomial {
  int l_pow = 0;
  int c2_pow = 0;

  int weighted_degree() const { return l_pow + 2 * c2_pow; }

  friend bool operator==(const LC2Monomial&, const LC2Monomial&) = default;
};

// Weighted degree first, then c2-power ascending, so the pure-l monomial
// leads its graded piece.
bool operator<(const LC2Monomial& lhs, const LC2Monomial& rhs);

// Sparse polynomial in Q[l, c2]. Zero coefficients are never stored.
class LC2Poly {
 public:
  using TermMap = std::map<LC2Monomial, Rat>;

  LC2Poly() = default;
  explicit LC2Poly(TermMap terms);

  static LC2Poly constant(const Rat& c);
  static LC2Poly monomial(int l_pow, int c2_pow, const Rat& coef = 1);
  static LC2Poly l(int power = 1);
  static LC2Poly c2(int power = 1);

  const TermMap& terms() const { return terms_; }
  Rat coefficient(int l_pow, int c2_pow) const;
  bool is_zero() const { return terms_.empty(); }

  // True when every stored monomial has the same weighted degree (the zero
  // polynomial is homogeneous of every degree). Writes that degree to *deg
  // when requested and the polynomial is nonzero.
  bool is_homogeneous(int* deg = nullptr) const;
  int weighted_degree() const;  // max over terms, -1 for the zero polynomial

  LC2Poly& operator+=(const LC2Poly& rhs);
  LC2Poly& operator-=(const LC2Poly& rhs);
  LC2Poly& operator*=(const Rat& s);
  friend LC2Poly operator+(LC2Poly lhs, const LC2Poly& rhs);
  friend LC2Poly operator-(LC2Poly lhs, const LC2Poly& rhs);
  friend LC2Poly operator*(const LC2Poly& lhs, const LC2Poly& rhs);
  friend LC2Poly operator*(const Rat& s, LC2Poly p);
  friend bool operator==(const LC2Poly&, const LC2Poly&) = default;

  LC2Poly pow(int e) const;

  // Terms with no c2 factor.
  LC2Poly pure_l_part() const;
  // Coefficient of l^k where k is the weighted degree; 0 for the zero
  // polynomial. Requires homogeneity.
  Rat pure_l_coefficient() const;

  bool divisible_by_c2() const;
  // Exact division by c2; throws std::domain_error when a pure-l term
  // obstructs it.
  LC2Poly div_c2() const;

  std::string to_string() const;

 private:
  TermMap terms_;
};

}  // namespace g1n
