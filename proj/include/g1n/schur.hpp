#pragma once

#include "g1n/lc2.hpp"
#include "g1n/partition.hpp"
#include "g1n/rational.hpp"

#include <map>
#include <string>

namespace g1n {

// An element of H*(G(1,n); Q) in the two-row Schur basis. Sparse with exact
// rational coefficients; zero coefficients are never stored and every stored
// partition fits the 2 x (n-1) box.
class SchurClass {
 public:
  using TermMap = std::map<Partition2, Rat>;

  explicit SchurClass(GrassmannContext ctx) : ctx_(ctx) {}
  SchurClass(GrassmannContext ctx, TermMap terms);

  static SchurClass zero(GrassmannContext ctx) { return SchurClass(ctx); }
  static SchurClass one(GrassmannContext ctx);
  static SchurClass schubert(GrassmannContext ctx, const Partition2& p,
                             const Rat& coef = 1);

  const GrassmannContext& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  Rat coefficient(const Partition2& p) const;
  bool is_zero() const { return terms_.empty(); }

  // True when all stored partitions share one codimension (the zero class
  // counts as homogeneous). Writes that codimension to *codim when requested
  // and the class is nonzero.
  bool is_homogeneous(int* codim = nullptr) const;

  SchurClass& operator+=(const SchurClass& rhs);
  SchurClass& operator-=(const SchurClass& rhs);
  SchurClass& operator*=(const Rat& s);
  friend SchurClass operator+(SchurClass lhs, const SchurClass& rhs);
  friend SchurClass operator-(SchurClass lhs, const SchurClass& rhs);
  friend SchurClass operator*(const Rat& s, SchurClass u);
  friend bool operator==(const SchurClass&, const SchurClass&) = default;

  std::string to_string() const;

 private:
  void check_same_context(const SchurClass& other) const;

  GrassmannContext ctx_;
  TermMap terms_;
};

// Product in the Schubert basis. On two-row partitions the rule is
//   s_(a,b) * s_(c,d) = sum_{j=0}^{min(a-b, c-d)} s_(a+c-j, b+d+j),
// and any summand whose first row exceeds n-1 is truncated away (those
// summands span the ideal cut out by the box).
SchurClass mul(const SchurClass& u, const SchurClass& v);
SchurClass operator*(const SchurClass& u, const SchurClass& v);

// Degree against the fundamental class: coefficient of s_(n-1,n-1).
Rat integrate(const SchurClass& u);

// Ring morphism Q[l, c2] -> H*(G(1,n)) sending l to s_(1,0) and c2 to
// s_(1,1), with box truncation applied throughout.
SchurClass from_lc2(const LC2Poly& p, const GrassmannContext& ctx);

// l^k expanded in the Schubert basis.
SchurClass l_power(int k, const GrassmannContext& ctx);

}  // namespace g1n
