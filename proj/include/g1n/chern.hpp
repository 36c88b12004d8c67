#pragma once

#include "g1n/coniveau.hpp"
#include "g1n/lc2.hpp"
#include "g1n/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace g1n {

// Integer linear form px*x + py*y + ph*h, where x, y are the Chern roots of
// the rank-2 bundle E (so l = x + y and c2 = x*y) and h is the hyperplane
// class of an auxiliary projective bundle.
struct RootForm {
  int px = 0;
  int py = 0;
  int ph = 0;

  friend bool operator==(const RootForm&, const RootForm&) = default;
};

bool operator<(const RootForm& lhs, const RootForm& rhs);
std::string to_string(const RootForm& r);

// Multiset of Chern roots describing a split bundle. Stored sorted so two
// bundles with the same roots compare equal.
class RootBundle {
 public:
  explicit RootBundle(std::vector<RootForm> roots);

  const std::vector<RootForm>& roots() const { return roots_; }
  int rank() const { return static_cast<int>(roots_.size()); }

  friend bool operator==(const RootBundle&, const RootBundle&) = default;

 private:
  std::vector<RootForm> roots_;
};

// Monomial x^x_pow y^y_pow h^h_pow.
struct XYHMonomial {
  int x_pow = 0;
  int y_pow = 0;
  int h_pow = 0;

  friend bool operator==(const XYHMonomial&, const XYHMonomial&) = default;
};

bool operator<(const XYHMonomial& lhs, const XYHMonomial& rhs);
std::string to_string(const XYHMonomial& m);

// Scratch polynomial in Q[x, y, h] for expanding products of root forms
// before rewriting x, y symmetrically in terms of l and c2.
class XYHPoly {
 public:
  using TermMap = std::map<XYHMonomial, Rat>;

  XYHPoly() = default;
  static XYHPoly constant(const Rat& c);
  static XYHPoly linear(const RootForm& r);
  static XYHPoly monomial(int x_pow, int y_pow, int h_pow, const Rat& coef);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  XYHPoly& operator+=(const XYHPoly& rhs);
  friend XYHPoly operator*(const XYHPoly& lhs, const XYHPoly& rhs);
  friend bool operator==(const XYHPoly&, const XYHPoly&) = default;

 private:
  TermMap terms_;
};

// Polynomial in h whose coefficients are LC2 polynomials. Instances are only
// built through symmetrize(), so holding one certifies that the (x, y)
// expansion it came from was symmetric.
class HC2Poly {
 public:
  HC2Poly() = default;

  const std::map<int, LC2Poly>& strata() const { return strata_; }
  LC2Poly coefficient(int h_pow) const;
  bool is_zero() const { return strata_.empty(); }
  int max_h_power() const;

  // The h-free part, requiring that nothing else is present.
  LC2Poly to_lc2() const;

  friend bool operator==(const HC2Poly&, const HC2Poly&) = default;
  friend HC2Poly symmetrize(const XYHPoly& p);

  std::string to_string() const;

 private:
  std::map<int, LC2Poly> strata_;
};

// Rewrites a polynomial in Q[x, y, h] as an HC2Poly via l = x + y,
// c2 = x*y. Throws std::domain_error naming a witness monomial when the
// input is not symmetric under swapping x and y.
HC2Poly symmetrize(const XYHPoly& p);

// Chern roots of Sym^m E: {k*x + (m-k)*y : k = 0..m}. Requires m >= 0.
RootBundle sym_power_roots(int m);

// Adds t*h to every root (tensoring by the t-th power of the line bundle
// with first Chern class h).
RootBundle twist_by_h(const RootBundle& bundle, int t);

// k-th Chern class of the split bundle: the k-th elementary symmetric
// polynomial of the roots, rewritten symmetrically. Requires
// 0 <= k <= rank. An asymmetric root multiset is reported as a hard error
// with a witness monomial.
HC2Poly chern_class(const RootBundle& bundle, int k);

// Same, for bundles whose roots do not involve h.
LC2Poly chern_class_lc2(const RootBundle& bundle, int k);

// Top Chern class of Sym^(n - sum d - 1) E, the class of the variety of
// lines through a general point. Requires n - sum d >= 1.
LC2Poly class_fg(const MultiDegree& md);

// prod_i c_(d_i + 1)(Sym^(d_i) E), the class of the variety of lines in a
// general complete intersection of multidegree md.
LC2Poly class_f(const MultiDegree& md);

// The interior factor of the top Chern class of Sym^m E: the symmetric
// rewrite of prod_{k=1}^{m-1} (k*x + (m-k)*y). Satisfies
//   c_(m+1)(Sym^m E) = m^2 * c2 * q_class(m).
// Requires m >= 2.
LC2Poly q_class(int m);

}  // namespace g1n
