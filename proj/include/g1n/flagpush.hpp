#pragma once

#include "g1n/chern.hpp"
#include "g1n/lc2.hpp"
#include "g1n/rational.hpp"

#include <vector>

namespace g1n {

// Homogeneous polynomial in (h, l); coeffs()[i] multiplies h^i l^(deg-i).
class BivarPoly {
 public:
  explicit BivarPoly(int deg = 0);
  static BivarPoly constant(const Rat& c);
  // h_coef * h + l_coef * l
  static BivarPoly linear(const Rat& h_coef, const Rat& l_coef);

  int degree() const { return deg_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  // Coefficient of h^h_pow l^(deg - h_pow); 0 outside 0..deg.
  Rat coeff(int h_pow) const;
  Rat& at(int h_pow);

  bool palindromic() const;

  friend BivarPoly operator*(const BivarPoly& lhs, const BivarPoly& rhs);
  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

 private:
  int deg_;
  std::vector<Rat> coeffs_;
};

// Class of the incidence divisor product on the flag bundle:
//   prod_{i=1}^{d} prod_{j=0}^{d-i} (i*h + j*x + (d-i-j)*y),
// of total degree N = d(d+1)/2. Requires d >= 1.
HC2Poly build_z_class(int d);

// Pushforward along the P^(n-2)-bundle projection, determined by
//   h^(n-2) -> 1,  h^(n-1) -> -l,  h^n -> c2,
// and zero on every other power of h (the higher Segre classes of a rank-2
// bundle vanish). Requires n >= 3.
LC2Poly pushforward(const HC2Poly& z, int n);

struct ZPrimeResult {
  LC2Poly cls;
  // Set when d(d+1)/2 < n - 2, where the pushforward has negative expected
  // degree and the class is zero by fiat.
  bool degenerate = false;
};

// pushforward(build_z_class(d), n): the class swept out on G(1,n) by the
// incidence construction, homogeneous of weighted degree
// d(d+1)/2 - (n-2) when that is nonnegative.
ZPrimeResult z_prime_class(int n, int d);

// M(h, l) = d! * h^d * M'(h, l), the mod-c2 shadow of build_z_class(d).
BivarPoly m_poly(int d);

// M'(h, l) = prod_{i,j >= 1, i+j <= d} (i*h + j*l), of degree d(d-1)/2.
BivarPoly m_prime_poly(int d);

// Coefficient list of M'(d) by ascending h-power. Palindromic.
std::vector<Rat> betas(int d);

struct AlphaDiffResult {
  Rat value;
  // False when even the leading index n-2 exceeds deg M(d); the value is
  // then 0 and z_prime_class(n, d) is degenerate.
  bool in_range = true;
};

// alpha_(n-2) - alpha_(n-1) for the coefficients alpha_i of m_poly(d):
// the pure-l coefficient of z_prime_class(n, d), equal to
// d! * (beta_(n-d-2) - beta_(n-d-1)). Requires n >= 3, d >= 1.
AlphaDiffResult alpha_diff(int n, int d);

}  // namespace g1n
