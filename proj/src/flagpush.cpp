#include "g1n/flagpush.hpp"

#include <stdexcept>

namespace g1n {

BivarPoly::BivarPoly(int deg) : deg_(deg), coeffs_(deg + 1, Rat(0)) {
  if (deg < 0) throw std::invalid_argument("BivarPoly: negative degree");
}

BivarPoly BivarPoly::constant(const Rat& c) {
  BivarPoly p(0);
  p.coeffs_[0] = c;
  return p;
}

BivarPoly BivarPoly::linear(const Rat& h_coef, const Rat& l_coef) {
  BivarPoly p(1);
  p.coeffs_[0] = l_coef;
  p.coeffs_[1] = h_coef;
  return p;
}

Rat BivarPoly::coeff(int h_pow) const {
  if (h_pow < 0 || h_pow > deg_) return Rat(0);
  return coeffs_[h_pow];
}

Rat& BivarPoly::at(int h_pow) { return coeffs_.at(h_pow); }

bool BivarPoly::palindromic() const {
  for (int i = 0, j = deg_; i < j; ++i, --j)
    if (coeffs_[i] != coeffs_[j]) return false;
  return true;
}

BivarPoly operator*(const BivarPoly& lhs, const BivarPoly& rhs) {
  BivarPoly out(lhs.deg_ + rhs.deg_);
  for (int i = 0; i <= lhs.deg_; ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (int j = 0; j <= rhs.deg_; ++j)
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return out;
}

HC2Poly build_z_class(int d) {
  if (d < 1) throw std::invalid_argument("build_z_class: d must be >= 1");
  XYHPoly prod = XYHPoly::constant(1);
  for (int i = 1; i <= d; ++i)
    for (int j = 0; j <= d - i; ++j)
      prod = prod * XYHPoly::linear(RootForm{j, d - i - j, i});
  return symmetrize(prod);
}

LC2Poly pushforward(const HC2Poly& z, int n) {
  if (n < 3) throw std::invalid_argument("pushforward: n must be >= 3");
  return z.coefficient(n - 2) - LC2Poly::l() * z.coefficient(n - 1) +
         LC2Poly::c2() * z.coefficient(n);
}

ZPrimeResult z_prime_class(int n, int d) {
  if (n < 3) throw std::invalid_argument("z_prime_class: n must be >= 3");
  if (d < 1) throw std::invalid_argument("z_prime_class: d must be >= 1");
  ZPrimeResult res;
  if (d * (d + 1) / 2 < n - 2) {
    res.degenerate = true;
    return res;
  }
  res.cls = pushforward(build_z_class(d), n);
  return res;
}

BivarPoly m_prime_poly(int d) {
  if (d < 1) throw std::invalid_argument("m_prime_poly: d must be >= 1");
  BivarPoly prod = BivarPoly::constant(1);
  for (int i = 1; i <= d - 1; ++i)
    for (int j = 1; j <= d - i; ++j)
      prod = prod * BivarPoly::linear(Rat(i), Rat(j));
  return prod;
}

BivarPoly m_poly(int d) {
  const BivarPoly mp = m_prime_poly(d);
  const Rat fac = factorial(d);
  BivarPoly out(mp.degree() + d);
  for (int i = 0; i <= mp.degree(); ++i) out.at(i + d) = fac * mp.coeff(i);
  return out;
}

std::vector<Rat> betas(int d) { return m_prime_poly(d).coeffs(); }

AlphaDiffResult alpha_diff(int n, int d) {
  if (n < 3) throw std::invalid_argument("alpha_diff: n must be >= 3");
  const BivarPoly m = m_poly(d);
  AlphaDiffResult res;
  res.in_range = n - 2 <= m.degree();
  res.value = m.coeff(n - 2) - m.coeff(n - 1);
  return res;
}

}  // namespace g1n
