#include "g1n/lc2.hpp"

#include <stdexcept>

namespace g1n {

bool operator<(const LC2Monomial& lhs, const LC2Monomial& rhs) {
  if (lhs.weighted_degree() != rhs.weighted_degree())
    return lhs.weighted_degree() < rhs.weighted_degree();
  return lhs.c2_pow < rhs.c2_pow;
}

LC2Poly::LC2Poly(TermMap terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.l_pow < 0 || it->first.c2_pow < 0)
      throw std::invalid_argument("LC2Poly: negative exponent");
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

LC2Poly LC2Poly::constant(const Rat& c) { return monomial(0, 0, c); }

LC2Poly LC2Poly::monomial(int l_pow, int c2_pow, const Rat& coef) {
  if (l_pow < 0 || c2_pow < 0)
    throw std::invalid_argument("LC2Poly::monomial: negative exponent");
  LC2Poly p;
  if (coef != 0) p.terms_[{l_pow, c2_pow}] = coef;
  return p;
}

LC2Poly LC2Poly::l(int power) { return monomial(power, 0); }

LC2Poly LC2Poly::c2(int power) { return monomial(0, power); }

Rat LC2Poly::coefficient(int l_pow, int c2_pow) const {
  const auto it = terms_.find({l_pow, c2_pow});
  return it == terms_.end() ? Rat(0) : it->second;
}

bool LC2Poly::is_homogeneous(int* deg) const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.weighted_degree();
  for (const auto& [mono, coef] : terms_)
    if (mono.weighted_degree() != d) return false;
  if (deg) *deg = d;
  return true;
}

int LC2Poly::weighted_degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.weighted_degree();
}

LC2Poly& LC2Poly::operator+=(const LC2Poly& rhs) {
  for (const auto& [mono, coef] : rhs.terms_) {
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
      terms_.emplace(mono, coef);
    } else {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LC2Poly& LC2Poly::operator-=(const LC2Poly& rhs) {
  return *this += Rat(-1) * rhs;
}

LC2Poly& LC2Poly::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coef] : terms_) coef *= s;
  return *this;
}

LC2Poly operator+(LC2Poly lhs, const LC2Poly& rhs) { return lhs += rhs; }

LC2Poly operator-(LC2Poly lhs, const LC2Poly& rhs) { return lhs -= rhs; }

LC2Poly operator*(const LC2Poly& lhs, const LC2Poly& rhs) {
  LC2Poly::TermMap out;
  for (const auto& [ma, ca] : lhs.terms_)
    for (const auto& [mb, cb] : rhs.terms_) {
      const LC2Monomial m{ma.l_pow + mb.l_pow, ma.c2_pow + mb.c2_pow};
      out[m] += ca * cb;
    }
  return LC2Poly(std::move(out));
}

LC2Poly operator*(const Rat& s, LC2Poly p) { return p *= s; }

LC2Poly LC2Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("LC2Poly::pow: negative exponent");
  LC2Poly acc = constant(1);
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

LC2Poly LC2Poly::pure_l_part() const {
  TermMap out;
  for (const auto& [mono, coef] : terms_)
    if (mono.c2_pow == 0) out.emplace(mono, coef);
  return LC2Poly(std::move(out));
}

Rat LC2Poly::pure_l_coefficient() const {
  if (terms_.empty()) return Rat(0);
  int deg = 0;
  if (!is_homogeneous(&deg))
    throw std::invalid_argument(
        "pure_l_coefficient: polynomial is not homogeneous");
  return coefficient(deg, 0);
}

bool LC2Poly::divisible_by_c2() const {
  for (const auto& [mono, coef] : terms_)
    if (mono.c2_pow == 0) return false;
  return true;
}

LC2Poly LC2Poly::div_c2() const {
  TermMap out;
  for (const auto& [mono, coef] : terms_) {
    if (mono.c2_pow == 0)
      throw std::domain_error("div_c2: pure-l term " +
                              LC2Poly::monomial(mono.l_pow, 0, coef).to_string() +
                              " is not divisible by c2");
    out.emplace(LC2Monomial{mono.l_pow, mono.c2_pow - 1}, coef);
  }
  return LC2Poly(std::move(out));
}

std::string LC2Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mono, coef] : terms_) {
    if (!out.empty()) out += " + ";
    out += rat_to_string(coef);
    if (mono.l_pow > 0) out += "*l^" + std::to_string(mono.l_pow);
    if (mono.c2_pow > 0) out += "*c2^" + std::to_string(mono.c2_pow);
  }
  return out;
}

}  // namespace g1n
