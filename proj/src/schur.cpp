#include "g1n/schur.hpp"

#include <stdexcept>

namespace g1n {

SchurClass::SchurClass(GrassmannContext ctx, TermMap terms)
    : ctx_(ctx), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (!it->first.fits(ctx_))
      throw std::invalid_argument("SchurClass: partition " +
                                  g1n::to_string(it->first) +
                                  " does not fit the box of G(1," +
                                  std::to_string(ctx_.n) + ")");
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

SchurClass SchurClass::one(GrassmannContext ctx) {
  return schubert(ctx, Partition2(0, 0));
}

SchurClass SchurClass::schubert(GrassmannContext ctx, const Partition2& p,
                                const Rat& coef) {
  SchurClass u(ctx);
  if (!p.fits(ctx))
    throw std::invalid_argument("SchurClass::schubert: partition " +
                                g1n::to_string(p) + " does not fit the box");
  if (coef != 0) u.terms_[p] = coef;
  return u;
}

Rat SchurClass::coefficient(const Partition2& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? Rat(0) : it->second;
}

bool SchurClass::is_homogeneous(int* codim) const {
  if (terms_.empty()) return true;
  const int k = terms_.begin()->first.codim();
  for (const auto& [p, coef] : terms_)
    if (p.codim() != k) return false;
  if (codim) *codim = k;
  return true;
}

void SchurClass::check_same_context(const SchurClass& other) const {
  if (!(ctx_ == other.ctx_))
    throw std::invalid_argument("SchurClass: mixing classes on G(1," +
                                std::to_string(ctx_.n) + ") and G(1," +
                                std::to_string(other.ctx_.n) + ")");
}

SchurClass& SchurClass::operator+=(const SchurClass& rhs) {
  check_same_context(rhs);
  for (const auto& [p, coef] : rhs.terms_) {
    auto it = terms_.find(p);
    if (it == terms_.end()) {
      terms_.emplace(p, coef);
    } else {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

SchurClass& SchurClass::operator-=(const SchurClass& rhs) {
  return *this += Rat(-1) * rhs;
}

SchurClass& SchurClass::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, coef] : terms_) coef *= s;
  return *this;
}

SchurClass operator+(SchurClass lhs, const SchurClass& rhs) {
  return lhs += rhs;
}

SchurClass operator-(SchurClass lhs, const SchurClass& rhs) {
  return lhs -= rhs;
}

SchurClass operator*(const Rat& s, SchurClass u) { return u *= s; }

SchurClass mul(const SchurClass& u, const SchurClass& v) {
  if (!(u.context() == v.context()))
    throw std::invalid_argument("mul: classes live on different Grassmannians");
  const int max_row = u.context().max_row();
  SchurClass::TermMap out;
  for (const auto& [p, cp] : u.terms())
    for (const auto& [q, cq] : v.terms()) {
      const int jmax = std::min(p.a - p.b, q.a - q.b);
      const Rat c = cp * cq;
      for (int j = 0; j <= jmax; ++j) {
        const int row1 = p.a + q.a - j;
        if (row1 > max_row) continue;  // truncated by the box
        out[Partition2(row1, p.b + q.b + j)] += c;
      }
    }
  return SchurClass(u.context(), std::move(out));
}

SchurClass operator*(const SchurClass& u, const SchurClass& v) {
  return mul(u, v);
}

Rat integrate(const SchurClass& u) {
  const int m = u.context().max_row();
  return u.coefficient(Partition2(m, m));
}

SchurClass from_lc2(const LC2Poly& p, const GrassmannContext& ctx) {
  SchurClass acc(ctx);
  const SchurClass l = SchurClass::schubert(ctx, Partition2(1, 0));
  for (const auto& [mono, coef] : p.terms()) {
    // c2^j is s_(j,j) on the nose (or zero once outside the box), so only
    // the l-power needs repeated products.
    if (mono.c2_pow > ctx.max_row()) continue;
    SchurClass term =
        SchurClass::schubert(ctx, Partition2(mono.c2_pow, mono.c2_pow), coef);
    for (int i = 0; i < mono.l_pow && !term.is_zero(); ++i) term = mul(term, l);
    acc += term;
  }
  return acc;
}

SchurClass l_power(int k, const GrassmannContext& ctx) {
  if (k < 0) throw std::invalid_argument("l_power: negative exponent");
  return from_lc2(LC2Poly::l(k), ctx);
}

std::string SchurClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [p, coef] : terms_) {
    if (!out.empty()) out += " + ";
    out += rat_to_string(coef) + "*s" + g1n::to_string(p);
  }
  return out;
}

}  // namespace g1n
