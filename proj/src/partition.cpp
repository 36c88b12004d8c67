#include "g1n/partition.hpp"

#include <stdexcept>

namespace g1n {

GrassmannContext::GrassmannContext(int n_) : n(n_) {
  if (n < 2)
    throw std::invalid_argument("GrassmannContext: n must be at least 2");
}

Partition2::Partition2(int a_, int b_) : a(a_), b(b_) {
  if (b < 0 || a < b)
    throw std::invalid_argument("Partition2: need a >= b >= 0, got (" +
                                std::to_string(a_) + "," +
                                std::to_string(b_) + ")");
}

bool operator<(const Partition2& lhs, const Partition2& rhs) {
  if (lhs.codim() != rhs.codim()) return lhs.codim() < rhs.codim();
  return lhs.a > rhs.a;
}

std::string to_string(const Partition2& p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

Partition2 dual(const Partition2& p, const GrassmannContext& ctx) {
  if (!p.fits(ctx))
    throw std::invalid_argument("dual: partition " + to_string(p) +
                                " does not fit the box of G(1," +
                                std::to_string(ctx.n) + ")");
  return Partition2(ctx.max_row() - p.b, ctx.max_row() - p.a);
}

std::vector<Partition2> schubert_basis(int codim, const GrassmannContext& ctx) {
  if (codim < 0 || codim > ctx.dim())
    throw std::invalid_argument("schubert_basis: codimension " +
                                std::to_string(codim) + " out of range for G(1," +
                                std::to_string(ctx.n) + ")");
  std::vector<Partition2> basis;
  // a runs down from the largest admissible row; b = codim - a must satisfy
  // 0 <= b <= a.
  const int a_hi = std::min(ctx.max_row(), codim);
  for (int a = a_hi; 2 * a >= codim; --a) basis.emplace_back(a, codim - a);
  return basis;
}

}  // namespace g1n
