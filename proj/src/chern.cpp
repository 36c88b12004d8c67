#include "g1n/chern.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace g1n {

bool operator<(const RootForm& lhs, const RootForm& rhs) {
  return std::tie(lhs.px, lhs.py, lhs.ph) < std::tie(rhs.px, rhs.py, rhs.ph);
}

std::string to_string(const RootForm& r) {
  return std::to_string(r.px) + "x+" + std::to_string(r.py) + "y+" +
         std::to_string(r.ph) + "h";
}

RootBundle::RootBundle(std::vector<RootForm> roots) : roots_(std::move(roots)) {
  if (roots_.empty())
    throw std::invalid_argument("RootBundle: rank must be positive");
  std::sort(roots_.begin(), roots_.end());
}

bool operator<(const XYHMonomial& lhs, const XYHMonomial& rhs) {
  const int ld = lhs.x_pow + lhs.y_pow + lhs.h_pow;
  const int rd = rhs.x_pow + rhs.y_pow + rhs.h_pow;
  return std::tie(ld, lhs.h_pow, lhs.x_pow) < std::tie(rd, rhs.h_pow, rhs.x_pow);
}

std::string to_string(const XYHMonomial& m) {
  return "x^" + std::to_string(m.x_pow) + " y^" + std::to_string(m.y_pow) +
         " h^" + std::to_string(m.h_pow);
}

XYHPoly XYHPoly::constant(const Rat& c) {
  XYHPoly p;
  if (c != 0) p.terms_[{0, 0, 0}] = c;
  return p;
}

XYHPoly XYHPoly::linear(const RootForm& r) {
  XYHPoly p;
  if (r.px != 0) p.terms_[{1, 0, 0}] = r.px;
  if (r.py != 0) p.terms_[{0, 1, 0}] = r.py;
  if (r.ph != 0) p.terms_[{0, 0, 1}] = r.ph;
  return p;
}

XYHPoly XYHPoly::monomial(int x_pow, int y_pow, int h_pow, const Rat& coef) {
  if (x_pow < 0 || y_pow < 0 || h_pow < 0)
    throw std::invalid_argument("XYHPoly::monomial: negative exponent");
  XYHPoly p;
  if (coef != 0) p.terms_[{x_pow, y_pow, h_pow}] = coef;
  return p;
}

XYHPoly& XYHPoly::operator+=(const XYHPoly& rhs) {
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

XYHPoly operator*(const XYHPoly& lhs, const XYHPoly& rhs) {
  XYHPoly::TermMap out;
  for (const auto& [ma, ca] : lhs.terms_)
    for (const auto& [mb, cb] : rhs.terms_) {
      const XYHMonomial m{ma.x_pow + mb.x_pow, ma.y_pow + mb.y_pow,
                          ma.h_pow + mb.h_pow};
      auto it = out.find(m);
      if (it == out.end()) {
        out.emplace(m, ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.erase(it);
      }
    }
  XYHPoly p;
  p.terms_ = std::move(out);
  return p;
}

LC2Poly HC2Poly::coefficient(int h_pow) const {
  const auto it = strata_.find(h_pow);
  return it == strata_.end() ? LC2Poly() : it->second;
}

int HC2Poly::max_h_power() const {
  return strata_.empty() ? -1 : strata_.rbegin()->first;
}

LC2Poly HC2Poly::to_lc2() const {
  for (const auto& [h, poly] : strata_)
    if (h != 0)
      throw std::domain_error("HC2Poly::to_lc2: nonzero h^" +
                              std::to_string(h) + " stratum present");
  return coefficient(0);
}

std::string HC2Poly::to_string() const {
  if (strata_.empty()) return "0";
  std::string out;
  for (const auto& [h, poly] : strata_) {
    if (!out.empty()) out += " + ";
    out += "h^" + std::to_string(h) + "*(" + poly.to_string() + ")";
  }
  return out;
}

HC2Poly symmetrize(const XYHPoly& p) {
  // Check symmetry monomial by monomial before any rewriting, so the error
  // witness points at the original input.
  for (const auto& [mono, coef] : p.terms()) {
    const XYHMonomial mirror{mono.y_pow, mono.x_pow, mono.h_pow};
    const auto it = p.terms().find(mirror);
    if (it == p.terms().end() || it->second != coef)
      throw std::domain_error(
          "symmetrize: input is not symmetric in x and y; witness monomial " +
          rat_to_string(coef) + " * " + to_string(mono));
  }

  // Group by h-power, then reduce each stratum greedily: the leading
  // monomial x^i y^j (i >= j) of a symmetric polynomial is also the leading
  // monomial of l^(i-j) c2^j, so subtracting peels it off.
  std::map<int, std::map<std::pair<int, int>, Rat>> strata;
  for (const auto& [mono, coef] : p.terms())
    strata[mono.h_pow][{mono.x_pow, mono.y_pow}] = coef;

  HC2Poly out;
  for (auto& [h, stratum] : strata) {
    LC2Poly reduced;
    while (!stratum.empty()) {
      // Last key is the lex-largest (i, j); symmetry guarantees i >= j there.
      const auto [expo, coef] = *stratum.rbegin();
      const auto [i, j] = expo;
      if (i < j)
        throw std::logic_error("symmetrize: reduction left x^" +
                               std::to_string(i) + " y^" + std::to_string(j));
      reduced += LC2Poly::monomial(i - j, j, coef);
      // Subtract coef * (x+y)^(i-j) * (xy)^j expanded in x, y.
      Rat binom = coef;
      for (int t = 0; t <= i - j; ++t) {
        auto it = stratum.find({i - t, j + t});
        if (it == stratum.end()) {
          stratum.emplace(std::make_pair(i - t, j + t), -binom);
        } else {
          it->second -= binom;
          if (it->second == 0) stratum.erase(it);
        }
        binom = binom * (i - j - t) / (t + 1);
      }
    }
    if (!reduced.is_zero()) out.strata_.emplace(h, std::move(reduced));
  }
  return out;
}

RootBundle sym_power_roots(int m) {
  if (m < 0) throw std::invalid_argument("sym_power_roots: m must be >= 0");
  std::vector<RootForm> roots;
  roots.reserve(m + 1);
  for (int k = 0; k <= m; ++k) roots.push_back(RootForm{k, m - k, 0});
  return RootBundle(std::move(roots));
}

RootBundle twist_by_h(const RootBundle& bundle, int t) {
  std::vector<RootForm> roots = bundle.roots();
  for (auto& r : roots) r.ph += t;
  return RootBundle(std::move(roots));
}

HC2Poly chern_class(const RootBundle& bundle, int k) {
  if (k < 0 || k > bundle.rank())
    throw std::invalid_argument("chern_class: k = " + std::to_string(k) +
                                " outside 0..rank = " +
                                std::to_string(bundle.rank()));
  // Elementary symmetric polynomial of the roots by the usual one-root-at-a-
  // time recurrence on e_0..e_k.
  std::vector<XYHPoly> e(k + 1);
  e[0] = XYHPoly::constant(1);
  int processed = 0;
  for (const auto& r : bundle.roots()) {
    const XYHPoly root = XYHPoly::linear(r);
    ++processed;
    for (int j = std::min(k, processed); j >= 1; --j) e[j] += e[j - 1] * root;
  }
  return symmetrize(e[k]);
}

LC2Poly chern_class_lc2(const RootBundle& bundle, int k) {
  for (const auto& r : bundle.roots())
    if (r.ph != 0)
      throw std::invalid_argument(
          "chern_class_lc2: root " + to_string(r) + " involves h");
  return chern_class(bundle, k).to_lc2();
}

LC2Poly class_fg(const MultiDegree& md) {
  const int rank = md.n() - md.degree_sum();
  if (rank < 1)
    throw std::invalid_argument("class_fg: requires n - sum d >= 1, got " +
                                md.to_string());
  return chern_class_lc2(sym_power_roots(rank - 1), rank);
}

LC2Poly class_f(const MultiDegree& md) {
  LC2Poly acc = LC2Poly::constant(1);
  for (int d : md.degrees())
    acc = acc * chern_class_lc2(sym_power_roots(d), d + 1);
  return acc;
}

LC2Poly q_class(int m) {
  if (m < 2) throw std::invalid_argument("q_class: m must be >= 2");
  XYHPoly prod = XYHPoly::constant(1);
  for (int k = 1; k <= m - 1; ++k)
    prod = prod * XYHPoly::linear(RootForm{k, m - k, 0});
  return symmetrize(prod).to_lc2();
}

}  // namespace g1n
