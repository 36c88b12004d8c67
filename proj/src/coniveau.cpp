#include "g1n/coniveau.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace g1n {

MultiDegree::MultiDegree(int n, std::vector<int> degrees)
    : n_(n), degrees_(std::move(degrees)) {
  if (n_ < 2) throw std::invalid_argument("MultiDegree: n must be at least 2");
  if (degrees_.empty())
    throw std::invalid_argument("MultiDegree: need at least one degree");
  for (int d : degrees_)
    if (d < 1) throw std::invalid_argument("MultiDegree: degrees must be >= 1");
  std::sort(degrees_.begin(), degrees_.end());
}

int MultiDegree::degree_sum() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), 0);
}

std::string MultiDegree::to_string() const {
  std::string out = "(" + std::to_string(n_) + ";[";
  for (size_t i = 0; i < degrees_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(degrees_[i]);
  }
  return out + "])";
}

bool coniveau_at_least(const MultiDegree& md, int c) {
  if (c < 1) throw std::invalid_argument("coniveau_at_least: c must be >= 1");
  return md.n() >= md.degree_sum() + (c - 1) * md.max_degree();
}

int max_coniveau(const MultiDegree& md) {
  const int headroom = md.n() - md.degree_sum();
  if (headroom < 0) return 0;
  return headroom / md.max_degree() + 1;
}

PlaneBoundResult plane_bound(const MultiDegree& md) {
  int planes_dim = 3 * md.n() - 4;
  for (int d : md.degrees()) planes_dim -= (d + 1) * (d + 2) / 2;
  const int dim_fg = md.n() - md.r() - 2;
  PlaneBoundResult res;
  res.slack = planes_dim - dim_fg;
  res.holds = res.slack >= 0;
  return res;
}

std::optional<int> equality_case_n(int d) {
  if (d < 1) throw std::invalid_argument("equality_case_n: d must be >= 1");
  const int rhs = 1 + (d + 1) * (d + 2) / 2;
  if (rhs % 2 != 0) return std::nullopt;
  return rhs / 2;
}

NumerologyReport dimensions(const MultiDegree& md) {
  NumerologyReport rep;
  rep.n = md.n();
  rep.degrees = md.degrees();

  rep.dim_x = md.n() - md.r();
  rep.dim_f = 2 * md.n() - 2 - md.degree_sum() - md.r();
  rep.dim_fg = md.n() - md.r() - 2;

  rep.max_coniveau_bound = max_coniveau(md);
  rep.coniveau2 = coniveau_at_least(md, 2);
  rep.fano_index2_degree = md.n() - md.degree_sum() - 1;

  const auto pb = plane_bound(md);
  rep.plane_bound_holds = pb.holds;
  rep.plane_bound_slack = pb.slack;
  rep.equality_case = pb.slack == 0;

  rep.has_degree_one = md.has_degree_one();
  rep.has_negative_dimension =
      rep.dim_x < 0 || rep.dim_f < 0 || rep.dim_fg < 0;
  return rep;
}

}  // namespace g1n
