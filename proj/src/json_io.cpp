#include "g1n/json_io.hpp"

#include <stdexcept>

namespace g1n {

namespace {

Json partition_json(const Partition2& p) {
  return Json{{"a", p.a}, {"b", p.b}};
}

Rat rat_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw std::invalid_argument(std::string("json: missing rational field '") +
                                key + "'");
  return rat_from_string(j.at(key).get<std::string>());
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw std::invalid_argument(std::string("json: missing integer field '") +
                                key + "'");
  return j.at(key).get<int>();
}

const Json& array_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw std::invalid_argument(std::string("json: missing array field '") +
                                key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const SchurClass& u) {
  Json terms = Json::array();
  for (const auto& [p, coef] : u.terms())
    terms.push_back(Json{{"a", p.a}, {"b", p.b}, {"coef", rat_to_string(coef)}});
  return Json{{"n", u.context().n}, {"terms", std::move(terms)}};
}

SchurClass schur_from_json(const Json& j) {
  const GrassmannContext ctx(int_field(j, "n"));
  SchurClass::TermMap terms;
  for (const auto& t : array_field(j, "terms")) {
    const Partition2 p(int_field(t, "a"), int_field(t, "b"));
    if (terms.count(p))
      throw std::invalid_argument("json: duplicate partition " + to_string(p));
    terms.emplace(p, rat_field(t, "coef"));
  }
  return SchurClass(ctx, std::move(terms));
}

Json to_json(const LC2Poly& p) {
  Json terms = Json::array();
  for (const auto& [mono, coef] : p.terms())
    terms.push_back(Json{{"l", mono.l_pow},
                         {"c2", mono.c2_pow},
                         {"coef", rat_to_string(coef)}});
  return Json{{"terms", std::move(terms)}};
}

LC2Poly lc2_from_json(const Json& j) {
  LC2Poly::TermMap terms;
  for (const auto& t : array_field(j, "terms")) {
    const LC2Monomial mono{int_field(t, "l"), int_field(t, "c2")};
    if (terms.count(mono))
      throw std::invalid_argument("json: duplicate LC2 monomial");
    terms.emplace(mono, rat_field(t, "coef"));
  }
  return LC2Poly(std::move(terms));
}

Json to_json(const HC2Poly& p) {
  Json strata = Json::array();
  for (const auto& [h, poly] : p.strata())
    strata.push_back(Json{{"h", h}, {"poly", to_json(poly)}});
  return Json{{"strata", std::move(strata)}};
}

HC2Poly hc2_from_json(const Json& j) {
  // Rebuild through symmetrize so the symmetry-by-construction invariant of
  // HC2Poly survives a round trip.
  XYHPoly expansion;
  for (const auto& s : array_field(j, "strata")) {
    const int h = int_field(s, "h");
    if (h < 0) throw std::invalid_argument("json: negative h power");
    const LC2Poly poly = lc2_from_json(s.at("poly"));
    for (const auto& [mono, coef] : poly.terms()) {
      XYHPoly term = XYHPoly::monomial(0, 0, h, coef);
      const XYHPoly l_expanded = XYHPoly::linear(RootForm{1, 1, 0});
      for (int i = 0; i < mono.l_pow; ++i) term = term * l_expanded;
      term = term * XYHPoly::monomial(mono.c2_pow, mono.c2_pow, 0, 1);
      expansion += term;
    }
  }
  return symmetrize(expansion);
}

Json to_json(const BivarPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(rat_to_string(c));
  return Json{{"deg", p.degree()}, {"coeffs", std::move(coeffs)}};
}

BivarPoly bivar_from_json(const Json& j) {
  const int deg = int_field(j, "deg");
  const Json& coeffs = array_field(j, "coeffs");
  if (static_cast<int>(coeffs.size()) != deg + 1)
    throw std::invalid_argument("json: BivarPoly needs deg+1 coefficients");
  BivarPoly p(deg);
  for (int i = 0; i <= deg; ++i) {
    if (!coeffs[i].is_string())
      throw std::invalid_argument("json: BivarPoly coefficients are strings");
    p.at(i) = rat_from_string(coeffs[i].get<std::string>());
  }
  return p;
}

Json to_json(const MultiDegree& md) {
  return Json{{"n", md.n()}, {"degrees", md.degrees()}};
}

MultiDegree multidegree_from_json(const Json& j) {
  std::vector<int> degrees;
  for (const auto& d : array_field(j, "degrees")) {
    if (!d.is_number_integer())
      throw std::invalid_argument("json: degrees must be integers");
    degrees.push_back(d.get<int>());
  }
  return MultiDegree(int_field(j, "n"), std::move(degrees));
}

Json to_json(const NumerologyReport& rep) {
  return Json{{"n", rep.n},
              {"degrees", rep.degrees},
              {"dimX", rep.dim_x},
              {"dimF", rep.dim_f},
              {"dimFG", rep.dim_fg},
              {"maxConiveauBound", rep.max_coniveau_bound},
              {"coniveau2", rep.coniveau2},
              {"fanoIndex2Degree", rep.fano_index2_degree},
              {"planeBoundHolds", rep.plane_bound_holds},
              {"planeBoundSlack", rep.plane_bound_slack},
              {"equalityCase", rep.equality_case},
              {"hasDegreeOne", rep.has_degree_one},
              {"hasNegativeDimension", rep.has_negative_dimension}};
}

Json to_json(const ConeCertificate& cert) {
  Json coefficients = Json::array();
  for (const auto& [p, c] : cert.coefficients)
    coefficients.push_back(
        Json{{"a", p.a}, {"b", p.b}, {"coef", rat_to_string(c)}});
  Json pairings = Json::array();
  for (const auto& [q, v] : cert.pairings)
    pairings.push_back(
        Json{{"a", q.a}, {"b", q.b}, {"value", rat_to_string(v)}});
  Json witnesses = Json::array();
  for (const auto& p : cert.witnesses) witnesses.push_back(partition_json(p));
  return Json{{"n", cert.cls.context().n},
              {"codim", cert.codim},
              {"class", to_json(cert.cls)},
              {"verdict", to_string(cert.verdict)},
              {"coefficients", std::move(coefficients)},
              {"pairings", std::move(pairings)},
              {"witnesses", std::move(witnesses)},
              {"epsilonMargin", rat_to_string(cert.epsilon)}};
}

std::string numerology_csv_header() {
  return "n,degrees,dimX,dimF,dimFG,maxConiveauBound,coniveau2,"
         "fanoIndex2Degree,planeBoundHolds,planeBoundSlack,equalityCase,"
         "hasDegreeOne,hasNegativeDimension";
}

std::string numerology_csv_row(const NumerologyReport& rep) {
  std::string degrees;
  for (size_t i = 0; i < rep.degrees.size(); ++i) {
    if (i) degrees += "+";
    degrees += std::to_string(rep.degrees[i]);
  }
  auto b = [](bool v) { return v ? "true" : "false"; };
  return std::to_string(rep.n) + "," + degrees + "," +
         std::to_string(rep.dim_x) + "," + std::to_string(rep.dim_f) + "," +
         std::to_string(rep.dim_fg) + "," +
         std::to_string(rep.max_coniveau_bound) + "," + b(rep.coniveau2) +
         "," + std::to_string(rep.fano_index2_degree) + "," +
         b(rep.plane_bound_holds) + "," +
         std::to_string(rep.plane_bound_slack) + "," + b(rep.equality_case) +
         "," + b(rep.has_degree_one) + "," + b(rep.has_negative_dimension);
}

}  // namespace g1n
