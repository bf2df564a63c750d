#include "silverline/json_io.hpp"

#include "silverline/error.hpp"

namespace silverline {

namespace {

const Json& field(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), ErrorCode::Parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string as_string(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  fail(ErrorCode::Parse, "expected a string, got " + j.dump());
}

std::vector<BigInt> bigint_vector(const Json& j) {
  require(j.is_array(), ErrorCode::Parse, "expected an array");
  std::vector<BigInt> out;
  for (const auto& x : j) out.push_back(parse_bigint(as_string(x)));
  return out;
}

}  // namespace

Json rational_to_json(const Rational& x) { return to_fraction_string(x); }

Rational rational_from_json(const Json& j) { return parse_rational(as_string(j)); }

Json polynomial_to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (int k = 0; k <= p.degree(); ++k) out.push_back(p[k].get_str());
  return out;
}

IntPolynomial polynomial_from_json(const Json& j) { return IntPolynomial(bigint_vector(j)); }

Json algebraic_to_json(const AlgebraicReal& x) {
  return Json{{"defining", polynomial_to_json(x.defining())},
              {"lo", rational_to_json(x.lo())},
              {"hi", rational_to_json(x.hi())}};
}

AlgebraicReal algebraic_from_json(const Json& j) {
  return AlgebraicReal(polynomial_from_json(field(j, "defining")), rational_from_json(field(j, "lo")),
                       rational_from_json(field(j, "hi")));
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m(i, k).get_str());
    out.push_back(std::move(row));
  }
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  require(j.is_array(), ErrorCode::Parse, "matrix must be an array of rows");
  std::vector<std::vector<BigInt>> rows;
  for (const auto& r : j) rows.push_back(bigint_vector(r));
  return IntMatrix(rows);
}

Json field_element_to_json(const FieldElement& x) {
  Json out = Json::array();
  for (const auto& c : x.coords()) out.push_back(rational_to_json(c));
  return out;
}

FieldElement field_element_from_json(const NumberField& f, const Json& j) {
  require(j.is_array() && static_cast<int>(j.size()) <= f.degree(), ErrorCode::Parse,
          "field element needs at most N coordinates");
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(rational_from_json(c));
  return f.element(std::move(coords));
}

Json certificate_to_json(const DichotomyCertificate& cert) {
  Json v0 = Json::array();
  for (const auto& x : cert.v0) v0.push_back(x.get_str());
  return Json{{"poly", polynomial_to_json(cert.poly)},
              {"root", algebraic_to_json(cert.root)},
              {"v0", v0},
              {"scale", cert.scale.get_str()},
              {"L", field_element_to_json(cert.L)},
              {"delta", rational_to_json(cert.delta)},
              {"kappa", rational_to_json(cert.kappa)},
              {"gamma", rational_to_json(cert.gamma)},
              {"omega", rational_to_json(cert.omega)},
              {"mu_lower", rational_to_json(cert.mu_lower)},
              {"alpha_grid", rational_to_json(cert.alpha_grid)},
              {"alpha_lower", rational_to_json(cert.alpha_lower)},
              {"grid_exponent", cert.grid_exponent},
              {"verified_degree", cert.verified_degree}};
}

DichotomyCertificate certificate_from_json(const Json& j) {
  const IntPolynomial poly = polynomial_from_json(field(j, "poly"));
  const NumberField f(poly);
  AlgebraicReal root = algebraic_from_json(field(j, "root"));
  require(root.defining() == poly, ErrorCode::Parse, "root does not belong to poly");
  const Json& grid = field(j, "grid_exponent");
  const Json& verified = field(j, "verified_degree");
  require(grid.is_number_integer() && verified.is_number_integer(), ErrorCode::Parse, "integer fields expected");
  return DichotomyCertificate{poly,
                              std::move(root),
                              bigint_vector(field(j, "v0")),
                              parse_bigint(as_string(field(j, "scale"))),
                              field_element_from_json(f, field(j, "L")),
                              rational_from_json(field(j, "delta")),
                              rational_from_json(field(j, "kappa")),
                              rational_from_json(field(j, "gamma")),
                              rational_from_json(field(j, "omega")),
                              rational_from_json(field(j, "mu_lower")),
                              rational_from_json(field(j, "alpha_grid")),
                              rational_from_json(field(j, "alpha_lower")),
                              grid.get<int>(),
                              verified.get<int>()};
}

}  // namespace silverline
