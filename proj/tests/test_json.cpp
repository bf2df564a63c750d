#include <doctest.h>

#include "silverline/error.hpp"
#include "silverline/json_io.hpp"
#include "silverline/nonneg.hpp"
#include "silverline/silver.hpp"

using namespace silverline;

TEST_CASE("rational and polynomial round trips") {
  for (const char* s : {"0/1", "-3/7", "5/1", "123456789012345678901234567891/2"}) {
    const Rational x = parse_rational(s);
    CHECK(rational_to_json(x) == s);
    CHECK(rational_from_json(rational_to_json(x)) == x);
  }
  CHECK(rational_from_json(Json(3)) == 3);
  CHECK(rational_from_json(Json("0.25")) == Rational(1, 4));
  const IntPolynomial p({-1, -1, 0, 1});
  CHECK(polynomial_to_json(p).dump() == R"(["-1","-1","0","1"])");
  CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"(["1", "x"])")), Error);
  CHECK_THROWS_AS(polynomial_from_json(Json::parse("{}")), Error);
}

TEST_CASE("algebraic real round trip") {
  const auto root = silver_number(SilverPolynomial::from_bits("111"), dyadic(40));
  const Json j = algebraic_to_json(root);
  CHECK(j.at("defining").size() == 4);
  const AlgebraicReal back = algebraic_from_json(j);
  CHECK(back.defining() == root.defining());
  CHECK(back.lo() == root.lo());
  CHECK(back.hi() == root.hi());
  Json bad = j;
  bad["lo"] = "3/1";
  CHECK_THROWS_AS(algebraic_from_json(bad), Error);
}

TEST_CASE("matrix round trip") {
  const IntMatrix m = companion(SilverPolynomial::from_bits("0101"), CompanionForm::DW).matrix();
  const Json j = matrix_to_json(m);
  CHECK(j.dump() == R"([["0","1","0","1"],["1","0","0","0"],["0","1","0","0"],["0","0","1","0"]])");
  CHECK(matrix_from_json(j) == m);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1","2"],["3"]])")), Error);
}

TEST_CASE("field element and certificate round trip") {
  const IntPolynomial p({-1, -1, 1});
  const NumberField f(p);
  const FieldElement x = f.element({Rational(1, 3), Rational(-2)});
  CHECK(field_element_from_json(f, field_element_to_json(x)) == x);

  const auto root = largest_real_root(p).refined(dyadic(60));
  auto cert = build_certificate(p, root, estimate_mu(p, root, 6).lower);
  cert.verified_degree = 6;
  const Json j = certificate_to_json(cert);
  for (const char* key : {"poly", "v0", "L", "delta", "gamma", "omega", "mu_lower", "verified_degree"})
    CHECK(j.contains(key));
  const DichotomyCertificate back = certificate_from_json(Json::parse(j.dump()));
  CHECK(back.poly == cert.poly);
  CHECK(back.v0 == cert.v0);
  CHECK(back.scale == cert.scale);
  CHECK(back.L == cert.L);
  CHECK(back.delta == cert.delta);
  CHECK(back.kappa == cert.kappa);
  CHECK(back.gamma == cert.gamma);
  CHECK(back.omega == cert.omega);
  CHECK(back.mu_lower == cert.mu_lower);
  CHECK(back.alpha_lower == cert.alpha_lower);
  CHECK(back.verified_degree == 6);
  CHECK(certificate_to_json(back).dump() == j.dump());
  CHECK(verify_certificate(back, 6).ok);
}
