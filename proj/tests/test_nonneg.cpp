#include <doctest.h>

#include <random>

#include "silverline/error.hpp"
#include "silverline/nonneg.hpp"

using namespace silverline;

namespace {

IntPolynomial poly(std::initializer_list<long> lowest_first) {
  std::vector<BigInt> c;
  for (long v : lowest_first) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

// Oracle: positivity of M^k by plain integer powering.
bool positive_power_oracle(const NonNegIntMatrix& m, int k) {
  IntMatrix p = m.matrix().pow(static_cast<unsigned long>(k));
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j)
      if (p(i, j) == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("companion layouts") {
  CHECK(companion(SilverPolynomial::from_bits("11"), CompanionForm::DW) == NonNegIntMatrix::from_rows({{1, 1}, {1, 0}}));
  CHECK(companion(SilverPolynomial::from_bits("101"), CompanionForm::DW) ==
        NonNegIntMatrix::from_rows({{1, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
  CHECK(companion(SilverPolynomial::from_bits("011"), CompanionForm::P) ==
        NonNegIntMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 1, 0}}));
  CHECK(companion(SilverPolynomial::from_bits("011"), CompanionForm::PTranspose).matrix() ==
        companion(SilverPolynomial::from_bits("011"), CompanionForm::P).matrix().transpose());
  CHECK(parse_companion_form("dwt") == CompanionForm::DWTranspose);
  CHECK_THROWS_AS(parse_companion_form("xx"), Error);
  CHECK_THROWS_AS(NonNegIntMatrix::from_rows({{1, -1}, {0, 1}}), Error);
  for (auto form : {CompanionForm::DW, CompanionForm::DWTranspose, CompanionForm::P, CompanionForm::PTranspose}) {
    auto p = SilverPolynomial::from_bits("1011");
    CHECK(characteristic_polynomial(companion(p, form).matrix()) == p.polynomial());
  }
}

TEST_CASE("irreducibility and primitivity") {
  CHECK(is_irreducible_matrix(NonNegIntMatrix::from_rows({{1, 1}, {1, 0}})));
  CHECK_FALSE(is_irreducible_matrix(NonNegIntMatrix::from_rows({{1, 0}, {0, 1}})));
  CHECK(is_primitive(NonNegIntMatrix::from_rows({{1, 1}, {1, 0}})));
  CHECK_FALSE(is_primitive(NonNegIntMatrix::from_rows({{0, 1}, {1, 0}})));
  CHECK_FALSE(is_primitive(companion(SilverPolynomial::from_bits("0101"), CompanionForm::DW)));
  for (int n = 2; n <= 7; ++n)
    for (const auto& p : enumerate_silver_polynomials(n))
      CHECK(is_irreducible_matrix(companion(p, CompanionForm::DW)));
}

TEST_CASE("gcd criterion and decomposition") {
  auto g = silver_primitivity_by_gcd(SilverPolynomial::from_bits("011"));
  CHECK(g.gcd == 1);
  CHECK(g.primitive);
  g = silver_primitivity_by_gcd(SilverPolynomial::from_bits("0101"));
  CHECK(g.gcd == 2);
  CHECK_FALSE(g.primitive);
  CHECK(silver_primitivity_by_gcd(SilverPolynomial::distinguished(6)).gcd == 1);
  auto d = decompose_nonprimitive(SilverPolynomial::from_bits("0101"));
  CHECK(d.q.bit_string() == "11");
  CHECK(d.d == 2);
  d = decompose_nonprimitive(SilverPolynomial::from_bits("001001"));
  CHECK(d.q.bit_string() == "11");
  CHECK(d.d == 3);
  d = decompose_nonprimitive(SilverPolynomial::from_bits("010101"));
  CHECK(d.q.bit_string() == "111");
  CHECK(d.d == 2);
  try {
    decompose_nonprimitive(SilverPolynomial::from_bits("011"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoDecomposition);
  }
}

TEST_CASE("primitivity exponent bound and oracle agreement") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& p : enumerate_silver_polynomials(n)) {
      auto m = companion(p, CompanionForm::DW);
      auto k = primitivity_exponent(m);
      CHECK(k.has_value() == is_primitive(m));
      CHECK(positive_power_oracle(m, n * n - 2 * n + 2) == is_primitive(m));
      if (k) {
        CHECK(positive_power_oracle(m, *k));
        CHECK(*k <= n * n - 2 * n + 2);
      }
    }
  }
}

TEST_CASE("Perron data") {
  auto pd = perron(NonNegIntMatrix::from_rows({{1, 1}, {1, 0}}), Rational(1, 1000000));
  CHECK(pd.rho.contains(Rational(16180339887, 10000000000)));
  CHECK(pd.rho.width() <= Rational(1, 1000000));
  CHECK(pd.right[0] == pd.field.generator());
  CHECK(pd.right[1] == pd.field.one());
  CHECK(pd.cw_lower <= pd.rho.hi);
  CHECK(pd.cw_upper >= pd.rho.lo);

  auto sp = SilverPolynomial::from_bits("101");
  auto cp = perron(companion(sp, CompanionForm::P), Rational(1, 1 << 20));
  auto psi = cp.field.generator();
  CHECK(cp.right[0] == psi.pow(-2));
  CHECK(cp.right[1] == psi.pow(-1));
  CHECK(cp.right[2] == cp.field.one());

  auto dw = perron(companion(SilverPolynomial::distinguished(3), CompanionForm::DW), Rational(1, 1 << 20));
  auto rho = dw.field.generator();
  CHECK(dw.right[0] == rho * rho);
  CHECK(dw.right[1] == rho);

  CHECK_THROWS_AS(perron(NonNegIntMatrix::from_rows({{1, 0}, {0, 1}}), Rational(1, 100)), Error);
}

TEST_CASE("Perron interval matches the silver number") {
  const Rational width(1, BigInt("100000000000000000000"));
  for (int n = 2; n <= 5; ++n) {
    for (const auto& p : enumerate_silver_polynomials(n)) {
      auto pd = perron(companion(p, CompanionForm::DW), width);
      auto s = silver_number(p, width);
      CHECK(intersects(pd.rho, s.interval()));
      CHECK(pd.rho.width() <= width);
    }
  }
}

TEST_CASE("conjugation T") {
  CHECK(conjugation_T(poly({-1, -1, 1})) == IntMatrix::identity(2));
  CHECK(conjugation_T(poly({-1, 0, -1, 1})) == from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  CHECK_THROWS_AS(conjugation_T(poly({0, -1, 1})), Error);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 7;
    std::vector<BigInt> c;
    for (int k = 0; k < n; ++k) c.emplace_back(coef(rng));
    if (c[0] == 0) c[0] = 3;
    c.emplace_back(1);
    IntPolynomial p(c);
    IntMatrix t = conjugation_T(p);
    IntMatrix cp = companion(p, CompanionForm::P);
    CHECK(t * cp == cp.transpose() * t);
    BigInt cn = -p[0];
    BigInt expected;
    mpz_pow_ui(expected.get_mpz_t(), cn.get_mpz_t(), static_cast<unsigned long>(n - 1));
    BigInt det = determinant(t);
    CHECK((det == expected || det == -expected));
  }
}

TEST_CASE("Krylov matrices") {
  auto a = companion(SilverPolynomial::from_bits("11"), CompanionForm::DW);
  auto k = krylov_W(a, KrylovDirection::Row);
  CHECK(k.u == std::vector<BigInt>{1, 0});
  IntMatrix cp = companion(k.characteristic, CompanionForm::P);
  CHECK(k.w * a.matrix() == cp * k.w);
  auto cpm = NonNegIntMatrix(cp);
  auto kc = krylov_W(cpm, KrylovDirection::Row);
  CHECK(kc.w == IntMatrix::identity(2));
  auto g = NonNegIntMatrix::from_rows({{1, 2, 1}, {1, 0, 0}, {0, 1, 0}});
  auto kg = krylov_W(g, KrylovDirection::Column);
  CHECK(kg.candidates_tried <= 3);
  IntMatrix cpg = companion(kg.characteristic, CompanionForm::P);
  CHECK(g.matrix() * kg.w == kg.w * cpg.transpose());
}

TEST_CASE("intertwiners") {
  auto g = NonNegIntMatrix::from_rows({{1, 1}, {1, 0}});
  auto m = intertwiner(g, g);
  CHECK(g.matrix() * m == m * g.matrix());
  auto sp = SilverPolynomial::distinguished(3);
  auto a = companion(sp, CompanionForm::DW);
  auto b = companion(sp, CompanionForm::DWTranspose);
  auto mab = intertwiner(a, b);
  CHECK(b.matrix() * mab == mab * a.matrix());
  auto a2 = NonNegIntMatrix::from_rows({{1, 2, 1}, {1, 0, 0}, {0, 1, 0}});
  auto b2 = NonNegIntMatrix::from_rows({{0, 1, 1}, {1, 0, 0}, {1, 2, 1}});
  auto m2 = intertwiner(a2, b2);
  CHECK(b2.matrix() * m2 == m2 * a2.matrix());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(m2(i, j) >= 0);
  try {
    intertwiner(g, NonNegIntMatrix::from_rows({{2, 1}, {1, 0}}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Incompatible);
  }
}
