#include <doctest.h>

#include <set>

#include "oracles/sigma_oracle.hpp"
#include "silverline/error.hpp"
#include "silverline/sigma_int.hpp"

using namespace silverline;

namespace {

NormalForm nf(const char* bits, int n) { return NormalForm(SigmaInt::parse(bits), n); }

}  // namespace

TEST_CASE("sigma-integer representation") {
  CHECK(SigmaInt::parse("0011").to_string() == "11");
  CHECK(SigmaInt::parse("").is_zero());
  CHECK(SigmaInt::parse("0").degree() == -1);
  CHECK(SigmaInt::parse("101").coefficient(2) == 1);
  CHECK(SigmaInt::parse("101").coefficient(1) == 0);
  CHECK_THROWS_AS(SigmaInt::parse("12"), Error);
}

TEST_CASE("value and inflation") {
  auto golden = SilverBase::distinguished(2);
  CHECK(value_of(SigmaInt::parse("11"), golden) == golden.rho * golden.rho);
  auto trib = SilverBase::distinguished(3);
  auto r = trib.rho;
  CHECK(value_of(SigmaInt::parse("1000"), trib) == r * r + r + trib.field.one());
  CHECK(value_of(SigmaInt(), trib).is_zero());
  CHECK(inflate(SigmaInt::parse("1")).to_string() == "10");
  CHECK(inflate(SigmaInt::parse("101")).to_string() == "1010");
  CHECK(inflate(SigmaInt()).is_zero());
  auto x = SigmaInt::parse("1101");
  CHECK(value_of(inflate(x), trib) == trib.rho * value_of(x, trib));
  auto plastic = SilverBase::make(SilverPolynomial::from_bits("011"));
  auto iv = value_interval(x, plastic.root);
  CHECK(intersects(iv, field_interval(value_of(x, plastic), plastic.root)));
  CHECK(iv.width() < Rational(1, 1000000));
}

TEST_CASE("normal form window check") {
  CHECK(is_normal_form(SigmaInt::parse("101001"), 2));
  CHECK_FALSE(is_normal_form(SigmaInt::parse("11"), 2));
  CHECK(is_normal_form(SigmaInt::parse("110110"), 3));
  CHECK_THROWS_AS(nf("11", 2), Error);
}

TEST_CASE("normalization examples") {
  CHECK(to_normal_form(SigmaInt::parse("11"), 2).to_string() == "100");
  CHECK(to_normal_form(SigmaInt::parse("111"), 3).to_string() == "1000");
  auto golden = SilverBase::distinguished(2);
  auto r = to_normal_form(SigmaInt::parse("111"), 2);
  CHECK(r.to_string() == "1001");
  CHECK(value_of(r.rep(), golden) == value_of(SigmaInt::parse("111"), golden));
}

TEST_CASE("normalization preserves value and degree") {
  for (int n = 2; n <= 4; ++n) {
    auto base = SilverBase::distinguished(n);
    for (const auto& x : oracle::all_reps(9)) {
      auto y = to_normal_form(x, n);
      CHECK(value_of(y.rep(), base) == value_of(x, base));
      if (!x.is_zero()) CHECK((y.degree() == x.degree() || y.degree() == x.degree() + 1));
    }
  }
}

TEST_CASE("comparison") {
  CHECK(compare(nf("101", 2), nf("100", 2)) > 0);
  CHECK(compare(nf("1000", 3), nf("110", 3)) > 0);
  CHECK(compare(nf("0", 3), nf("1", 3)) < 0);
  CHECK(compare(nf("110", 3), nf("110", 3)) == 0);
  for (int n = 2; n <= 3; ++n) {
    auto base = SilverBase::distinguished(n);
    auto forms = oracle::all_normal_forms(n, 7);
    for (size_t i = 0; i < forms.size(); ++i) {
      for (size_t j = 0; j < forms.size(); ++j) {
        const int c = compare(NormalForm(forms[i], n), NormalForm(forms[j], n));
        CHECK(c == field_sign(value_of(forms[i], base) - value_of(forms[j], base), base.root));
      }
    }
  }
}

TEST_CASE("normal forms below rho^n") {
  for (int n = 2; n <= 4; ++n) {
    auto base = SilverBase::distinguished(n);
    for (const auto& y : oracle::all_normal_forms(n, 8)) {
      const auto top = base.rho.pow(y.degree() + 1);
      CHECK(field_sign(top - value_of(y, base), base.root) > 0);
    }
  }
}

TEST_CASE("largest of degree") {
  CHECK(largest_of_degree(3, 2).to_string() == "1010");
  CHECK(largest_of_degree(2, 3).to_string() == "110");
  CHECK(largest_of_degree(5, 3).to_string() == "110110");
  for (int n = 2; n <= 4; ++n) {
    for (int d = 0; d <= 8; ++d) {
      SigmaInt best;
      bool have = false;
      for (const auto& y : oracle::all_normal_forms(n, d)) {
        if (y.degree() != d) continue;
        if (!have || compare(NormalForm(y, n), NormalForm(best, n)) > 0) best = y;
        have = true;
      }
      CHECK(largest_of_degree(d, n).rep() == best);
    }
  }
}

TEST_CASE("successor examples") {
  auto golden = SilverBase::distinguished(2);
  auto s = successor(nf("0", 2), golden);
  CHECK(s.next.to_string() == "1");
  CHECK(s.delta == golden.field.one());
  s = successor(nf("1", 2), golden);
  CHECK(s.next.to_string() == "10");
  CHECK(s.delta == golden.rho - golden.field.one());
  auto trib = SilverBase::distinguished(3);
  s = successor(nf("11", 3), trib);
  CHECK(s.next.to_string() == "100");
  CHECK(s.delta == trib.rho_inverse);
  CHECK_THROWS_AS(successor(nf("1", 3), SilverBase::make(SilverPolynomial::from_bits("101"))), Error);
}

TEST_CASE("enumeration matches the brute-force sorted oracle") {
  for (int n = 2; n <= 4; ++n) {
    auto base = SilverBase::distinguished(n);
    const int degree = 12;
    auto expected = oracle::sorted_values(base, degree);
    auto got = enumerate_integers(base, 200);
    // Completeness of the oracle below rho^(degree+1).
    CHECK(field_sign(base.rho.pow(degree + 1) - value_of(got.back().rep(), base), base.root) > 0);
    REQUIRE(expected.size() >= got.size());
    for (size_t i = 0; i < got.size(); ++i) {
      CHECK(value_of(got[i].rep(), base) == expected[i].value);
      if (i + 1 < got.size()) {
        auto s = successor(got[i], base);
        CHECK(s.delta == value_of(got[i + 1].rep(), base) - value_of(got[i].rep(), base));
      }
    }
  }
  auto golden = SilverBase::distinguished(2);
  auto first = enumerate_integers(golden, 5);
  CHECK(first[0].to_string() == "0");
  CHECK(first[1].to_string() == "1");
  CHECK(first[2].to_string() == "10");
  CHECK(first[3].to_string() == "100");
  CHECK(first[4].to_string() == "101");
  auto trib = SilverBase::distinguished(3);
  auto t4 = enumerate_integers(trib, 4);
  CHECK(value_of(t4[2].rep(), trib) == trib.rho);
  CHECK(value_of(t4[3].rep(), trib) == trib.rho + trib.field.one());
}

TEST_CASE("successor deltas for N = 3") {
  auto trib = SilverBase::distinguished(3);
  std::set<std::vector<Rational>> seen;
  auto x = NormalForm(SigmaInt(), 3);
  for (int i = 0; i < 500; ++i) {
    auto s = successor(x, trib);
    seen.insert(s.delta.coords());
    x = s.next;
  }
  std::set<std::vector<Rational>> expected{trib.field.one().coords(),
                                           (trib.rho_inverse + trib.rho_inverse.pow(2)).coords(),
                                           trib.rho_inverse.coords()};
  CHECK(seen == expected);
}

TEST_CASE("min difference scan") {
  auto golden = SilverBase::distinguished(2);
  auto r = min_difference_scan(golden.field, golden.root, 2);
  CHECK(r.complete);
  CHECK(r.scanned == 27);
  CHECK(r.zero_values == 3);
  CHECK(r.witness == std::vector<int>{-1, 1, 0});
  // Oracle: 1/phi = 0.6180339887...
  CHECK(r.min_abs.lo <= Rational(618033988750, 1000000000000));
  CHECK(r.min_abs.hi >= Rational(618033988749, 1000000000000));
  CHECK(r.min_abs.width() < Rational(1, 1000000000));
  auto trib = SilverBase::distinguished(3);
  auto t = min_difference_scan(trib.field, trib.root, 6);
  CHECK(t.min_abs.lo > 0);
  CHECK(std::abs(t.min_abs.lo.get_d() - 0.54368901269) < 1e-9);
  auto partial = min_difference_scan(golden.field, golden.root, 10, 1000);
  CHECK_FALSE(partial.complete);
  CHECK(partial.scanned == 1000);
}
