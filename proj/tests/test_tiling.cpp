#include <doctest.h>

#include <random>

#include "silverline/error.hpp"
#include "silverline/tiling.hpp"

using namespace silverline;

namespace {

SubstitutionRule rule3(const char* first) {
  // Companion rows 2 and 3 are R_2 -> R_1, R_3 -> R_2; the first row follows the string.
  std::vector<std::vector<long>> rows(3, std::vector<long>(3, 0));
  Indicator s;
  for (const char* c = first; *c; ++c) {
    s.push_back(*c - '0');
    ++rows[0][static_cast<size_t>(*c - '1')];
  }
  rows[1][0] = 1;
  rows[2][1] = 1;
  return make_rule(NonNegIntMatrix::from_rows(rows), {s, {1}, {2}});
}

const SubstitutionRule& golden() {
  static const SubstitutionRule r = dw_rule(SilverPolynomial::from_bits("11"));
  return r;
}

// Oracle: direct matrix power (U^tr)^k d0.
std::vector<BigInt> matrix_counts(const SubstitutionRule& rule, int start, int k) {
  std::vector<BigInt> d(static_cast<size_t>(rule.size()), BigInt(0));
  d[static_cast<size_t>(start - 1)] = 1;
  return rule.u.matrix().transpose().pow(static_cast<unsigned long>(k)) * d;
}

}  // namespace

TEST_CASE("rule validation") {
  CHECK(validate_rule(golden()).ok);
  CHECK(validate_rule(rule3("13")).ok);
  SubstitutionRule bad{NonNegIntMatrix::from_rows({{1, 1}, {1, 0}}), {{1, 1}, {1}}};
  auto r = validate_rule(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.row == 1);
  CHECK(r.column == 1);
  CHECK(r.actual == 2);
  CHECK_THROWS_AS(make_rule(bad.u, bad.strings), Error);
  CHECK(parse_rule_strings("13,1,2") == std::vector<Indicator>{{1, 3}, {1}, {2}});
  CHECK(canonical_rule(NonNegIntMatrix::from_rows({{1, 0, 1}, {1, 0, 0}, {0, 1, 0}})).strings[0] == Indicator{1, 3});
}

TEST_CASE("ins is a concatenation homomorphism") {
  CHECK(ins_apply(golden(), {1}) == Indicator{1, 2});
  CHECK(ins_apply(golden(), {1, 2}) == Indicator{1, 2, 1});
  CHECK(ins_apply(rule3("23"), {1}) == Indicator{2, 3});
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> letter(1, 3);
  const auto rule = rule3("132");
  for (int trial = 0; trial < 100; ++trial) {
    Indicator s, t;
    for (int k = 0; k < 1 + trial % 7; ++k) s.push_back(letter(rng));
    for (int k = 0; k < 1 + trial % 5; ++k) t.push_back(letter(rng));
    Indicator st = s;
    st.insert(st.end(), t.begin(), t.end());
    Indicator lhs = ins_apply(rule, st);
    Indicator rhs = ins_apply(rule, s);
    auto it = ins_apply(rule, t);
    rhs.insert(rhs.end(), it.begin(), it.end());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("ultrametric distance") {
  CHECK(ultrametric_distance({1, 2}, {1, 2}) == 0);
  CHECK(ultrametric_distance({1, 2}, {1, 1}) == Rational(1, 4));
  CHECK(ultrametric_distance({1}, {1, 2}) == Rational(1, 4));
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> letter(1, 2);
  std::uniform_int_distribution<int> length(0, 6);
  auto random_string = [&] {
    Indicator s;
    for (int k = length(rng); k > 0; --k) s.push_back(letter(rng));
    return s;
  };
  for (int trial = 0; trial < 300; ++trial) {
    auto x = random_string(), y = random_string(), z = random_string();
    CHECK(ultrametric_distance(x, y) == ultrametric_distance(y, x));
    CHECK((ultrametric_distance(x, y) == 0) == (x == y));
    CHECK(ultrametric_distance(x, y) <= std::max(ultrametric_distance(x, z), ultrametric_distance(z, y)));
  }
}

TEST_CASE("convergence modes") {
  auto g = detect_convergence(golden(), 1);
  CHECK(g.mode == ConvergenceMode::Direct);
  CHECK(g.k == 1);
  CHECK(detect_convergence(rule3("13"), 1).mode == ConvergenceMode::Direct);
  auto s31 = detect_convergence(rule3("31"), 1);
  CHECK(s31.mode == ConvergenceMode::Subsequence);
  CHECK(s31.k == 3);
  CHECK(detect_convergence(rule3("23"), 1).k == 2);
  CHECK(detect_convergence(rule3("32"), 1).k == 3);
  // For DW companions the return time of R_1 is the least m with b_m = 1.
  for (int n = 2; n <= 6; ++n) {
    for (const auto& p : enumerate_silver_polynomials(n)) {
      CHECK(detect_convergence(dw_rule(p), 1).k == p.support().front());
    }
  }
  auto perm = make_rule(NonNegIntMatrix::from_rows({{0, 1}, {1, 0}}), {{2}, {1}});
  CHECK(detect_convergence(perm, 1, 1).mode == ConvergenceMode::NoneWithinBudget);
}

TEST_CASE("limit prefixes") {
  CHECK(limit_prefix(golden(), 1, 8) == Indicator{1, 2, 1, 1, 2, 1, 2, 1});
  const auto trib = dw_rule(SilverPolynomial::distinguished(3));
  CHECK(limit_prefix(trib, 1, 12) == Indicator{1, 2, 3, 1, 2, 1, 2, 3, 1, 1, 2, 3});
  CHECK(limit_prefix(trib, 1, 5) == Indicator{1, 2, 3, 1, 2});
  CHECK(limit_prefix(rule3("13"), 1, 12) == Indicator{1, 3, 2, 1, 1, 3, 1, 3, 2, 1, 3, 2});
  CHECK(limit_prefix(rule3("31"), 1, 12) == Indicator{1, 2, 3, 1, 2, 3, 1, 3, 1, 1, 2, 3});
  CHECK(limit_prefix(rule3("23"), 1, 12) == Indicator{1, 2, 2, 3, 2, 3, 1, 2, 3, 1, 1, 2});
  CHECK(limit_prefix(rule3("32"), 1, 12) == Indicator{1, 3, 2, 3, 2, 2, 1, 3, 2, 2, 1, 2});
  Indicator prev{1};
  for (int l = 0; l < 20; ++l) {
    Indicator next = ins_apply(golden(), prev);
    CHECK(std::equal(prev.begin(), prev.end(), next.begin()));
    prev = next;
  }
  for (const char* s : {"31", "23", "32"}) {
    auto rule = rule3(s);
    auto conv = detect_convergence(rule, 1);
    auto p = limit_prefix(rule, 1, 300);
    Indicator img = p;
    for (int j = 0; j < conv.k; ++j) img = ins_apply(rule, img);
    CHECK(std::equal(p.begin(), p.end(), img.begin()));
  }
  auto perm = make_rule(NonNegIntMatrix::from_rows({{0, 1}, {1, 0}}), {{2}, {1}});
  CHECK_THROWS_AS(limit_prefix(perm, 1, 4), Error);
}

TEST_CASE("endpoints and length conservation") {
  auto base = SilverBase::distinguished(2);
  auto lengths = dw_lengths(base);
  auto e = endpoints({1, 2, 1}, lengths, base.root);
  REQUIRE(e.size() == 4);
  CHECK(e[1] == base.field.one());
  CHECK(e[2] == base.rho);
  CHECK(e[3] == base.rho + base.field.one());
  CHECK(endpoints({}, lengths, base.root).size() == 1);
  auto trib = SilverBase::distinguished(3);
  auto he = endpoints(limit_prefix(hat_rule(3), 1, 3), hat_lengths(trib), trib.root);
  CHECK(he[1] == trib.field.one());
  CHECK(he[2] == trib.rho);
  for (int n = 2; n <= 5; ++n) {
    auto b = SilverBase::distinguished(n);
    for (auto [rule, ls] : {std::pair{dw_rule(b.poly), dw_lengths(b)}, std::pair{hat_rule(n), hat_lengths(b)}}) {
      for (int i = 0; i < n; ++i) {
        FieldElement sum = b.field.zero();
        for (int t : rule.strings[static_cast<size_t>(i)]) sum += ls[static_cast<size_t>(t - 1)];
        CHECK(sum == b.rho * ls[static_cast<size_t>(i)]);
      }
    }
  }
}

TEST_CASE("periodicity") {
  auto r = check_periodicity({1, 2, 1, 2, 1, 2}, 3);
  REQUIRE(r.period.has_value());
  CHECK(*r.period == 2);
  auto ev = check_periodicity({3, 3, 1, 2, 1, 2, 1, 2, 1, 2}, 3);
  CHECK_FALSE(ev.period.has_value());
  REQUIRE(ev.eventual_period.has_value());
  CHECK(*ev.eventual_period == 2);
  CHECK(ev.eventual_offset == 2);
  CHECK_THROWS_AS(check_periodicity({1, 2}, 2), Error);
  auto g = check_periodicity(limit_prefix(golden(), 1, 2000), 500);
  CHECK_FALSE(g.period.has_value());
  CHECK_FALSE(g.eventual_period.has_value());
  auto t = check_periodicity(limit_prefix(dw_rule(SilverPolynomial::distinguished(3)), 1, 2000), 500);
  CHECK_FALSE(t.eventual_period.has_value());
  // Oracle scan: the 2000-tile supergolden (1,3) prefix repeats with period 406 from offset 872.
  auto s = check_periodicity(limit_prefix(rule3("13"), 1, 2000), 500);
  CHECK_FALSE(s.period.has_value());
  REQUIRE(s.eventual_period.has_value());
  CHECK(*s.eventual_period == 406);
  CHECK(s.eventual_offset == 872);
  CHECK_FALSE(check_periodicity(limit_prefix(rule3("13"), 1, 10000), 500).eventual_period.has_value());
}

TEST_CASE("count evolution") {
  auto c = count_evolution(golden(), 1, 3);
  CHECK(c[0] == std::vector<BigInt>{1, 0});
  CHECK(c[1] == std::vector<BigInt>{1, 1});
  CHECK(c[2] == std::vector<BigInt>{2, 1});
  CHECK(c[3] == std::vector<BigInt>{3, 2});
  const auto trib = dw_rule(SilverPolynomial::distinguished(3));
  auto ct = count_evolution(trib, 1, 24);
  for (int k = 0; k <= 24; ++k) CHECK(ct[static_cast<size_t>(k)] == matrix_counts(trib, 1, k));
}

TEST_CASE("frequency drift") {
  auto f = frequency_drift(golden(), 1, 40);
  CHECK(f.frequencies[0] == std::vector<Rational>{1, 0});
  const double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(std::abs(f.perron_direction[0] - phi / (1 + phi)) < 1e-12);
  CHECK(f.distances[30] < 1e-6);
  auto t = frequency_drift(dw_rule(SilverPolynomial::distinguished(3)), 1, 40);
  CHECK(t.distances[40] < 1e-6);
  for (size_t k = 5; k + 1 < f.distances.size() && f.distances[k] > 1e-13; ++k) CHECK(f.distances[k + 1] < f.distances[k]);
  auto perm = make_rule(NonNegIntMatrix::from_rows({{0, 1}, {1, 0}}), {{2}, {1}});
  CHECK_THROWS_AS(frequency_drift(perm, 1, 3), Error);
}

TEST_CASE("integer tilings") {
  auto r2 = integer_vs_substitution(2, 50);
  CHECK(r2.hat_matches);
  CHECK(r2.dw_identical);
  CHECK(r2.subordinate);
  auto r3 = integer_vs_substitution(3, 50);
  CHECK(r3.hat_matches);
  CHECK(r3.subordinate);
  CHECK(r3.first_mismatch == -1);
}

TEST_CASE("non-primitive tiling maps onto the golden tiling") {
  auto p = dw_rule(SilverPolynomial::from_bits("0101"));
  auto big = limit_prefix(p, 1, 100);
  Indicator mapped;
  for (int t : big) {
    REQUIRE((t == 1 || t == 3));
    mapped.push_back(t == 1 ? 1 : 2);
  }
  CHECK(mapped == limit_prefix(golden(), 1, 100));
}
