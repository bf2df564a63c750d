#include <doctest.h>

#include "oracles/mu_values.hpp"
#include "silverline/dichotomy.hpp"
#include "silverline/error.hpp"
#include "silverline/matrix.hpp"
#include "silverline/nonneg.hpp"

using namespace silverline;

namespace {

struct Base {
  IntPolynomial p;
  AlgebraicReal root;
};

Base base_of(IntPolynomial p) {
  auto root = largest_real_root(p);
  return {std::move(p), root.refined(dyadic(80))};
}

Base golden() { return base_of(IntPolynomial({-1, -1, 1})); }
Base tribonacci() { return base_of(IntPolynomial({-1, -1, -1, 1})); }
Base plastic() { return base_of(IntPolynomial({-1, -1, 0, 1})); }

const DichotomyCertificate& golden_certificate() {
  static const DichotomyCertificate cert = [] {
    auto b = golden();
    return build_certificate(b.p, b.root, estimate_mu(b.p, b.root, 10).lower);
  }();
  return cert;
}

const DichotomyCertificate& tribonacci_certificate() {
  static const DichotomyCertificate cert = [] {
    auto b = tribonacci();
    return build_certificate(b.p, b.root, estimate_mu(b.p, b.root, 10).lower);
  }();
  return cert;
}

}  // namespace

TEST_CASE("estimate_mu matches the independent scan oracle") {
  for (const auto& row : oracle::kMuValues) {
    Base b = base_of(IntPolynomial(std::vector<BigInt>(row.poly.begin(), row.poly.end())));
    auto est = estimate_mu(b.p, b.root, row.bound);
    CAPTURE(row.name);
    CAPTURE(row.bound);
    CHECK(est.range_limited);
    CHECK(est.scan.complete);
    CHECK(est.scan.zero_values == row.zeros);
    CHECK(est.lower > 0);
    CHECK(est.lower <= est.scan.min_abs.lo);
    CHECK(est.scan.min_abs.lo <= parse_rational(row.min_hi));
    CHECK(est.scan.min_abs.hi >= parse_rational(row.min_lo));
  }
}

TEST_CASE("estimate_mu is monotone in the bound") {
  for (auto b : {golden(), tribonacci(), plastic()}) {
    Rational prev_hi;
    for (int d = 2; d <= 8; d += 2) {
      auto est = estimate_mu(b.p, b.root, d);
      if (d > 2) CHECK(est.scan.min_abs.lo <= prev_hi);
      prev_hi = est.scan.min_abs.hi;
    }
  }
}

TEST_CASE("distinguished scan minima stay at or below 1/rho") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<BigInt> c(static_cast<size_t>(n), BigInt(-1));
    c.push_back(1);
    Base b = base_of(IntPolynomial(c));
    auto est = estimate_mu(b.p, b.root, 8);
    CHECK(est.scan.min_abs.lo > 0);
    CHECK(est.scan.min_abs.lo <= 1 / b.root.lo());
  }
}

TEST_CASE("contraction bounds") {
  auto g = golden();
  auto cg = contraction_bound(g.p, g.root);
  CHECK(cg.delta <= Rational(9, 10));
  CHECK(cg.delta >= Rational(618033988, 1000000000));
  CHECK(cg.delta < Rational(618034, 1000000));
  // The symmetric golden matrix has an orthogonal eigenbasis.
  CHECK(cg.kappa >= 1);
  CHECK(cg.kappa < Rational(1000001, 1000000));
  CHECK(cg.gamma == cg.kappa / (1 - cg.delta));

  auto t = tribonacci();
  auto ct = contraction_bound(t.p, t.root);
  CHECK(ct.delta < Rational(8, 10));
  CHECK(ct.delta >= Rational(7373527, 10000000));
  CHECK(ct.gamma > 1);

  Base np = base_of(IntPolynomial({-1, 0, -1, 0, 1}));
  CHECK_THROWS_AS(contraction_bound(np.p, np.root), Error);
}

TEST_CASE("golden certificate") {
  const auto& cert = golden_certificate();
  for (const auto& x : cert.v0) CHECK(x > 0);
  CHECK(cert.alpha_lower > Rational(1, 2));
  CHECK(cert.mu_lower > 0);
  CHECK(cert.omega > 0);
  CHECK(cert.delta < 1);
  // 1 = L sum v0_j rho^-j.
  const auto& f = cert.L.field();
  FieldElement sum = f.zero();
  for (size_t j = 0; j < cert.v0.size(); ++j)
    sum += Rational(cert.v0[j]) * f.generator().pow(-static_cast<long>(j));
  CHECK(cert.L * sum == f.one());
  CHECK(field_sign(cert.L, cert.root) > 0);

  auto res = verify_certificate(cert, 10);
  CHECK(res.ok);
  CHECK(res.checked + res.zeros == 177147);
  CHECK(res.zeros == oracle::kGoldenZerosAt10);
  CHECK(res.sampled > 0);
}

TEST_CASE("tribonacci certificate") {
  const auto& cert = tribonacci_certificate();
  for (const auto& x : cert.v0) CHECK(x > 0);
  CHECK(cert.alpha_lower > Rational(1, 2));
  long long calls = 0;
  long long last = 0;
  auto res = verify_certificate(cert, 10, [&](long long done, long long total) {
    ++calls;
    CHECK(done <= total);
    last = std::max(last, done);
  });
  CHECK(res.ok);
  CHECK(calls > 0);
  CHECK(last == 177147);
}

TEST_CASE("corrupted certificates are rejected with a witness") {
  for (size_t j = 0; j < 2; ++j) {
    auto cert = golden_certificate();
    cert.v0[j] = -cert.v0[j];
    auto res = verify_certificate(cert, 10);
    CHECK_FALSE(res.ok);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->size() == 11);
    CHECK_FALSE(res.reason.empty());
  }
  auto cert = golden_certificate();
  cert.v0[0] += 1;
  auto res = verify_certificate(cert, 4);
  // The sign pattern may survive but the exact identity cannot.
  CHECK_FALSE(res.ok);
}

TEST_CASE("verification is independent of the thread count") {
  auto cert = tribonacci_certificate();
  cert.v0[1] = -cert.v0[1];
  setenv("SILVERLINE_THREADS", "1", 1);
  auto one = verify_certificate(cert, 8);
  setenv("SILVERLINE_THREADS", "4", 1);
  auto four = verify_certificate(cert, 8);
  unsetenv("SILVERLINE_THREADS");
  CHECK(one.witness == four.witness);
  CHECK(one.checked == four.checked);
  CHECK(one.reason == four.reason);
}

TEST_CASE("q = P is skipped as an exact zero") {
  auto g = golden();
  // Bound 2 contains q = -1 - x + x^2 and its negative, plus the zero polynomial.
  auto res = verify_certificate(golden_certificate(), 2);
  CHECK(res.ok);
  CHECK(res.zeros == 3);
  CHECK(res.checked == 24);
}

TEST_CASE("orbit reproduces the coefficient vectors of rho^k") {
  for (const auto* cert : {&golden_certificate(), &tribonacci_certificate()}) {
    const auto& f = cert->L.field();
    const int n = f.degree();
    std::vector<FieldElement> inv;
    for (int j = 0; j < n; ++j) inv.push_back(f.generator().pow(-j));
    auto orbit = certificate_orbit(*cert, 11);
    auto a = companion(cert->poly, CompanionForm::DW).transpose();
    for (int k = 0; k <= 10; ++k) {
      FieldElement value = f.zero();
      for (int j = 0; j < n; ++j) value += Rational(orbit[static_cast<size_t>(k)][static_cast<size_t>(j)]) * inv[static_cast<size_t>(j)];
      CHECK(cert->L * value == f.generator().pow(k));
      if (k > 0) CHECK(orbit[static_cast<size_t>(k)] == a * orbit[static_cast<size_t>(k - 1)]);
    }
  }
}

TEST_CASE("rational-L impossibility") {
  auto sg = rational_L_impossibility(ImpossibilityCase::Supergolden);
  CHECK(sg.contradiction);
  CHECK(sg.relation == std::vector<std::string>{"La+1", "Lb-1", "Lc"});
  CHECK(sg.minimal_degree == 3);
  REQUIRE(sg.identities.size() == 2);
  CHECK(sg.identities[1].text == "psi^4 - psi^3 = psi");
  CHECK(sg.identities[1].holds);
  CHECK(sg.identities[0].holds);
  CHECK_FALSE(sg.solution.has_value());

  auto pl = rational_L_impossibility(ImpossibilityCase::Plastic);
  CHECK(pl.contradiction);
  CHECK(pl.relation == std::vector<std::string>{"La+1", "Lb-1", "Lc-1"});
  for (const auto& id : pl.identities) CHECK(id.holds);
  CHECK_FALSE(pl.solution.has_value());

  auto g = rational_L_impossibility(ImpossibilityCase::Golden);
  CHECK_FALSE(g.contradiction);
  CHECK(g.minimal_degree == 2);
  REQUIRE(g.solution.has_value());
  CHECK(*g.solution == std::vector<Rational>{1, 0, 1, 0});

  CHECK(parse_impossibility_case("plastic") == ImpossibilityCase::Plastic);
  CHECK_THROWS_AS(parse_impossibility_case("silver"), Error);
}

TEST_CASE("dichotomy report") {
  auto t = tribonacci();
  auto rep = dichotomy_report(t.p, t.root, {4, 6, 8, 10});
  CHECK(rep.distinguished);
  CHECK(rep.verdict == DichotomyVerdict::CertifiedTiling);
  REQUIRE(rep.certificate.has_value());
  CHECK(rep.certificate->verified_degree == 10);
  CHECK(rep.trend.size() == 4);

  Base np = base_of(IntPolynomial({-1, 0, -1, 0, 1}));
  auto bad = dichotomy_report(np.p, np.root, {4});
  CHECK(bad.verdict == DichotomyVerdict::Inconclusive);
  CHECK(bad.pisot != PisotStatus::Pisot);
  CHECK_FALSE(bad.reason.empty());
  CHECK(to_string(DichotomyVerdict::EvidenceOfClustering) == "evidence-of-clustering");
}
