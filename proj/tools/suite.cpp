#include "suite.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include "silverline/dichotomy.hpp"
#include "silverline/error.hpp"
#include "silverline/factorization.hpp"
#include "silverline/nonneg.hpp"
#include "silverline/sigma_int.hpp"
#include "silverline/silver.hpp"
#include "silverline/tiling.hpp"

namespace silverline::suite {

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      pass = false;
      detail << what;
    }
  }
};

SubstitutionRule rule_for(const char* bits, const char* strings) {
  return make_rule(companion(SilverPolynomial::from_bits(bits), CompanionForm::DW), parse_rule_strings(strings));
}

void census(Outcome& out) {
  for (int n = 2; n <= 8; ++n) {
    const auto polys = enumerate_silver_polynomials(n);
    out.expect(static_cast<long>(polys.size()) == (1L << (n - 1)) - 1, "wrong count for N = " + std::to_string(n));
  }
  std::set<std::string> three;
  for (const auto& p : enumerate_silver_polynomials(3)) three.insert(to_string(p.polynomial()));
  out.expect(three == std::set<std::string>{"x^3 - x - 1", "x^3 - x^2 - 1", "x^3 - x^2 - x - 1"},
             "N = 3 listing differs");
  const IntPolynomial p = SilverPolynomial::from_bits("0111").polynomial();
  const auto f = factor(p);
  out.expect(!is_irreducible(p), "x^4 - x^2 - x - 1 not detected reducible");
  const std::vector<std::pair<IntPolynomial, int>> expected = {{IntPolynomial({1, 1}), 1},
                                                               {IntPolynomial({-1, 0, -1, 1}), 1}};
  out.expect(f == expected, "factorization of x^4 - x^2 - x - 1 differs");
  if (out.pass) out.detail << "counts 2^(N-1)-1 for N=2..8; x^4 - x^2 - x - 1 = (x + 1)(x^3 - x^2 - 1)";
}

void root_bounds(Outcome& out) {
  const Rational width = parse_rational("1e-20");
  std::vector<AlgebraicReal> roots;
  for (int n = 2; n <= 11; ++n) roots.push_back(silver_number(SilverPolynomial::distinguished(n), width));
  for (int n = 2; n <= 10; ++n) {
    const auto& r = roots[static_cast<size_t>(n - 2)];
    const Rational lower = 2 - Rational(1, BigInt(1) << (n - 1));
    const Rational upper = 2 - Rational(1, BigInt(1) << n);
    out.expect(r.width() <= width, "interval too wide for N = " + std::to_string(n));
    out.expect(lower < r.lo() && r.hi() < upper, "bounds fail for N = " + std::to_string(n));
    out.expect(r.hi() < roots[static_cast<size_t>(n - 1)].lo(), "not increasing at N = " + std::to_string(n));
  }
  if (out.pass) out.detail << "2 - 2^(1-N) < rho_N < 2 - 2^-N and rho_N < rho_(N+1) for N=2..10 at width 1e-20";
}

void normal_forms(Outcome& out) {
  long pairs = 0;
  for (int n = 2; n <= 5; ++n) {
    const SilverBase base = SilverBase::distinguished(n);
    std::vector<NormalForm> small;
    std::vector<FieldElement> small_values;
    std::set<std::vector<Rational>> values;
    long normal = 0;
    for (int len = 1; len <= 13; ++len) {
      for (long m = 1L << (len - 1); m < (1L << len); ++m) {
        std::vector<std::uint8_t> bits;
        for (int i = len - 1; i >= 0; --i) bits.push_back(static_cast<std::uint8_t>((m >> i) & 1));
        const SigmaInt x(bits);
        const FieldElement v = value_of(x, base);
        const NormalForm nf = to_normal_form(x, n);
        if (!(value_of(nf.rep(), base) == v) || nf.degree() < x.degree() || nf.degree() > x.degree() + 1) {
          out.expect(false, "normalization of " + x.to_string() + " fails for N = " + std::to_string(n));
          return;
        }
        if (is_normal_form(x, n)) {
          ++normal;
          values.insert(v.coords());
          if (x.degree() <= 10) {
            small.emplace_back(x, n);
            small_values.push_back(v);
          }
        }
      }
    }
    out.expect(static_cast<long>(values.size()) == normal, "two normal forms share a value for N = " + std::to_string(n));
    for (size_t i = 0; i < small.size(); ++i)
      for (size_t j = i + 1; j < small.size(); ++j) {
        ++pairs;
        if (compare(small[i], small[j]) != field_sign(small_values[i] - small_values[j], base.root)) {
          out.expect(false, "compare disagrees on " + small[i].to_string() + ", " + small[j].to_string());
          return;
        }
      }
  }
  if (out.pass) out.detail << "all 8191 vectors x 4 bases normalize exactly; values distinct; " << pairs << " pairs compared";
}

void tilings(Outcome& out) {
  const auto golden = integer_vs_substitution(2, 200);
  out.expect(golden.hat_matches && golden.dw_identical, "golden: " + golden.detail);
  for (int n = 3; n <= 4; ++n) {
    const auto r = integer_vs_substitution(n, 200);
    out.expect(r.hat_matches, "N = " + std::to_string(n) + ": " + r.detail);
    out.expect(r.subordinate, "N = " + std::to_string(n) + ": " + r.detail);
  }
  if (out.pass) out.detail << "200 tiles: golden endpoints identical; N=3,4 hat endpoints equal, integers subordinate to DW";
}

void successor_gaps(Outcome& out) {
  const SilverBase base = SilverBase::distinguished(3);
  const FieldElement inv = base.rho_inverse;
  const std::vector<FieldElement> expected = {base.field.one(), inv + inv * inv, inv};
  std::vector<long> hits(expected.size());
  NormalForm x(SigmaInt(), 3);
  for (int i = 0; i < 500; ++i) {
    const Successor s = successor(x, base);
    bool found = false;
    for (size_t k = 0; k < expected.size(); ++k) {
      if (s.delta == expected[k]) {
        ++hits[k];
        found = true;
      }
    }
    out.expect(found, "unexpected gap after " + x.to_string());
    if (!found) return;
    x = s.next;
  }
  for (size_t k = 0; k < hits.size(); ++k) out.expect(hits[k] > 0, "gap value " + std::to_string(k) + " never occurs");
  if (out.pass) out.detail << "counts 1: " << hits[0] << ", 1/rho+1/rho^2: " << hits[1] << ", 1/rho: " << hits[2];
}

void primitivity(Outcome& out) {
  int total = 0;
  int nonprimitive = 0;
  for (int n = 2; n <= 8; ++n) {
    for (const auto& p : enumerate_silver_polynomials(n)) {
      ++total;
      const bool by_gcd = silver_primitivity_by_gcd(p).primitive;
      const bool by_power = is_primitive(companion(p, CompanionForm::DW));
      out.expect(by_gcd == by_power, "criteria disagree on " + p.bit_string());
      if (by_gcd) continue;
      ++nonprimitive;
      const Decomposition d = decompose_nonprimitive(p);
      out.expect(d.q.polynomial().compose_power(d.d) == p.polynomial(), "P != Q(X^d) for " + p.bit_string());
      out.expect(is_primitive(companion(d.q, CompanionForm::DW)), "Q not primitive for " + p.bit_string());
    }
  }
  if (out.pass) out.detail << total << " polynomials, " << nonprimitive << " non-primitive decompositions round-trip";
}

void convergence(Outcome& out) {
  struct Case {
    const char* name;
    const char* bits;
    const char* strings;
    ConvergenceMode mode;
    int k;
  };
  const Case cases[] = {{"golden", "11", "12,1", ConvergenceMode::Direct, 1},
                        {"supergolden (1,3)", "101", "13,1,2", ConvergenceMode::Direct, 1},
                        {"supergolden (3,1)", "101", "31,1,2", ConvergenceMode::Subsequence, 3},
                        {"plastic (2,3)", "011", "23,1,2", ConvergenceMode::Subsequence, 2},
                        {"plastic (3,2)", "011", "32,1,2", ConvergenceMode::Subsequence, 3}};
  std::string summary;
  for (const auto& c : cases) {
    const auto r = detect_convergence(rule_for(c.bits, c.strings), 1);
    const std::string got = std::string(c.name) + " " + std::string(to_string(r.mode)) + " k=" + std::to_string(r.k);
    out.expect(r.mode == c.mode && r.k == c.k, "unexpected " + got);
    summary += (summary.empty() ? "" : ", ") + got;
  }
  if (out.pass) out.detail << summary;
}

void frequencies(Outcome& out) {
  const SubstitutionRule rule = dw_rule(SilverPolynomial::distinguished(2));
  const FrequencyDrift drift = frequency_drift(rule, 1, 40);
  out.expect(drift.distances.at(40) <= 1e-6, "distance at iteration 40 is " + std::to_string(drift.distances[40]));
  const auto counts = count_evolution(rule, 1, 20);
  const IntMatrix ut = rule.u.matrix().transpose();
  std::vector<BigInt> d(static_cast<size_t>(rule.size()), BigInt(0));
  d[0] = 1;
  for (int k = 0; k <= 20; ++k) {
    out.expect(counts.at(static_cast<size_t>(k)) == d, "count vector differs at k = " + std::to_string(k));
    d = ut * d;
  }
  if (out.pass) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", drift.distances[40]);
    out.detail << "distance at 40: " << buf << "; counts = (U^tr)^k d0 for k <= 20";
  }
}

void aperiodicity(Outcome& out) {
  const std::pair<const char*, const char*> cases[] = {
      {"golden", "11"}, {"tribonacci", "111"}, {"supergolden", "101"}, {"plastic", "011"}};
  for (const auto& [name, bits] : cases) {
    const auto prefix = limit_prefix(dw_rule(SilverPolynomial::from_bits(bits)), 1, 2000);
    const auto r = check_periodicity(prefix, 500);
    std::string what = std::string(name) + ": ";
    if (r.period) what += "period " + std::to_string(*r.period);
    if (r.eventual_period)
      what += "eventual period " + std::to_string(*r.eventual_period) + " from offset " + std::to_string(r.eventual_offset);
    out.expect(!r.period && !r.eventual_period, what);
  }
  if (out.pass) out.detail << "no period <= 500 in the four 2000-tile prefixes";
}

void conjugations(Outcome& out) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> degree(2, 8);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int t = 0; t < 50; ++t) {
    const int n = degree(rng);
    std::vector<BigInt> c;
    for (int k = 0; k < n; ++k) {
      int v = coeff(rng);
      while (k == 0 && v == 0) v = coeff(rng);
      c.emplace_back(v);
    }
    c.emplace_back(1);
    const IntPolynomial p(c);
    const IntMatrix cp = companion(p, CompanionForm::P);
    const IntMatrix tm = conjugation_T(p);
    out.expect(tm * cp == cp.transpose() * tm, "T C_P != C_P^tr T for " + to_string(p));
    out.expect(determinant(tm) != 0, "T singular for " + to_string(p));
  }
  int pairs = 0;
  for (int n = 3; n <= 4 && pairs < 10; ++n) {
    for (const auto& s : enumerate_silver_polynomials(n)) {
      if (pairs == 10) break;
      const NonNegIntMatrix a = companion(s, CompanionForm::DW);
      const NonNegIntMatrix b = companion(s, CompanionForm::DWTranspose);
      const IntMatrix m = intertwiner(a, b);
      out.expect(b.matrix() * m == m * a.matrix() && determinant(m) != 0, "intertwiner fails for " + s.bit_string());
      ++pairs;
    }
  }
  if (out.pass) out.detail << "50 random polynomials; " << pairs << " DW/DW-transpose intertwiners";
}

void dichotomy(Outcome& out, const ProgressSink& progress) {
  bool first = true;
  for (const char* bits : {"11", "111"}) {
    const IntPolynomial p = SilverPolynomial::from_bits(bits).polynomial();
    const AlgebraicReal root = largest_real_root(p).refined(dyadic(80));
    const auto mu = estimate_mu(p, root, 10);
    const auto cert = build_certificate(p, root, mu.lower);
    int reported = -1;
    const auto res = verify_certificate(cert, 10, [&](long long done, long long total) {
      const int pct = static_cast<int>(100 * done / total);
      if (progress && pct / 25 > reported) {
        reported = pct / 25;
        progress(std::string("dichotomy ") + bits + ": " + std::to_string(done) + "/" + std::to_string(total));
      }
    });
    out.expect(res.ok, std::string(bits) + " verification failed: " + res.reason);
    out.expect(res.checked + res.zeros == 177147, std::string(bits) + " did not scan 3^11 candidates");
    auto bad = cert;
    bad.v0[0] = -bad.v0[0];
    const auto rejected = verify_certificate(bad, 10);
    out.expect(!rejected.ok && rejected.witness.has_value(), std::string(bits) + " corrupted certificate accepted");
    if (out.pass) {
      out.detail << (first ? "" : "; ") << bits << ": v0=(";
      for (size_t j = 0; j < cert.v0.size(); ++j) out.detail << (j ? "," : "") << cert.v0[j].get_str();
      out.detail << ") " << res.checked << " checked, corrupted rejected at q=(";
      for (size_t j = 0; j < rejected.witness->size(); ++j) out.detail << (j ? "," : "") << (*rejected.witness)[j];
      out.detail << ")";
    }
    first = false;
  }
}

void impossibility(Outcome& out) {
  const auto sg = rational_L_impossibility(ImpossibilityCase::Supergolden);
  out.expect(sg.contradiction, "supergolden: " + sg.reason);
  out.expect(sg.relation == std::vector<std::string>{"La+1", "Lb-1", "Lc"}, "supergolden relation differs");
  bool identity = false;
  for (const auto& id : sg.identities) identity = identity || (id.text == "psi^4 - psi^3 = psi" && id.holds);
  out.expect(identity, "psi^4 - psi^3 = psi not verified");
  const auto pl = rational_L_impossibility(ImpossibilityCase::Plastic);
  out.expect(pl.contradiction, "plastic: " + pl.reason);
  out.expect(pl.relation == std::vector<std::string>{"La+1", "Lb-1", "Lc-1"}, "plastic relation differs");
  for (const auto& id : pl.identities) out.expect(id.holds, id.text + " fails");
  if (out.pass)
    out.detail << "(La+1)psi^2+(Lb-1)psi+Lc=0 and (La+1)theta^2+(Lb-1)theta+(Lc-1)=0 forced; psi^4-psi^3=psi exact";
}

struct CriterionInfo {
  const char* title;
  double limit;
};

const CriterionInfo kCriteria[kCriterionCount] = {
    {"silver-polynomial census", 1},   {"root bounds", 5},          {"normal-form suite", 120},
    {"tiling equivalences", 60},       {"successor-gap census", 60}, {"primitivity classification", 30},
    {"convergence modes", 60},         {"frequency convergence", 10}, {"non-periodicity evidence", 10},
    {"conjugation identities", 30},    {"dichotomy pipeline", 600},  {"impossibility reports", 60},
};

}  // namespace

CriterionResult run_criterion(int id, const ProgressSink& progress) {
  require(id >= 1 && id <= kCriterionCount, ErrorCode::InvalidArgument, "criterion id must lie in 1..12");
  CriterionResult r;
  r.id = id;
  r.title = kCriteria[id - 1].title;
  r.limit_seconds = kCriteria[id - 1].limit;
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: census(out); break;
      case 2: root_bounds(out); break;
      case 3: normal_forms(out); break;
      case 4: tilings(out); break;
      case 5: successor_gaps(out); break;
      case 6: primitivity(out); break;
      case 7: convergence(out); break;
      case 8: frequencies(out); break;
      case 9: aperiodicity(out); break;
      case 10: conjugations(out); break;
      case 11: dichotomy(out, progress); break;
      case 12: impossibility(out); break;
    }
  } catch (const std::exception& e) {
    out.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.expect(r.seconds <= r.limit_seconds, "runtime limit exceeded");
  r.pass = out.pass;
  r.detail = out.detail.str();
  return r;
}

std::string format_result(const CriterionResult& r) {
  char head[160];
  std::snprintf(head, sizeof head, "%s %2d %s (%.2f s / %.0f s): ", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.seconds, r.limit_seconds);
  return head + r.detail;
}

}  // namespace silverline::suite
