#include "silverline/tiling.hpp"

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "silverline/error.hpp"

namespace silverline {

RuleCheck validate_rule(const SubstitutionRule& rule) {
  RuleCheck r;
  const int n = rule.size();
  if (static_cast<int>(rule.strings.size()) != n) {
    r.ok = false;
    r.message = "expected " + std::to_string(n) + " strings, got " + std::to_string(rule.strings.size());
    return r;
  }
  for (int i = 0; i < n; ++i) {
    std::vector<long> count(static_cast<size_t>(n), 0);
    for (int t : rule.strings[static_cast<size_t>(i)]) {
      if (t < 1 || t > n) {
        r.ok = false;
        r.row = i + 1;
        r.message = "string " + std::to_string(i + 1) + " contains invalid index " + std::to_string(t);
        return r;
      }
      ++count[static_cast<size_t>(t - 1)];
    }
    for (int j = 0; j < n; ++j) {
      if (rule.u(i, j) != count[static_cast<size_t>(j)]) {
        r.ok = false;
        r.row = i + 1;
        r.column = j + 1;
        r.expected = rule.u(i, j);
        r.actual = count[static_cast<size_t>(j)];
        r.message = "row " + std::to_string(i + 1) + ": R_" + std::to_string(j + 1) + " occurs " +
                    std::to_string(r.actual) + " times, matrix entry is " + r.expected.get_str();
        return r;
      }
    }
  }
  return r;
}

SubstitutionRule make_rule(NonNegIntMatrix u, std::vector<Indicator> strings) {
  SubstitutionRule rule{std::move(u), std::move(strings)};
  auto check = validate_rule(rule);
  if (!check.ok) fail(ErrorCode::InvalidArgument, "invalid substitution rule: " + check.message);
  return rule;
}

SubstitutionRule canonical_rule(const NonNegIntMatrix& u) {
  std::vector<Indicator> strings;
  for (int i = 0; i < u.size(); ++i) {
    Indicator s;
    for (int j = 0; j < u.size(); ++j) {
      require(u(i, j) <= 1000000, ErrorCode::InvalidArgument, "matrix entry too large for a substitution string");
      s.insert(s.end(), static_cast<size_t>(u(i, j).get_si()), j + 1);
    }
    strings.push_back(std::move(s));
  }
  return make_rule(u, std::move(strings));
}

std::vector<Indicator> parse_rule_strings(const std::string& text) {
  std::vector<Indicator> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    Indicator s;
    for (char ch : item) {
      if (ch < '1' || ch > '9') fail(ErrorCode::Parse, "rule strings use digits 1-9 separated by commas");
      s.push_back(ch - '0');
    }
    if (s.empty()) fail(ErrorCode::Parse, "empty substitution string");
    out.push_back(std::move(s));
  }
  return out;
}

Indicator ins_apply(const SubstitutionRule& rule, const Indicator& s) {
  Indicator out;
  for (int t : s) {
    require(t >= 1 && t <= rule.size(), ErrorCode::InvalidArgument, "indicator entry out of range");
    const auto& img = rule.strings[static_cast<size_t>(t - 1)];
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Rational ultrametric_distance(const Indicator& x, const Indicator& y) {
  const size_t len = std::max(x.size(), y.size());
  for (size_t k = 0; k < len; ++k) {
    const int a = k < x.size() ? x[k] : 0;
    const int b = k < y.size() ? y[k] : 0;
    if (a != b) return dyadic(static_cast<long>(k) + 1);
  }
  return 0;
}

std::string_view to_string(ConvergenceMode mode) noexcept {
  switch (mode) {
    case ConvergenceMode::Direct: return "direct";
    case ConvergenceMode::Subsequence: return "subsequence";
    case ConvergenceMode::NoneWithinBudget: return "none_within_budget";
  }
  return "none_within_budget";
}

ConvergenceReport detect_convergence(const SubstitutionRule& rule, int start, int k_budget) {
  const int n = rule.size();
  require(start >= 1 && start <= n, ErrorCode::InvalidArgument, "start index out of range");
  if (k_budget <= 0) k_budget = n * n + 1;
  ConvergenceReport report;
  Indicator s{start};
  for (int k = 1; k <= k_budget; ++k) {
    s = ins_apply(rule, s);
    if (s.size() > 4096) s.resize(4096);
    if (s.front() == start) {
      report.mode = k == 1 ? ConvergenceMode::Direct : ConvergenceMode::Subsequence;
      report.k = k;
      report.prefix = s;
      return report;
    }
  }
  report.k = k_budget;
  report.prefix = s;
  return report;
}

Indicator limit_prefix(const SubstitutionRule& rule, int start, int tile_count) {
  require(tile_count >= 0, ErrorCode::InvalidArgument, "tile count must be >= 0");
  const auto conv = detect_convergence(rule, start);
  if (conv.mode == ConvergenceMode::NoneWithinBudget) {
    fail(ErrorCode::Precondition, "substitution does not converge from R_" + std::to_string(start));
  }
  Indicator s{start};
  const auto limit = static_cast<size_t>(tile_count);
  for (int guard = 0; s.size() < limit; ++guard) {
    Indicator next = s;
    for (int j = 0; j < conv.k; ++j) next = ins_apply(rule, next);
    require(next.size() > s.size(), ErrorCode::Precondition, "substitution does not grow the prefix");
    if (next.size() > limit) next.resize(limit);
    s = std::move(next);
    require(guard < 100000, ErrorCode::Precondition, "prefix iteration did not terminate");
  }
  s.resize(limit);
  return s;
}

std::vector<FieldElement> endpoints(const Indicator& prefix, const std::vector<FieldElement>& lengths,
                                    const AlgebraicReal& root) {
  require(!lengths.empty(), ErrorCode::InvalidArgument, "no prototile lengths");
  for (const auto& l : lengths) {
    require(field_sign(l, root) > 0, ErrorCode::InvalidArgument, "prototile lengths must be positive");
  }
  std::vector<FieldElement> out{lengths.front().field().zero()};
  for (int t : prefix) {
    require(t >= 1 && t <= static_cast<int>(lengths.size()), ErrorCode::InvalidArgument, "indicator out of range");
    out.push_back(out.back() + lengths[static_cast<size_t>(t - 1)]);
  }
  return out;
}

PeriodicityReport check_periodicity(const Indicator& prefix, int max_period) {
  const int len = static_cast<int>(prefix.size());
  require(max_period >= 1, ErrorCode::InvalidArgument, "max period must be >= 1");
  require(len >= 2 * max_period, ErrorCode::Precondition, "prefix shorter than twice the max period");
  PeriodicityReport r;
  r.horizon = len;
  r.max_period = max_period;
  for (int m = 1; m <= max_period; ++m) {
    int last_mismatch = -1;
    for (int i = len - m - 1; i >= 0; --i) {
      if (prefix[static_cast<size_t>(i)] != prefix[static_cast<size_t>(i + m)]) {
        last_mismatch = i;
        break;
      }
    }
    if (last_mismatch < 0 && !r.period) r.period = m;
    const int offset = last_mismatch + 1;
    if (offset <= len / 2 && !r.eventual_period) {
      r.eventual_period = m;
      r.eventual_offset = offset;
    }
    if (r.period && r.eventual_period) break;
  }
  return r;
}

std::vector<std::vector<BigInt>> count_evolution(const SubstitutionRule& rule, int start, int iterations) {
  const int n = rule.size();
  require(start >= 1 && start <= n, ErrorCode::InvalidArgument, "start index out of range");
  require(iterations >= 0, ErrorCode::InvalidArgument, "iterations must be >= 0");
  auto count = [n](const Indicator& s) {
    std::vector<BigInt> c(static_cast<size_t>(n), BigInt(0));
    for (int t : s) c[static_cast<size_t>(t - 1)] += 1;
    return c;
  };
  std::vector<std::vector<BigInt>> out;
  Indicator s{start};
  out.push_back(count(s));
  constexpr size_t kMaxMaterialized = size_t{1} << 22;
  // Per-string letter counts for iterations past the materialization limit.
  std::vector<std::vector<BigInt>> image_counts;
  for (const auto& str : rule.strings) image_counts.push_back(count(str));
  bool materialized = true;
  for (int k = 1; k <= iterations; ++k) {
    if (materialized) {
      Indicator next = ins_apply(rule, s);
      if (next.size() <= kMaxMaterialized) {
        s = std::move(next);
        out.push_back(count(s));
        continue;
      }
      materialized = false;
    }
    std::vector<BigInt> c(static_cast<size_t>(n), BigInt(0));
    const auto& prev = out.back();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        c[static_cast<size_t>(j)] += prev[static_cast<size_t>(i)] * image_counts[static_cast<size_t>(i)][static_cast<size_t>(j)];
    out.push_back(std::move(c));
  }
  return out;
}

FrequencyDrift frequency_drift(const SubstitutionRule& rule, int start, int iterations) {
  require(is_primitive(rule.u), ErrorCode::Precondition, "frequency drift needs a primitive partition matrix");
  const auto pd = perron(rule.u, dyadic(60));
  FrequencyDrift out;
  double total = 0;
  for (const auto& e : pd.left) total += field_approx(e, pd.root);
  for (const auto& e : pd.left) out.perron_direction.push_back(field_approx(e, pd.root) / total);
  for (const auto& c : count_evolution(rule, start, iterations)) {
    BigInt sum = 0;
    for (const auto& x : c) sum += x;
    std::vector<Rational> f;
    double d2 = 0;
    for (size_t j = 0; j < c.size(); ++j) {
      Rational q(c[j], sum);
      q.canonicalize();
      const double diff = q.get_d() - out.perron_direction[j];
      d2 += diff * diff;
      f.push_back(q);
    }
    out.frequencies.push_back(std::move(f));
    out.distances.push_back(std::sqrt(d2));
  }
  return out;
}

SubstitutionRule dw_rule(const SilverPolynomial& p) {
  const int n = p.degree();
  std::vector<Indicator> strings;
  Indicator first;
  for (int j = 1; j <= n; ++j)
    if (p.bit(j)) first.push_back(j);
  strings.push_back(first);
  for (int j = 2; j <= n; ++j) strings.push_back({j - 1});
  return make_rule(companion(p, CompanionForm::DW), std::move(strings));
}

SubstitutionRule hat_rule(int n) {
  std::vector<Indicator> strings;
  for (int j = 1; j < n; ++j) strings.push_back({1, j + 1});
  strings.push_back({1});
  return make_rule(companion(SilverPolynomial::distinguished(n), CompanionForm::DWTranspose), std::move(strings));
}

std::vector<FieldElement> dw_lengths(const SilverBase& base) {
  std::vector<FieldElement> out;
  FieldElement l = base.field.one();
  for (int j = 1; j <= base.degree(); ++j) {
    out.push_back(l);
    l *= base.rho_inverse;
  }
  return out;
}

std::vector<FieldElement> hat_lengths(const SilverBase& base) {
  std::vector<FieldElement> out;
  for (int j = 1; j <= base.degree(); ++j) out.push_back(prototile_gap(base, j - 1));
  return out;
}

IntegerTilingReport integer_vs_substitution(int n, int tile_count) {
  require(tile_count >= 1, ErrorCode::InvalidArgument, "tile count must be >= 1");
  const SilverBase base = SilverBase::distinguished(n);
  IntegerTilingReport r;
  r.n = n;
  r.tiles = tile_count;

  std::vector<FieldElement> ints;
  for (const auto& x : enumerate_integers(base, tile_count + 1)) ints.push_back(value_of(x.rep(), base));

  const auto hat = endpoints(limit_prefix(hat_rule(n), 1, tile_count), hat_lengths(base), base.root);
  r.hat_matches = true;
  for (size_t i = 0; i < ints.size(); ++i) {
    if (!(hat[i] == ints[i])) {
      r.hat_matches = false;
      r.first_mismatch = static_cast<int>(i);
      r.detail = "hat endpoint " + std::to_string(i) + " differs from the rho-integer";
      break;
    }
  }

  const auto rule = dw_rule(SilverPolynomial::distinguished(n));
  const auto lengths = dw_lengths(base);
  const FieldElement& top = ints.back();
  int count = tile_count;
  std::vector<FieldElement> dw;
  for (;;) {
    dw = endpoints(limit_prefix(rule, 1, count), lengths, base.root);
    if (field_sign(dw.back() - top, base.root) >= 0) break;
    count *= 2;
  }
  r.dw_identical = dw.size() >= ints.size();
  for (size_t i = 0; r.dw_identical && i < ints.size(); ++i) r.dw_identical = dw[i] == ints[i];

  std::set<std::vector<Rational>> dw_set;
  for (const auto& e : dw) dw_set.insert(e.coords());
  r.subordinate = true;
  for (size_t i = 0; i < ints.size(); ++i) {
    if (!dw_set.count(ints[i].coords())) {
      r.subordinate = false;
      if (r.first_mismatch < 0) {
        r.first_mismatch = static_cast<int>(i);
        r.detail = "rho-integer " + std::to_string(i) + " is not a DW endpoint";
      }
      break;
    }
  }
  return r;
}

}  // namespace silverline
