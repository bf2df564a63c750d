#include "silverline/dichotomy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>

#include "detail/mp_roots.hpp"
#include "silverline/error.hpp"
#include "silverline/matrix.hpp"
#include "silverline/nonneg.hpp"
#include "silverline/parallel.hpp"

namespace silverline {

namespace {

using detail::Complex50;
using detail::Real50;

constexpr int kGridBits = 32;

Rational dyadic_floor(const Rational& x, int bits) {
  const BigInt scaled = BigInt(1) << bits;
  BigInt n;
  mpz_fdiv_q(n.get_mpz_t(), Rational(x * scaled).get_num_mpz_t(), Rational(x * scaled).get_den_mpz_t());
  Rational out(n, scaled);
  out.canonicalize();
  return out;
}

Rational dyadic_ceil(const Rational& x, int bits) { return -dyadic_floor(-x, bits); }

/// Rational y with 0 <= y <= sqrt(x).
Rational sqrt_lower(const Rational& x) {
  if (x <= 0) return 0;
  Rational y = dyadic_floor(Rational(std::sqrt(x.get_d())), 40);
  const Rational step = dyadic(40);
  while (y > 0 && y * y > x) y -= step;
  return y > 0 ? y : Rational(0);
}

IntMatrix dichotomy_matrix(const IntPolynomial& p) { return companion(p, CompanionForm::DW).transpose(); }

void require_setup(const IntPolynomial& p, const AlgebraicReal& root) {
  require(p.is_monic() && p.degree() >= 2, ErrorCode::InvalidArgument, "need a monic polynomial of degree >= 2");
  require(root.defining() == p, ErrorCode::InvalidArgument, "root does not belong to the polynomial");
}

/// Frobenius conditioning of the non-Perron part of the eigenvector basis of U^tr.
Rational eigen_conditioning(const IntPolynomial& p, const AlgebraicReal& root) {
  const auto disks = detail::isolate_root_disks(p);
  require(!disks.empty(), ErrorCode::CannotCertify, "eigenvalues could not be separated");
  const int n = p.degree();
  const double target = root.approx();
  int perron_index = 0;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const auto& c = disks[static_cast<size_t>(i)].center;
    const double dist = std::abs(c.real().convert_to<double>() - target) + std::abs(c.imag().convert_to<double>());
    if (dist < best) {
      best = dist;
      perron_index = i;
    }
  }
  // Column i: eigenvector of U^tr with e_0 = 1, e_{k+1} = lambda e_k - c_{k+1}.
  std::vector<std::vector<Complex50>> v(static_cast<size_t>(n), std::vector<Complex50>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) {
    const Complex50& lambda = disks[static_cast<size_t>(i)].center;
    Complex50 e(1);
    v[0][static_cast<size_t>(i)] = e;
    for (int k = 0; k + 1 < n; ++k) {
      const Real50 c(-p[n - k - 1].get_si());
      e = lambda * e - c;
      v[static_cast<size_t>(k + 1)][static_cast<size_t>(i)] = e;
    }
  }
  // Gauss-Jordan inverse with partial pivoting.
  auto a = v;
  std::vector<std::vector<Complex50>> inv(static_cast<size_t>(n), std::vector<Complex50>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) inv[static_cast<size_t>(i)][static_cast<size_t>(i)] = Complex50(1);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (abs(a[static_cast<size_t>(r)][static_cast<size_t>(col)]) >
          abs(a[static_cast<size_t>(piv)][static_cast<size_t>(col)]))
        piv = r;
    std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(piv)]);
    std::swap(inv[static_cast<size_t>(col)], inv[static_cast<size_t>(piv)]);
    const Complex50 d = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
    require(abs(d) > Real50(1e-30), ErrorCode::CannotCertify, "eigenvector basis is singular");
    for (int j = 0; j < n; ++j) {
      a[static_cast<size_t>(col)][static_cast<size_t>(j)] /= d;
      inv[static_cast<size_t>(col)][static_cast<size_t>(j)] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex50 f = a[static_cast<size_t>(r)][static_cast<size_t>(col)];
      for (int j = 0; j < n; ++j) {
        a[static_cast<size_t>(r)][static_cast<size_t>(j)] -= f * a[static_cast<size_t>(col)][static_cast<size_t>(j)];
        inv[static_cast<size_t>(r)][static_cast<size_t>(j)] -= f * inv[static_cast<size_t>(col)][static_cast<size_t>(j)];
      }
    }
  }
  Real50 sv = 0;
  Real50 sw = 0;
  for (int i = 0; i < n; ++i) {
    if (i == perron_index) continue;
    for (int k = 0; k < n; ++k) {
      sv += norm(v[static_cast<size_t>(k)][static_cast<size_t>(i)]);
      sw += norm(inv[static_cast<size_t>(i)][static_cast<size_t>(k)]);
    }
  }
  const Real50 kappa = sqrt(sv * sw) * (1 + Real50(1e-20));
  return dyadic_ceil(detail::upper_rational(kappa), kGridBits);
}

/// Integer coordinates, double values and a global error bound for rho^k.
struct PowerTable {
  std::vector<std::vector<long long>> coords;
  std::vector<double> approx;
  double err = 0;
};

PowerTable power_table(const NumberField& field, const AlgebraicReal& fine, int terms) {
  PowerTable t;
  constexpr double u = std::numeric_limits<double>::epsilon();
  double mag = 0;
  FieldElement power = field.one();
  for (int k = 0; k < terms; ++k) {
    std::vector<long long> c;
    for (const auto& x : power.coords()) {
      require(x.get_den() == 1 && abs(x) < Rational(BigInt(1) << 50), ErrorCode::UnsupportedDegree,
              "power coordinates out of range");
      c.push_back(x.get_num().get_si());
    }
    t.coords.push_back(std::move(c));
    const Interval iv = field_interval(power, fine);
    const double d = Rational((iv.lo + iv.hi) / 2).get_d();
    t.approx.push_back(d);
    t.err += (Rational((iv.hi - iv.lo) / 2).get_d() + std::abs(d) * u) * (1 + 4 * u);
    mag += std::abs(d);
    power *= field.generator();
  }
  t.err += (terms + 2) * u * mag * (1 + 4 * u);
  return t;
}

long long checked_ll(const BigInt& x) {
  require(abs(Rational(x)) < Rational(BigInt(1) << 56), ErrorCode::UnsupportedDegree, "orbit entries out of range");
  return x.get_si();
}

std::vector<int> decode(long long t, int terms) {
  std::vector<int> q(static_cast<size_t>(terms));
  for (int k = terms - 1; k >= 0; --k) {
    q[static_cast<size_t>(k)] = static_cast<int>(t % 3) - 1;
    t /= 3;
  }
  return q;
}

std::string q_string(const std::vector<int>& q) {
  std::string s = "(";
  for (size_t i = 0; i < q.size(); ++i) s += (i ? "," : "") + std::to_string(q[i]);
  return s + ")";
}

}  // namespace

MuEstimate estimate_mu(const IntPolynomial& p, const AlgebraicReal& root, int degree_bound) {
  require_setup(p, root);
  MuEstimate out;
  out.scan = min_difference_scan(NumberField(p), root, degree_bound);
  out.lower = dyadic_floor(out.scan.min_abs.lo, kGridBits);
  return out;
}

ContractionBound contraction_bound(const IntPolynomial& p, const AlgebraicReal& root) {
  require_setup(p, root);
  const PisotResult pis = is_pisot(p, root);
  if (pis.status != PisotStatus::Pisot) {
    fail(ErrorCode::CannotCertify, "root is not certified Pisot (" + std::string(to_string(pis.status)) +
                                       (pis.reason.empty() ? "" : ": " + pis.reason) + ")");
  }
  ContractionBound out;
  out.delta = dyadic_ceil(pis.max_other_modulus, kGridBits);
  require(out.delta < 1, ErrorCode::CannotCertify, "contraction bound is not below 1");
  out.kappa = eigen_conditioning(p, root);
  out.gamma = out.kappa / (1 - out.delta);
  return out;
}

DichotomyCertificate build_certificate(const IntPolynomial& p, const AlgebraicReal& root, const Rational& mu_lower) {
  require_setup(p, root);
  require(mu_lower > 0, ErrorCode::Precondition, "mu_lower must be positive");
  const NumberField field(p);
  const ContractionBound cb = contraction_bound(p, root);
  const int n = p.degree();
  const IntMatrix a = dichotomy_matrix(p);
  const FieldElement rho = field.generator();
  const auto w = null_vector(a, rho);
  const auto r = null_vector(a.transpose(), rho);
  const AlgebraicReal fine = root.refined(dyadic(120));
  for (const auto& x : w) require(field_sign(x, fine) > 0, ErrorCode::Precondition, "Perron vector not positive");

  FieldElement ww = field.zero();
  FieldElement rw = field.zero();
  FieldElement wmin = w[0];
  for (int i = 0; i < n; ++i) {
    ww += w[static_cast<size_t>(i)] * w[static_cast<size_t>(i)];
    rw += r[static_cast<size_t>(i)] * w[static_cast<size_t>(i)];
    if (field_sign(w[static_cast<size_t>(i)] - wmin, fine) < 0) wmin = w[static_cast<size_t>(i)];
  }
  const Rational omega = dyadic_floor(sqrt_lower(field_interval(wmin * wmin / ww, fine).lo), kGridBits);
  require(omega > 0, ErrorCode::CannotCertify, "omega lower bound vanished");
  const Rational tau = mu_lower * omega / (2 * cb.gamma);
  const double norm_w = std::sqrt(field_approx(ww, fine));
  std::vector<double> unit;
  for (const auto& x : w) unit.push_back(field_approx(x, fine) / norm_w);

  const Rational alphas[] = {Rational(3, 4), Rational(1), Rational(3, 2)};
  for (int s = 0; s <= 12; ++s) {
    const BigInt scale = BigInt(1) << s;
    const Rational scale_q(scale);
    for (const Rational& alpha : alphas) {
      std::vector<BigInt> v0;
      bool nonzero = false;
      for (double x : unit) {
        const long long c = std::llround(alpha.get_d() * x * std::ldexp(1.0, s));
        v0.emplace_back(static_cast<long>(c));
        nonzero = nonzero || c != 0;
      }
      if (!nonzero) continue;
      FieldElement rv = field.zero();
      for (int i = 0; i < n; ++i) rv += Rational(v0[static_cast<size_t>(i)]) * r[static_cast<size_t>(i)];
      const FieldElement alpha_raw = rv / rw;
      // alpha of v0/scale against the unit vector is alpha_raw |w| / scale.
      if (field_sign(alpha_raw * alpha_raw * ww - field.from_rational(scale_q * scale_q / 4), fine) <= 0) continue;
      FieldElement zz = field.zero();
      for (int i = 0; i < n; ++i) {
        const FieldElement zi = field.from_rational(Rational(v0[static_cast<size_t>(i)])) - alpha_raw * w[static_cast<size_t>(i)];
        zz += zi * zi;
      }
      if (field_sign(field.from_rational(tau * tau * scale_q * scale_q) - zz, fine) <= 0) continue;

      FieldElement sum = field.zero();
      const FieldElement rho_inv = rho.inverse();
      FieldElement power = field.one();
      for (int j = 0; j < n; ++j) {
        sum += Rational(v0[static_cast<size_t>(j)]) * power;
        power *= rho_inv;
      }
      require(field_sign(sum, fine) > 0, ErrorCode::Precondition, "representation of 1 is not positive");
      const Rational alpha_lower =
          dyadic_floor(sqrt_lower(field_interval(alpha_raw * alpha_raw * ww, fine).lo) / scale_q, kGridBits);
      return DichotomyCertificate{p,          root,     std::move(v0), scale,    sum.inverse(), cb.delta, cb.kappa,
                                  cb.gamma,   omega,    mu_lower,      alpha,    alpha_lower,   s,        -1};
    }
  }
  fail(ErrorCode::NotFound, "no grid point satisfies the ball condition (tau = " + to_fraction_string(tau) +
                                ", gamma = " + to_fraction_string(cb.gamma) + ", omega = " + to_fraction_string(omega) +
                                ", s <= 12)");
}

std::vector<std::vector<BigInt>> certificate_orbit(const DichotomyCertificate& cert, int count) {
  const IntMatrix a = dichotomy_matrix(cert.poly);
  std::vector<std::vector<BigInt>> out;
  std::vector<BigInt> v = cert.v0;
  for (int k = 0; k < count; ++k) {
    out.push_back(v);
    v = a * v;
  }
  return out;
}

VerificationResult verify_certificate(const DichotomyCertificate& cert, int degree_bound,
                                      const ProgressCallback& progress) {
  require(degree_bound >= 0 && degree_bound <= 20, ErrorCode::InvalidArgument, "degree bound must lie in 0..20");
  const int n = cert.poly.degree();
  require(static_cast<int>(cert.v0.size()) == n, ErrorCode::InvalidArgument, "v0 has the wrong length");
  const int terms = degree_bound + 1;
  const NumberField& field = cert.L.field();
  require(field.modulus() == cert.poly, ErrorCode::IncompatibleField, "L does not live in Q(rho)");
  const AlgebraicReal fine = cert.root.refined(dyadic(120));
  const PowerTable table = power_table(field, fine, terms);

  std::vector<std::vector<long long>> orbit;
  for (const auto& v : certificate_orbit(cert, terms)) {
    std::vector<long long> row;
    for (const auto& x : v) row.push_back(checked_ll(x));
    orbit.push_back(std::move(row));
  }
  std::vector<FieldElement> inverse_powers;
  FieldElement power = field.one();
  const FieldElement rho_inv = field.generator().inverse();
  for (int j = 0; j < n; ++j) {
    inverse_powers.push_back(power);
    power *= rho_inv;
  }

  long long total = 1;
  for (int k = 0; k < terms; ++k) total *= 3;
  const long long chunk = 6561;
  const long long chunks = (total + chunk - 1) / chunk;
  const long long stride = total / 97 + 1;

  struct ChunkResult {
    long long checked = 0;
    long long zeros = 0;
    long long sampled = 0;
    long long first_fail = -1;
    std::string reason;
  };
  std::vector<ChunkResult> results(static_cast<size_t>(chunks));
  std::atomic<long long> done{0};
  std::mutex progress_mutex;

  for_each_chunk(chunks, thread_count(), [&](long long c) {
    ChunkResult& res = results[static_cast<size_t>(c)];
    const long long begin = c * chunk;
    const long long end = std::min(total, begin + chunk);
    std::vector<int> q = decode(begin, terms);
    std::vector<long long> acc(static_cast<size_t>(n));
    std::vector<long long> vec(static_cast<size_t>(n));
    for (long long t = begin; t < end; ++t) {
      if (t > begin) {
        int k = terms - 1;
        while (q[static_cast<size_t>(k)] == 1) q[static_cast<size_t>(k--)] = -1;
        ++q[static_cast<size_t>(k)];
      }
      std::fill(acc.begin(), acc.end(), 0);
      std::fill(vec.begin(), vec.end(), 0);
      double value = 0;
      for (int k = 0; k < terms; ++k) {
        const int qk = q[static_cast<size_t>(k)];
        if (qk == 0) continue;
        for (int j = 0; j < n; ++j) {
          acc[static_cast<size_t>(j)] += qk * table.coords[static_cast<size_t>(k)][static_cast<size_t>(j)];
          vec[static_cast<size_t>(j)] += qk * orbit[static_cast<size_t>(k)][static_cast<size_t>(j)];
        }
        value += qk * table.approx[static_cast<size_t>(k)];
      }
      if (std::all_of(acc.begin(), acc.end(), [](long long x) { return x == 0; })) {
        ++res.zeros;
        continue;
      }
      ++res.checked;
      std::vector<Rational> coords;
      for (long long x : acc) coords.emplace_back(static_cast<long>(x));
      int s = 0;
      if (std::abs(value) > table.err) {
        s = value > 0 ? 1 : -1;
      } else {
        s = field_sign(field.element(coords), fine);
      }
      if (res.first_fail < 0) {
        for (int j = 0; j < n; ++j) {
          const long long e = vec[static_cast<size_t>(j)];
          if ((e > 0 ? 1 : e < 0 ? -1 : 0) != s) {
            res.first_fail = t;
            res.reason = "entry " + std::to_string(j) + " of q(A)v0 is " + std::to_string(e) +
                         " while q(rho) has sign " + std::to_string(s);
            break;
          }
        }
      }
      if (t % stride == 0 || t == total - 1) {
        ++res.sampled;
        FieldElement rhs = field.zero();
        for (int j = 0; j < n; ++j)
          rhs += Rational(static_cast<long>(vec[static_cast<size_t>(j)])) * inverse_powers[static_cast<size_t>(j)];
        if (cert.L * rhs != field.element(coords) && res.first_fail < 0) {
          res.first_fail = t;
          res.reason = "q(rho) differs from L (1, 1/rho, ...) q(A)v0";
        }
      }
    }
    const long long now = done += end - begin;
    if (progress) {
      std::lock_guard lock(progress_mutex);
      progress(now, total);
    }
  });

  VerificationResult out;
  out.degree_bound = degree_bound;
  for (const auto& res : results) {
    out.checked += res.checked;
    out.zeros += res.zeros;
    out.sampled += res.sampled;
    if (res.first_fail >= 0 && !out.witness) {
      out.witness = decode(res.first_fail, terms);
      out.reason = "q = " + q_string(*out.witness) + ": " + res.reason;
    }
  }
  out.ok = !out.witness.has_value();
  return out;
}

std::string_view to_string(ImpossibilityCase which) noexcept {
  switch (which) {
    case ImpossibilityCase::Supergolden: return "supergolden";
    case ImpossibilityCase::Plastic: return "plastic";
    case ImpossibilityCase::Golden: return "golden";
  }
  return "golden";
}

ImpossibilityCase parse_impossibility_case(std::string_view text) {
  if (text == "supergolden") return ImpossibilityCase::Supergolden;
  if (text == "plastic") return ImpossibilityCase::Plastic;
  if (text == "golden") return ImpossibilityCase::Golden;
  fail(ErrorCode::Parse, "unknown case '" + std::string(text) + "' (expected supergolden, plastic or golden)");
}

ImpossibilityReport rational_L_impossibility(ImpossibilityCase which) {
  ImpossibilityReport rep{which, IntPolynomial{}, {}, {}, {}, {}, 0, 2, false, {}, std::nullopt};
  std::vector<Rational> diff;
  std::string x;
  switch (which) {
    case ImpossibilityCase::Supergolden:
      rep.poly = IntPolynomial({-1, 0, -1, 1});
      diff = {-1, -1, 1};
      x = "psi";
      rep.difference = "psi^2 - (psi + 1)";
      break;
    case ImpossibilityCase::Plastic:
      rep.poly = IntPolynomial({-1, -1, 0, 1});
      diff = {-1, 1};
      x = "theta";
      rep.difference = "theta - 1";
      break;
    case ImpossibilityCase::Golden:
      rep.poly = IntPolynomial({-1, -1, 1});
      diff = {-1, 1};
      x = "phi";
      rep.difference = "phi - 1";
      break;
  }
  const NumberField field(rep.poly);
  const FieldElement rho = field.generator();
  const FieldElement d = field.element(diff);
  auto pw = [&](long e) { return rho.pow(e); };

  switch (which) {
    case ImpossibilityCase::Supergolden:
      rep.identities.push_back({"psi^3 = psi^2 + 1", pw(3) == pw(2) + field.one()});
      rep.identities.push_back({"psi^4 - psi^3 = psi", pw(4) - pw(3) == rho});
      break;
    case ImpossibilityCase::Plastic:
      rep.identities.push_back({"theta^3 = theta + 1", pw(3) == rho + field.one()});
      rep.identities.push_back({"theta^3 - theta^2 = -theta^2 + theta + 1", pw(3) - pw(2) == -pw(2) + rho + field.one()});
      break;
    case ImpossibilityCase::Golden:
      rep.identities.push_back({"phi^2 = phi + 1", pw(2) == rho + field.one()});
      rep.identities.push_back({"phi^3 - phi^2 = phi", pw(3) - pw(2) == rho});
      break;
  }

  // D rho^2 = L(a rho^2 + b rho + c); coordinates of D rho^2 in 1, rho, rho^2.
  const FieldElement lhs = d * pw(2);
  std::vector<Rational> dk = lhs.coords();
  dk.resize(3, Rational(0));
  const char* unknowns[] = {"La", "Lb", "Lc"};
  for (int k = 2; k >= 0; --k) {
    const Rational off = -dk[static_cast<size_t>(k)];
    rep.offsets.push_back(off);
    std::string term = unknowns[2 - k];
    if (off != 0) term += (off > 0 ? "+" : "-") + (off.get_den() == 1 ? abs(off).get_num().get_str() : to_fraction_string(abs(off)));
    rep.relation.push_back(term);
  }
  rep.minimal_degree = minimal_polynomial(rho).degree();

  bool identities_ok = true;
  for (const auto& id : rep.identities) identities_ok = identities_ok && id.holds;
  if (!identities_ok) {
    rep.reason = "an identity failed to verify";
    return rep;
  }
  if (rep.minimal_degree > rep.relation_degree) {
    for (int i = 0; i < 3; ++i) {
      if (rep.offsets[static_cast<size_t>(i)] > 0) {
        rep.contradiction = true;
        rep.reason = "the minimal polynomial of " + x + " has degree " + std::to_string(rep.minimal_degree) +
                     ", so every coefficient of the degree-2 relation must vanish, but " +
                     rep.relation[static_cast<size_t>(i)] + " > 0 for L > 0 and non-negative integers";
        return rep;
      }
    }
    rep.reason = "the relation can vanish identically; no contradiction";
  } else {
    rep.reason = "the minimal polynomial of " + x + " has degree " + std::to_string(rep.minimal_degree) +
                 ", so a degree-2 relation is consistent";
  }
  const FieldElement inv = rho.inverse();
  for (int a = 0; a <= 3 && !rep.solution; ++a)
    for (int b = 0; b <= 3 && !rep.solution; ++b)
      for (int c = 0; c <= 3 && !rep.solution; ++c) {
        if (a + b + c == 0) continue;
        const FieldElement basis = Rational(a) * field.one() + Rational(b) * inv + Rational(c) * inv * inv;
        for (const Rational& L : {Rational(1), Rational(1, 2), Rational(2)}) {
          if (L * basis == d) {
            rep.solution = std::vector<Rational>{L, a, b, c};
            break;
          }
        }
      }
  return rep;
}

std::string_view to_string(DichotomyVerdict verdict) noexcept {
  switch (verdict) {
    case DichotomyVerdict::CertifiedTiling: return "certified-tiling";
    case DichotomyVerdict::EvidenceOfClustering: return "evidence-of-clustering";
    case DichotomyVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

DichotomyReport dichotomy_report(const IntPolynomial& p, const AlgebraicReal& root, const std::vector<int>& bounds,
                                 const ProgressCallback& progress) {
  require_setup(p, root);
  require(!bounds.empty(), ErrorCode::InvalidArgument, "need at least one degree bound");
  std::vector<int> sorted = bounds;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  DichotomyReport rep;
  rep.poly = p;
  rep.distinguished = true;
  for (int k = 0; k < p.degree(); ++k) rep.distinguished = rep.distinguished && p[k] == -1;
  for (int b : sorted) rep.trend.push_back(estimate_mu(p, root, b));
  rep.notes.push_back("scan minima are range-limited: the infimum runs over all degrees");
  if (rep.distinguished) rep.notes.push_back("distinguished base: the scan minimum cannot exceed the gap 1/rho");

  bool shrinking = rep.trend.size() >= 2;
  for (size_t i = 1; i < rep.trend.size(); ++i)
    shrinking = shrinking && rep.trend[i].scan.min_abs.hi < rep.trend[i - 1].scan.min_abs.lo;

  rep.pisot = is_pisot(p, root).status;
  if (rep.pisot != PisotStatus::Pisot) {
    rep.reason = "root is not certified Pisot (" + std::string(to_string(rep.pisot)) + "); the certificate hypothesis is unmet";
    return rep;
  }
  const int top = sorted.back();
  try {
    rep.certificate = build_certificate(p, root, rep.trend.back().lower);
    rep.verification = verify_certificate(*rep.certificate, top, progress);
    if (rep.verification->ok) {
      rep.certificate->verified_degree = top;
      rep.verdict = DichotomyVerdict::CertifiedTiling;
      rep.reason = "certificate verified for all q of degree <= " + std::to_string(top);
      rep.notes.push_back("verification covers the scanned degrees only");
      return rep;
    }
    rep.reason = "certificate rejected: " + rep.verification->reason;
  } catch (const Error& e) {
    rep.reason = std::string("no certificate: ") + e.what();
  }
  if (shrinking) {
    rep.verdict = DichotomyVerdict::EvidenceOfClustering;
    rep.reason += "; scan minima shrink across bounds";
  }
  return rep;
}

}  // namespace silverline
