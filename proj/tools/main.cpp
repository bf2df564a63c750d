#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "run_config.hpp"
#include "silverline/dichotomy.hpp"
#include "silverline/error.hpp"
#include "silverline/factorization.hpp"
#include "silverline/json_io.hpp"
#include "silverline/nonneg.hpp"
#include "silverline/pisot.hpp"
#include "silverline/sigma_int.hpp"
#include "silverline/silver.hpp"
#include "silverline/tiling.hpp"
#include "suite.hpp"

using namespace silverline;
using cli::OutputFormat;
using cli::RunConfig;

namespace {

constexpr const char* kDecimalMode = "truncated toward zero";

/// Raised for bad flag values; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int report_error(std::string_view code, const std::string& message, int exit_code) {
  const Json j{{"error", {{"code", code}, {"message", message}}}};
  std::cerr << j.dump() << "\n";
  return exit_code;
}

SilverPolynomial parse_poly(const std::string& bits) {
  try {
    return SilverPolynomial::from_bits(bits);
  } catch (const Error& e) {
    throw UsageError(std::string("--poly: ") + e.what());
  }
}

OutputFormat parse_emit(const std::string& text, std::initializer_list<OutputFormat> allowed) {
  OutputFormat f;
  try {
    f = cli::parse_output_format(text);
  } catch (const Error& e) {
    throw UsageError(std::string("--emit: ") + e.what());
  }
  for (auto a : allowed)
    if (a == f) return f;
  throw UsageError("--emit " + text + " is not supported here");
}

Rational parse_width(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw UsageError(std::string("--width: ") + e.what());
  }
}

RunConfig make_config(const std::string& width, int digits, const std::string& emit, int tiles = 50,
                      int degree_bound = 10) {
  RunConfig cfg;
  cfg.precision_width = parse_width(width);
  cfg.digits = digits;
  cfg.output_format = cli::parse_output_format(emit);
  cfg.tile_count = tiles;
  cfg.degree_bounds["dichotomy"] = degree_bound;
  try {
    cfg.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

/// The silver number with its minimal polynomial as defining polynomial.
AlgebraicReal minimal_root(const SilverPolynomial& p, const Rational& width) {
  const AlgebraicReal r = silver_number(p, width);
  for (const auto& [f, mult] : factor(p.polynomial())) {
    if (count_real_roots(f, r.lo(), r.hi()) > 0) return AlgebraicReal(f, r.lo(), r.hi());
  }
  fail(ErrorCode::NotFound, "no factor vanishes at the silver number");
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string factor_string(const IntPolynomial& p) {
  std::vector<std::string> parts;
  for (const auto& [f, m] : factor(p))
    parts.push_back("(" + to_string(f) + ")" + (m > 1 ? "^" + std::to_string(m) : ""));
  return join(parts, "");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_polys(int n, const RunConfig& cfg) {
  struct Row {
    std::string bits, poly, factors, pisot, root;
    bool irreducible, primitive, distinguished;
  };
  std::vector<Row> rows;
  for (const auto& p : enumerate_silver_polynomials(n)) {
    const AlgebraicReal root = minimal_root(p, cfg.precision_width);
    Row r;
    r.bits = p.bit_string();
    r.poly = to_string(p.polynomial());
    r.irreducible = root.defining() == p.polynomial();
    r.factors = factor_string(p.polynomial());
    r.primitive = silver_primitivity_by_gcd(p).primitive;
    r.pisot = std::string(to_string(is_pisot(root.defining(), root).status));
    r.distinguished = p.is_distinguished();
    r.root = root.decimal(cfg.digits);
    rows.push_back(std::move(r));
  }
  switch (cfg.output_format) {
    case OutputFormat::Json: {
      Json arr = Json::array();
      for (const auto& r : rows)
        arr.push_back({{"bits", r.bits},
                       {"polynomial", r.poly},
                       {"irreducible", r.irreducible},
                       {"factors", r.factors},
                       {"primitive", r.primitive},
                       {"pisot", r.pisot},
                       {"distinguished", r.distinguished},
                       {"root", r.root}});
      print_json({{"degree", n}, {"decimal_mode", kDecimalMode}, {"polynomials", arr}});
      break;
    }
    case OutputFormat::Csv:
      std::cout << "bits,polynomial,irreducible,factors,primitive,pisot,distinguished,root\n";
      for (const auto& r : rows)
        std::cout << r.bits << "," << r.poly << "," << yes_no(r.irreducible) << "," << r.factors << ","
                  << yes_no(r.primitive) << "," << r.pisot << "," << yes_no(r.distinguished) << "," << r.root << "\n";
      break;
    case OutputFormat::Text:
      for (const auto& r : rows) {
        std::cout << r.bits << "  " << r.poly << "\n"
                  << "    irreducible=" << yes_no(r.irreducible) << " primitive=" << yes_no(r.primitive)
                  << " pisot=" << r.pisot << " distinguished=" << yes_no(r.distinguished) << "\n"
                  << "    factors " << r.factors << "\n"
                  << "    root " << r.root << " (truncated)\n";
      }
      break;
  }
  return 0;
}

int cmd_root(const SilverPolynomial& p, const RunConfig& cfg) {
  const AlgebraicReal root = minimal_root(p, cfg.precision_width);
  const PisotResult pis = is_pisot(root.defining(), root);
  const std::string dec = root.decimal(cfg.digits);
  if (cfg.output_format == OutputFormat::Json) {
    Json j{{"bits", p.bit_string()},
           {"polynomial", polynomial_to_json(p.polynomial())},
           {"root", algebraic_to_json(root)},
           {"decimal", dec},
           {"decimal_mode", kDecimalMode},
           {"pisot", to_string(pis.status)}};
    if (pis.status == PisotStatus::Pisot) j["max_other_modulus"] = rational_to_json(pis.max_other_modulus);
    print_json(j);
    return 0;
  }
  std::cout << "polynomial  " << to_string(p.polynomial()) << "\n"
            << "minimal     " << to_string(root.defining()) << "\n"
            << "lo          " << to_fraction_string(root.lo()) << "\n"
            << "hi          " << to_fraction_string(root.hi()) << "\n"
            << "decimal     " << dec << " (truncated)\n"
            << "pisot       " << to_string(pis.status) << "\n";
  if (pis.status == PisotStatus::Pisot)
    std::cout << "max |conj|  " << truncated_decimal(pis.max_other_modulus, cfg.digits) << "\n";
  return 0;
}

int cmd_normal_form(int n, const std::string& bits, const RunConfig& cfg) {
  const SilverBase base = SilverBase::distinguished(n);
  SigmaInt x;
  try {
    x = SigmaInt::parse(bits);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const NormalForm nf = to_normal_form(x, n);
  const FieldElement v = value_of(nf.rep(), base);
  const std::string dec = field_decimal(v, base.root, cfg.digits);
  if (cfg.output_format == OutputFormat::Json) {
    print_json({{"window", n},
                {"input", x.to_string()},
                {"normal_form", nf.to_string()},
                {"degree", nf.degree()},
                {"coords", field_element_to_json(v)},
                {"decimal", dec},
                {"decimal_mode", kDecimalMode}});
    return 0;
  }
  std::cout << "input        " << x.to_string() << "\n"
            << "normal form  " << nf.to_string() << "\n"
            << "degree       " << nf.degree() << "\n"
            << "coords       " << join(coord_strings(v), " ") << "\n"
            << "decimal      " << dec << " (truncated)\n";
  return 0;
}

int cmd_integers(int n, int count, const RunConfig& cfg) {
  const SilverBase base = SilverBase::distinguished(n);
  const auto ints = enumerate_integers(base, count);
  Json rows = Json::array();
  if (cfg.output_format == OutputFormat::Csv) std::cout << "index,bits,coords,decimal,delta\n";
  for (size_t i = 0; i < ints.size(); ++i) {
    const FieldElement v = value_of(ints[i].rep(), base);
    const Successor s = successor(ints[i], base);
    const std::string dec = field_decimal(v, base.root, cfg.digits);
    const std::string delta = field_decimal(s.delta, base.root, cfg.digits);
    if (cfg.output_format == OutputFormat::Csv) {
      std::cout << i << "," << ints[i].to_string() << "," << join(coord_strings(v), " ") << "," << dec << "," << delta
                << "\n";
    } else if (cfg.output_format == OutputFormat::Json) {
      rows.push_back({{"index", i},
                      {"bits", ints[i].to_string()},
                      {"coords", field_element_to_json(v)},
                      {"decimal", dec},
                      {"delta_coords", field_element_to_json(s.delta)},
                      {"delta", delta}});
    } else {
      std::cout << i << "  " << ints[i].to_string() << "  " << dec << "  +" << delta << "\n";
    }
  }
  if (cfg.output_format == OutputFormat::Json)
    print_json({{"window", n}, {"decimal_mode", kDecimalMode}, {"integers", rows}});
  return 0;
}

struct TileSetup {
  SilverBase base;
  SubstitutionRule rule;
  std::vector<FieldElement> lengths;
  std::string rule_text;
};

TileSetup tile_setup(const SilverPolynomial& p, const std::string& rule_text) {
  SilverBase base = SilverBase::make(p);
  if (rule_text == "hat") {
    require(p.is_distinguished(), ErrorCode::Precondition, "the hat rule needs a distinguished polynomial");
    auto lengths = hat_lengths(base);
    return {base, hat_rule(p.degree()), std::move(lengths), rule_text};
  }
  auto lengths = dw_lengths(base);
  if (rule_text.empty()) return {base, dw_rule(p), std::move(lengths), ""};
  std::vector<Indicator> strings;
  try {
    strings = parse_rule_strings(rule_text);
  } catch (const Error& e) {
    throw UsageError(std::string("--rule: ") + e.what());
  }
  return {base, make_rule(companion(p, CompanionForm::DW), std::move(strings)), std::move(lengths), rule_text};
}

std::string rule_string(const SubstitutionRule& rule) {
  std::vector<std::string> parts;
  for (const auto& s : rule.strings) {
    std::string t;
    for (int j : s) t += std::to_string(j);
    parts.push_back(t);
  }
  return join(parts, ",");
}

int cmd_tile(const SilverPolynomial& p, const std::string& rule_text, int start, const RunConfig& cfg) {
  const TileSetup t = tile_setup(p, rule_text);
  if (start < 1 || start > t.rule.size()) throw UsageError("--start must lie in 1.." + std::to_string(t.rule.size()));
  const auto conv = detect_convergence(t.rule, start);
  const Indicator prefix = limit_prefix(t.rule, start, cfg.tile_count);
  const auto ends = endpoints(prefix, t.lengths, t.base.root);
  std::vector<std::string> ends_dec;
  for (const auto& e : ends) ends_dec.push_back(field_decimal(e, t.base.root, cfg.digits));

  if (cfg.output_format == OutputFormat::Csv) {
    std::cout << "index,prototile,left,right\n";
    for (size_t i = 0; i < prefix.size(); ++i)
      std::cout << i << "," << prefix[i] << "," << ends_dec[i] << "," << ends_dec[i + 1] << "\n";
    return 0;
  }
  Json protos = Json::array();
  for (size_t j = 0; j < t.lengths.size(); ++j)
    protos.push_back({{"index", j + 1},
                      {"length_coords", field_element_to_json(t.lengths[j])},
                      {"length_decimal", field_decimal(t.lengths[j], t.base.root, cfg.digits)}});
  Json strings = Json::array();
  for (const auto& s : t.rule.strings) strings.push_back(s);
  print_json({{"poly", p.bit_string()},
              {"polynomial", polynomial_to_json(p.polynomial())},
              {"root", algebraic_to_json(t.base.root)},
              {"rule", {{"matrix", matrix_to_json(t.rule.u.matrix())}, {"strings", strings}}},
              {"start", start},
              {"convergence", {{"mode", to_string(conv.mode)}, {"k", conv.k}}},
              {"tiles", cfg.tile_count},
              {"digits", cfg.digits},
              {"decimal_mode", kDecimalMode},
              {"prototiles", protos},
              {"prefix", prefix},
              {"endpoints", ends_dec}});
  return 0;
}

int cmd_converge(const SilverPolynomial& p, const std::string& rule_text, int start, int budget, const RunConfig& cfg) {
  const TileSetup t = tile_setup(p, rule_text);
  if (start < 1 || start > t.rule.size()) throw UsageError("--start must lie in 1.." + std::to_string(t.rule.size()));
  const auto conv = detect_convergence(t.rule, start, budget);
  Indicator head(conv.prefix.begin(), conv.prefix.begin() + std::min<long>(40, static_cast<long>(conv.prefix.size())));
  if (cfg.output_format == OutputFormat::Json) {
    print_json({{"poly", p.bit_string()},
                {"rule", rule_string(t.rule)},
                {"start", start},
                {"mode", to_string(conv.mode)},
                {"k", conv.k},
                {"iterate_length", conv.prefix.size()},
                {"iterate_head", head}});
    return 0;
  }
  std::string h;
  for (int j : head) h += std::to_string(j);
  std::cout << "rule   " << rule_string(t.rule) << "\n"
            << "mode   " << to_string(conv.mode) << "\n"
            << "k      " << conv.k << "\n"
            << "head   " << h << (conv.prefix.size() > head.size() ? "..." : "") << "\n";
  return conv.mode == ConvergenceMode::NoneWithinBudget ? 1 : 0;
}

Json vector_json(const std::vector<FieldElement>& v, const AlgebraicReal& root, int digits) {
  Json out = Json::array();
  for (const auto& x : v)
    out.push_back({{"coords", field_element_to_json(x)}, {"decimal", field_decimal(x, root, digits)}});
  return out;
}

int cmd_matrix(const std::string& action, const SilverPolynomial& p, const std::string& form_text,
               const std::string& to_text, const RunConfig& cfg) {
  CompanionForm form;
  CompanionForm to;
  try {
    form = parse_companion_form(form_text);
    to = parse_companion_form(to_text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const NonNegIntMatrix m = companion(p, form);
  Json j{{"poly", p.bit_string()}, {"form", to_string(form)}, {"matrix", matrix_to_json(m.matrix())}};
  std::ostringstream text;
  text << "matrix (" << to_string(form) << ")\n" << to_string(m.matrix()) << "\n";

  if (action == "primitive") {
    const auto gcd = silver_primitivity_by_gcd(p);
    const auto exponent = primitivity_exponent(m);
    j["irreducible"] = is_irreducible_matrix(m);
    j["primitive"] = is_primitive(m);
    j["exponent"] = exponent ? Json(*exponent) : Json(nullptr);
    j["index_gcd"] = gcd.gcd;
    text << "irreducible  " << yes_no(is_irreducible_matrix(m)) << "\n"
         << "primitive    " << yes_no(is_primitive(m)) << "\n"
         << "exponent     " << (exponent ? std::to_string(*exponent) : "-") << "\n"
         << "index gcd    " << gcd.gcd << "\n";
    if (!gcd.primitive) {
      const auto d = decompose_nonprimitive(p);
      j["decomposition"] = {{"q", d.q.bit_string()}, {"d", d.d}};
      text << "P(X) = Q(X^" << d.d << ") with Q " << to_string(d.q.polynomial()) << "\n";
    }
  } else if (action == "perron") {
    const PerronData pd = perron(m, cfg.precision_width);
    j["rho"] = {{"lo", rational_to_json(pd.rho.lo)}, {"hi", rational_to_json(pd.rho.hi)}};
    j["rho_decimal"] = pd.root.decimal(cfg.digits);
    j["collatz_wielandt"] = {{"lower", rational_to_json(pd.cw_lower)},
                             {"upper", rational_to_json(pd.cw_upper)},
                             {"iterations", pd.cw_iterations}};
    j["minimal_polynomial"] = polynomial_to_json(pd.minimal_polynomial);
    j["right"] = vector_json(pd.right, pd.root, cfg.digits);
    j["left"] = vector_json(pd.left, pd.root, cfg.digits);
    j["decimal_mode"] = kDecimalMode;
    text << "rho          " << pd.root.decimal(cfg.digits) << " (truncated)\n"
         << "minimal      " << to_string(pd.minimal_polynomial) << "\n"
         << "CW bounds    [" << truncated_decimal(pd.cw_lower, cfg.digits) << ", "
         << truncated_decimal(pd.cw_upper, cfg.digits) << "] after " << pd.cw_iterations << " steps\n";
    for (const auto& [name, vec] : {std::pair{"right", &pd.right}, std::pair{"left", &pd.left}}) {
      text << name << std::string(13 - std::string(name).size(), ' ');
      std::vector<std::string> parts;
      for (const auto& x : *vec) parts.push_back(field_decimal(x, pd.root, cfg.digits));
      text << join(parts, "  ") << "\n";
    }
  } else {
    const NonNegIntMatrix b = companion(p, to);
    const IntMatrix w = intertwiner(m, b);
    j["to_form"] = to_string(to);
    j["target"] = matrix_to_json(b.matrix());
    j["intertwiner"] = matrix_to_json(w);
    j["determinant"] = determinant(w).get_str();
    text << "target (" << to_string(to) << ")\n"
         << to_string(b.matrix()) << "\n"
         << "M with B M = M A\n"
         << to_string(w) << "\n"
         << "det M  " << determinant(w).get_str() << "\n";
  }
  if (cfg.output_format == OutputFormat::Json)
    print_json(j);
  else
    std::cout << text.str();
  return 0;
}

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw UsageError(std::string(flag) + " is empty");
  return out;
}

Json report_json(const ImpossibilityReport& r) {
  Json ids = Json::array();
  for (const auto& id : r.identities) ids.push_back({{"identity", id.text}, {"holds", id.holds}});
  Json offsets = Json::array();
  for (const auto& o : r.offsets) offsets.push_back(rational_to_json(o));
  Json j{{"case", to_string(r.which)},
         {"polynomial", polynomial_to_json(r.poly)},
         {"difference", r.difference},
         {"relation", r.relation},
         {"offsets", offsets},
         {"identities", ids},
         {"minimal_degree", r.minimal_degree},
         {"relation_degree", r.relation_degree},
         {"contradiction", r.contradiction},
         {"reason", r.reason}};
  if (r.solution) {
    Json s = Json::array();
    for (const auto& x : *r.solution) s.push_back(rational_to_json(x));
    j["solution"] = s;
  }
  return j;
}

Json mu_json(const MuEstimate& m) {
  return {{"degree_bound", m.scan.degree_bound},
          {"min_lo", rational_to_json(m.scan.min_abs.lo)},
          {"min_hi", rational_to_json(m.scan.min_abs.hi)},
          {"min_decimal", truncated_decimal(m.scan.min_abs.lo, 12)},
          {"witness", m.scan.witness},
          {"scanned", m.scan.scanned},
          {"zero_values", m.scan.zero_values},
          {"range_limited", m.range_limited}};
}

Json verification_json(const VerificationResult& v) {
  Json j{{"ok", v.ok},
         {"degree_bound", v.degree_bound},
         {"checked", v.checked},
         {"zeros", v.zeros},
         {"sampled_identities", v.sampled}};
  if (v.witness) {
    j["witness"] = *v.witness;
    j["reason"] = v.reason;
  }
  return j;
}

int cmd_dichotomy(const std::string& poly_bits, const std::string& impossibility, const std::string& cert_file,
                  bool report, const std::string& bounds_text, bool progress, const RunConfig& cfg) {
  if (!impossibility.empty()) {
    ImpossibilityCase which;
    try {
      which = parse_impossibility_case(impossibility);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    const auto r = rational_L_impossibility(which);
    if (cfg.output_format == OutputFormat::Json) {
      print_json(report_json(r));
    } else {
      std::cout << "case          " << to_string(r.which) << "\n"
                << "polynomial    " << to_string(r.poly) << "\n"
                << "difference    " << r.difference << " = L(a + b/x + c/x^2)\n"
                << "relation      (" << r.relation[0] << ")x^2 + (" << r.relation[1] << ")x + (" << r.relation[2]
                << ") = 0\n";
      for (const auto& id : r.identities) std::cout << "identity      " << id.text << "  " << (id.holds ? "ok" : "FAILS") << "\n";
      std::cout << "contradiction " << yes_no(r.contradiction) << "\n"
                << "reason        " << r.reason << "\n";
    }
    return r.contradiction || which == ImpossibilityCase::Golden ? 0 : 1;
  }
  const int bound = cfg.degree_bound("dichotomy");
  ProgressCallback cb;
  if (progress) {
    cb = [last = -1](long long done, long long total) mutable {
      const int pct = static_cast<int>(100 * done / total);
      if (pct / 10 > last) {
        last = pct / 10;
        std::cerr << "verified " << done << "/" << total << "\n";
      }
    };
  }

  if (!cert_file.empty()) {
    std::ifstream in(cert_file);
    if (!in) throw UsageError("cannot read " + cert_file);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw UsageError(std::string("certificate is not JSON: ") + e.what());
    }
    DichotomyCertificate cert = certificate_from_json(j);
    const auto v = verify_certificate(cert, bound, cb);
    cert.verified_degree = v.ok ? bound : -1;
    Json out = certificate_to_json(cert);
    out["verification"] = verification_json(v);
    print_json(out);
    return v.ok ? 0 : 1;
  }

  if (poly_bits.empty()) throw UsageError("--poly is required unless --impossibility or --certificate is given");
  const SilverPolynomial p = parse_poly(poly_bits);
  const AlgebraicReal root = minimal_root(p, dyadic(100));

  if (report) {
    std::vector<int> bounds = bounds_text.empty() ? std::vector<int>{bound} : parse_int_list(bounds_text, "--bounds");
    for (int b : bounds)
      if (b < 1 || b > 14) throw UsageError("--bounds entries must lie in 1..14");
    const auto r = dichotomy_report(root.defining(), root, bounds, cb);
    Json trend = Json::array();
    for (const auto& m : r.trend) trend.push_back(mu_json(m));
    Json j{{"poly", p.bit_string()},
           {"minimal_polynomial", polynomial_to_json(r.poly)},
           {"pisot", to_string(r.pisot)},
           {"distinguished", r.distinguished},
           {"trend", trend},
           {"verdict", to_string(r.verdict)},
           {"reason", r.reason},
           {"notes", r.notes}};
    if (r.certificate) j["certificate"] = certificate_to_json(*r.certificate);
    if (r.verification) j["verification"] = verification_json(*r.verification);
    if (cfg.output_format == OutputFormat::Json) {
      print_json(j);
    } else {
      std::cout << "polynomial  " << to_string(r.poly) << "\n"
                << "pisot       " << to_string(r.pisot) << "\n";
      for (const auto& m : r.trend)
        std::cout << "bound " << m.scan.degree_bound << "  min |q(rho)| in [" << truncated_decimal(m.scan.min_abs.lo, 12)
                  << ", " << truncated_decimal(m.scan.min_abs.hi, 12) << "]\n";
      std::cout << "verdict     " << to_string(r.verdict) << "\n"
                << "reason      " << r.reason << "\n";
      for (const auto& n : r.notes) std::cout << "note        " << n << "\n";
    }
    return 0;
  }

  const auto mu = estimate_mu(root.defining(), root, bound);
  DichotomyCertificate cert = build_certificate(root.defining(), root, mu.lower);
  const auto v = verify_certificate(cert, bound, cb);
  if (v.ok) cert.verified_degree = bound;
  Json j = certificate_to_json(cert);
  j["mu_scan"] = mu_json(mu);
  j["verification"] = verification_json(v);
  if (cfg.output_format == OutputFormat::Json) {
    print_json(j);
  } else {
    std::vector<std::string> v0;
    for (const auto& x : cert.v0) v0.push_back(x.get_str());
    std::cout << "polynomial       " << to_string(cert.poly) << "\n"
              << "v0               (" << join(v0, ", ") << ") / " << cert.scale.get_str() << "\n"
              << "L                " << field_decimal(cert.L, cert.root, 12) << " = [" << join(coord_strings(cert.L), ", ")
              << "]\n"
              << "delta            " << truncated_decimal(cert.delta, 12) << "\n"
              << "gamma            " << truncated_decimal(cert.gamma, 12) << "\n"
              << "omega            " << truncated_decimal(cert.omega, 12) << "\n"
              << "mu_lower         " << truncated_decimal(cert.mu_lower, 12) << " (range-limited)\n"
              << "verified_degree  " << cert.verified_degree << "\n";
    if (!v.ok) std::cout << "counterexample   " << v.reason << "\n";
  }
  return v.ok ? 0 : 1;
}

int cmd_verify_all(const std::string& only, const RunConfig& cfg) {
  std::vector<int> ids;
  if (only.empty()) {
    for (int i = 1; i <= suite::kCriterionCount; ++i) ids.push_back(i);
  } else {
    ids = parse_int_list(only, "--only");
    for (int i : ids)
      if (i < 1 || i > suite::kCriterionCount) throw UsageError("--only entries must lie in 1..12");
  }
  bool all = true;
  Json rows = Json::array();
  for (int id : ids) {
    const auto r = suite::run_criterion(id, [](const std::string& msg) { std::cerr << "  " << msg << "\n"; });
    all = all && r.pass;
    if (cfg.output_format == OutputFormat::Json)
      rows.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
    else
      std::cout << suite::format_result(r) << std::endl;
  }
  if (cfg.output_format == OutputFormat::Json) print_json({{"criteria", rows}, {"all_pass", all}});
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"silverline: silver numbers, rho-integers, inflation tilings and dichotomy certificates"};
  app.set_config("--config", "", "key=value config file; flags on the command line win");
  app.require_subcommand(1);

  std::string emit = "text";
  std::string width = "1/1267650600228229401496703205376";
  int digits = 12;
  int n = 0;
  std::string poly;
  std::string rule;
  int start = 1;
  int tiles = 50;

  auto* polys = app.add_subcommand("polys", "list silver polynomials of degree N with classification");
  polys->add_option("N", n, "degree")->required()->check(CLI::Range(2, 12));
  polys->add_option("--emit", emit, "text, csv or json");
  polys->add_option("--digits", digits, "decimal digits (truncated)");

  auto* root = app.add_subcommand("root", "certified silver number");
  root->add_option("--poly", poly, "bits b_1..b_N")->required();
  root->add_option("--digits", digits, "decimal digits (truncated)");
  root->add_option("--width", width, "isolating interval width");
  root->add_option("--emit", emit, "text or json");

  std::string bits;
  auto* normal = app.add_subcommand("normal-form", "normal form for the distinguished base of degree N");
  normal->add_option("N", n, "window")->required()->check(CLI::Range(2, 12));
  normal->add_option("BITS", bits, "coefficients, highest power first")->required();
  normal->add_option("--digits", digits, "decimal digits (truncated)");
  normal->add_option("--emit", emit, "text or json");

  int count = 20;
  auto* integers = app.add_subcommand("integers", "first rho-integers of the distinguished base of degree N");
  integers->add_option("N", n, "degree")->required()->check(CLI::Range(2, 12));
  integers->add_option("--count", count, "how many")->check(CLI::Range(1, 1000000));
  integers->add_option("--digits", digits, "decimal digits (truncated)");
  integers->add_option("--emit", emit, "csv, json or text");

  auto* tile = app.add_subcommand("tile", "inflation-substitution tiling prefix");
  tile->add_option("--poly", poly, "bits b_1..b_N")->required();
  tile->add_option("--rule", rule, "comma-separated strings, e.g. 13,1,2, or 'hat'");
  tile->add_option("--start", start, "start prototile");
  tile->add_option("--tiles", tiles, "number of tiles")->check(CLI::Range(1, 10000000));
  tile->add_option("--emit", emit, "json or csv");
  tile->add_option("--digits", digits, "decimal digits (truncated)");

  int budget = 0;
  auto* converge = app.add_subcommand("converge", "convergence mode of ins^k((start))");
  converge->add_option("--poly", poly, "bits b_1..b_N")->required();
  converge->add_option("--rule", rule, "comma-separated strings or 'hat'");
  converge->add_option("--start", start, "start prototile");
  converge->add_option("--budget", budget, "largest k tried; 0 selects N^2+1");
  converge->add_option("--emit", emit, "text or json");

  std::string action;
  std::string form = "dw";
  std::string to_form = "dwt";
  auto* matrix = app.add_subcommand("matrix", "partition matrix analysis");
  matrix->add_option("ACTION", action, "primitive, perron or intertwine")
      ->required()
      ->check(CLI::IsMember({"primitive", "perron", "intertwine"}));
  matrix->add_option("--poly", poly, "bits b_1..b_N")->required();
  matrix->add_option("--form", form, "dw, dwt, p or pt");
  matrix->add_option("--to", to_form, "target form for intertwine");
  matrix->add_option("--width", width, "Perron interval width");
  matrix->add_option("--digits", digits, "decimal digits (truncated)");
  matrix->add_option("--emit", emit, "text or json");

  int degree_bound = 10;
  std::string impossibility;
  std::string cert_file;
  std::string bounds;
  bool report = false;
  bool progress = false;
  auto* dich = app.add_subcommand("dichotomy", "build and verify a tiling certificate");
  dich->add_option("--poly", poly, "bits b_1..b_N");
  dich->add_option("--degree-bound", degree_bound, "verify all q of degree <= bound")->check(CLI::Range(1, 14));
  dich->add_option("--emit", emit, "json or text");
  dich->add_option("--impossibility", impossibility, "supergolden, plastic or golden");
  dich->add_option("--certificate", cert_file, "re-verify an exported certificate");
  dich->add_flag("--report", report, "scan trend and verdict instead of the certificate");
  dich->add_option("--bounds", bounds, "comma-separated scan bounds for --report");
  dich->add_flag("--progress", progress, "progress on stderr");

  std::string only;
  auto* verify = app.add_subcommand("verify-all", "run the acceptance criteria");
  verify->add_option("--only", only, "comma-separated criterion ids");
  verify->add_option("--emit", emit, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("usage", e.what(), 2);
  }

  try {
    if (*polys) {
      parse_emit(emit, {OutputFormat::Text, OutputFormat::Csv, OutputFormat::Json});
      return cmd_polys(n, make_config(width, digits, emit));
    }
    if (*root) {
      parse_emit(emit, {OutputFormat::Text, OutputFormat::Json});
      return cmd_root(parse_poly(poly), make_config(width, digits, emit));
    }
    if (*normal) {
      parse_emit(emit, {OutputFormat::Text, OutputFormat::Json});
      return cmd_normal_form(n, bits, make_config(width, digits, emit));
    }
    if (*integers) {
      if (integers->count("--emit") == 0) emit = "csv";
      parse_emit(emit, {OutputFormat::Csv, OutputFormat::Json, OutputFormat::Text});
      return cmd_integers(n, count, make_config(width, digits, emit));
    }
    if (*tile) {
      if (tile->count("--emit") == 0) emit = "json";
      parse_emit(emit, {OutputFormat::Json, OutputFormat::Csv});
      return cmd_tile(parse_poly(poly), rule, start, make_config(width, digits, emit, tiles));
    }
    if (*converge) {
      parse_emit(emit, {OutputFormat::Text, OutputFormat::Json});
      return cmd_converge(parse_poly(poly), rule, start, budget, make_config(width, digits, emit));
    }
    if (*matrix) {
      parse_emit(emit, {OutputFormat::Text, OutputFormat::Json});
      return cmd_matrix(action, parse_poly(poly), form, to_form, make_config(width, digits, emit));
    }
    if (*dich) {
      if (dich->count("--emit") == 0) emit = "json";
      parse_emit(emit, {OutputFormat::Json, OutputFormat::Text});
      return cmd_dichotomy(poly, impossibility, cert_file, report, bounds, progress,
                           make_config(width, digits, emit, tiles, degree_bound));
    }
    if (*verify) {
      parse_emit(emit, {OutputFormat::Text, OutputFormat::Json});
      return cmd_verify_all(only, make_config(width, digits, emit));
    }
  } catch (const UsageError& e) {
    return report_error("usage", e.what(), 2);
  } catch (const Error& e) {
    return report_error(to_string(e.code()), e.what(), 1);
  } catch (const std::exception& e) {
    return report_error("internal", e.what(), 1);
  }
  return 2;
}
