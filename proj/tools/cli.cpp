#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>

#include "polybound/polybound.hpp"

namespace polybound::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string subject;
  std::string path;
  bool json = false;
  int prime_bits = 31;
  std::optional<std::size_t> degree;
  bool probe = false;
  bool verify = false;
  std::optional<std::string> format;
};

// Decimal rendering of 2^bits that never overflows: "55.9017", "1.6e+13",
// "3.14159e+1234".
std::string approx_value(double bits) {
  if (bits < 1000.0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", std::exp2(bits));
    return buf;
  }
  const double decimal = bits * std::log10(2.0);
  const double exponent = std::floor(decimal);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6ge+%.0f", std::pow(10.0, decimal - exponent), exponent);
  return buf;
}

json meta_json(const BoundMeta& m) {
  json j = json::object();
  if (m.argmax_j) j["argmax_j"] = *m.argmax_j;
  if (m.scanned) j["scanned"] = *m.scanned;
  if (m.window) j["window"] = *m.window;
  if (m.branch) j["branch"] = *m.branch;
  if (m.beta) j["beta"] = *m.beta;
  if (m.degree) j["degree"] = *m.degree;
  if (m.winner) j["winner"] = method_name(*m.winner);
  if (m.fallback_n) j["fallback_n"] = *m.fallback_n;
  return j;
}

json bound_json(const CoeffBound& b) {
  return {{"method", method_name(b.method)},
          {"bits", b.bits},
          {"value_decimal_approx", approx_value(b.bits)},
          {"meta", meta_json(b.meta)}};
}

json plan_json(const CrtPlan& plan, int prime_bits) {
  return {{"prime_bits", prime_bits}, {"count", plan.primes.size()}, {"primes", plan.primes}};
}

// int64-sized coefficients as JSON integers, larger ones as decimal strings.
json coeff_json(const Integer& c) {
  if (c.fits_slong_p()) return json(c.get_si());
  return json(c.get_str());
}

void print_bound(std::ostream& out, const CoeffBound& b) {
  char line[160];
  std::snprintf(line, sizeof line, "%-18s bits %-12.6f value %s", std::string(method_name(b.method)).c_str(),
                b.bits, approx_value(b.bits).c_str());
  out << line;
  if (b.meta.argmax_j) out << "  j* " << *b.meta.argmax_j;
  if (b.meta.window) out << "  window " << *b.meta.window;
  if (b.meta.scanned) out << "  scanned " << *b.meta.scanned;
  if (b.meta.branch) out << "  branch " << *b.meta.branch;
  out << '\n';
}

IntegerMatrix load(const Options& o) {
  std::optional<MatrixFormat> fmt;
  if (o.format) fmt = parse_format_name(*o.format);
  return load_matrix_file(o.path, fmt);
}

CrtPlan plan_for(const CoeffBound& b, std::size_t n, int prime_bits) {
  CoeffBound padded = b;
  padded.bits += planning_margin(n);
  CrtPlan plan = plan_primes(padded, prime_bits);
  plan.bound = b;
  return plan;
}

int bound_charpoly(const Options& o, const IntegerMatrix& a, std::ostream& out) {
  const std::size_t n = a.size();
  const auto& b = a.max_abs();
  const auto had = hadamard_bound(n, b);
  const auto l1 = lemma1_bound(n, b);
  const auto l2 = lemma2_bound(n, b);
  const auto plan = plan_for(l2, n, o.prime_bits);
  if (o.json) {
    out << json{{"subject", "charpoly"},
                {"n", n},
                {"B", b.get_str()},
                {"bounds", {bound_json(had), bound_json(l1), bound_json(l2)}},
                {"plan", plan_json(plan, o.prime_bits)}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "n " << n << "  B " << b << '\n';
  print_bound(out, had);
  print_bound(out, l1);
  print_bound(out, l2);
  out << "plan               " << plan.primes.size() << " prime(s) below 2^" << o.prime_bits << '\n';
  return kOk;
}

int bound_minpoly(const Options& o, const IntegerMatrix& a, std::ostream& out, std::ostream& err) {
  const std::size_t n = a.size();
  std::size_t d = n;
  std::string source = "n";
  if (o.degree) {
    if (*o.degree < 1 || *o.degree > n) {
      err << "error: --degree must lie in [1, " << n << "]\n";
      return kInvalidFlags;
    }
    d = *o.degree;
    source = "given";
  } else if (o.probe) {
    PrimeStream stream(o.prime_bits);
    d = static_cast<std::size_t>(minpoly_mod(reduce_mod(a, stream.next())).degree());
    source = "probe";
  }
  const auto gersh = gershgorin_bound(a);
  const auto cass = cassini_bound(a);
  const auto combined = spectral_radius_bound(a);
  const auto eig = lemma3_bound(combined.beta, d);
  const auto mig = mignotte_bound(lemma2_bound(n, a.max_abs()), d, n);
  const auto best = best_minpoly_bound(a, d);
  const auto plan = plan_for(best, n, o.prime_bits);
  if (o.json) {
    auto spectral = [](const char* kind, const SpectralBound& s) {
      return json{{"kind", kind}, {"method", method_name(s.method)}, {"beta", s.beta}};
    };
    out << json{{"subject", "minpoly"},
                {"n", n},
                {"B", a.max_abs().get_str()},
                {"degree", d},
                {"degree_source", source},
                {"spectral",
                 {spectral("gershgorin", gersh), spectral("cassini", cass),
                  spectral("combined", combined)}},
                {"bounds", {bound_json(eig), bound_json(mig)}},
                {"best", method_name(best.method)},
                {"plan", plan_json(plan, o.prime_bits)}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "n " << n << "  B " << a.max_abs() << "  degree " << d << " (" << source << ")\n";
  out << "gershgorin         beta " << gersh.beta << " (" << method_name(gersh.method) << ")\n";
  out << "cassini            beta " << cass.beta << " (" << method_name(cass.method) << ")\n";
  out << "combined           beta " << combined.beta << " (" << method_name(combined.method) << ")\n";
  print_bound(out, eig);
  print_bound(out, mig);
  out << "best               " << method_name(best.method) << '\n';
  out << "plan               " << plan.primes.size() << " prime(s) below 2^" << o.prime_bits << '\n';
  return kOk;
}

int compute(const Options& o, const IntegerMatrix& a, std::ostream& out, std::ostream& err) {
  ReconstructOptions ropts;
  ropts.prime_bits = o.prime_bits;
  ropts.threads = threads_from_environment();
  const bool charpoly = o.subject == "charpoly";
  const Reconstruction r = charpoly ? reconstruct_charpoly(a, ropts) : reconstruct_minpoly(a, ropts);

  std::optional<bool> verified;
  if (o.verify) {
    const std::size_t guard = charpoly ? oracle::kCharpolyMaxN : oracle::kMinpolyMaxN;
    if (a.size() <= guard) {
      verified = r.polynomial == (charpoly ? oracle::charpoly(a) : oracle::minpoly(a));
      err << "verify: " << (*verified ? "match" : "MISMATCH") << '\n';
    } else {
      err << "verify: skipped, n = " << a.size() << " exceeds oracle limit " << guard << '\n';
    }
  }

  if (o.json) {
    json coeffs = json::array();
    for (const auto& c : r.polynomial.coeffs()) coeffs.push_back(coeff_json(c));
    out << json{{"subject", o.subject},
                {"degree", r.polynomial.degree()},
                {"coeffs", coeffs},
                {"polynomial", r.polynomial.to_string()},
                {"bound", bound_json(r.plan.bound)},
                {"primes", r.plan.primes},
                {"discarded_primes", r.discarded},
                {"attempts", r.attempts},
                {"verified", verified ? json(*verified) : json(nullptr)}}
               .dump()
        << '\n';
  } else {
    out << r.polynomial.to_string() << '\n';
  }
  return verified == false ? kVerificationFailed : kOk;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("subject", o.subject, "charpoly or minpoly")
      ->required()
      ->check(CLI::IsMember({"charpoly", "minpoly"}));
  cmd->add_option("matrix", o.path, "matrix file (dense text or SMS)")->required();
  cmd->add_flag("--json", o.json, "machine-readable output");
  cmd->add_option("--prime-bits", o.prime_bits, "primes are drawn below 2^bits")
      ->check(CLI::Range(2, 62));
  cmd->add_option("--format", o.format, "input format; detected from the header if omitted")
      ->check(CLI::IsMember({"dense", "sms"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coefficient bounds and exact characteristic/minimal polynomials of integer matrices",
               "polybound"};
  app.require_subcommand(1);
  Options o;

  auto* bound = app.add_subcommand("bound", "print coefficient bounds and the prime budget");
  add_common(bound, o);
  auto* degree = bound->add_option("--degree", o.degree, "minimal polynomial degree")
                     ->check(CLI::PositiveNumber);
  bound->add_flag("--probe", o.probe, "learn the degree from one modular image")->excludes(degree);

  auto* comp = app.add_subcommand("compute", "compute the polynomial by Chinese remaindering");
  add_common(comp, o);
  comp->add_flag("--verify", o.verify, "cross-check against the exact oracle");

  std::vector<std::string> storage{"polybound"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidFlags;
  }

  IntegerMatrix a(1);
  try {
    a = load(o);
  } catch (const MatrixParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (bound->parsed()) {
      return o.subject == "charpoly" ? bound_charpoly(o, a, out) : bound_minpoly(o, a, out, err);
    }
    return compute(o, a, out, err);
  } catch (const PrimeExhaustedError& e) {
    err << "error: " << e.what() << "; increase --prime-bits\n";
    return kInvalidFlags;
  } catch (const ReconstructionError& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace polybound::cli
