#include "polybound/crt.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

#include "polybound/charpoly_bounds.hpp"
#include "polybound/minpoly_bounds.hpp"

namespace polybound {
namespace {

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Applies job to every prime; results keep the order of `primes` whatever
// the completion order.
template <class Job>
auto per_prime(std::span<const std::uint64_t> primes, unsigned threads, Job job) {
  using Result = decltype(job(primes[0]));
  std::vector<Result> out(primes.size());
  const unsigned workers =
      std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(primes.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < primes.size(); ++i) out[i] = job(primes[i]);
    return out;
  }
  std::vector<std::exception_ptr> errors(primes.size());
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < primes.size(); i = next++) {
          try {
            out[i] = job(primes[i]);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

CoeffBound with_margin(CoeffBound b, std::size_t n) {
  b.bits += planning_margin(n);
  return b;
}

Integer product_of(const std::vector<ModPolynomial>& images) {
  Integer prod = 1;
  for (const auto& img : images) prod *= static_cast<unsigned long>(img.p);
  return prod;
}

}  // namespace

bool covers(const Integer& product, double bits) {
  if (sgn(product) <= 0) return false;
  return log2_abs(product) > bits + 1.0;
}

CrtPlan plan_primes(const CoeffBound& bound, PrimeStream& stream) {
  if (!(bound.bits >= 0.0)) throw std::invalid_argument("plan_primes: negative bound");
  CrtPlan plan;
  plan.bound = bound;
  while (!covers(plan.product, bound.bits)) {
    const std::uint64_t p = stream.next();
    plan.primes.push_back(p);
    plan.product *= static_cast<unsigned long>(p);
  }
  return plan;
}

CrtPlan plan_primes(const CoeffBound& bound, int bitsize) {
  PrimeStream stream(bitsize);
  return plan_primes(bound, stream);
}

Integer crt_combine(std::span<const ResidueOf> residues) {
  Integer x = 0;
  Integer modulus = 1;
  Integer g, inv, m;
  for (const auto& [value, p] : residues) {
    m = static_cast<unsigned long>(p);
    mpz_gcd(g.get_mpz_t(), modulus.get_mpz_t(), m.get_mpz_t());
    if (g != 1) {
      throw NonCoprimeModuliError("crt_combine: modulus " + std::to_string(p) +
                                  " shares a factor with earlier moduli");
    }
    // x += M * ((v - x) * M^{-1} mod p)
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), m.get_mpz_t());
    Integer t = Integer(static_cast<unsigned long>(value)) - x;
    t = t * inv;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
    x += modulus * t;
    modulus *= m;
  }
  // x in [0, M); move to (-M/2, M/2].
  if (2 * x > modulus) x -= modulus;
  return x;
}

IntPolynomial crt_combine(std::span<const ModPolynomial> images) {
  if (images.empty()) return IntPolynomial();
  std::size_t len = 0;
  for (const auto& img : images) len = std::max(len, img.coeffs.size());
  std::vector<Integer> coeffs(len);
  std::vector<ResidueOf> residues(images.size());
  for (std::size_t k = 0; k < len; ++k) {
    for (std::size_t i = 0; i < images.size(); ++i) {
      const auto& c = images[i].coeffs;
      residues[i] = {k < c.size() ? c[k] : 0, images[i].p};
    }
    coeffs[k] = crt_combine(residues);
  }
  return IntPolynomial(std::move(coeffs));
}

double planning_margin(std::size_t n) { return 1e-9 * static_cast<double>(std::max<std::size_t>(n, 1)); }

unsigned threads_from_environment() {
  const char* env = std::getenv("POLYBOUND_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  try {
    return static_cast<unsigned>(std::stoul(env));
  } catch (const std::exception&) {
    return 0;
  }
}

Reconstruction reconstruct_charpoly(const IntegerMatrix& a, const ReconstructOptions& opts) {
  const CoeffBound bound = lemma2_bound(a.size(), a.max_abs());
  Reconstruction out;
  out.plan = plan_primes(with_margin(bound, a.size()), opts.prime_bits);
  out.plan.bound = bound;
  const auto images = per_prime(out.plan.primes, opts.threads,
                                [&](std::uint64_t p) { return charpoly_mod(reduce_mod(a, p)); });
  out.polynomial = crt_combine(images);
  return out;
}

Reconstruction reconstruct_minpoly(const IntegerMatrix& a, const ReconstructOptions& opts) {
  const std::size_t n = a.size();
  PrimeStream stream(opts.prime_bits);
  auto image_at = [&](std::uint64_t p) { return minpoly_mod(reduce_mod(a, p), opts.seed); };

  Reconstruction out;
  std::vector<ModPolynomial> good{image_at(stream.next())};
  long degree = good.front().degree();

  // Replaces the current images when a larger degree shows up.
  auto accept = [&](ModPolynomial img) {
    if (img.degree() < degree) {
      out.discarded.push_back(img.p);
    } else if (img.degree() > degree) {
      for (const auto& g : good) out.discarded.push_back(g.p);
      degree = img.degree();
      good.assign(1, std::move(img));
    } else {
      good.push_back(std::move(img));
    }
  };

  // Each failed verification must be followed by a strictly larger degree.
  const std::size_t max_probe = 16 * n + 64;
  while (true) {
    CoeffBound bound = best_minpoly_bound(a, static_cast<std::size_t>(degree));
    double target = bound.bits + planning_margin(n);
    Integer product = product_of(good);
    while (!covers(product, target)) {
      const double missing = target + 1.0 - log2_abs(product);
      const auto batch = static_cast<std::size_t>(
          std::max(1.0, std::ceil(missing / static_cast<double>(opts.prime_bits - 1))));
      std::vector<std::uint64_t> primes;
      for (std::size_t i = 0; i < batch; ++i) primes.push_back(stream.next());
      const long before = degree;
      for (auto& img : per_prime(primes, opts.threads, image_at)) accept(std::move(img));
      if (degree != before) {
        bound = best_minpoly_bound(a, static_cast<std::size_t>(degree));
        target = bound.bits + planning_margin(n);
      }
      product = product_of(good);
    }

    IntPolynomial m = crt_combine(good);
    if (m.is_monic() && annihilates(m, a)) {
      out.polynomial = std::move(m);
      out.plan.bound = bound;
      out.plan.product = product;
      for (const auto& g : good) out.plan.primes.push_back(g.p);
      return out;
    }

    ++out.attempts;
    const long failed_degree = degree;
    for (std::size_t probes = 0; degree == failed_degree; ++probes) {
      if (probes >= max_probe || out.attempts > n + 1) {
        throw ReconstructionError("minimal polynomial verification failed after " +
                                  std::to_string(out.attempts) + " attempts");
      }
      accept(image_at(stream.next()));
    }
  }
}

}  // namespace polybound
