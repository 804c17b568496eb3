#include "vir/kac.hpp"

#include <limits>

namespace vir {

namespace {

Scalar phi(const Scalar& theta, long j) { return Scalar(j * j - 1) * (theta - 13) / 24; }

// x with a*x ≡ 1 (mod m), m >= 1
mpz_class inverse_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (m == 1) return 0;
  mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::optional<KacWitness> better(std::optional<KacWitness> a, std::optional<KacWitness> b) {
  if (!a) return b;
  if (!b) return a;
  long ka = a->k * a->l, kb = b->k * b->l;
  if (kb < ka || (kb == ka && b->k < a->k)) return b;
  return a;
}

constexpr long kMinimiseLimit = 10'000'000;

}  // namespace

Scalar kac_factor(const Scalar& theta, const Scalar& h, long k, long l) {
  if (k < 1 || l < 1) throw PreconditionError("kac_factor needs k, l >= 1");
  const Scalar half = Scalar(k * l - 1) / 2;
  const Scalar a = h + phi(theta, k) + half;
  const Scalar b = h + phi(theta, l) + half;
  const Scalar d = Scalar(k * k - l * l);
  return a * b + d * d / 16;
}

std::optional<KacWitness> kac_scan(const Scalar& theta, const Scalar& weight, long bound) {
  for (long n = 1; n <= bound; ++n)
    for (long k = 1; k <= n; ++k) {
      if (n % k != 0) continue;
      if (is_zero(kac_factor(theta, weight, k, n / k))) return KacWitness{k, n / k};
    }
  return std::nullopt;
}

// With u = (13-θ)/6 and t a root of x^2 - u x + 1, a zero at (k,l) means
// (k t - l)^2 = 4 t Δ + (t - 1)^2.
std::optional<KacWitness> kac_exact(const Scalar& theta, const Scalar& weight) {
  const Scalar u = (Scalar(13) - theta) / 6;
  const auto r = rational_sqrt(u * u - 4);
  std::optional<KacWitness> found;
  if (!r) {
    // t irrational: need k = l and k^2 = 1 + 24Δ/(1-θ)
    auto k = integer_sqrt(Scalar(1) + 24 * weight / (Scalar(1) - theta));
    if (!k || *k < 1) return std::nullopt;
    if (!k->fits_slong_p()) return std::nullopt;
    found = KacWitness{k->get_si(), k->get_si()};
  } else {
    const Scalar t = (u + *r) / 2;
    const mpz_class P = t.get_num();
    const mpz_class Q = t.get_den();
    const auto N = integer_sqrt(4 * Scalar(P * Q) * weight + Scalar((P - Q) * (P - Q)));
    if (!N) return std::nullopt;
    if (P > 0) {
      const mpz_class inv = inverse_mod(P % Q, Q);
      for (mpz_class target : {mpz_class(*N), mpz_class(-*N)}) {
        // k P - l Q = target
        mpz_class k = (target * inv) % Q;
        if (k <= 0) k += Q;
        mpz_class l = (k * P - target) / Q;
        while (l < 1) {
          k += Q;
          l = (k * P - target) / Q;
        }
        if (k.fits_slong_p() && l.fits_slong_p()) found = better(found, KacWitness{k.get_si(), l.get_si()});
      }
    } else {
      // k P' + l Q = N with P' = -P
      const mpz_class Pp = -P;
      for (mpz_class k = 1; k * Pp + Q <= *N; ++k) {
        mpz_class rest = *N - k * Pp;
        if (rest % Q != 0) continue;
        mpz_class l = rest / Q;
        found = better(found, KacWitness{k.get_si(), l.get_si()});
      }
    }
  }
  if (!found) return std::nullopt;
  const long kl = found->k * found->l;
  if (kl <= kMinimiseLimit) {
    if (auto w = kac_scan(theta, weight, kl)) return w;
  }
  if (is_zero(kac_factor(theta, weight, found->k, found->l))) return found;
  std::swap(found->k, found->l);
  if (is_zero(kac_factor(theta, weight, found->k, found->l))) return found;
  throw std::logic_error("kac_exact produced a candidate that is not a zero");
}

SimplicityReport verma_is_simple(const Scalar& theta, const Scalar& h, long bound, bool exact) {
  if (bound < 1) throw PreconditionError("bound must be positive");
  SimplicityReport r;
  const Scalar weight = -h;
  if (auto w = kac_scan(theta, weight, bound)) {
    r.verdict = Verdict::not_simple;
    r.kac = w;
    r.reason = "kac factor vanishes";
    return r;
  }
  if (exact) {
    if (auto w = kac_exact(theta, weight)) {
      r.verdict = Verdict::not_simple;
      r.kac = w;
      r.reason = "kac factor vanishes";
    } else {
      r.verdict = Verdict::simple;
    }
    return r;
  }
  r.verdict = Verdict::simple_up_to_bound;
  r.bound = bound;
  return r;
}

SimplicityReport mtheta0_is_simple(const Scalar& theta) {
  SimplicityReport r;
  r.verdict = Verdict::simple;
  const Scalar t = (Scalar(1) - theta) / 6;
  const Scalar u = t + 2;
  const auto disc = rational_sqrt(u * u - 4);
  if (!disc || sgn(u) <= 0) return r;
  const Scalar x = (u + *disc) / 2;
  mpz_class p = x.get_num(), q = x.get_den();
  if (p > q) std::swap(p, q);
  if (p < 2) return r;
  if (!q.fits_slong_p()) throw std::overflow_error("central charge witness out of range");
  r.verdict = Verdict::not_simple;
  r.central = CentralChargeWitness{p.get_si(), q.get_si()};
  r.reason = "theta = 1 - 6(p-q)^2/(pq)";
  return r;
}

}  // namespace vir
