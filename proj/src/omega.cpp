#include "vir/omega.hpp"

namespace vir {

Polynomial monomial(int degree, const Scalar& c) {
  Polynomial p;
  p.add(degree, c);
  return p;
}

int degree(const Polynomial& p) { return p.empty() ? -1 : std::prev(p.end())->first; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out.add(i + j, x * y);
  return out;
}

OmegaParams::OmegaParams(Scalar lambda_, Scalar b_) : lambda(std::move(lambda_)), b(std::move(b_)) {
  if (is_zero(lambda)) throw PreconditionError("lambda must be nonzero");
}

Polynomial omega_act(const OmegaParams& p, int n, const Polynomial& v) {
  if (v.empty()) return {};
  const Scalar shift = Scalar(n) * (p.b - 1);
  const Polynomial linear = monomial(1) + monomial(0, shift);
  const Polynomial step = monomial(1) + monomial(0, Scalar(-n));

  // (∂ - n)^j for every j up to the top degree, built incrementally
  const int top = degree(v);
  Polynomial pw = monomial(0);
  Polynomial acc;
  for (int j = 0; j <= top; ++j) {
    if (j > 0) pw = pw * step;
    Scalar c = v.coeff(j);
    if (!is_zero(c)) acc.axpy(c, pw);
  }
  Polynomial out = linear * acc;
  out *= power(p.lambda, n);
  return out;
}

bool omega_is_simple(const OmegaParams& p) { return p.b != 1; }

Polynomial b1_submodule_map(const Scalar&, const Polynomial& p) {
  if (p.contains(0)) throw PreconditionError("b1_submodule_map needs a polynomial without constant term");
  Polynomial q;
  for (const auto& [d, c] : p) q.add(d - 1, c);
  return q;
}

}  // namespace vir
