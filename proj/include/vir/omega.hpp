#pragma once

#include "vir/algebra.hpp"
#include "vir/scalar.hpp"
#include "vir/sparse.hpp"

namespace vir {

/// Polynomial in the variable ∂, keyed by degree.
using Polynomial = SparseVector<int>;

Polynomial monomial(int degree, const Scalar& c = 1);
int degree(const Polynomial& p);  // -1 for the zero polynomial
Polynomial operator*(const Polynomial& a, const Polynomial& b);

struct OmegaParams {
  Scalar lambda;
  Scalar b;

  OmegaParams(Scalar lambda_, Scalar b_);
};

/// d_n ∂^j = λ^n (∂ + n(b-1)) (∂ - n)^j, extended linearly.
Polynomial omega_act(const OmegaParams& p, int n, const Polynomial& v);

bool omega_is_simple(const OmegaParams& p);

/// For p = ∂q returns q. Intertwines ∂ℂ[∂] ⊂ Ω(λ,1) with Ω(λ,0).
Polynomial b1_submodule_map(const Scalar& lambda, const Polynomial& p);

class OmegaModule {
 public:
  using Vector = Polynomial;

  explicit OmegaModule(OmegaParams p) : params_(std::move(p)) {}

  const OmegaParams& params() const { return params_; }
  Scalar central_charge() const { return 0; }
  Vector zero() const { return {}; }
  Vector act(int n, const Vector& v) const { return omega_act(params_, n, v); }
  void check_member(const Vector&) const {}

 private:
  OmegaParams params_;
};

}  // namespace vir
