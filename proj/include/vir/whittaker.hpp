#pragma once

#include "vir/pbw.hpp"

namespace vir {

/// ψ_n(d_j) = λ_j for n <= j <= 2n, zero above; c acts as θ.
struct WhittakerParams {
  int n = 1;
  std::vector<Scalar> lambdas;  // λ_n, ..., λ_{2n}
  Scalar theta;

  WhittakerParams(int n_, std::vector<Scalar> lambdas_, Scalar theta_);
  const Scalar& lambda(int j) const;  // zero outside [n, 2n]
};

bool whittaker_is_simple(const WhittakerParams& p);

/// L_{ψ_n,θ}: basis monomials in d_j, j <= n-1, on the cyclic vector.
class Whittaker : public FreePbwModule {
 public:
  explicit Whittaker(WhittakerParams p) : params_(std::move(p)) {}

  const WhittakerParams& params() const { return params_; }
  Family family() const override { return Family::whittaker; }
  Scalar central_charge() const override { return params_.theta; }
  int top() const override { return params_.n - 1; }
  SimplicityReport simplicity() const override;
  IsoClass iso_class() const override;
  nlohmann::json params_json() const override;

 protected:
  MonoVector cyclic_rule(int k) const override;
  std::optional<long> cyclic_annihilation() const override { return 2L * params_.n; }

 private:
  WhittakerParams params_;
};

}  // namespace vir
