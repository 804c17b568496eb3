#pragma once

#include <memory>
#include <variant>

#include "vir/highest_weight.hpp"
#include "vir/pbw.hpp"
#include "vir/tensor.hpp"
#include "vir/whittaker.hpp"

namespace vir {

/// Defining data of the one-dimensional module over span{d_k - λ^{k-n+1} d_{n-1} : k >= n}.
struct InducedParams {
  int n = 0;
  Scalar lambda;
  Scalar theta;
  std::vector<Scalar> s;  // s_n, ..., s_{2n}

  InducedParams(int n_, Scalar lambda_, Scalar theta_, std::vector<Scalar> s_);
  /// s_k, zero outside [n, 2n]
  const Scalar& at(int k) const;
};

/// (d_k - λ^{k-n+1} d_{n-1}) · 1 = sigma(k) · 1 for k >= n; for k > 2n the
/// value is -(k-2n) s_{2n-1} λ^{k-2n+1} + (k-2n+1) s_{2n} λ^{k-2n}.
Scalar induced_sigma(const InducedParams& p, int k);

/// n >= 1: sigma(k) for k >= n.
/// n = 0: the scalar k λ^k s_0 of (d_k - λ^k d_0) · 1, for k >= -1.
Scalar b_action_scalar(const InducedParams& p, int k);

/// Ind_{θ,λ}: basis monomials in d_j, j <= n-1, on the cyclic vector 1.
class InducedModule : public FreePbwModule {
 public:
  explicit InducedModule(InducedParams p, long simplicity_bound = 200)
      : params_(std::move(p)), bound_(simplicity_bound) {}

  const InducedParams& params() const { return params_; }
  Family family() const override { return Family::induced; }
  Scalar central_charge() const override { return params_.theta; }
  int top() const override { return params_.n - 1; }
  SimplicityReport simplicity() const override;
  IsoClass iso_class() const override;
  nlohmann::json params_json() const override;

 protected:
  MonoVector cyclic_rule(int k) const override;
  std::optional<long> cyclic_annihilation() const override { return std::nullopt; }

 private:
  InducedParams params_;
  long bound_;
};

struct MTheta0Params {
  Scalar theta;
};

using FactorParams = std::variant<MTheta0Params, VermaParams, WhittakerParams>;

struct ParamImage {
  Scalar b;
  FactorParams factor;
};

/// n = 0 → (s_0 + 1, M(θ,0)); n = 1 → V̄(θ,h); n >= 2 → L_{ψ_{n-1},θ}.
ParamImage param_map(const InducedParams& p);

/// The s-tuple with param_map(n, λ, θ, s) = (b, factor).
std::vector<Scalar> inverse_param_map(int n, const Scalar& lambda, const Scalar& b, const FactorParams& factor);

std::shared_ptr<const PbwModule> make_factor(const FactorParams& f);
TensorModule tensor_image(const InducedParams& p);

SimplicityReport induced_is_simple(const InducedParams& p, long bound = 200);

struct IsoFailure {
  char check = 0;  // 'a', 'b' or 'c'
  std::string detail;
};

struct IsoReport {
  Truncation window;
  ParamImage image;
  bool relations = true;      // (a)
  bool intertwines = true;    // (b)
  bool triangular = true;     // (c)
  std::vector<std::pair<int, Scalar>> relation_scalars;  // k, scalar found on 1 ⊗ v
  std::size_t basis_size = 0;
  std::size_t rank = 0;
  std::vector<IsoFailure> failures;

  bool passed() const { return relations && intertwines && triangular; }
};

/// Builds ρ(u · 1) = u · (1 ⊗ v) into Ω(λ,b) ⊗ V and checks, within the window,
/// (a) the defining relations on 1 ⊗ v for n <= k <= 2n+4,
/// (b) ρ ∘ d_j = d_j ∘ ρ on basis vectors for |j| <= K,
/// (c) ρ(d_{n-1}^e M · 1) = λ^{(n-1)e} ∂^e ⊗ M + lower terms, and full rank.
IsoReport iso_verifier(const InducedParams& p, const Truncation& w);

}  // namespace vir
