#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "vir/kac.hpp"
#include "vir/linalg.hpp"
#include "vir/pbw.hpp"

namespace vir {

struct VermaParams {
  Scalar theta;
  Scalar h;
};

/// V̄(θ,h): basis d_{-1}^{k1} d_{-2}^{k2} ... v_h, d_0 v_h = h v_h, c = θ.
class Verma : public FreePbwModule {
 public:
  explicit Verma(VermaParams p, long simplicity_bound = 200) : params_(std::move(p)), bound_(simplicity_bound) {}

  const VermaParams& params() const { return params_; }
  Family family() const override { return Family::verma; }
  Scalar central_charge() const override { return params_.theta; }
  int top() const override { return -1; }
  SimplicityReport simplicity() const override { return verma_is_simple(params_.theta, params_.h, bound_); }
  IsoClass iso_class() const override { return {"highest_weight", {params_.theta, params_.h}}; }
  nlohmann::json params_json() const override;

 protected:
  MonoVector cyclic_rule(int k) const override;
  std::optional<long> cyclic_annihilation() const override { return 0; }

 private:
  VermaParams params_;
  long bound_;
};

/// Shapovalov form at one level: entry (a, b) is the v_h coefficient of
/// σ(word_a) word_b v_h, σ(d_n) = d_{-n}. Rows and columns follow
/// monomials_at(-1, level).
Matrix gram_matrix(const VermaParams& p, long level, Exec exec = Exec::parallel);

/// Basis of {u at the given level : d_1 u = d_2 u = 0}, each vector primitive integral.
std::vector<PbwVector> singular_vectors(const VermaParams& p, long level, Exec exec = Exec::parallel);

/// Verma module modulo a graded submodule given level by level. Each level
/// keeps an echelon basis; a vector is represented by its canonical remainder,
/// so basis monomials are the non-pivot monomials.
template <class Compare>
class GradedQuotient : public PbwModule {
 public:
  using Reducer = EchelonBasis<Monomial, Compare>;

  explicit GradedQuotient(VermaParams p) : verma_(std::move(p)) {}

  const VermaParams& params() const { return verma_.params(); }
  const Verma& cover() const { return verma_; }
  Scalar central_charge() const override { return verma_.central_charge(); }
  int top() const override { return -1; }

  MonoVector act_terms(int k, const Monomial& m) const override { return reduce(verma_.act_terms(k, m)); }

  std::vector<Monomial> basis(long max_weight) const override {
    std::vector<Monomial> out;
    for (long w = 0; w <= max_weight; ++w) {
      const Reducer& red = level(w);
      for (auto& m : monomials_at(-1, w))
        if (!red.is_pivot(m)) out.push_back(std::move(m));
    }
    return out;
  }

  bool is_basis_monomial(const Monomial& m) const override {
    return PbwModule::is_basis_monomial(m) && !level(weight(m)).is_pivot(m);
  }

  /// Canonical remainder of a Verma vector.
  MonoVector reduce(const MonoVector& v) const {
    std::map<long, MonoVector> by_level;
    for (const auto& [m, c] : v) by_level[weight(m)].add(m, c);
    MonoVector out;
    for (auto& [w, part] : by_level) {
      typename Reducer::Vector pv;
      for (const auto& [m, c] : part) pv.add(m, c);
      for (const auto& [m, c] : level(w).reduce(pv)) out.add(m, c);
    }
    return out;
  }

  /// Basis of the removed submodule at one level.
  std::vector<MonoVector> submodule_level(long w) const {
    std::vector<MonoVector> out;
    for (const auto& row : level(w).reduced_rows()) {
      MonoVector v;
      for (const auto& [m, c] : row) v.add(m, c);
      out.push_back(std::move(v));
    }
    return out;
  }

 protected:
  virtual Reducer build_level(long w) const = 0;
  std::optional<long> cyclic_annihilation() const override { return 0; }

  const Reducer& level(long w) const {
    std::lock_guard lock(mutex_);
    auto it = levels_.find(w);
    if (it != levels_.end()) return *it->second;
    auto built = std::make_unique<Reducer>(w <= 0 ? Reducer{} : build_level(w));
    return *levels_.emplace(w, std::move(built)).first->second;
  }

  Verma verma_;

 private:
  mutable std::recursive_mutex mutex_;
  mutable std::map<long, std::unique_ptr<Reducer>> levels_;
};

/// Monomials that start with d_{-1} come first, so they become the pivots.
struct MinusOneFirst {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const bool ha = !a.empty() && a.front() == -1;
    const bool hb = !b.empty() && b.front() == -1;
    if (ha != hb) return ha;
    return a > b;
  }
};

/// M(θ,0) = V̄(θ,0) / U(Vir) d_{-1} v. Representatives are the d_{-1}-free monomials.
class MTheta0 : public GradedQuotient<MinusOneFirst> {
 public:
  explicit MTheta0(Scalar theta) : GradedQuotient({std::move(theta), 0}) {}

  Family family() const override { return Family::mtheta0; }
  SimplicityReport simplicity() const override { return mtheta0_is_simple(params().theta); }
  IsoClass iso_class() const override { return {"highest_weight", {params().theta, Scalar(0)}}; }
  nlohmann::json params_json() const override;

 protected:
  Reducer build_level(long w) const override;
};

/// V(θ,h) realised level by level as Verma modulo the radical of the Gram matrix.
class SimpleQuotient : public GradedQuotient<std::greater<Monomial>> {
 public:
  explicit SimpleQuotient(VermaParams p, long level_cap = 8) : GradedQuotient(std::move(p)), cap_(level_cap) {}

  long level_cap() const { return cap_; }
  Family family() const override { return Family::simple_quotient; }
  SimplicityReport simplicity() const override { return {Verdict::simple, {}, {}, 0, {}}; }
  IsoClass iso_class() const override { return {"highest_weight", {params().theta, params().h}}; }
  nlohmann::json params_json() const override;

 protected:
  Reducer build_level(long w) const override;

 private:
  long cap_;
};

}  // namespace vir
