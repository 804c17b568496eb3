#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vir/algebra.hpp"
#include "vir/linalg.hpp"
#include "vir/omega.hpp"
#include "vir/pbw.hpp"

namespace vir {

/// (∂-degree, factor monomial)
using TensorKey = std::pair<int, Monomial>;
/// Σ ∂^i ⊗ v_i
using TensorVector = SparseVector<TensorKey>;

/// ∂-degree cap D, factor weight cap L, operator range [-K, K].
struct Truncation {
  int D = 6;
  int L = 4;
  int K = 6;

  void validate() const;
  std::string str() const;
  bool operator==(const Truncation&) const = default;
};

/// Parses "D,L,K".
Truncation parse_truncation(const std::string& text);

/// Ω(λ,b) ⊗ V with the Leibniz action; c acts by the factor's θ.
class TensorModule {
 public:
  using Vector = TensorVector;

  TensorModule(OmegaParams omega, std::shared_ptr<const PbwModule> factor);

  const OmegaParams& omega() const { return omega_; }
  const PbwModule& factor() const { return *factor_; }
  std::shared_ptr<const PbwModule> factor_ptr() const { return factor_; }

  Scalar central_charge() const { return factor_->central_charge(); }
  Vector zero() const { return {}; }
  Vector act(int n, const Vector& v) const;
  void check_member(const Vector& v) const;

  /// 1 ⊗ cyclic vector
  Vector cyclic() const;
  Vector pure(const Polynomial& p, const MonoVector& w) const;

  bool in_window(const TensorKey& k, const Truncation& t) const;
  /// Keys with ∂-degree <= D and factor weight <= L, factor weight first.
  std::vector<TensorKey> window_basis(const Truncation& t) const;

 private:
  OmegaParams omega_;
  std::shared_ptr<const PbwModule> factor_;
};

/// Components v_i of Σ ∂^i ⊗ v_i.
std::vector<std::pair<int, MonoVector>> components(const TensorVector& v);

/// Irreducibility: b ≠ 1 and the factor simple (verdict inherited from the factor).
SimplicityReport theorem1_is_simple(const TensorModule& t);

/// Isomorphism test between two simple tensor modules.
bool theorem2_classify(const TensorModule& a, const TensorModule& b);

TensorVector omega_eval(const TensorModule& t, int s, int l, int m, const TensorVector& v);

struct OmegaWitness {
  int s = 0;
  int l = 0;
  int m = 0;
  long annihilation = 0;
  TensorVector value;
};

/// ω^{(s)}_{l,-(s+2)}(1 ⊗ v) with l one past the annihilation index of the
/// factor vectors v, d_{-2}v, ..., d_{-s-2}v.
OmegaWitness omega_nonvanishing(const TensorModule& t, int s);

/// Highest ∂-degree of d_j^k (1 ⊗ v) for k = 0..steps.
std::vector<int> degree_growth(const TensorModule& t, int j, int steps);

struct ClosureResult {
  Truncation window;
  std::vector<TensorVector> basis;  // reduced echelon, in window order
  std::size_t images = 0;
  std::size_t rounds = 0;

  bool contains(const TensorVector& v) const;
};

/// Subspace of the window that provably lies in the submodule generated by
/// `generators`. Images d_k s (|k| <= K) of every vector found so far are kept
/// in full, also outside the window, and the result is their span intersected
/// with the window, iterated to a fixed point.
ClosureResult cyclic_closure(const TensorModule& t, const std::vector<TensorVector>& generators, const Truncation& w);

struct ShapeReport {
  std::string verdict;  // pure, not_pure, split, not_split, inconclusive
  Truncation window;
  int margin = 2;
  std::vector<MonoVector> x;   // all factor components
  std::vector<MonoVector> x2;  // constant-term components (b = 1)
  std::optional<TensorVector> missing;
};

ShapeReport theorem10_shape(const TensorModule& t, const ClosureResult& closure, int margin = 2);

/// Nonzero pseudo-random vectors supported in the window.
std::vector<TensorVector> random_window_vectors(const TensorModule& t, const Truncation& w, std::size_t count,
                                                std::uint64_t seed);

/// Reduced basis of span(vs) ∩ {vectors supported on keys with inside(key)}.
template <class Key, class Inside>
std::vector<SparseVector<Key>> restrict_span(const std::vector<SparseVector<Key>>& vs, Inside inside) {
  std::map<Key, long> ids;
  for (const auto& v : vs)
    for (const auto& [k, c] : v) ids.emplace(k, 0);
  long in = 0, out = 0;
  for (auto& [k, id] : ids) id = inside(k) ? ++in : -++out;
  std::map<long, const Key*> lookup;
  for (auto& [k, id] : ids) lookup.emplace(id, &k);
  EchelonBasis<long> pool;
  for (const auto& v : vs) pool.insert(v.template mapped<long>([&](const Key& k) { return ids.at(k); }));
  EchelonBasis<long> kept;
  for (const auto& [pivot, row] : pool.rows())
    if (pivot > 0) kept.insert(row);
  std::vector<SparseVector<Key>> result;
  for (const auto& row : kept.reduced_rows())
    result.push_back(row.template mapped<Key>([&](long id) { return *lookup.at(id); }));
  return result;
}

std::string to_string(const TensorVector& v);

}  // namespace vir
