#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "vir/algebra.hpp"
#include "vir/linalg.hpp"
#include "vir/scalar.hpp"
#include "vir/sparse.hpp"

namespace vir {

/// PBW monomial d_{a1} d_{a2} ... d_{ar} applied to the cyclic vector, stored
/// with a1 >= a2 >= ... >= ar. The empty monomial is the cyclic vector.
using Monomial = std::vector<int>;
using MonoVector = SparseVector<Monomial>;

/// Exponent form [[index, exponent], ...] with indices descending.
std::vector<std::pair<int, int>> exponents(const Monomial& m);
Monomial from_exponents(const std::vector<std::pair<int, int>>& e);
std::string to_string(const Monomial& m);

enum class Family { verma, mtheta0, simple_quotient, whittaker, induced };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

/// Family-tagged vector. Arithmetic between different families throws.
class PbwVector {
 public:
  explicit PbwVector(Family f, MonoVector t = {}) : family_(f), terms_(std::move(t)) {}

  Family family() const { return family_; }
  const MonoVector& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  Scalar coeff(const Monomial& m) const { return terms_.coeff(m); }

  PbwVector& operator+=(const PbwVector& o) {
    same(o);
    terms_ += o.terms_;
    return *this;
  }
  PbwVector& operator-=(const PbwVector& o) {
    same(o);
    terms_ -= o.terms_;
    return *this;
  }
  PbwVector& operator*=(const Scalar& c) {
    terms_ *= c;
    return *this;
  }
  friend PbwVector operator+(PbwVector a, const PbwVector& b) { return a += b; }
  friend PbwVector operator-(PbwVector a, const PbwVector& b) { return a -= b; }
  friend PbwVector operator*(const Scalar& c, PbwVector a) { return a *= c; }
  friend bool operator==(const PbwVector& a, const PbwVector& b) {
    return a.family_ == b.family_ && a.terms_ == b.terms_;
  }

 private:
  void same(const PbwVector& o) const {
    if (o.family_ != family_)
      throw FamilyMismatch("cannot combine " + family_name(family_) + " and " + family_name(o.family_) + " vectors");
  }

  Family family_;
  MonoVector terms_;
};

enum class Verdict { simple, not_simple, simple_up_to_bound, unknown };
std::string verdict_name(Verdict v);

struct KacWitness {
  long k = 0;
  long l = 0;
  bool operator==(const KacWitness&) const = default;
};

struct CentralChargeWitness {
  long p = 0;
  long q = 0;
  bool operator==(const CentralChargeWitness&) const = default;
};

struct SimplicityReport {
  Verdict verdict = Verdict::unknown;
  std::optional<KacWitness> kac;
  std::optional<CentralChargeWitness> central;
  long bound = 0;       // scan bound for simple_up_to_bound
  std::string reason;   // failed condition, if any

  bool simple() const { return verdict == Verdict::simple; }
};

nlohmann::json to_json(const SimplicityReport& r);

/// Isomorphism invariant used to compare factors.
struct IsoClass {
  std::string kind;
  std::vector<Scalar> key;
  bool operator==(const IsoClass&) const = default;
};

/// Thread-safe memo table for unit actions d_k · monomial.
class ActionCache {
 public:
  std::optional<MonoVector> find(int k, const Monomial& m) const;
  void insert(int k, const Monomial& m, const MonoVector& v) const;
  std::size_t size() const;

 private:
  struct Hash {
    std::size_t operator()(const std::pair<int, Monomial>& key) const noexcept;
  };
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::pair<int, Monomial>, MonoVector, Hash> table_;
};

/// A cyclic module with a PBW-type basis of monomials in d_j, j <= top().
class PbwModule {
 public:
  using Vector = PbwVector;

  virtual ~PbwModule() = default;

  virtual Family family() const = 0;
  virtual Scalar central_charge() const = 0;
  /// Largest generator index allowed in a basis monomial.
  virtual int top() const = 0;
  /// d_k applied to a basis monomial, expressed in the basis.
  virtual MonoVector act_terms(int k, const Monomial& m) const = 0;
  /// Basis monomials of weight <= max_weight in canonical order.
  virtual std::vector<Monomial> basis(long max_weight) const;
  virtual SimplicityReport simplicity() const = 0;
  virtual IsoClass iso_class() const = 0;
  virtual nlohmann::json params_json() const = 0;
  /// Least K with d_j v = 0 for all j > K; throws for modules that are not
  /// locally finite over the positive part.
  long annihilation_index(const Vector& v) const;

  /// Grading weight sum (top + 1 - a) over the letters.
  long weight(const Monomial& m) const;
  virtual bool is_basis_monomial(const Monomial& m) const;

  Vector zero() const { return Vector(family()); }
  Vector cyclic() const { return Vector(family(), MonoVector::unit({})); }
  Vector vector(MonoVector t) const { return Vector(family(), std::move(t)); }
  void check_member(const Vector& v) const;
  Vector act(int k, const Vector& v) const;
  MonoVector act_on(int k, const MonoVector& v) const;

 protected:
  /// Largest j with d_j acting nontrivially on the cyclic vector, if the
  /// positive part acts locally finitely.
  virtual std::optional<long> cyclic_annihilation() const = 0;
};

/// Monomials with letters <= top and weight <= max_weight, ordered by weight,
/// then exponent vector descending from the top letter.
std::vector<Monomial> monomials_up_to(int top, long max_weight);
/// Same, exactly at the given weight.
std::vector<Monomial> monomials_at(int top, long weight);

/// Modules whose basis is the full free alphabet j <= top; the action is
/// computed by normal ordering and the rule for d_k (k > top) on the cyclic
/// vector.
class FreePbwModule : public PbwModule {
 public:
  MonoVector act_terms(int k, const Monomial& m) const override;
  std::size_t cache_size() const { return cache_.size(); }

 protected:
  /// d_k applied to the cyclic vector, for k > top().
  virtual MonoVector cyclic_rule(int k) const = 0;

 private:
  MonoVector act_vec(int k, const MonoVector& v) const;
  ActionCache cache_;
};

}  // namespace vir
