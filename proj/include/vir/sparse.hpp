#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <utility>

#include "vir/scalar.hpp"

namespace vir {

/// Finite formal linear combination of keys with exact coefficients.
/// Zero coefficients are never stored, so `==` is mathematical equality.
template <class Key, class Compare = std::less<Key>>
class SparseVector {
 public:
  using key_type = Key;
  using Map = std::map<Key, Scalar, Compare>;
  using const_iterator = typename Map::const_iterator;

  SparseVector() = default;
  SparseVector(std::initializer_list<std::pair<const Key, Scalar>> init) {
    for (const auto& [k, c] : init) add(k, c);
  }
  static SparseVector unit(const Key& k) {
    SparseVector v;
    v.terms_.emplace(k, Scalar(1));
    return v;
  }

  void add(const Key& k, const Scalar& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  /// this += a * x
  void axpy(const Scalar& a, const SparseVector& x) {
    if (is_zero(a)) return;
    for (const auto& [k, c] : x.terms_) add(k, a * c);
  }

  SparseVector& operator+=(const SparseVector& x) {
    for (const auto& [k, c] : x.terms_) add(k, c);
    return *this;
  }
  SparseVector& operator-=(const SparseVector& x) {
    for (const auto& [k, c] : x.terms_) add(k, -c);
    return *this;
  }
  SparseVector& operator*=(const Scalar& a) {
    if (is_zero(a)) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= a;
    }
    return *this;
  }
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const Scalar& s, SparseVector a) { return a *= s; }
  friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.terms_ == b.terms_; }

  Scalar coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
  }
  bool contains(const Key& k) const { return terms_.count(k) != 0; }
  void erase(const Key& k) { terms_.erase(k); }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const_iterator upper_bound(const Key& k) const { return terms_.upper_bound(k); }
  const Map& terms() const { return terms_; }

  /// Keeps only the terms whose key satisfies `keep`.
  template <class Pred>
  SparseVector filtered(Pred keep) const {
    SparseVector out;
    for (const auto& [k, c] : terms_)
      if (keep(k)) out.terms_.emplace_hint(out.terms_.end(), k, c);
    return out;
  }

  /// Re-keys every term through `f`, summing collisions.
  template <class Key2, class Compare2 = std::less<Key2>, class F>
  SparseVector<Key2, Compare2> mapped(F f) const {
    SparseVector<Key2, Compare2> out;
    for (const auto& [k, c] : terms_) out.add(f(k), c);
    return out;
  }

 private:
  Map terms_;
};

}  // namespace vir
