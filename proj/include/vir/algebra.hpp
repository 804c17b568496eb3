#pragma once

#include <compare>
#include <concepts>
#include <exception>
#include <string>
#include <vector>

#include "vir/scalar.hpp"
#include "vir/sparse.hpp"

namespace vir {

/// A free word d_{f0} d_{f1} ... d_{fr} c^p. On a vector the rightmost
/// factor acts first.
struct UeaWord {
  std::vector<int> factors;
  unsigned central_power = 0;

  auto operator<=>(const UeaWord&) const = default;
  bool operator==(const UeaWord&) const = default;
};

using UeaElement = SparseVector<UeaWord>;

UeaElement identity_element();
UeaElement generator(int i);
UeaElement central_element();

/// Concatenation product of free words, extended bilinearly.
UeaElement operator*(const UeaElement& a, const UeaElement& b);

/// [d_i, d_j] = (j - i) d_{i+j} + delta_{i,-j} (i^3 - i)/12 c
UeaElement bracket(int i, int j);

/// sum_{i=0}^{s} C(s,i) (-1)^{s-i} d_{l-m-i} d_{m+i}
UeaElement omega_operator(int s, int l, int m);

std::string to_string(const UeaElement& e);

/// What every module in the catalogue provides.
template <class M>
concept VirasoroModule = requires(const M& mod, int k, const typename M::Vector& v) {
  typename M::Vector;
  { mod.central_charge() } -> std::convertible_to<Scalar>;
  { mod.zero() } -> std::same_as<typename M::Vector>;
  { mod.act(k, v) } -> std::same_as<typename M::Vector>;
  { mod.check_member(v) };
};

template <VirasoroModule M>
typename M::Vector apply_word(const M& mod, const UeaWord& w, typename M::Vector v) {
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) v = mod.act(*it, v);
  if (w.central_power > 0) v *= power(Scalar(mod.central_charge()), static_cast<long>(w.central_power));
  return v;
}

template <VirasoroModule M>
typename M::Vector apply_element(const M& mod, const UeaElement& e, const typename M::Vector& v) {
  mod.check_member(v);
  typename M::Vector out = mod.zero();
  for (const auto& [w, c] : e) {
    typename M::Vector t = apply_word(mod, w, v);
    t *= c;
    out += t;
  }
  return out;
}

/// d_i d_j v - d_j d_i v - [d_i, d_j] v
template <VirasoroModule M>
typename M::Vector commutator_defect(const M& mod, int i, int j, const typename M::Vector& v) {
  mod.check_member(v);
  typename M::Vector out = mod.act(i, mod.act(j, v));
  out -= mod.act(j, mod.act(i, v));
  out -= apply_element(mod, bracket(i, j), v);
  return out;
}

struct DefectFailure {
  int i = 0;
  int j = 0;
  std::size_t vector_index = 0;
};

/// Runs commutator_defect over all |i|,|j| <= range (i < j) and every vector
/// in `basis`; returns the failures in a fixed order.
template <VirasoroModule M>
std::vector<DefectFailure> commutator_sweep(const M& mod, const std::vector<typename M::Vector>& basis, int range) {
  const long total = static_cast<long>(basis.size());
  std::vector<std::vector<DefectFailure>> per(basis.size());
  std::vector<std::exception_ptr> errors(basis.size());
#pragma omp parallel for schedule(dynamic)
  for (long b = 0; b < total; ++b) {
    try {
      for (int i = -range; i <= range; ++i)
        for (int j = i + 1; j <= range; ++j) {
          auto d = commutator_defect(mod, i, j, basis[b]);
          if (!d.empty()) per[b].push_back({i, j, static_cast<std::size_t>(b)});
        }
    } catch (...) {
      errors[b] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<DefectFailure> out;
  for (auto& f : per) out.insert(out.end(), f.begin(), f.end());
  return out;
}

}  // namespace vir
