#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "vir/scalar.hpp"
#include "vir/sparse.hpp"

namespace vir {

/// Execution policy for the dense kernels. `serial` is the reference path the
/// tests compare the OpenMP path against.
enum class Exec { serial, parallel };

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  friend bool operator==(const Matrix&, const Matrix&) = default;

  bool is_symmetric() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Rref rref(Matrix m, Exec exec = Exec::parallel);
std::size_t rank(const Matrix& m, Exec exec = Exec::parallel);
Scalar determinant(Matrix m, Exec exec = Exec::parallel);

/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m, Exec exec = Exec::parallel);

/// Scales a nonzero vector to coprime integers with a positive leading entry.
std::vector<Scalar> primitive(std::vector<Scalar> v);

/// Incrementally maintained row-echelon basis of a subspace of sparse vectors.
///
/// Each stored row is normalised so that its leading key (its pivot) has
/// coefficient 1; all other entries of a row lie strictly after its pivot in
/// key order. Reduction is therefore canonical: the remainder of a vector is
/// the unique representative of its coset with zeros at every pivot.
template <class Key, class Compare = std::less<Key>>
class EchelonBasis {
 public:
  using Vector = SparseVector<Key, Compare>;

  Vector reduce(Vector v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      Key pivot = it->first;
      Scalar c = it->second;
      v.axpy(-c, row->second);
      it = v.upper_bound(pivot);
    }
    return v;
  }

  /// Adds v to the span. Returns the new normalised row, or an empty vector
  /// when v was already in the span.
  Vector insert(const Vector& v) {
    Vector r = reduce(v);
    if (r.empty()) return r;
    Scalar lead = r.begin()->second;
    r *= Scalar(1) / lead;
    Key pivot = r.begin()->first;
    rows_.emplace(pivot, r);
    return r;
  }

  bool contains(const Vector& v) const { return reduce(v).empty(); }
  std::size_t dim() const { return rows_.size(); }
  bool is_pivot(const Key& k) const { return rows_.count(k) != 0; }
  const std::map<Key, Vector, Compare>& rows() const { return rows_; }

  /// Fully reduced basis (zeros above every pivot as well), in pivot order.
  std::vector<Vector> reduced_rows() const {
    std::map<Key, Vector, Compare> out;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      Vector r = it->second;
      auto jt = r.upper_bound(it->first);
      while (jt != r.end()) {
        auto done = out.find(jt->first);
        if (done == out.end()) {
          ++jt;
          continue;
        }
        Key k = jt->first;
        Scalar c = jt->second;
        r.axpy(-c, done->second);
        jt = r.upper_bound(k);
      }
      out.emplace(it->first, std::move(r));
    }
    std::vector<Vector> v;
    v.reserve(out.size());
    for (auto& [k, r] : out) v.push_back(std::move(r));
    return v;
  }

 private:
  std::map<Key, Vector, Compare> rows_;
};

}  // namespace vir
