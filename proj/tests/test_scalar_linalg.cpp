#include "doctest.h"

#include "gen.hpp"
#include "vir/linalg.hpp"
#include "vir/scalar.hpp"

using namespace vir;

namespace {

Scalar q(long n, long d = 1) {
  Scalar x(n, d);
  x.canonicalize();
  return x;
}

// cofactor expansion along the first row
Scalar laplace(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Scalar det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_zero(m(0, c))) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc)
        if (cc != c) minor(r - 1, k++) = m(r, cc);
    Scalar term = m(0, c) * laplace(minor);
    det += (c % 2 == 0) ? term : Scalar(-term);
  }
  return det;
}

Matrix random_matrix(test::Gen& g, std::size_t rows, std::size_t cols, double zero_rate = 0.3) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = g.coin(zero_rate) ? Scalar(0) : g.rational();
  return m;
}

}  // namespace

TEST_CASE("rational literals") {
  CHECK(parse_scalar("3") == 3);
  CHECK(parse_scalar("-6/4") == q(-3, 2));
  CHECK(parse_scalar("+2/8") == q(1, 4));
  CHECK(parse_scalar("0/5") == 0);
  CHECK(to_string(parse_scalar("-6/4")) == "-3/2");
  CHECK(to_string(parse_scalar("10/5")) == "2");
  CHECK(to_string(parse_scalar("-0")) == "0");
  for (const char* bad : {"", "1/0", "1/-2", "1.5", "a", "--1", "1/", "/2", " 1", "1e3", "+"})
    CHECK_THROWS_AS(parse_scalar(bad), ParseError);
}

TEST_CASE("literal round trip") {
  test::Gen g(1);
  for (int i = 0; i < 200; ++i) {
    Scalar x = g.rational(1000, 1000);
    CHECK(parse_scalar(to_string(x)) == x);
  }
}

TEST_CASE("power, binomial, square roots") {
  CHECK(power(q(2, 3), 3) == q(8, 27));
  CHECK(power(q(2, 3), -2) == q(9, 4));
  CHECK(power(q(-5), 0) == 1);
  CHECK_THROWS_AS(power(0, -1), PreconditionError);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(rational_sqrt(q(9, 49)) == q(3, 7));
  CHECK_FALSE(rational_sqrt(q(2)).has_value());
  CHECK_FALSE(rational_sqrt(q(-4)).has_value());
  CHECK(integer_sqrt(q(144)) == mpz_class(12));
  CHECK_FALSE(integer_sqrt(q(1, 4)).has_value());
}

TEST_CASE("determinant agrees with cofactor expansion") {
  test::Gen g(2);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 6));
    Matrix m = random_matrix(g, n, n, trial % 3 == 0 ? 0.7 : 0.2);
    const Scalar expect = laplace(m);
    CHECK(determinant(m, Exec::serial) == expect);
    CHECK(determinant(m, Exec::parallel) == expect);
  }
}

TEST_CASE("serial and parallel elimination agree") {
  test::Gen g(3);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix m = random_matrix(g, static_cast<std::size_t>(g.integer(1, 9)), static_cast<std::size_t>(g.integer(1, 9)),
                             trial % 2 ? 0.6 : 0.2);
    Rref a = rref(m, Exec::serial), b = rref(m, Exec::parallel);
    CHECK(a.reduced == b.reduced);
    CHECK(a.pivots == b.pivots);
    CHECK(rank(m, Exec::serial) == a.pivots.size());
  }
}

TEST_CASE("nullspace vectors are annihilated and independent") {
  test::Gen g(4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(g.integer(1, 6)), cols = static_cast<std::size_t>(g.integer(1, 7));
    Matrix m = random_matrix(g, rows, cols, 0.5);
    auto ns = nullspace(m, trial % 2 ? Exec::serial : Exec::parallel);
    CHECK(ns.size() + rank(m) == cols);
    for (const auto& v : ns)
      for (std::size_t r = 0; r < rows; ++r) {
        Scalar s = 0;
        for (std::size_t c = 0; c < cols; ++c) s += m(r, c) * v[c];
        CHECK(is_zero(s));
      }
    if (!ns.empty()) {
      Matrix k(ns.size(), cols);
      for (std::size_t i = 0; i < ns.size(); ++i)
        for (std::size_t c = 0; c < cols; ++c) k(i, c) = ns[i][c];
      CHECK(rank(k) == ns.size());
    }
  }
}

TEST_CASE("primitive scaling") {
  auto v = primitive({q(0), q(-2, 3), q(4, 9)});
  CHECK(v == std::vector<Scalar>{0, 3, -2});
  CHECK(primitive({q(3, 2)}) == std::vector<Scalar>{1});
}

TEST_CASE("echelon basis reduces canonically") {
  test::Gen g(5);
  using V = SparseVector<int>;
  for (int trial = 0; trial < 20; ++trial) {
    EchelonBasis<int> e;
    std::vector<V> added;
    for (int i = 0; i < 5; ++i) {
      V v;
      for (int k = 0; k < 8; ++k)
        if (g.coin(0.4)) v.add(k, g.nonzero());
      e.insert(v);
      added.push_back(v);
    }
    for (const auto& v : added) CHECK(e.contains(v));
    V a, b;
    for (int k = 0; k < 8; ++k) a.add(k, g.rational());
    b = a;
    for (const auto& v : added) b.axpy(g.rational(), v);
    CHECK(e.reduce(a) == e.reduce(b));
    const auto rows = e.reduced_rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j)
        if (i != j) CHECK(is_zero(rows[j].coeff(rows[i].begin()->first)));
  }
}
