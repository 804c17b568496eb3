#include "doctest.h"

#include "gen.hpp"
#include "vir/algebra.hpp"
#include "vir/highest_weight.hpp"
#include "vir/omega.hpp"

using namespace vir;

namespace {

Scalar q(long n, long d = 1) {
  Scalar x(n, d);
  x.canonicalize();
  return x;
}

UeaElement word(std::vector<int> f, const Scalar& c = 1, unsigned central = 0) {
  UeaElement e;
  e.add(UeaWord{std::move(f), central}, c);
  return e;
}

Polynomial poly(std::initializer_list<std::pair<int, Scalar>> terms) {
  Polynomial p;
  for (const auto& [d, c] : terms) p.add(d, c);
  return p;
}

Polynomial random_poly(test::Gen& g, int max_deg) {
  Polynomial p;
  for (int d = 0; d <= max_deg; ++d)
    if (g.coin(0.6)) p.add(d, g.rational());
  return p;
}

}  // namespace

TEST_CASE("bracket values") {
  CHECK(bracket(1, -1) == word({0}, -2));
  CHECK(bracket(2, -2) == word({0}, -4) + word({}, q(1, 2), 1));
  CHECK(bracket(3, 5) == word({8}, 2));
  for (int i = -7; i <= 7; ++i) CHECK(bracket(i, i).empty());
}

TEST_CASE("bracket is antisymmetric") {
  for (int i = -50; i <= 50; ++i)
    for (int j = -50; j <= 50; ++j) CHECK(bracket(i, j) == Scalar(-1) * bracket(j, i));
}

TEST_CASE("omega operator expansion") {
  CHECK(omega_operator(0, 4, 1) == word({3, 1}));
  CHECK(omega_operator(2, 4, 1) == word({3, 1}) + word({2, 2}, -2) + word({1, 3}));
  CHECK(omega_operator(1, 0, 0) == word({0, 0}, -1) + word({-1, 1}));
  CHECK_THROWS_AS(omega_operator(-1, 0, 0), PreconditionError);
}

TEST_CASE("element products concatenate words") {
  auto e = (generator(1) + central_element()) * generator(-2);
  CHECK(e == word({1, -2}) + word({-2}, 1, 1));
  CHECK(identity_element() * generator(3) == generator(3));
}

TEST_CASE("apply_element basics") {
  const Verma v({q(1, 2), q(3, 7)});
  const auto x = v.act(-2, v.act(-1, v.cyclic()));
  CHECK(apply_element(v, identity_element(), x) == x);
  CHECK(apply_element(v, word({0}, 2), x) == Scalar(2) * v.act(0, x));
  CHECK(apply_element(v, bracket(1, -1), v.cyclic()) == Scalar(-2 * q(3, 7)) * v.cyclic());
  CHECK(apply_element(v, central_element(), x) == q(1, 2) * x);
}

TEST_CASE("apply_element is bilinear") {
  test::Gen g(11);
  const OmegaModule m(OmegaParams(q(3, 2), q(-1, 3)));
  for (int t = 0; t < 20; ++t) {
    UeaElement a = word({g.integer(-4, 4), g.integer(-4, 4)}, g.rational());
    UeaElement b = word({g.integer(-4, 4)}, g.rational()) + word({}, g.rational(), 1);
    Polynomial u = random_poly(g, 4), w = random_poly(g, 4);
    Scalar c = g.rational();
    CHECK(apply_element(m, a + b, u) == apply_element(m, a, u) + apply_element(m, b, u));
    CHECK(apply_element(m, a, u + w) == apply_element(m, a, u) + apply_element(m, a, w));
    CHECK(apply_element(m, c * a, u) == c * apply_element(m, a, u));
    CHECK(apply_element(m, a, c * u) == c * apply_element(m, a, u));
  }
}

TEST_CASE("commutator defect examples") {
  const OmegaModule om(OmegaParams(1, 2));
  CHECK(commutator_defect(om, 1, -1, monomial(0)).empty());
  const Verma v({0, 0});
  CHECK(commutator_defect(v, 2, -2, v.cyclic()).empty());
  CHECK(commutator_defect(v, 3, 3, v.act(-3, v.cyclic())).empty());
}

TEST_CASE("omega action examples") {
  CHECK(omega_act(OmegaParams(q(5, 3), 7), 0, monomial(3)) == monomial(4));
  CHECK(omega_act(OmegaParams(1, 0), 1, monomial(1)) == poly({{2, 1}, {1, -2}, {0, 1}}));
  CHECK(omega_act(OmegaParams(2, 3), 1, monomial(0)) == poly({{1, 2}, {0, 4}}));
  CHECK(omega_act(OmegaParams(2, 3), 5, Polynomial{}).empty());
  CHECK_THROWS_AS(OmegaParams(0, 1), PreconditionError);
}

TEST_CASE("omega simplicity") {
  CHECK(omega_is_simple(OmegaParams(1, 2)));
  CHECK_FALSE(omega_is_simple(OmegaParams(5, 1)));
  CHECK(omega_is_simple(OmegaParams(q(1, 3), 0)));
}

TEST_CASE("omega action raises degree by one") {
  test::Gen g(12);
  for (int t = 0; t < 50; ++t) {
    const OmegaParams p(g.nonzero(), g.rational());
    const int n = g.integer(-8, 8);
    Polynomial v = random_poly(g, 8);
    if (v.empty()) continue;
    Polynomial w = omega_act(p, n, v);
    CHECK(degree(w) == degree(v) + 1);
    CHECK(w.coeff(degree(w)) == power(p.lambda, n) * v.coeff(degree(v)));
    CHECK(omega_act(p, 0, v) == monomial(1) * v);
  }
}

TEST_CASE("omega satisfies the bracket") {
  test::Gen g(13);
  for (int t = 0; t < 5; ++t) {
    const OmegaModule m(OmegaParams(g.nonzero(), g.rational()));
    std::vector<Polynomial> basis;
    for (int d = 0; d <= 5; ++d) basis.push_back(monomial(d));
    CHECK(commutator_sweep(m, basis, 6).empty());
  }
}

TEST_CASE("b = 1: constant-free polynomials are invariant") {
  test::Gen g(14);
  const Scalar lambda = q(-2, 5);
  const OmegaParams p1(lambda, 1), p0(lambda, 0);
  for (int n = -8; n <= 8; ++n)
    for (int d = 1; d <= 8; ++d) {
      Polynomial v = monomial(d, g.nonzero()) + random_poly(g, d - 1) * monomial(1);
      Polynomial w = omega_act(p1, n, v);
      CHECK_FALSE(w.contains(0));
      CHECK(b1_submodule_map(lambda, w) == omega_act(p0, n, b1_submodule_map(lambda, v)));
    }
}

TEST_CASE("b1 submodule map") {
  CHECK(b1_submodule_map(1, monomial(1)) == monomial(0));
  CHECK(b1_submodule_map(1, poly({{2, 1}, {1, -3}})) == poly({{1, 1}, {0, -3}}));
  CHECK(omega_act(OmegaParams(1, 1), 1, monomial(1)) == poly({{2, 1}, {1, -1}}));
  CHECK_THROWS_AS(b1_submodule_map(1, poly({{0, 1}, {1, 1}})), PreconditionError);
}

TEST_CASE("omega operators vanish on 1 inside the polynomial module for s >= 3") {
  // frozen from an independent expansion
  test::Gen g(15);
  for (int s = 3; s <= 6; ++s)
    for (int t = 0; t < 10; ++t) {
      const OmegaModule m(OmegaParams(g.nonzero(), g.rational()));
      CHECK(apply_element(m, omega_operator(s, g.integer(-6, 6), g.integer(-6, 6)), monomial(0)).empty());
    }
  const OmegaModule m(OmegaParams(1, 2));
  CHECK_FALSE(apply_element(m, omega_operator(2, 3, 1), monomial(0)).empty());
}
