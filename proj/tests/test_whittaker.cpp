#include "doctest.h"

#include "gen.hpp"
#include "vir/whittaker.hpp"

using namespace vir;

namespace {

PbwVector unit(const PbwModule& m, Monomial mono) { return m.vector(MonoVector::unit(std::move(mono))); }

MonoVector terms(std::initializer_list<std::pair<Monomial, Scalar>> list) {
  MonoVector v;
  for (const auto& [m, c] : list) v.add(m, c);
  return v;
}

WhittakerParams random_params(test::Gen& g, int n) {
  std::vector<Scalar> ls;
  for (int j = n; j <= 2 * n; ++j) ls.push_back(g.rational());
  return WhittakerParams(n, ls, g.rational());
}

}  // namespace

TEST_CASE("whittaker action examples") {
  const Scalar l1 = 7, l2 = 3;
  const Whittaker w(WhittakerParams(1, {l1, l2}, 0));
  CHECK(w.act(3, w.cyclic()).empty());
  CHECK(w.act(1, w.cyclic()) == l1 * w.cyclic());
  CHECK(w.act(2, unit(w, {0})) == l2 * unit(w, {0}) - Scalar(2 * l2) * w.cyclic());
  CHECK(w.act(0, w.cyclic()) == unit(w, {0}));
}

TEST_CASE("whittaker action values") {
  // frozen from an independent normal-ordering computation
  const Whittaker w(WhittakerParams(2, {2, 3, 5}, 7));
  CHECK(w.act(3, unit(w, {1, 0})).terms() == terms({{{1, 0}, 3}, {{1}, -9}, {{0}, -10}, {{}, 40}}));
  CHECK(w.act(4, unit(w, {1, -1})).terms() == terms({{{1, -1}, 5}, {{1}, -15}, {{}, 90}}));
}

TEST_CASE("whittaker parameters") {
  CHECK_THROWS_AS(WhittakerParams(0, {1}, 0), PreconditionError);
  CHECK_THROWS_AS(WhittakerParams(2, {1, 2}, 0), PreconditionError);
  const WhittakerParams p(2, {1, 2, 3}, 0);
  CHECK(p.lambda(3) == 2);
  CHECK(p.lambda(5) == 0);
  CHECK(p.lambda(1) == 0);
}

TEST_CASE("whittaker simplicity") {
  CHECK(whittaker_is_simple(WhittakerParams(1, {0, 1}, 0)));
  CHECK_FALSE(whittaker_is_simple(WhittakerParams(1, {0, 0}, 0)));
  CHECK_FALSE(whittaker_is_simple(WhittakerParams(2, {5, 0, 0}, 0)));
  CHECK(whittaker_is_simple(WhittakerParams(2, {0, 1, 0}, 0)));
  CHECK(Whittaker(WhittakerParams(1, {1, 0}, 3)).simplicity().simple());
}

TEST_CASE("cyclic vector relations") {
  test::Gen g(31);
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 5; ++t) {
      const auto p = random_params(g, n);
      const Whittaker w(p);
      for (int k = n; k <= 2 * n; ++k) CHECK(w.act(k, w.cyclic()) == p.lambda(k) * w.cyclic());
      for (int k = 2 * n + 1; k <= 2 * n + 6; ++k) CHECK(w.act(k, w.cyclic()).empty());
      CHECK(w.annihilation_index(w.cyclic()) <= 2 * n);
    }
}

TEST_CASE("PBW degree changes") {
  test::Gen g(32);
  for (int n = 1; n <= 2; ++n) {
    const Whittaker w(random_params(g, n));
    for (const auto& mono : w.basis(4)) {
      for (int j = -3; j <= n - 1; ++j) {
        const auto r = w.act(j, unit(w, mono));
        bool raised = false;
        for (const auto& [m, c] : r.terms()) {
          CHECK(m.size() <= mono.size() + 1);
          raised = raised || m.size() == mono.size() + 1;
        }
        CHECK(raised);
      }
      for (int k = n; k <= 2 * n + 3; ++k) {
        const auto r = w.act(k, unit(w, mono));
        for (const auto& [m, c] : r.terms()) CHECK(m.size() <= mono.size());
      }
    }
  }
}

TEST_CASE("whittaker modules satisfy the bracket") {
  test::Gen g(33);
  for (int n = 1; n <= 2; ++n)
    for (int t = 0; t < 2; ++t) {
      const Whittaker w(random_params(g, n));
      std::vector<PbwVector> basis;
      for (const auto& mono : w.basis(4)) basis.push_back(unit(w, mono));
      CHECK(commutator_sweep(w, basis, 6).empty());
    }
}
