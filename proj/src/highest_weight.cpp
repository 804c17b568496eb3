#include "vir/highest_weight.hpp"

#include <exception>

namespace vir {

MonoVector Verma::cyclic_rule(int k) const {
  if (k == 0) {
    MonoVector v;
    v.add({}, params_.h);
    return v;
  }
  return {};
}

nlohmann::json Verma::params_json() const {
  return {{"family", "verma"}, {"theta", to_string(params_.theta)}, {"h", to_string(params_.h)}};
}

nlohmann::json MTheta0::params_json() const { return {{"family", "mtheta0"}, {"theta", to_string(params().theta)}}; }

nlohmann::json SimpleQuotient::params_json() const {
  return {{"family", "simple_quotient"},
          {"theta", to_string(params().theta)},
          {"h", to_string(params().h)},
          {"level_cap", cap_}};
}

Matrix gram_matrix(const VermaParams& p, long level, Exec exec) {
  if (level < 1) throw PreconditionError("gram_matrix needs level >= 1");
  const Verma verma(p);
  const auto basis = monomials_at(-1, level);
  const long n = static_cast<long>(basis.size());
  Matrix g(basis.size(), basis.size());
  auto row = [&](long a) {
    for (long b = 0; b < n; ++b) {
      MonoVector v = MonoVector::unit(basis[b]);
      for (int f : basis[a]) v = verma.act_on(-f, v);
      g(a, b) = v.coeff({});
    }
  };
  if (exec == Exec::serial) {
    for (long a = 0; a < n; ++a) row(a);
  } else {
    std::vector<std::exception_ptr> errors(basis.size());
#pragma omp parallel for schedule(dynamic)
    for (long a = 0; a < n; ++a) {
      try {
        row(a);
      } catch (...) {
        errors[a] = std::current_exception();
      }
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  return g;
}

std::vector<PbwVector> singular_vectors(const VermaParams& p, long level, Exec exec) {
  if (level < 1) throw PreconditionError("singular_vectors needs level >= 1");
  const Verma verma(p);
  const auto cols = monomials_at(-1, level);
  const auto rows1 = monomials_at(-1, level - 1);
  const auto rows2 = level >= 2 ? monomials_at(-1, level - 2) : std::vector<Monomial>{};
  Matrix m(rows1.size() + rows2.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const MonoVector u = MonoVector::unit(cols[c]);
    const MonoVector a1 = verma.act_on(1, u);
    const MonoVector a2 = verma.act_on(2, u);
    for (std::size_t r = 0; r < rows1.size(); ++r) m(r, c) = a1.coeff(rows1[r]);
    for (std::size_t r = 0; r < rows2.size(); ++r) m(rows1.size() + r, c) = a2.coeff(rows2[r]);
  }
  std::vector<PbwVector> out;
  for (auto& x : nullspace(m, exec)) {
    x = primitive(std::move(x));
    MonoVector v;
    for (std::size_t c = 0; c < cols.size(); ++c) v.add(cols[c], x[c]);
    out.push_back(verma.vector(std::move(v)));
  }
  return out;
}

MTheta0::Reducer MTheta0::build_level(long w) const {
  Reducer red;
  for (const auto& word : monomials_at(-1, w - 1)) {
    MonoVector v = MonoVector::unit({-1});
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = verma_.act_on(*it, v);
    Reducer::Vector pv;
    for (const auto& [m, c] : v) pv.add(m, c);
    red.insert(pv);
  }
  return red;
}

SimpleQuotient::Reducer SimpleQuotient::build_level(long w) const {
  if (w > cap_)
    throw WindowError("simple quotient needs level " + std::to_string(w) + " beyond the cap " + std::to_string(cap_));
  Reducer red;
  const auto basis = monomials_at(-1, w);
  for (const auto& x : nullspace(gram_matrix(params(), w))) {
    Reducer::Vector pv;
    for (std::size_t i = 0; i < basis.size(); ++i) pv.add(basis[i], x[i]);
    red.insert(pv);
  }
  return red;
}

}  // namespace vir
