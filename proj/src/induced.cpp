#include "vir/induced.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <mutex>

namespace vir {

InducedParams::InducedParams(int n_, Scalar lambda_, Scalar theta_, std::vector<Scalar> s_)
    : n(n_), lambda(std::move(lambda_)), theta(std::move(theta_)), s(std::move(s_)) {
  if (n < 0) throw PreconditionError("induced module needs n >= 0");
  if (is_zero(lambda)) throw PreconditionError("lambda must be nonzero");
  if (s.size() != static_cast<std::size_t>(n + 1))
    throw PreconditionError("induced module needs " + std::to_string(n + 1) + " values s_n..s_2n");
}

const Scalar& InducedParams::at(int k) const {
  static const Scalar zero = 0;
  if (k < n || k > 2 * n) return zero;
  return s[static_cast<std::size_t>(k - n)];
}

Scalar induced_sigma(const InducedParams& p, int k) {
  if (k < p.n) throw PreconditionError("sigma_k needs k >= n");
  if (k <= 2 * p.n) return p.at(k);
  const int e = k - 2 * p.n;
  return -Scalar(e) * p.at(2 * p.n - 1) * power(p.lambda, e + 1) + Scalar(e + 1) * p.at(2 * p.n) * power(p.lambda, e);
}

Scalar b_action_scalar(const InducedParams& p, int k) {
  if (p.n == 0) {
    if (k < -1) throw PreconditionError("b_action_scalar needs k >= -1 when n = 0");
    return Scalar(k) * power(p.lambda, k) * p.at(0);
  }
  if (k < p.n) throw PreconditionError("b_action_scalar needs k >= n");
  return induced_sigma(p, k);
}

MonoVector InducedModule::cyclic_rule(int k) const {
  const int n = params_.n;
  MonoVector v;
  v.add({n - 1}, power(params_.lambda, k - n + 1));
  v.add({}, induced_sigma(params_, k));
  return v;
}

SimplicityReport InducedModule::simplicity() const { return induced_is_simple(params_, bound_); }

IsoClass InducedModule::iso_class() const {
  IsoClass c{"induced", {Scalar(params_.n), params_.lambda, params_.theta}};
  c.key.insert(c.key.end(), params_.s.begin(), params_.s.end());
  return c;
}

nlohmann::json InducedModule::params_json() const {
  nlohmann::json s = nlohmann::json::array();
  for (const auto& x : params_.s) s.push_back(to_string(x));
  return {{"family", "induced"},
          {"n", params_.n},
          {"lambda", to_string(params_.lambda)},
          {"theta", to_string(params_.theta)},
          {"s", s}};
}

ParamImage param_map(const InducedParams& p) {
  const Scalar& l = p.lambda;
  if (p.n == 0) return {p.at(0) + 1, MTheta0Params{p.theta}};
  if (p.n == 1) {
    const Scalar b = 1 + power(l, -2) * (p.at(2) - l * p.at(1));
    const Scalar h = power(l, -2) * (p.at(2) - 2 * l * p.at(1));
    return {b, VermaParams{p.theta, h}};
  }
  const int m = p.n - 1;  // Whittaker index
  const Scalar& top1 = p.at(2 * m + 1);
  const Scalar& top2 = p.at(2 * m + 2);
  const Scalar b = 1 + power(l, -2 * m - 2) * (top2 - l * top1);
  std::vector<Scalar> lambdas;
  lambdas.push_back(power(l, -m - 2) * (Scalar(m + 1) * top2 - Scalar(m + 2) * l * top1));
  for (int k = m + 1; k <= 2 * m; ++k) {
    const int e = k - 2 * m - 2;
    lambdas.push_back(p.at(k) - power(l, e) * (-Scalar(e) * l * top1 + Scalar(k - 2 * m - 1) * top2));
  }
  return {b, WhittakerParams(m, std::move(lambdas), p.theta)};
}

std::vector<Scalar> inverse_param_map(int n, const Scalar& lambda, const Scalar& b, const FactorParams& factor) {
  if (is_zero(lambda)) throw PreconditionError("lambda must be nonzero");
  const Scalar& l = lambda;
  if (n == 0) {
    if (!std::holds_alternative<MTheta0Params>(factor)) throw FamilyMismatch("n = 0 pairs with M(theta,0)");
    return {b - 1};
  }
  if (n == 1) {
    const auto* v = std::get_if<VermaParams>(&factor);
    if (!v) throw FamilyMismatch("n = 1 pairs with a Verma module");
    return {l * (b - 1 - v->h), l * l * (2 * (b - 1) - v->h)};
  }
  const auto* w = std::get_if<WhittakerParams>(&factor);
  if (!w || w->n != n - 1) throw FamilyMismatch("n >= 2 pairs with a Whittaker module of index n-1");
  const int m = w->n;
  std::vector<Scalar> s;
  for (int k = m + 1; k <= 2 * m + 2; ++k)
    s.push_back(power(l, k) * Scalar(k - m) * (b - 1) + w->lambda(k) - power(l, k - m) * w->lambda(m));
  return s;
}

std::shared_ptr<const PbwModule> make_factor(const FactorParams& f) {
  return std::visit(
      [](const auto& p) -> std::shared_ptr<const PbwModule> {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, MTheta0Params>)
          return std::make_shared<MTheta0>(p.theta);
        else if constexpr (std::is_same_v<T, VermaParams>)
          return std::make_shared<Verma>(p);
        else
          return std::make_shared<Whittaker>(p);
      },
      f);
}

TensorModule tensor_image(const InducedParams& p) {
  ParamImage img = param_map(p);
  return TensorModule(OmegaParams(p.lambda, img.b), make_factor(img.factor));
}

SimplicityReport induced_is_simple(const InducedParams& p, long bound) {
  SimplicityReport r;
  const Scalar& l = p.lambda;
  if (p.n == 0) {
    if (is_zero(p.at(0))) {
      r.verdict = Verdict::not_simple;
      r.reason = "s_0 = 0";
      return r;
    }
    return mtheta0_is_simple(p.theta);
  }
  const int m = p.n - 1;
  const Scalar& top1 = p.at(2 * m + 1);
  const Scalar& top2 = p.at(2 * m + 2);
  if (top2 == l * top1) {
    r.verdict = Verdict::not_simple;
    r.reason = "s_{2n} = lambda s_{2n-1}";
    return r;
  }
  if (p.n == 1) {
    const Scalar h = power(l, -2) * (p.at(2) - 2 * l * p.at(1));
    return verma_is_simple(p.theta, h, bound);
  }
  const bool first = p.at(2 * m - 1) != power(l, -3) * (3 * l * top1 - 2 * top2);
  const bool second = p.at(2 * m) != power(l, -2) * (2 * l * top1 - top2);
  if (first || second) {
    r.verdict = Verdict::simple;
  } else {
    r.verdict = Verdict::not_simple;
    r.reason = "Whittaker parameters lambda_{2n-1} = lambda_{2n} = 0";
  }
  return r;
}

namespace {

class Rho {
 public:
  explicit Rho(const TensorModule& t) : t_(t) {}

  // word applied to 1 ⊗ v, rightmost letter first
  TensorVector operator()(const Monomial& word) const {
    if (word.empty()) return t_.cyclic();
    {
      std::lock_guard lock(mutex_);
      auto it = memo_.find(word);
      if (it != memo_.end()) return it->second;
    }
    TensorVector v = t_.act(word.front(), (*this)(Monomial(word.begin() + 1, word.end())));
    std::lock_guard lock(mutex_);
    memo_.emplace(word, v);
    return v;
  }

  TensorVector operator()(const MonoVector& v) const {
    TensorVector out;
    for (const auto& [m, c] : v) out.axpy(c, (*this)(m));
    return out;
  }

 private:
  const TensorModule& t_;
  mutable std::mutex mutex_;
  mutable std::map<Monomial, TensorVector> memo_;
};

// The order of the PBW proof: factor exponent vector lexicographic from the
// top letter down, then ∂-degree.
bool key_less(const TensorKey& a, const TensorKey& b) {
  if (a.second != b.second) {
    auto ea = exponents(a.second), eb = exponents(b.second);
    std::map<int, int, std::greater<>> xa(ea.begin(), ea.end()), xb(eb.begin(), eb.end());
    auto ia = xa.begin(), ib = xb.begin();
    while (ia != xa.end() || ib != xb.end()) {
      int la = ia == xa.end() ? std::numeric_limits<int>::min() : ia->first;
      int lb = ib == xb.end() ? std::numeric_limits<int>::min() : ib->first;
      int letter = std::max(la, lb);
      int ka = la == letter ? ia->second : 0;
      int kb = lb == letter ? ib->second : 0;
      if (ka != kb) return ka < kb;
      if (la == letter) ++ia;
      if (lb == letter) ++ib;
    }
  }
  return a.first < b.first;
}

}  // namespace

IsoReport iso_verifier(const InducedParams& p, const Truncation& w) {
  w.validate();
  IsoReport rep;
  rep.window = w;
  rep.image = param_map(p);
  const TensorModule t = tensor_image(p);
  const InducedModule ind(p);
  const Rho rho(t);
  const int n = p.n;
  const Scalar& l = p.lambda;
  const TensorVector one = t.cyclic();

  // (a)
  auto relation = [&](int k, int ref, const Scalar& coeff, const Scalar& expected) {
    TensorVector lhs = t.act(k, one);
    lhs.axpy(-coeff, t.act(ref, one));
    const Scalar found = lhs.coeff(one.begin()->first);
    rep.relation_scalars.emplace_back(k, found);
    if (lhs != expected * one) {
      rep.relations = false;
      rep.failures.push_back({'a', "relation at k=" + std::to_string(k) + ": " + to_string(lhs) + " expected " +
                                       to_string(expected) + " (1 ⊗ v)"});
    }
  };
  for (int k = n; k <= 2 * n + 4; ++k) relation(k, n - 1, power(l, k - n + 1), induced_sigma(p, k));
  if (n == 0)
    for (int k = -1; k <= 4; ++k) relation(k, 0, power(l, k), b_action_scalar(p, k));

  // window of Ind: d_{n-1}^e M with e <= D and M a factor basis monomial of weight <= L
  const auto factor_basis = t.factor().basis(w.L);
  std::vector<std::pair<int, Monomial>> cells;
  for (int e = 0; e <= w.D; ++e)
    for (const auto& m : factor_basis) cells.emplace_back(e, m);
  rep.basis_size = cells.size();

  // (b)
  const long total = static_cast<long>(cells.size());
  std::vector<std::vector<IsoFailure>> per(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < total; ++i) {
    try {
      const auto& [e, m] = cells[i];
      Monomial u(static_cast<std::size_t>(e), n - 1);
      u.insert(u.end(), m.begin(), m.end());
      const TensorVector image = rho(u);
      for (int j = -w.K; j <= w.K; ++j) {
        TensorVector lhs = rho(ind.act_terms(j, u));
        if (lhs != t.act(j, image))
          per[i].push_back({'b', "d_" + std::to_string(j) + " on " + to_string(u)});
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (auto& f : per)
    for (auto& x : f) {
      rep.intertwines = false;
      rep.failures.push_back(std::move(x));
    }

  // (c) words M d_{n-1}^e, d_{n-1} applied first
  EchelonBasis<TensorKey> span;
  for (const auto& [e, m] : cells) {
    Monomial word = m;
    word.insert(word.end(), static_cast<std::size_t>(e), n - 1);
    const TensorVector image = rho(word);
    const TensorKey diag{e, m};
    const Scalar want = power(l, static_cast<long>(n - 1) * e);
    bool ok = image.coeff(diag) == want;
    for (const auto& [k, c] : image)
      if (k != diag && !key_less(k, diag)) ok = false;
    if (!ok) {
      rep.triangular = false;
      rep.failures.push_back({'c', "leading term of " + to_string(m) + " after d_" + std::to_string(n - 1) + "^" +
                                       std::to_string(e)});
    }
    span.insert(image);
  }
  rep.rank = span.dim();
  if (rep.rank != rep.basis_size) {
    rep.triangular = false;
    rep.failures.push_back({'c', "rank " + std::to_string(rep.rank) + " of " + std::to_string(rep.basis_size)});
  }
  return rep;
}

}  // namespace vir
