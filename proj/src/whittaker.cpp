#include "vir/whittaker.hpp"

namespace vir {

WhittakerParams::WhittakerParams(int n_, std::vector<Scalar> lambdas_, Scalar theta_)
    : n(n_), lambdas(std::move(lambdas_)), theta(std::move(theta_)) {
  if (n < 1) throw PreconditionError("whittaker needs n >= 1");
  if (lambdas.size() != static_cast<std::size_t>(n + 1))
    throw PreconditionError("whittaker needs " + std::to_string(n + 1) + " values lambda_n..lambda_2n");
}

const Scalar& WhittakerParams::lambda(int j) const {
  static const Scalar zero = 0;
  if (j < n || j > 2 * n) return zero;
  return lambdas[static_cast<std::size_t>(j - n)];
}

bool whittaker_is_simple(const WhittakerParams& p) {
  return !is_zero(p.lambda(2 * p.n - 1)) || !is_zero(p.lambda(2 * p.n));
}

MonoVector Whittaker::cyclic_rule(int k) const {
  MonoVector v;
  v.add({}, params_.lambda(k));
  return v;
}

SimplicityReport Whittaker::simplicity() const {
  SimplicityReport r;
  if (whittaker_is_simple(params_)) {
    r.verdict = Verdict::simple;
  } else {
    r.verdict = Verdict::not_simple;
    r.reason = "lambda_{2n-1} = lambda_{2n} = 0";
  }
  return r;
}

IsoClass Whittaker::iso_class() const {
  IsoClass c{"whittaker", {Scalar(params_.n), params_.theta}};
  c.key.insert(c.key.end(), params_.lambdas.begin(), params_.lambdas.end());
  return c;
}

nlohmann::json Whittaker::params_json() const {
  nlohmann::json ls = nlohmann::json::array();
  for (const auto& l : params_.lambdas) ls.push_back(to_string(l));
  return {{"family", "whittaker"}, {"n", params_.n}, {"theta", to_string(params_.theta)}, {"lambdas", ls}};
}

}  // namespace vir
