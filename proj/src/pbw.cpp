#include "vir/pbw.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace vir {

std::vector<std::pair<int, int>> exponents(const Monomial& m) {
  std::vector<std::pair<int, int>> out;
  for (int a : m) {
    if (!out.empty() && out.back().first == a)
      ++out.back().second;
    else
      out.emplace_back(a, 1);
  }
  return out;
}

Monomial from_exponents(const std::vector<std::pair<int, int>>& e) {
  Monomial m;
  for (const auto& [i, k] : e) {
    if (k < 0) throw ParseError("negative exponent in partition");
    m.insert(m.end(), static_cast<std::size_t>(k), i);
  }
  std::sort(m.begin(), m.end(), std::greater<>());
  return m;
}

std::string to_string(const Monomial& m) {
  if (m.empty()) return "v";
  std::ostringstream os;
  for (const auto& [i, k] : exponents(m)) {
    os << "d(" << i << ")";
    if (k > 1) os << "^" << k;
    os << " ";
  }
  os << "v";
  return os.str();
}

std::string family_name(Family f) {
  switch (f) {
    case Family::verma: return "verma";
    case Family::mtheta0: return "mtheta0";
    case Family::simple_quotient: return "simple_quotient";
    case Family::whittaker: return "whittaker";
    case Family::induced: return "induced";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  for (Family f : {Family::verma, Family::mtheta0, Family::simple_quotient, Family::whittaker, Family::induced})
    if (family_name(f) == s) return f;
  throw ParseError("unknown module family '" + s + "'");
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::simple: return "simple";
    case Verdict::not_simple: return "not_simple";
    case Verdict::simple_up_to_bound: return "simple_up_to_bound";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

nlohmann::json to_json(const SimplicityReport& r) {
  nlohmann::json j;
  j["verdict"] = verdict_name(r.verdict);
  if (r.verdict == Verdict::simple)
    j["simple"] = true;
  else if (r.verdict == Verdict::not_simple)
    j["simple"] = false;
  else
    j["simple"] = nullptr;
  if (r.kac) j["witness"] = {{"k", r.kac->k}, {"l", r.kac->l}};
  if (r.central) j["witness"] = {{"p", r.central->p}, {"q", r.central->q}};
  if (r.verdict == Verdict::simple_up_to_bound) j["bound"] = r.bound;
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

std::size_t ActionCache::Hash::operator()(const std::pair<int, Monomial>& key) const noexcept {
  std::size_t h = std::hash<int>{}(key.first);
  for (int a : key.second) h ^= std::hash<int>{}(a) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::optional<MonoVector> ActionCache::find(int k, const Monomial& m) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find({k, m});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void ActionCache::insert(int k, const Monomial& m, const MonoVector& v) const {
  std::unique_lock lock(mutex_);
  table_.try_emplace({k, m}, v);
}

std::size_t ActionCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

namespace {

void partitions(long remaining, long max_part, std::vector<long>& parts, std::vector<std::vector<long>>& out) {
  if (remaining == 0) {
    out.push_back(parts);
    return;
  }
  for (long p = std::min(remaining, max_part); p >= 1; --p) {
    parts.push_back(p);
    partitions(remaining - p, p, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomials_at(int top, long weight) {
  std::vector<std::vector<long>> parts;
  std::vector<long> scratch;
  partitions(weight, weight, scratch, parts);
  std::vector<Monomial> out;
  out.reserve(parts.size());
  for (const auto& p : parts) {
    Monomial m;
    for (auto it = p.rbegin(); it != p.rend(); ++it) m.push_back(top + 1 - static_cast<int>(*it));
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Monomial> monomials_up_to(int top, long max_weight) {
  std::vector<Monomial> out;
  for (long w = 0; w <= max_weight; ++w) {
    auto level = monomials_at(top, w);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Monomial> PbwModule::basis(long max_weight) const { return monomials_up_to(top(), max_weight); }

long PbwModule::weight(const Monomial& m) const {
  long w = 0;
  for (int a : m) w += top() + 1 - a;
  return w;
}

bool PbwModule::is_basis_monomial(const Monomial& m) const {
  if (!std::is_sorted(m.begin(), m.end(), std::greater<>())) return false;
  return m.empty() || m.front() <= top();
}

void PbwModule::check_member(const Vector& v) const {
  if (v.family() != family())
    throw FamilyMismatch("expected a " + family_name(family()) + " vector, got " + family_name(v.family()));
  for (const auto& [m, c] : v.terms())
    if (!is_basis_monomial(m)) throw PreconditionError("not a basis monomial: " + to_string(m));
}

MonoVector PbwModule::act_on(int k, const MonoVector& v) const {
  MonoVector out;
  for (const auto& [m, c] : v) out.axpy(c, act_terms(k, m));
  return out;
}

PbwModule::Vector PbwModule::act(int k, const Vector& v) const {
  check_member(v);
  return Vector(family(), act_on(k, v.terms()));
}

long PbwModule::annihilation_index(const Vector& v) const {
  auto cyc = cyclic_annihilation();
  if (!cyc)
    throw PreconditionError("the positive part does not act locally finitely on " + family_name(family()) +
                            " modules");
  check_member(v);
  long bound = 0;
  for (const auto& [m, c] : v.terms()) {
    long mass = 0;
    for (int a : m)
      if (a < 0) mass -= a;
    bound = std::max(bound, *cyc + mass);
  }
  for (long j = bound; j >= 1; --j)
    if (!act_on(static_cast<int>(j), v.terms()).empty()) return j;
  return 0;
}

MonoVector FreePbwModule::act_vec(int k, const MonoVector& v) const {
  MonoVector out;
  for (const auto& [m, c] : v) out.axpy(c, act_terms(k, m));
  return out;
}

// d_k d_a R = d_a (d_k R) + (a - k) d_{k+a} R + delta_{k,-a} (k^3 - k)/12 θ R
MonoVector FreePbwModule::act_terms(int k, const Monomial& m) const {
  const int t = top();
  if (m.empty()) {
    if (k <= t) return MonoVector::unit(Monomial{k});
    return cyclic_rule(k);
  }
  if (k <= t && k >= m.front()) {
    Monomial r;
    r.reserve(m.size() + 1);
    r.push_back(k);
    r.insert(r.end(), m.begin(), m.end());
    return MonoVector::unit(r);
  }
  if (auto hit = cache_.find(k, m)) return *hit;

  const int a = m.front();
  const Monomial rest(m.begin() + 1, m.end());
  MonoVector out = act_vec(a, act_terms(k, rest));
  if (a != k) out.axpy(Scalar(a - k), act_terms(k + a, rest));
  if (k == -a) {
    Scalar lk(k);
    out.add(rest, (lk * lk * lk - lk) / 12 * central_charge());
  }
  cache_.insert(k, m, out);
  return out;
}

}  // namespace vir
