#include "vir/tensor.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <sstream>

namespace vir {

void Truncation::validate() const {
  if (D < 1 || L < 1 || K < 1) throw PreconditionError("window " + str() + " needs D, L, K >= 1");
}

std::string Truncation::str() const {
  return "(" + std::to_string(D) + "," + std::to_string(L) + "," + std::to_string(K) + ")";
}

Truncation parse_truncation(const std::string& text) {
  Truncation t;
  char c1 = 0, c2 = 0;
  std::istringstream is(text);
  if (!(is >> t.D >> c1 >> t.L >> c2 >> t.K) || c1 != ',' || c2 != ',' || !(is >> std::ws).eof())
    throw ParseError("window must look like D,L,K, got '" + text + "'");
  t.validate();
  return t;
}

TensorModule::TensorModule(OmegaParams omega, std::shared_ptr<const PbwModule> factor)
    : omega_(std::move(omega)), factor_(std::move(factor)) {
  if (!factor_) throw PreconditionError("tensor module needs a factor");
}

TensorVector TensorModule::act(int n, const Vector& v) const {
  Vector out;
  for (const auto& [key, c] : v) {
    const auto& [j, m] = key;
    for (const auto& [d, pc] : omega_act(omega_, n, monomial(j))) out.add({d, m}, c * pc);
    for (const auto& [fm, fc] : factor_->act_terms(n, m)) out.add({j, fm}, c * fc);
  }
  return out;
}

void TensorModule::check_member(const Vector& v) const {
  for (const auto& [key, c] : v) {
    if (key.first < 0) throw PreconditionError("negative ∂-degree in tensor vector");
    if (!factor_->is_basis_monomial(key.second))
      throw FamilyMismatch("not a " + family_name(factor_->family()) + " basis monomial: " + to_string(key.second));
  }
}

TensorVector TensorModule::cyclic() const { return Vector::unit({0, Monomial{}}); }

TensorVector TensorModule::pure(const Polynomial& p, const MonoVector& w) const {
  Vector out;
  for (const auto& [d, pc] : p)
    for (const auto& [m, c] : w) out.add({d, m}, pc * c);
  return out;
}

bool TensorModule::in_window(const TensorKey& k, const Truncation& t) const {
  return k.first >= 0 && k.first <= t.D && factor_->weight(k.second) <= t.L;
}

std::vector<TensorKey> TensorModule::window_basis(const Truncation& t) const {
  std::vector<TensorKey> out;
  for (const auto& m : factor_->basis(t.L))
    for (int j = 0; j <= t.D; ++j) out.emplace_back(j, m);
  return out;
}

std::vector<std::pair<int, MonoVector>> components(const TensorVector& v) {
  std::map<int, MonoVector> by;
  for (const auto& [key, c] : v) by[key.first].add(key.second, c);
  return {by.begin(), by.end()};
}

SimplicityReport theorem1_is_simple(const TensorModule& t) {
  if (t.factor().family() == Family::induced)
    throw PreconditionError("induced modules are not a catalog tensor factor");
  if (t.omega().b == 1) {
    SimplicityReport r;
    r.verdict = Verdict::not_simple;
    r.reason = "b = 1";
    return r;
  }
  return t.factor().simplicity();
}

bool theorem2_classify(const TensorModule& a, const TensorModule& b) {
  for (const TensorModule* t : {&a, &b})
    if (theorem1_is_simple(*t).verdict == Verdict::not_simple)
      throw PreconditionError("classification needs simple tensor modules");
  return a.omega().lambda == b.omega().lambda && a.omega().b == b.omega().b &&
         a.factor().iso_class() == b.factor().iso_class();
}

TensorVector omega_eval(const TensorModule& t, int s, int l, int m, const TensorVector& v) {
  return apply_element(t, omega_operator(s, l, m), v);
}

OmegaWitness omega_nonvanishing(const TensorModule& t, int s) {
  if (s < 0) throw PreconditionError("s must be non-negative");
  OmegaWitness w;
  w.s = s;
  w.m = s + 2;
  const PbwModule& f = t.factor();
  long k = f.annihilation_index(f.cyclic());
  for (int i = 0; i <= s; ++i) k = std::max(k, f.annihilation_index(f.act(-w.m + i, f.cyclic())));
  w.annihilation = k;
  w.l = static_cast<int>(k) + 1;
  w.value = omega_eval(t, s, w.l, -w.m, t.cyclic());
  return w;
}

std::vector<int> degree_growth(const TensorModule& t, int j, int steps) {
  std::vector<int> out;
  TensorVector v = t.cyclic();
  for (int k = 0; k <= steps; ++k) {
    int d = -1;
    for (const auto& [key, c] : v) d = std::max(d, key.first);
    out.push_back(d);
    if (k < steps) v = t.act(j, v);
  }
  return out;
}

bool ClosureResult::contains(const TensorVector& v) const {
  EchelonBasis<TensorKey> e;
  for (const auto& b : basis) e.insert(b);
  return e.contains(v);
}

namespace {

// Window keys get ids 1..N in window order, everything else negative ids in
// discovery order, so echelon rows with a positive pivot live in the window.
class KeyIndex {
 public:
  explicit KeyIndex(std::vector<TensorKey> window) : window_(std::move(window)) {
    for (std::size_t i = 0; i < window_.size(); ++i) ids_.emplace(window_[i], static_cast<long>(i) + 1);
  }

  SparseVector<long> encode(const TensorVector& v) {
    SparseVector<long> out;
    for (const auto& [k, c] : v) {
      auto it = ids_.find(k);
      if (it == ids_.end()) it = ids_.emplace(k, -static_cast<long>(++outside_)).first;
      out.add(it->second, c);
    }
    return out;
  }

  TensorVector decode(const SparseVector<long>& v) const {
    TensorVector out;
    for (const auto& [id, c] : v) {
      if (id <= 0) throw std::logic_error("decoding a key outside the window");
      out.add(window_[static_cast<std::size_t>(id - 1)], c);
    }
    return out;
  }

 private:
  std::vector<TensorKey> window_;
  std::map<TensorKey, long> ids_;
  std::size_t outside_ = 0;
};

}  // namespace

ClosureResult cyclic_closure(const TensorModule& t, const std::vector<TensorVector>& generators, const Truncation& w) {
  w.validate();
  ClosureResult result;
  result.window = w;
  KeyIndex index(t.window_basis(w));
  EchelonBasis<long> pool;
  std::vector<TensorVector> frontier;

  for (const auto& g : generators) {
    t.check_member(g);
    for (const auto& [k, c] : g)
      if (!t.in_window(k, w)) throw WindowError("generator term " + to_string(k.second) + " lies outside window " + w.str());
    auto row = pool.insert(index.encode(g));
    if (!row.empty()) frontier.push_back(index.decode(row));
  }

  const int ops = 2 * w.K + 1;
  while (!frontier.empty()) {
    ++result.rounds;
    const long tasks = static_cast<long>(frontier.size()) * ops;
    std::vector<TensorVector> images(static_cast<std::size_t>(tasks));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(tasks));
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < tasks; ++i) {
      try {
        images[i] = t.act(static_cast<int>(i % ops) - w.K, frontier[static_cast<std::size_t>(i / ops)]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    result.images += images.size();

    std::vector<TensorVector> next;
    for (const auto& img : images) {
      auto row = pool.insert(index.encode(img));
      if (!row.empty() && row.begin()->first > 0) next.push_back(index.decode(row));
    }
    frontier = std::move(next);
  }

  EchelonBasis<long> kept;
  for (const auto& [pivot, row] : pool.rows())
    if (pivot > 0) kept.insert(row);
  for (const auto& row : kept.reduced_rows()) result.basis.push_back(index.decode(row));
  return result;
}

ShapeReport theorem10_shape(const TensorModule& t, const ClosureResult& closure, int margin) {
  ShapeReport r;
  r.window = closure.window;
  r.margin = margin;
  const int d_in = closure.window.D - margin;
  const long l_in = closure.window.L - margin;

  std::vector<MonoVector> all, constant;
  for (const auto& v : closure.basis)
    for (auto& [d, comp] : components(v)) {
      if (d == 0) constant.push_back(comp);
      all.push_back(std::move(comp));
    }
  auto everything = [](const Monomial&) { return true; };
  r.x = restrict_span(all, everything);
  r.x2 = restrict_span(constant, everything);
  if (d_in < 0 || l_in < 0) {
    r.verdict = "inconclusive";
    return r;
  }

  EchelonBasis<TensorKey> span;
  for (const auto& b : closure.basis) span.insert(b);
  const PbwModule& f = t.factor();
  auto inner = [&](const Monomial& m) { return f.weight(m) <= l_in; };

  auto check = [&](const std::vector<MonoVector>& xs, int from) -> bool {
    for (const auto& x : restrict_span(xs, inner))
      for (int d = from; d <= d_in; ++d) {
        TensorVector v = t.pure(monomial(d), x);
        if (!span.contains(v)) {
          r.missing = v;
          return false;
        }
      }
    return true;
  };

  if (t.omega().b != 1) {
    r.verdict = check(r.x, 0) ? "pure" : "not_pure";
  } else {
    r.verdict = check(r.x, 1) && check(r.x2, 0) ? "split" : "not_split";
  }
  return r;
}

std::vector<TensorVector> random_window_vectors(const TensorModule& t, const Truncation& w, std::size_t count,
                                                std::uint64_t seed) {
  w.validate();
  const auto keys = t.window_basis(w);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
  std::uniform_int_distribution<int> nterms(1, 4), num(-5, 5), den(1, 3);
  std::vector<TensorVector> out;
  while (out.size() < count) {
    TensorVector v;
    for (int i = nterms(rng); i > 0; --i) {
      int n = 0;
      while (n == 0) n = num(rng);
      Scalar c(n, den(rng));
      c.canonicalize();
      v.add(keys[pick(rng)], c);
    }
    if (!v.empty()) out.push_back(std::move(v));
  }
  return out;
}

std::string to_string(const TensorVector& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ") ∂^" << k.first << " ⊗ " << to_string(k.second);
  }
  return os.str();
}

}  // namespace vir
