#include "vir/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "vir/highest_weight.hpp"
#include "vir/induced.hpp"
#include "vir/json_io.hpp"
#include "vir/omega.hpp"
#include "vir/tensor.hpp"
#include "vir/whittaker.hpp"

namespace vir::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240229;
constexpr const char* kDefaultWindow = "6,4,6";

using AnyModule = std::variant<OmegaModule, std::shared_ptr<const PbwModule>, std::shared_ptr<const TensorModule>>;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct Options {
  std::string format = "json";
  std::uint64_t seed = kDefaultSeed;
  std::string window;

  std::string module_json, other_json;
  std::string family, factor;
  std::string lambda, b, theta, h, lambdas, s;
  std::optional<int> n;
  std::map<int, std::string> s_single;
  long level_cap = 8;

  long bound = 200;
  bool exact = false;
  std::optional<int> k;
  std::string element, vector;
  int range = 6;
  int deg = 4;
  long level = 1;
  long max_kl = 4;
  int order = 0, l = 0, m = 0;
  std::size_t random = 0;
  int margin = 2;
  bool print_basis = false;
};

// "@path" reads a file, anything else is inline JSON
json read_json(const std::string& text) {
  std::string body = text;
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw ParseError("cannot read " + text.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<Scalar> scalar_list(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_scalar(item));
  return out;
}

json scalar_list_json(const std::string& text) {
  json out = json::array();
  for (const auto& x : scalar_list(text)) out.push_back(to_string(x));
  return out;
}

Scalar require(const json& spec, const char* name) {
  if (!spec.contains(name)) throw ParseError(std::string("module needs '") + name + "'");
  return scalar_from_json(spec.at(name));
}

Scalar optional_scalar(const json& spec, const char* name, const Scalar& fallback) {
  return spec.contains(name) ? scalar_from_json(spec.at(name)) : fallback;
}

std::vector<Scalar> require_list(const json& spec, const char* name) {
  if (!spec.contains(name) || !spec.at(name).is_array()) throw ParseError(std::string("module needs a list '") + name + "'");
  std::vector<Scalar> out;
  for (const auto& x : spec.at(name)) out.push_back(scalar_from_json(x));
  return out;
}

int require_int(const json& spec, const char* name) {
  if (!spec.contains(name) || !spec.at(name).is_number_integer())
    throw ParseError(std::string("module needs an integer '") + name + "'");
  return spec.at(name).get<int>();
}

json spec_from_flags(const Options& o, const std::string& family) {
  json spec{{"family", family}};
  auto put = [&](const char* name, const std::string& v) {
    if (!v.empty()) spec[name] = v;
  };
  put("lambda", o.lambda);
  put("b", o.b);
  put("theta", o.theta);
  put("h", o.h);
  if (o.n) spec["n"] = *o.n;
  if (!o.lambdas.empty()) spec["lambdas"] = scalar_list_json(o.lambdas);
  if (!o.s.empty()) spec["s"] = scalar_list_json(o.s);
  if (!o.s_single.empty()) {
    if (!o.n) throw ParseError("--s<k> flags need --n");
    json s = json::array();
    for (int k = *o.n; k <= 2 * *o.n; ++k) {
      auto it = o.s_single.find(k);
      if (it == o.s_single.end()) throw ParseError("missing --s" + std::to_string(k));
      s.push_back(to_string(parse_scalar(it->second)));
    }
    spec["s"] = s;
  }
  if (family == "simple_quotient") spec["level_cap"] = o.level_cap;
  if (family == "tensor") {
    if (o.factor.empty()) throw ParseError("tensor family needs --factor");
    json f = spec_from_flags(o, o.factor);
    f.erase("lambda");
    f.erase("b");
    spec["factor"] = f;
  }
  return spec;
}

json module_spec(const Options& o) {
  if (!o.module_json.empty()) return read_json(o.module_json);
  if (o.family.empty()) throw ParseError("give --family or --module");
  return spec_from_flags(o, o.family);
}

InducedParams induced_from_spec(const json& spec) {
  return InducedParams(require_int(spec, "n"), optional_scalar(spec, "lambda", 1), optional_scalar(spec, "theta", 0),
                       require_list(spec, "s"));
}

std::shared_ptr<const PbwModule> pbw_from_spec(const json& spec) {
  const std::string family = spec.value("family", "");
  if (family == "verma") return std::make_shared<Verma>(VermaParams{require(spec, "theta"), require(spec, "h")});
  if (family == "mtheta0") return std::make_shared<MTheta0>(require(spec, "theta"));
  if (family == "simple_quotient")
    return std::make_shared<SimpleQuotient>(VermaParams{require(spec, "theta"), require(spec, "h")},
                                            spec.value("level_cap", 8L));
  if (family == "whittaker")
    return std::make_shared<Whittaker>(
        WhittakerParams(require_int(spec, "n"), require_list(spec, "lambdas"), optional_scalar(spec, "theta", 0)));
  if (family == "induced") return std::make_shared<InducedModule>(induced_from_spec(spec));
  throw ParseError("unknown module family '" + family + "'");
}

AnyModule module_from_spec(const json& spec) {
  if (!spec.is_object()) throw ParseError("module spec must be a JSON object");
  const std::string family = spec.value("family", "");
  if (family == "omega") return OmegaModule(OmegaParams(require(spec, "lambda"), require(spec, "b")));
  if (family == "tensor") {
    if (!spec.contains("factor")) throw ParseError("tensor module needs 'factor'");
    return std::make_shared<const TensorModule>(OmegaParams(require(spec, "lambda"), require(spec, "b")),
                                                pbw_from_spec(spec.at("factor")));
  }
  return pbw_from_spec(spec);
}

json module_json(const AnyModule& m) {
  return std::visit(overloaded{
                        [](const OmegaModule& o) -> json {
                          return {{"family", "omega"},
                                  {"lambda", to_string(o.params().lambda)},
                                  {"b", to_string(o.params().b)}};
                        },
                        [](const std::shared_ptr<const PbwModule>& p) -> json { return p->params_json(); },
                        [](const std::shared_ptr<const TensorModule>& t) -> json {
                          return {{"family", "tensor"},
                                  {"lambda", to_string(t->omega().lambda)},
                                  {"b", to_string(t->omega().b)},
                                  {"factor", t->factor().params_json()}};
                        },
                    },
                    m);
}

Truncation window_of(const Options& o) {
  if (!o.window.empty()) return parse_truncation(o.window);
  if (const char* env = std::getenv("VIRMOD_WINDOW"); env && *env) return parse_truncation(env);
  return parse_truncation(kDefaultWindow);
}

std::shared_ptr<const TensorModule> need_tensor(const AnyModule& m) {
  if (auto p = std::get_if<std::shared_ptr<const TensorModule>>(&m)) return *p;
  throw ParseError("this command needs a tensor module (--family tensor)");
}

void print_text(const json& j, std::ostream& out, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object())
        print_text(v, out, prefix + k + ".");
      else
        out << prefix << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  } else {
    out << prefix << j.dump() << "\n";
  }
}

void emit(const Options& o, const json& j, std::ostream& out) {
  if (o.format == "text")
    print_text(j, out);
  else
    out << j.dump(2) << "\n";
}

// --- commands ---------------------------------------------------------------

int cmd_act(const Options& o, std::ostream& out) {
  const AnyModule mod = module_from_spec(module_spec(o));
  if (o.k.has_value() == !o.element.empty()) throw ParseError("act needs exactly one of --k and --element");
  const UeaElement e = o.k ? generator(*o.k) : uea_from_json(read_json(o.element));
  json result = std::visit(overloaded{
                               [&](const OmegaModule& m) -> json {
                                 Polynomial v = o.vector.empty() ? monomial(0) : polynomial_from_json(read_json(o.vector));
                                 return {{"input", to_json(v)}, {"result", to_json(apply_element(m, e, v))}};
                               },
                               [&](const std::shared_ptr<const PbwModule>& m) -> json {
                                 PbwVector v = o.vector.empty() ? m->cyclic() : pbw_from_json(*m, read_json(o.vector));
                                 return {{"input", to_json(*m, v)}, {"result", to_json(*m, apply_element(*m, e, v))}};
                               },
                               [&](const std::shared_ptr<const TensorModule>& m) -> json {
                                 TensorVector v = o.vector.empty() ? m->cyclic() : tensor_from_json(*m, read_json(o.vector));
                                 return {{"input", to_json(v)}, {"result", to_json(apply_element(*m, e, v))}};
                               },
                           },
                           mod);
  result["module"] = module_json(mod);
  result["element"] = to_json(e);
  emit(o, result, out);
  return ok;
}

int cmd_bracket_check(const Options& o, std::ostream& out) {
  const AnyModule mod = module_from_spec(module_spec(o));
  if (o.range < 0 || o.deg < 0) throw ParseError("--range and --deg must be non-negative");
  json failures = json::array();
  std::size_t checked = 0;
  auto report = [&](const auto& m, const auto& basis, auto to_j) {
    checked = basis.size();
    for (const auto& f : commutator_sweep(m, basis, o.range))
      failures.push_back({{"i", f.i}, {"j", f.j}, {"vector", to_j(basis[f.vector_index])}});
  };
  std::visit(overloaded{
                 [&](const OmegaModule& m) {
                   std::vector<Polynomial> basis;
                   for (int d = 0; d <= o.deg; ++d) basis.push_back(monomial(d));
                   report(m, basis, [](const Polynomial& p) { return to_json(p); });
                 },
                 [&](const std::shared_ptr<const PbwModule>& m) {
                   std::vector<PbwVector> basis;
                   for (const auto& mono : m->basis(o.deg)) basis.push_back(m->vector(MonoVector::unit(mono)));
                   report(*m, basis, [&](const PbwVector& v) { return to_json(*m, v); });
                 },
                 [&](const std::shared_ptr<const TensorModule>& m) {
                   std::vector<TensorVector> basis;
                   for (const auto& key : m->window_basis({o.deg, o.deg, 1})) basis.push_back(TensorVector::unit(key));
                   report(*m, basis, [](const TensorVector& v) { return to_json(v); });
                 },
             },
             mod);
  const bool passed = failures.empty();
  emit(o,
       {{"module", module_json(mod)},
        {"range", o.range},
        {"deg", o.deg},
        {"vectors_checked", checked},
        {"failures", failures},
        {"passed", passed}},
       out);
  return passed ? ok : property_failed;
}

int cmd_singular(const Options& o, std::ostream& out) {
  if (o.theta.empty() || o.h.empty()) throw ParseError("singular needs --theta and --h");
  if (o.level < 1) throw ParseError("--level must be at least 1");
  const VermaParams p{parse_scalar(o.theta), parse_scalar(o.h)};
  const Verma verma(p);
  json vs = json::array();
  for (const auto& v : singular_vectors(p, o.level)) vs.push_back(to_json(verma, v));
  emit(o, {{"module", verma.params_json()}, {"level", o.level}, {"singular_vectors", vs}}, out);
  return ok;
}

int cmd_kac(const Options& o, std::ostream& out) {
  if (o.theta.empty() || o.h.empty()) throw ParseError("kac needs --theta and --h");
  if (o.max_kl < 1) throw ParseError("--max-kl must be at least 1");
  const Scalar theta = parse_scalar(o.theta), h = parse_scalar(o.h);
  json table = json::array(), zeros = json::array();
  for (long k = 1; k <= o.max_kl; ++k)
    for (long l = 1; k * l <= o.max_kl; ++l) {
      const Scalar v = kac_factor(theta, h, k, l);
      table.push_back({{"k", k}, {"l", l}, {"value", to_string(v)}});
      if (is_zero(v)) zeros.push_back({{"k", k}, {"l", l}});
    }
  json verma = to_json(verma_is_simple(theta, h, o.max_kl, o.exact));
  emit(o,
       {{"theta", to_string(theta)},
        {"h", to_string(h)},
        {"max_kl", o.max_kl},
        {"table", table},
        {"zeros", zeros},
        {"verma_simplicity", verma}},
       out);
  return ok;
}

int cmd_simplicity(const Options& o, std::ostream& out) {
  const json spec = module_spec(o);
  const AnyModule mod = module_from_spec(spec);
  json r = std::visit(overloaded{
                          [&](const OmegaModule& m) -> json {
                            const bool s = omega_is_simple(m.params());
                            return {{"simple", s}, {"verdict", s ? "simple" : "not_simple"}};
                          },
                          [&](const std::shared_ptr<const PbwModule>& m) -> json {
                            if (m->family() == Family::verma) {
                              const auto& p = static_cast<const Verma&>(*m).params();
                              return to_json(verma_is_simple(p.theta, p.h, o.bound, o.exact));
                            }
                            if (m->family() == Family::induced)
                              return to_json(induced_is_simple(static_cast<const InducedModule&>(*m).params(), o.bound));
                            return to_json(m->simplicity());
                          },
                          [&](const std::shared_ptr<const TensorModule>& m) -> json {
                            return to_json(theorem1_is_simple(*m));
                          },
                      },
                      mod);
  r["module"] = module_json(mod);
  emit(o, r, out);
  return ok;
}

int cmd_iso_verify(const Options& o, std::ostream& out) {
  const json spec = module_spec(o);
  if (spec.value("family", "") != "induced") throw ParseError("iso-verify needs an induced module");
  const InducedParams p = induced_from_spec(spec);
  const Truncation w = window_of(o);
  const IsoReport rep = iso_verifier(p, w);
  json scalars = json::array();
  for (const auto& [k, v] : rep.relation_scalars) scalars.push_back({{"k", k}, {"value", to_string(v)}});
  json failures = json::array();
  for (const auto& f : rep.failures) failures.push_back({{"check", std::string(1, f.check)}, {"detail", f.detail}});
  emit(o,
       {{"module", InducedModule(p).params_json()},
        {"window", to_json(w)},
        {"b", to_string(rep.image.b)},
        {"factor", make_factor(rep.image.factor)->params_json()},
        {"relations", rep.relations},
        {"relation_scalars", scalars},
        {"intertwines", rep.intertwines},
        {"triangular", rep.triangular},
        {"basis_size", rep.basis_size},
        {"rank", rep.rank},
        {"failures", failures},
        {"passed", rep.passed()}},
       out);
  return rep.passed() ? ok : property_failed;
}

int cmd_closure(const Options& o, std::ostream& out) {
  const AnyModule mod = module_from_spec(module_spec(o));
  const auto t = need_tensor(mod);
  const Truncation w = window_of(o);
  std::vector<TensorVector> gens;
  if (!o.vector.empty()) {
    const json j = read_json(o.vector);
    if (j.is_array() && !j.empty() && j.front().is_array()) {
      for (const auto& v : j) gens.push_back(tensor_from_json(*t, v));
    } else {
      gens.push_back(tensor_from_json(*t, j));
    }
  }
  if (o.random > 0) {
    auto r = random_window_vectors(*t, w, o.random, o.seed);
    gens.insert(gens.end(), r.begin(), r.end());
  }
  if (o.vector.empty() && o.random == 0) gens.push_back(t->cyclic());

  const ClosureResult c = cyclic_closure(*t, gens, w);
  const ShapeReport shape = theorem10_shape(*t, c, o.margin);
  json sj{{"verdict", shape.verdict}, {"margin", shape.margin}, {"x_dim", shape.x.size()}, {"x2_dim", shape.x2.size()}};
  if (shape.missing) sj["missing"] = to_json(*shape.missing);
  json result{{"module", module_json(mod)},
              {"window", to_json(w)},
              {"seed", o.seed},
              {"generators", gens.size()},
              {"window_dim", t->window_basis(w).size()},
              {"closure_dim", c.basis.size()},
              {"rounds", c.rounds},
              {"images", c.images},
              {"shape", sj}};
  if (o.print_basis) {
    json b = json::array();
    for (const auto& v : c.basis) b.push_back(to_json(v));
    result["basis"] = b;
  }
  emit(o, result, out);
  return ok;
}

int cmd_omega_op(const Options& o, std::ostream& out) {
  const AnyModule mod = module_from_spec(module_spec(o));
  if (o.order < 0) throw ParseError("--order must be non-negative");
  const UeaElement e = omega_operator(o.order, o.l, o.m);
  json result = std::visit(overloaded{
                               [&](const OmegaModule& m) -> json {
                                 Polynomial v = o.vector.empty() ? monomial(0) : polynomial_from_json(read_json(o.vector));
                                 return {{"result", to_json(apply_element(m, e, v))}};
                               },
                               [&](const std::shared_ptr<const PbwModule>& m) -> json {
                                 PbwVector v = o.vector.empty() ? m->cyclic() : pbw_from_json(*m, read_json(o.vector));
                                 return {{"result", to_json(*m, apply_element(*m, e, v))}};
                               },
                               [&](const std::shared_ptr<const TensorModule>& m) -> json {
                                 TensorVector v = o.vector.empty() ? m->cyclic() : tensor_from_json(*m, read_json(o.vector));
                                 return {{"result", to_json(omega_eval(*m, o.order, o.l, o.m, v))}};
                               },
                           },
                           mod);
  result["module"] = module_json(mod);
  result["operator"] = to_json(e);
  result["order"] = o.order;
  result["l"] = o.l;
  result["m"] = o.m;
  result["vanishes"] = result["result"].is_array() ? result["result"].empty() : result["result"]["terms"].empty();
  emit(o, result, out);
  return ok;
}

int cmd_classify(const Options& o, std::ostream& out) {
  if (o.other_json.empty()) throw ParseError("classify needs --module and --other");
  const AnyModule a = module_from_spec(module_spec(o));
  const AnyModule b = module_from_spec(read_json(o.other_json));
  const bool iso = theorem2_classify(*need_tensor(a), *need_tensor(b));
  emit(o, {{"module", module_json(a)}, {"other", module_json(b)}, {"isomorphic", iso}}, out);
  return ok;
}

void module_flags(CLI::App* sub, Options& o) {
  sub->add_option("--module", o.module_json, "module spec as JSON (or @file)");
  sub->add_option("--family", o.family, "omega, verma, mtheta0, simple_quotient, whittaker, induced, tensor");
  sub->add_option("--factor", o.factor, "factor family of a tensor module");
  sub->add_option("--lambda", o.lambda, "λ (nonzero)");
  sub->add_option("--b", o.b, "b");
  sub->add_option("--theta", o.theta, "central charge θ");
  sub->add_option("--h", o.h, "highest weight h");
  sub->add_option("--n", o.n, "index n");
  sub->add_option("--lambdas", o.lambdas, "Whittaker values λ_n,...,λ_2n");
  sub->add_option("--s", o.s, "induced values s_n,...,s_2n");
  for (int k = 0; k <= 16; ++k)
    sub->add_option_function<std::string>("--s" + std::to_string(k), [&o, k](const std::string& v) { o.s_single[k] = v; },
                                          "single value s_" + std::to_string(k));
  sub->add_option("--level-cap", o.level_cap, "level cap of the simple quotient");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations with Virasoro modules", "virmod"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", o.seed, "seed for pseudo-random vectors");
  app.add_option("--window", o.window, "truncation D,L,K (default $VIRMOD_WINDOW or 6,4,6)");

  std::map<std::string, std::function<int(const Options&, std::ostream&)>> handlers;
  auto add = [&](const std::string& name, const std::string& help, auto handler) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->set_help_flag("--help", "print help");
    sub->fallthrough();
    handlers[name] = handler;
    return sub;
  };

  auto* act = add("act", "apply d_k or an enveloping-algebra element to a vector", cmd_act);
  module_flags(act, o);
  act->add_option("--k", o.k, "generator index");
  act->add_option("--element", o.element, "element as JSON [{word, central, coeff}]");
  act->add_option("--vector", o.vector, "vector as JSON (default: cyclic vector)");

  auto* bc = add("bracket-check", "commutator-defect sweep over basis vectors", cmd_bracket_check);
  module_flags(bc, o);
  bc->add_option("--range", o.range, "check all |i|,|j| <= range");
  bc->add_option("--deg", o.deg, "basis degree / level bound");

  auto* sing = add("singular", "singular vectors of a Verma module at one level", cmd_singular);
  sing->add_option("--theta", o.theta)->required();
  sing->add_option("--h", o.h)->required();
  sing->add_option("--level", o.level)->required();

  auto* kac = add("kac", "table of Kac factors", cmd_kac);
  kac->add_option("--theta", o.theta)->required();
  kac->add_option("--h", o.h)->required();
  kac->add_option("--max-kl", o.max_kl, "largest product kl");
  kac->add_flag("--exact", o.exact, "also decide the Verma module exactly");

  auto* simp = add("simplicity", "irreducibility criterion of any family", cmd_simplicity);
  module_flags(simp, o);
  simp->add_option("--bound", o.bound, "kl bound of the Kac scan");
  simp->add_flag("--exact", o.exact, "exact Kac decision for Verma modules");

  auto* iso = add("iso-verify", "check the isomorphism with the tensor product in a window", cmd_iso_verify);
  module_flags(iso, o);

  auto* clo = add("closure", "cyclic closure in a window plus its shape", cmd_closure);
  module_flags(clo, o);
  clo->add_option("--vector", o.vector, "generator or list of generators as JSON (default: 1 ⊗ v)");
  clo->add_option("--random", o.random, "add this many seeded random window vectors");
  clo->add_option("--margin", o.margin, "inner margin for the shape check");
  clo->add_flag("--print-basis", o.print_basis, "include the closure basis");

  auto* om = add("omega-op", "evaluate ω^(s)_{l,m} on a vector", cmd_omega_op);
  module_flags(om, o);
  om->add_option("--order", o.order, "s")->required();
  om->add_option("--l", o.l, "l")->required();
  om->add_option("--m", o.m, "m")->required();
  om->add_option("--vector", o.vector, "vector as JSON (default: cyclic vector)");

  auto* cls = add("classify", "isomorphism test between two simple tensor modules", cmd_classify);
  module_flags(cls, o);
  cls->add_option("--other", o.other_json, "second module spec as JSON (or @file)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "virmod: " << e.what() << "\n";
    return invalid_input;
  }

  try {
    for (const auto& [name, handler] : handlers)
      if (app.got_subcommand(name)) return handler(o, out);
  } catch (const WindowError& e) {
    err << "virmod: " << e.what() << "\n";
    return invalid_input;
  } catch (const std::invalid_argument& e) {
    err << "virmod: " << e.what() << "\n";
    return invalid_input;
  } catch (const json::exception& e) {
    err << "virmod: " << e.what() << "\n";
    return invalid_input;
  }
  return invalid_input;
}

}  // namespace vir::cli
