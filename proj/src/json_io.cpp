#include "vir/json_io.hpp"

namespace vir {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

int int_from_json(const json& j) {
  if (!j.is_number_integer()) throw ParseError("expected an integer, got " + j.dump());
  return j.get<int>();
}

const json& term_list(const json& j) {
  if (!j.is_array()) throw ParseError("expected a JSON list of terms");
  return j;
}

}  // namespace

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(mpz_class(j.dump()));
  throw ParseError("expected a rational string, got " + j.dump());
}

json to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& [d, c] : p) out.push_back({{"degree", d}, {"coefficient", to_string(c)}});
  return out;
}

Polynomial polynomial_from_json(const json& j) {
  Polynomial p;
  for (const auto& t : term_list(j)) {
    int d = int_from_json(field(t, "degree"));
    if (d < 0) throw ParseError("negative degree");
    p.add(d, scalar_from_json(field(t, "coefficient")));
  }
  return p;
}

json partition_json(const Monomial& m) {
  json out = json::array();
  for (const auto& [i, k] : exponents(m)) out.push_back({i, k});
  return out;
}

Monomial monomial_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("partition must be a list of [index, exponent] pairs");
  std::vector<std::pair<int, int>> e;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw ParseError("partition entry must be [index, exponent]");
    e.emplace_back(int_from_json(pair[0]), int_from_json(pair[1]));
  }
  return from_exponents(e);
}

json to_json(const PbwModule& mod, const PbwVector& v) {
  json terms = json::array();
  for (const auto& [m, c] : v.terms()) terms.push_back({{"partition", partition_json(m)}, {"coeff", to_string(c)}});
  return {{"family", family_name(v.family())}, {"params", mod.params_json()}, {"terms", terms}};
}

PbwVector pbw_from_json(const PbwModule& mod, const json& j) {
  const json* terms = &j;
  if (j.is_object()) {
    if (j.contains("family") && family_from_name(j.at("family").get<std::string>()) != mod.family())
      throw FamilyMismatch("vector is tagged " + j.at("family").get<std::string>() + ", module is " +
                           family_name(mod.family()));
    terms = &field(j, "terms");
  }
  MonoVector v;
  for (const auto& t : term_list(*terms)) v.add(monomial_from_json(field(t, "partition")), scalar_from_json(field(t, "coeff")));
  PbwVector out = mod.vector(std::move(v));
  mod.check_member(out);
  return out;
}

json to_json(const TensorVector& v) {
  json out = json::array();
  for (const auto& [k, c] : v)
    out.push_back({{"partial_degree", k.first}, {"factor_key", partition_json(k.second)}, {"coeff", to_string(c)}});
  return out;
}

TensorVector tensor_from_json(const TensorModule& t, const json& j) {
  TensorVector v;
  for (const auto& term : term_list(j))
    v.add({int_from_json(field(term, "partial_degree")), monomial_from_json(field(term, "factor_key"))},
          scalar_from_json(field(term, "coeff")));
  t.check_member(v);
  return v;
}

json to_json(const UeaElement& e) {
  json out = json::array();
  for (const auto& [w, c] : e) out.push_back({{"word", w.factors}, {"central", w.central_power}, {"coeff", to_string(c)}});
  return out;
}

UeaElement uea_from_json(const json& j) {
  UeaElement e;
  for (const auto& t : term_list(j)) {
    UeaWord w;
    for (const auto& f : field(t, "word")) w.factors.push_back(int_from_json(f));
    if (t.contains("central")) {
      int p = int_from_json(t.at("central"));
      if (p < 0) throw ParseError("central power must be non-negative");
      w.central_power = static_cast<unsigned>(p);
    }
    e.add(w, scalar_from_json(field(t, "coeff")));
  }
  return e;
}

json to_json(const Truncation& t) { return {{"D", t.D}, {"L", t.L}, {"K", t.K}}; }

}  // namespace vir
