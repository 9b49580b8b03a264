#include "desing/json_io.hpp"

#include "desing/errors.hpp"

namespace desing {

namespace {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ParameterError("bad integer string in JSON");
    return z;
  }
  throw ParameterError("expected an integer in JSON");
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParameterError(std::string("JSON: missing field '") + name + "'");
  return j.at(name);
}

}  // namespace

Json to_json(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return Json{{"num", integer_json(c.get_num())}, {"den", integer_json(c.get_den())}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  Integer num = integer_from_json(field(j, "num"));
  Integer den = integer_from_json(field(j, "den"));
  if (den == 0) throw ParameterError("JSON rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Json to_json(const Complex& z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  return Complex(field(j, "re").get<double>(), j.value("im", 0.0));
}

Json to_json(const Scalar& s) { return s.is_exact() ? to_json(s.exact()) : to_json(s.value()); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer() || (j.is_object() && j.contains("num"))) return Scalar(rational_from_json(j));
  return Scalar::numeric(complex_from_json(j));
}

Json to_json(const Twist& t) {
  if (t.is_root_of_unity()) return Json{{"order", t.order()}, {"power", t.power()}};
  return to_json(t.value());
}

Twist twist_from_json(const Json& j) {
  if (j.is_object() && j.contains("order")) return Twist::root(field(j, "order").get<int>(), field(j, "power").get<long>());
  return Twist::numeric(complex_from_json(j));
}

Json to_json(const CyclotomicNumber& z) {
  Json coeffs = Json::array();
  for (const auto& c : z.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"order", z.order()}, {"coeffs", coeffs}};
}

CyclotomicNumber cyclotomic_from_json(const Json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : field(j, "coeffs")) coeffs.push_back(rational_from_json(c));
  return CyclotomicNumber(field(j, "order").get<int>(), std::move(coeffs));
}

Json to_json(const HLData& data) {
  Json xi = Json::array(), gamma = Json::array(), beta = Json::array();
  for (const auto& t : data.xi) xi.push_back(to_json(t));
  for (const auto& row : data.gamma) {
    Json r = Json::array();
    for (const auto& g : row) r.push_back(to_json(g));
    gamma.push_back(r);
  }
  for (const auto& b : data.beta) beta.push_back(to_json(b));
  Json out{{"d", data.d}, {"r", data.r}, {"xi", xi}, {"gamma", gamma}, {"beta", beta}};
  if (data.c) {
    Json c = Json::array();
    for (const auto& row : data.c->c) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(to_json(v));
      c.push_back(r);
    }
    out["c"] = c;
  }
  return out;
}

HLData hl_data_from_json(const Json& j) {
  HLData data;
  try {
    data.d = field(j, "d").get<int>();
    data.r = field(j, "r").get<int>();
    for (const auto& t : field(j, "xi")) data.xi.push_back(twist_from_json(t));
    for (const auto& row : field(j, "gamma")) {
      std::vector<Scalar> r;
      for (const auto& g : row) r.push_back(scalar_from_json(g));
      data.gamma.push_back(std::move(r));
    }
    for (const auto& b : field(j, "beta")) data.beta.push_back(scalar_from_json(b));
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("HLData JSON: ") + e.what());
  }
  data.validate();
  if (j.contains("c") && !j.at("c").is_null()) {
    ScalarMatrix c;
    for (const auto& row : j.at("c")) {
      std::vector<Scalar> r;
      for (const auto& v : row) r.push_back(scalar_from_json(v));
      c.push_back(std::move(r));
    }
    data.c = make_c_matrix(data, std::move(c));
  }
  return data;
}

Json to_json(const DesingIdentity& id) {
  Json terms = Json::array();
  for (const auto& t : id.terms) terms.push_back(Json{{"alpha", to_json(t.alpha)}, {"l", t.l}, {"m", t.m}});
  return Json{{"base", to_json(id.base)}, {"terms", terms}};
}

DesingIdentity identity_from_json(const Json& j) {
  DesingIdentity id;
  id.base = hl_data_from_json(field(j, "base"));
  for (const auto& t : field(j, "terms")) {
    IdentityTerm term{rational_from_json(field(t, "alpha")), field(t, "l").get<std::vector<int>>(),
                      field(t, "m").get<std::vector<int>>()};
    if (static_cast<int>(term.l.size()) != id.base.d || static_cast<int>(term.m.size()) != id.base.d)
      throw ParameterError("identity term length does not match d");
    id.terms.push_back(std::move(term));
  }
  return id;
}

Json to_json(const SingularityCatalog& cat) {
  Json hs = Json::array();
  for (const auto& h : cat.hyperplanes)
    hs.push_back(Json{{"first", h.first}, {"last", h.last}, {"constants", h.constants}, {"tag", h.tag}, {"family", h.family}});
  return Json{{"hyperplanes", hs}};
}

Json to_json(const NumResult& r) {
  return Json{{"value", to_json(r.value)}, {"error_bound", r.error_bound}, {"method", r.method}};
}

Json to_json(const ZetaValue& v) {
  Json z = Json::object();
  for (const auto& [k, c] : v.zeta) z[std::to_string(k)] = to_json(c);
  return Json{{"rational", to_json(v.rational)}, {"zeta", z}, {"text", v.to_string()}, {"value", v.value()}};
}

Json to_json(const PadicLRequest& req, const PadicLResult& res, const KLCheck* kl) {
  Json out{{"r", req.n.size()}, {"n", req.n}, {"c", req.c}, {"p", req.p}};
  out["value"] = res.sum.is_rational() ? to_json(res.sum.to_rational()) : to_json(res.sum);
  out["terms_enumerated"] = res.terms_enumerated;
  if (kl) out["kl_check"] = Json{{"equal", kl->equal}, {"lhs", to_json(kl->lhs)}, {"rhs", to_json(kl->rhs)}};
  return out;
}

}  // namespace desing
