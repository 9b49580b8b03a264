#include "desing/errors.hpp"
#include "desing/json_io.hpp"
#include "doctest.h"

using namespace desing;

TEST_CASE("scalar round trips") {
  Rational big("123456789012345678901234567891/7");
  big.canonicalize();
  CHECK(rational_from_json(to_json(big)) == big);
  CHECK(to_json(Rational(1, 36)).dump() == R"({"num":1,"den":36})");
  CHECK(rational_from_json(Json::parse(R"({"num":"-10","den":4})")) == Rational(-5, 2));
  CHECK_THROWS_AS(rational_from_json(Json::parse(R"({"num":1,"den":0})")), ParameterError);
  Scalar z = Scalar::numeric(Complex(0.25, -1.5));
  CHECK(scalar_from_json(to_json(z)) == z);
  Twist t = Twist::root(6, 5);
  CHECK(twist_from_json(to_json(t)) == t);
  CyclotomicNumber c = CyclotomicNumber::root_of_unity(12, 5) + CyclotomicNumber(Rational(1, 3));
  CHECK(cyclotomic_from_json(to_json(c)) == c);
}

TEST_CASE("HLData and identity round trips") {
  for (const char* name : {"ez2", "ez3", "mt2", "a2"}) {
    HLData data = builtin_data(name);
    Json j = Json::parse(to_json(data).dump());
    CHECK(hl_data_from_json(j) == data);
    DesingIdentity id = desing_identity(data);
    CHECK(identity_from_json(Json::parse(to_json(id).dump())) == id);
  }
  HLData twisted = ezl_data({Twist::root(3, 1), Twist::numeric(Complex(0.5, 0.1))}, {Scalar(1), Scalar::numeric(2.5)});
  CHECK(hl_data_from_json(to_json(twisted)) == twisted);
  Json bad = to_json(builtin_data("ez2"));
  bad.erase("beta");
  CHECK_THROWS_AS(hl_data_from_json(bad), ParameterError);
}

TEST_CASE("result records") {
  NumResult r{Complex(0.5, 0), 1e-12, "closed-form"};
  Json j = to_json(r);
  CHECK(j["method"] == "closed-form");
  CHECK(complex_from_json(j["value"]) == r.value);
  PadicLRequest req{{1}, 2, 3};
  KLCheck kl = kubota_leopoldt_check(1, 2, 3);
  Json p = to_json(req, padic_L_sum(req), &kl);
  CHECK(rational_from_json(p["value"]) == Rational(1, 2));
  CHECK(p["kl_check"]["equal"] == true);
  CHECK(to_json(singular_hyperplanes({Twist(), Twist()}, 3))["hyperplanes"].size() > 0);
}
