#pragma once

#include <string>

#include "desing/desing.hpp"
#include "desing/ez2.hpp"
#include "desing/padic.hpp"
#include "desing/special_functions.hpp"
#include "json.hpp"

namespace desing {

using Json = nlohmann::ordered_json;

// {num, den}; integers that do not fit in 64 bits are written as strings.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// {num, den} when exact, {re, im} otherwise.
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// {order, power} for roots of unity, {re, im} otherwise.
Json to_json(const Twist& t);
Twist twist_from_json(const Json& j);

Json to_json(const Complex& z);
Complex complex_from_json(const Json& j);

// {order, coeffs:[{num, den}...]}
Json to_json(const CyclotomicNumber& z);
CyclotomicNumber cyclotomic_from_json(const Json& j);

// {d, r, xi, gamma, beta, c?}; c is the d x r matrix, c0 is rebuilt from beta.
Json to_json(const HLData& data);
HLData hl_data_from_json(const Json& j);

// {base, terms:[{alpha, l, m}]}
Json to_json(const DesingIdentity& id);
DesingIdentity identity_from_json(const Json& j);

Json to_json(const SingularityCatalog& cat);
Json to_json(const NumResult& r);
Json to_json(const ZetaValue& v);
Json to_json(const PadicLRequest& req, const PadicLResult& res, const KLCheck* kl);

}  // namespace desing
