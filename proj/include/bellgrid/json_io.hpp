#pragma once

#include <json.hpp>

#include "bellgrid/inequality.hpp"
#include "bellgrid/polytope.hpp"
#include "bellgrid/quantum.hpp"
#include "bellgrid/underlying.hpp"

namespace bellgrid {

using Json = nlohmann::json;

Json to_json(const Scenario& sc);
Scenario scenario_from_json(const Json& j);

// Exact values serialize as {"num":..,"den":..} (decimal strings when they
// overflow int64), float values as plain numbers.
Json to_json(const Value& v);
Value value_from_json(const Json& j);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const UnderlyingDist& rho);
UnderlyingDist underlying_from_json(const Json& j);

Json to_json(const MarginalSet& ms);
MarginalSet marginal_set_from_json(const Json& j);

Json to_json(const LinearForm& form);
LinearForm form_from_json(const Json& j);

Json to_json(const Certificate& cert);

Json to_json(const MembershipResult& res);

Json to_json(const AxisChoice& axes);
AxisChoice axes_from_json(const Json& j, const Scenario& sc);

Json to_json(const PureState& state);
PureState state_from_json(const Json& j);

}  // namespace bellgrid
