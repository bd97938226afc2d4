#pragma once

#include "h2wav/characterize.hpp"
#include "h2wav/constructions.hpp"
#include "h2wav/numeric.hpp"
#include "h2wav/tiling.hpp"

#include <json.hpp>

namespace h2wav {

using Json = nlohmann::json;

// Wire formats. Intervals are ["lo","hi"] pairs of exact coefficient strings
// ("4/3" means 4pi/3); interval sets are arrays of those; step functions are
// arrays of [interval, "a + b*sqrt2"] pairs. Round trips are bit-exact.

Json to_json(const PiScalar& p);        // "p/q*pi"
Json to_json(const Interval& iv);       // ["lo","hi"]
Json to_json(const IntervalSet& s);
Json to_json(const StepFunction& f);
Json to_json(const TilingReport& r);
Json to_json(const WaveletSetCheck& c);
Json to_json(const SupportProfile& sp);
Json to_json(const WaveletVerdict& v);
Json to_json(const ClassLabel& label);
Json to_json(const EquivalenceResult& e);
Json to_json(const GramReport& g);
Json to_json(const KrepsBuild& b);

PiScalar pi_scalar_from_json(const Json& j);
Interval interval_from_json(const Json& j);
IntervalSet interval_set_from_json(const Json& j);
StepFunction step_function_from_json(const Json& j);

}  // namespace h2wav
