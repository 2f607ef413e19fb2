#pragma once

#include <nlohmann/json.hpp>

#include "szlab/bd_space.hpp"
#include "szlab/dual_tree.hpp"
#include "szlab/matrix.hpp"
#include "szlab/ordinal.hpp"
#include "szlab/ordinal_measure.hpp"
#include "szlab/rational.hpp"
#include "szlab/step_function.hpp"

// JSON schemas:
//   rational      "p/q" in lowest terms (integers accepted on input; floats rejected)
//   ordinal       n for finite n, else {"terms": [[<exponent>, <coefficient>], ...]};
//                 the display string ("w^2+1") is also accepted on input
//   step function {"pieces": [{"end": <rational>, "value": <ordinal>}, ...]}
//   measure       {"space": {"gamma": <ordinal>, "k": n}, "atoms": [{"point": <ordinal>, "weight": <rational>}]}
//   matrix        [[<rational>, ...], ...]
//   w-value       {"c": <rational>, "m": n, "l": n} or {"inf": true}
// All decoders throw Error(kParseError) on malformed input.
namespace szlab {

using Json = nlohmann::json;

Json encode(const Rational& q);
Json encode(const Ordinal& a);
Json encode(const StepFunction& f);
Json encode(const OrdinalSpace& space);
Json encode(const OrdinalMeasure& mu);
Json encode(const RationalMatrix& m);
Json encode(const WValue& w);
Json encode(const BDParams& params);
Json encode(const CompressionTrace& trace);

/// phi for every coordinate 2 < k <= d_N, with the enumeration order in a header field.
Json encode_phi_table(const BDSpace& space);

Rational decode_rational(const Json& j);
Ordinal decode_ordinal(const Json& j);
StepFunction decode_step_function(const Json& j);
OrdinalSpace decode_space(const Json& j);
OrdinalMeasure decode_measure(const Json& j);
RationalMatrix decode_matrix(const Json& j);
WValue decode_wvalue(const Json& j);

}  // namespace szlab
