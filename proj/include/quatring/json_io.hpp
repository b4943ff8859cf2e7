#pragma once

#include "json.hpp"

#include "quatring/classify.hpp"
#include "quatring/oracle.hpp"

namespace quatring {

// Field order is kept stable so serialized reports are byte-reproducible.
using Json = nlohmann::ordered_json;

// {"num": "<quat>", "den": n} with num = den * q, an order element.
Json quat_over_den_json(const Quat& q);

// {"num": ["<quat>", ...], "den": n}: coefficients ascending, n the least
// denominator clearing every coefficient into the ring.
Json poly_json(const QPoly& f, Ring ring);

Json min_poly_json(const MinPoly& m);
Json witness_json(const Witness& w, Ring ring);
Json reduced_form_json(const ReducedForm& rf);
Json verdict_json(const Verdict& v);
Json delta_stats_json(const DeltaStats& stats);
Json oracle_result_json(const OracleResult& r, Ring ring);

}  // namespace quatring
