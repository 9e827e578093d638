#pragma once

#include <exception>
#include <vector>

#include <json.hpp>

#include "invseq/bijections.hpp"
#include "invseq/poly.hpp"
#include "invseq/stats.hpp"
#include "invseq/verify.hpp"

namespace invseq {

using Json = nlohmann::ordered_json;

// Positions stay 1-based on the wire; values are as stored.
Json to_json(const StatProfile& p);
Json to_json(const MoveTrace& trace);
/// Integers that do not fit in 64 bits are emitted as decimal strings.
Json to_json(const Integer& x);
Json to_json(const std::vector<Integer>& v);
/// Ascending coefficient array.
Json to_json(const IntPoly& p);
/// [{key, count}] in key order.
Json to_json(const SetDist& d);
Json to_json(const JointDist& d);
/// Timing is omitted unless requested, keeping reports reproducible.
Json to_json(const CheckResult& r, bool with_timing = false);
/// {"error": kind, "message": ...} plus structured fields where known.
Json error_json(const std::exception& e);

}  // namespace invseq
