// JSON encodings of exact values and reports.  Rationals are written as
// [num, den] pairs of integers, or of decimal strings when a part does not
// fit in 64 bits; float approximations ride along for inspection only.

#pragma once

#include "json.hpp"

#include "qtorus/observables.hpp"
#include "qtorus/star_nctorus.hpp"
#include "qtorus/tqft.hpp"

namespace qtorus {

using json = nlohmann::ordered_json;

json rational_to_json(const Rational& q);
/// Accepts [num, den] with integer or decimal-string parts.
Rational rational_from_json(const json& j);

/// {"order": 4r, "coeffs": [[num, den], ...], "approx": [re, im]}
json to_json(const CycloElement& x);
/// Inverse of to_json; the order must be 4r for the given context.
CycloElement cyclo_from_json(const CycloContext& ctx, const json& j);

/// {"xpow": 0|1, "value": CycloElement, "approx": [re, im]}
json to_json(const Scalar& s);
Scalar scalar_from_json(const CycloContext& ctx, const json& j);

/// {"level": r, "rows": r-1, "entries": [[Scalar, ...], ...]}
json to_json(const OperatorMatrix& m);
OperatorMatrix matrix_from_json(const CycloContext& ctx, const json& j);

/// {"d": int, "ok": bool, "lhs": matrix, "rhs": matrix}
json to_json(const ProductToSum& res);

/// {"level", "N", "symbols", "dim_ker_op", "dim_ker_nc", "nc_subset_op",
///  "dim_ker_clock", "clock_subset_op"}
json to_json(const KernelReport& rep);

json to_json(const ContinuedFraction& cf);
json to_json(const LemmaTuple& t);

}  // namespace qtorus
