#pragma once

// JSON forms of matrices, points, tangents, group elements and tensors.
// Matrix: {"rows": r, "cols": c, "data": [[re, im], ...]} row-major.

#include <json.hpp>

#include "sjgeo/metrics.hpp"

namespace sjgeo {

using json = nlohmann::json;

json matrix_to_json(const CMatrix& m);
json matrix_to_json(const RMatrix& m);
/// Throws InvalidInput on malformed input.
CMatrix cmatrix_from_json(const json& j);
/// Throws InvalidInput when any imaginary part is non-zero.
RMatrix rmatrix_from_json(const json& j);

json to_json(const UpperPoint& p);
json to_json(const DiskPoint& p);
json to_json(const Tangent& t);
json to_json(const JacobiElement& g);
json to_json(const JacobiStarElement& g);
json to_json(const MetricTensor& t);

/// {"model": "upper"|"disk", "n", "m", "omega"/"w", "z"/"eta"}; the point is
/// shape-checked but not validated against the domain.
Model point_model(const json& j);
UpperPoint upper_point_from_json(const json& j);
DiskPoint disk_point_from_json(const json& j);
/// {"model", "dmat", "dvec"}.
Tangent tangent_from_json(const json& j);

}  // namespace sjgeo
