/**
 * JSON forms of inputs and reports. Rationals are written as "p/q" strings
 * (or "p" for integers) so that values round-trip exactly.
 */

#ifndef CPT_SERIALIZE_HPP
#define CPT_SERIALIZE_HPP

#include <json.hpp>

#include "cpt/centerpoint.hpp"
#include "cpt/counterexample.hpp"
#include "cpt/simplicial.hpp"
#include "cpt/waist.hpp"
#include "cpt/z2_index.hpp"

namespace cpt {

using Json = nlohmann::ordered_json;

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

Json points_to_json(const PointMatrix& columns);

/** {"d": 2, "points": [["0", "1/2"], ...]} */
Json config_to_json(const PointConfig& X);
PointConfig config_from_json(const Json& j);

/** {"facets": [[0, 1], ...]} */
Json complex_to_json(const SimplicialComplex& K);
SimplicialComplex complex_from_json(const Json& j);

/** {"ambient_dim": n, "points": {"0": [...], ...}} */
Json realization_to_json(const Realization& R);

/** {"facets": [[...]], "involution": [...]} */
Json z2_to_json(const Z2Complex& X);
Z2Complex z2_from_json(const Json& j);

/** {"A": [[...]], "b": [...]} */
HPolytopeBody body_from_json(const Json& j);

Json to_json(const Halfspace& H);
Json to_json(const DepthCertificate& c);
Json to_json(const TverbergCertificate& c);
Json to_json(const ReductionPlan& p);
Json to_json(const ReductionResult& r);
Json to_json(const TupleIsolation& t);
Json to_json(const ProbeResult& p);
Json to_json(const CoverCertificate& c);
Json to_json(const FiberCell& c);

/** Sixteen lowercase hex digits. */
std::string hex64(std::uint64_t value);

}   // namespace cpt

#endif
