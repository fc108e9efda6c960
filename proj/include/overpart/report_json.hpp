#pragma once

#include <json.hpp>

#include "overpart/biject.hpp"
#include "overpart/enumerate.hpp"
#include "overpart/pbar.hpp"
#include "overpart/roots.hpp"
#include "overpart/verify.hpp"

// JSON encodings of the report types. Exact quantities (integers, rationals,
// polynomial coefficients) travel as decimal or "p/q" strings; doubles appear
// only in display and bound fields.

namespace overpart {

using Json = nlohmann::json;

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

void to_json(Json& j, const Part& p);
void from_json(const Json& j, Part& p);
void to_json(Json& j, const Overpartition& op);
void from_json(const Json& j, Overpartition& op);
void to_json(Json& j, const ImagePair& pair);
void from_json(const Json& j, ImagePair& pair);
void to_json(Json& j, const AuditReport& r);
void from_json(const Json& j, AuditReport& r);
void to_json(Json& j, const VerifyReport& r);
void from_json(const Json& j, VerifyReport& r);
void to_json(Json& j, const RootRecord& r);
void from_json(const Json& j, RootRecord& r);
void to_json(Json& j, const BoundTriple& t);
void from_json(const Json& j, BoundTriple& t);

}  // namespace overpart
