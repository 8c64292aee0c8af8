// JSON forms of the representation-theory types. Rationals are strings
// ("3/2"), matrices are {"rows", "cols", "entries"} with row-major entries,
// and object keys are the type's field names.
#pragma once

#include "arcoalg/representation.hpp"

#include <json.hpp>

namespace arcoalg::io {

using Json = nlohmann::ordered_json;

Json to_json(const lin::Matrix& m);
lin::Matrix matrix_from_json(const Json& j);

Json to_json(const rep::Quiver& q);
Json to_json(const rep::Relation& r);
Json to_json(const rep::AlgebraPresentation& p);
Json to_json(const rep::Representation& m);
Json to_json(const rep::Morphism& f);
Json to_json(const rep::ShortExactSeq& s);

/// Rebuilds a representation over a known presentation; validates it.
rep::Representation representation_from_json(const Json& j, rep::PresentationPtr pres);

}  // namespace arcoalg::io
