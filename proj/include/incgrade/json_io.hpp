#pragma once

// JSON file formats.
//
//   poset        {"elements": ["p1", ...], "covers": [[0, 3], ...]}
//                (or "relation" instead of "covers": any generating relation)
//   function     {"poset": <poset-ref>, "entries": [[x, y, "num/den"], ...]}
//   morphism     {"poset": <poset-ref>, "images": [{"pair": [x, y], "entries": [...]}, ...]}
//   grading      {"group": "C3", "theta": ["1", "h", "h^2", "1"]}
//   polynomial   {"multidegree": ["h", "1"], "terms": [{"perm": [1, 2], "coeff": "1"}, ...]}
//
// A <poset-ref> is an inline poset object, a path to a poset file, or the
// name of a bundled corpus poset. Rationals are canonical "num/den" strings.

#include <string>
#include <string_view>

#include <json.hpp>

#include "incgrade/algebra.hpp"
#include "incgrade/grading.hpp"
#include "incgrade/identities.hpp"

namespace incgrade {

using Json = nlohmann::json;

Json read_json_file(const std::string& path);

Json poset_to_json(const Poset& p);
Poset poset_from_json(const Json& j);

/// A file path or a corpus name (with or without a ".json" suffix).
Poset load_poset(std::string_view ref);
PosetRef resolve_poset_ref(const Json& ref);

Json entries_to_json(const IncidenceFunction& f);
Json incidence_to_json(const IncidenceFunction& f);
IncidenceFunction incidence_from_json(const Json& j);
IncidenceFunction entries_from_json(const Json& entries, const PosetRef& p);

Json morphism_to_json(const AlgebraMorphism& phi);
AlgebraMorphism morphism_from_json(const Json& j);

/// The group as its spec string when that rebuilds it, else as a Cayley table.
Json group_to_json(const FiniteGroup& g);
GroupRef group_from_json_value(const Json& j);

Json grading_to_json(const GradingMap& theta);
GradingMap grading_from_json(const Json& j, const PosetRef& p);

Json polynomial_to_json(const MultilinearPolynomial& phi);
MultilinearPolynomial polynomial_from_json(const Json& j, const GroupRef& g);

Json names_to_json(const FiniteGroup& g, std::span<const GroupElement> elements);
Json matrix_to_json(const RationalMatrix& m);
Json slice_to_json(const IdentitySlice& slice, const FiniteGroup& g);

}  // namespace incgrade
