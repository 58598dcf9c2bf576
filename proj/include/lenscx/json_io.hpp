#pragma once

#include "lenscx/complex.hpp"
#include "lenscx/exactlin.hpp"
#include "lenscx/group_action.hpp"
#include "lenscx/homology.hpp"
#include "lenscx/pi1.hpp"
#include "lenscx/report.hpp"
#include "lenscx/surface.hpp"

namespace lenscx {

/// Number when it fits in 64 bits, decimal string otherwise.
Json bigint_to_json(const BigInt& x);

/// {"vertices": [...], "facets": [[...], ...]}
Json complex_to_json(const SimplicialComplex& complex);
/// Reads the "vertices"/"facets" members and ignores anything else.
/// Throws InvalidInput on a malformed document.
SimplicialComplex complex_from_json(const Json& doc);

/// {"order": n, "generator": [...]}
Json action_to_json(const CyclicAction& action);
CyclicAction action_from_json(const Json& doc);

/// {"H": [{"betti": b, "torsion": [...]}, ...]}
Json homology_to_json(const HomologyGroups& groups);
Json abelianization_to_json(const Abelianization& ab);

/// {"r": 4, "classes": [[a, b1, ..., br], ...], "action": [...]}
Json cycle_pair_to_json(const CyclePair& pair);
CyclePair cycle_pair_from_json(const Json& doc);

}  // namespace lenscx
