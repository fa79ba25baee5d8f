#pragma once

// JSON import/export, kept out of the core headers so that only translation
// units that serialize pay for the JSON library.

#include "unitforge/freeness.hpp"
#include "unitforge/group.hpp"
#include "unitforge/group_ring.hpp"
#include "unitforge/reps.hpp"
#include "unitforge/units.hpp"

#include <json.hpp>

#include <string>

namespace unitforge {

using Json = nlohmann::ordered_json; // insertion order keeps reports stable

// {"coeffs": [["num","den"], ...]} with decimal strings
Json element_to_json(const GroupRingElement &x);
GroupRingElement element_from_json(const GroupPtr &G, const Json &j);

// kind, parameters (group element names), coefficients, predicted order
Json unit_to_json(const UnitDescriptor &u);

// {"verdict", "bound", "words_checked", "witness", "notes"}
Json report_to_json(const FreenessReport &r);

// epsilon and all E_ij coefficient vectors, for external re-verification
Json system_to_json(const MatrixUnitSystem &sys);

// group summary (order, names, center, class, element orders)
Json group_info_json(const GroupPtr &G);

} // namespace unitforge
