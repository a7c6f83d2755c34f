#pragma once

#include <json.hpp>

#include <string>

#include "orbisect/invariants.hpp"
#include "orbisect/sectors.hpp"

namespace orbisect {

/// JSON payload builders shared by the command-line tool and the python
/// module. All output is deterministic: objects render with sorted keys and
/// every list has a documented order.

nlohmann::json fg_abelian_to_json(const FGAbelianGroup& g);

/// Order, abelianness, order profile and abelianization of a finite group.
nlohmann::json group_descriptor(const FiniteGroup& G);

/// Strata with sizes plus the orbit-set classes (base, stratum, class size).
nlohmann::json sectors_report(const FiniteGroupoid& G, const SectorGroupoid& S);

/// Components of the reduced sector groupoid with their isotropy groups.
nlohmann::json reduced_report(const SectorContext& ctx);

nlohmann::json morita_report(const FiniteGroupoid& A, const FiniteGroupoid& B,
                             const MoritaResult& res);

nlohmann::json stable_report(const StableResult& res);

nlohmann::json tomdieck_report(const FiniteGroup& G, const TomDieckResult& res);

nlohmann::json invariance_report(const InvarianceReport& rep);

nlohmann::json orbit_diagram_report(const FiniteGroupoid& G, const SectorContext& ctx,
                                    const OrbitDiagram& d);

/// Plain-text tree rendering of a JSON report (sorted keys, two-space
/// indent); scalar-only arrays print inline.
std::string text_render(const nlohmann::json& j);

}  // namespace orbisect
