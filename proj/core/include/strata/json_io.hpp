#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "strata/blowup.hpp"
#include "strata/foliation_model.hpp"
#include "strata/hironaka.hpp"
#include "strata/nodal.hpp"
#include "strata/parity.hpp"
#include "strata/pi1.hpp"
#include "strata/separatrix.hpp"

namespace strata {

using Json = nlohmann::ordered_json;

/// Readers throw InputFormat on schema errors and InvalidStructure /
/// InvalidNodalData when the content is well-formed but invalid.

/// {"dimension", "components", "strata"}; indices are positions in "components".
Json structure_to_json(const StrataStructure& s);
StrataStructure structure_from_json(const Json& j);

/// {"dimension", "steps": [{"center", "fresh"}], "final"}.
Json trace_to_json(const BlowupTrace& t);
/// Replays the centers and checks the recorded fresh indices and final structure.
BlowupTrace trace_from_json(const Json& j);

/// {"nodal": [{"stratum", "plus", "minus"}]}.
Json nodal_to_json(const NodalData& n);
NodalData nodal_from_json(const Json& j);

/// {"symbols": [{"name", "kind"}], "residues": {"<index>": {"symbol", "scale"}}}.
Json residues_to_json(const ResidueModel& m);
ResidueModel residues_from_json(const Json& j);

/// {"structure", "residues"?, "nodal"?, "traces"}. The structure fields may
/// also sit at top level.
Json model_to_json(const FoliatedModel& m);
FoliatedModel model_from_json(const Json& j);

/// {"n", "e", "rows": [["p/q", ...]]}.
Json matrix_to_json(const CovectorSpace& u);
CovectorSpace matrix_from_json(const Json& j);

Json verdict_to_json(const Pi1Verdict& v);
/// {"blocks", "separating", "components", "agreement"}.
Json component_report_to_json(const ComponentReport& r, bool agreement);
Json coverage_to_json(const CoverageReport& r);
Json nod_sep_to_json(const NodSepReport& r);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace strata
