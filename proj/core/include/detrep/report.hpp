#pragma once

#include <json.hpp>

#include "detrep/extensions.hpp"
#include "detrep/model.hpp"

namespace detrep {

using Json = nlohmann::ordered_json;

// Versioned envelope for every JSON report the CLI emits. Deterministic for
// a fixed command + seed; runtime fields are the caller's business to strip
// when diffing.
Json make_envelope(const std::string& command_echo, Json results,
                   const std::vector<std::string>& warnings = {});

Json model_json(const DeterminantalModel& model);
Json poly_json(const HomogPoly& f);
Json matrix_json(const HomogMatrix& m);
Json presentation_json(const ModulePresentation& mp);
Json extension_json(const ExtensionPresentation& ext);

} // namespace detrep
