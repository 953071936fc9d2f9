#pragma once

#include <json.hpp>

#include "scimap/corpus.hpp"
#include "scimap/factor.hpp"
#include "scimap/graph.hpp"
#include "scimap/local.hpp"
#include "scimap/mds.hpp"

namespace scimap {

// JSON forms of the analysis results. Journals are always named by id.

nlohmann::ordered_json to_json(const DensityReport& report);
nlohmann::ordered_json to_json(const ComponentSet& set);
nlohmann::ordered_json to_json(const SweepReport& report);
nlohmann::ordered_json to_json(const FactorModel& model);
nlohmann::ordered_json to_json(const LocalEnvironment& env);
nlohmann::ordered_json to_json(const ComplexityReport& report);
nlohmann::ordered_json to_json(const Layout& layout);

}  // namespace scimap
