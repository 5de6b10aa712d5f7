#pragma once

#include <string>

#include <json.hpp>

#include "sectorlen/ensemble.hpp"
#include "sectorlen/graph.hpp"
#include "sectorlen/noise.hpp"
#include "sectorlen/sld.hpp"

namespace sectorlen {

using ordered_json = nlohmann::ordered_json;

/// {"n":..., "d":..., "A":["1","0",...], "a":[floats], "source":..., "meta":{...}}
ordered_json sld_to_json(const Sld& sld);
Sld sld_from_json(const ordered_json& j);

/// One row per k: "k,A,a".
std::string sld_to_csv(const Sld& sld);

/// {"n":..., "d":..., "edges":[[i,j,w],...]} with 1-based vertices.
ordered_json graph_to_json(const Graph& g);
Graph graph_from_json(const ordered_json& j);

ordered_json moments_to_json(const Moments& m);
ordered_json threshold_report_to_json(const ThresholdReport& r);
ordered_json ensemble_report_to_json(const EnsembleReport& r);
std::string ensemble_tvds_to_csv(const EnsembleReport& r);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace sectorlen
