#pragma once

#include "crosskit/drawing.hpp"

#include <json.hpp>

#include <string>

namespace crosskit {

using Json = nlohmann::json;

// `.ppg.json`: graph plus optional geometric predrawing of a subgraph.
PartiallyPredrawnGraph load_ppg(const Json& j);
PartiallyPredrawnGraph load_ppg_text(const std::string& text);
PartiallyPredrawnGraph load_ppg_file(const std::string& path);
Json save_ppg(const PartiallyPredrawnGraph& ppg);

// planarizes the geometric predrawing if the combinatorial form is absent;
// returns an empty drawing when there is no predrawing at all
CombinatorialDrawing ensure_predrawing(const PartiallyPredrawnGraph& ppg);

// an empty combinatorial drawing of the empty subgraph of g
CombinatorialDrawing empty_predrawing(const Graph& g);

Json drawing_to_json(const CombinatorialDrawing& cd);
Json report_to_json(const ValidationReport& rep);

std::string dump_json(const Json& j);

}  // namespace crosskit
