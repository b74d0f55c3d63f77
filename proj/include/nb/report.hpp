#pragma once

#include "nb/arrangement.hpp"
#include "nb/graph_bounds.hpp"
#include "nb/nerve.hpp"
#include "nb/witness_graph.hpp"

#include "json.hpp"

#include <string>

namespace nb {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "nerve-bounds/1";

// Top-level document skeleton: {"schema": ..., "kind": kind}.
Json report_skeleton(const std::string& kind);

Json simplicity_json(const SimplicityReport& r);
Json arrangement_json(const Arrangement& arr, bool projective);
Json hypothesis_json(const HypothesisReport& r);
Json bound_json(const BoundReport& r);
Json witness_graph_json(const WitnessGraph& g);
Json edge_identity_json(const EdgeIdentityReport& r);
Json triangle_label_json(const TriangleLabelReport& r);
Json multiedge_json(const MultiedgeReport& r);
Json tree_search_json(const TreeSearchResult& r);
Json face_census_json(const FaceCensus& c);
Json decomposition_bound_json(const DecompositionBound& r);

// Serialize with a trailing newline and write to path (Error on I/O failure);
// path "-" writes to stdout.
void write_json(const Json& doc, const std::string& path);

// Same path conventions for arbitrary text (SVG, NDJSON corpora).
void write_text_file(const std::string& text, const std::string& path);

} // namespace nb
