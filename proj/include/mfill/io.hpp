#pragma once

#include <json.hpp>

#include <string>

#include "mfill/cayley.hpp"
#include "mfill/complex2.hpp"
#include "mfill/jung.hpp"
#include "mfill/metric_space.hpp"
#include "mfill/polygon_norm.hpp"

namespace mfill {

using Json = nlohmann::ordered_json;

/// Numbers in files: JSON integers/doubles, decimal strings ("1.25"),
/// fraction strings ("3/4"), or [p, q] rational pairs.
Rat rat_from_json(const Json& j);
Json rat_to_json(const Rat& q);  // decimal string when exact, else [p, q]

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// 64-bit FNV-1a content digest, hex encoded.
std::string content_digest(const std::string& bytes);

PolygonalNorm polygon_from_json(const Json& j);
Json polygon_to_json(const std::vector<Vec2>& vertices);

FiniteMetricSpace metric_from_json(const Json& j);
FiniteMetricSpace metric_from_csv(const std::string& text);
FiniteMetricSpace metric_from_file(const std::string& path);  // dispatch on extension
Json metric_to_json(const FiniteMetricSpace& m);

Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

GroupPresentation presentation_from_json(const Json& j);

SimplicialComplex2 complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex2& k);

Loop loop_from_json(const Json& j);
Chain chain_from_json(const Json& j);
Json chain_to_json(const Chain& c);

Json enclosure_to_json(const Enclosure& e);
Json pi_scalar_to_json(const PiScalar& s);
Json norm_invariants_to_json(const NormInvariantReport& rep);

}  // namespace mfill
