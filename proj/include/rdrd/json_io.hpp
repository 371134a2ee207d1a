#pragma once

#include <json.hpp>

#include "rdrd/audits.hpp"
#include "rdrd/catalog.hpp"
#include "rdrd/constructions.hpp"
#include "rdrd/graph.hpp"
#include "rdrd/labeling.hpp"
#include "rdrd/products.hpp"
#include "rdrd/reduction.hpp"
#include "rdrd/solver.hpp"

// JSON payloads for the command-line tool. Wall-clock fields are kept out of
// these objects; callers add them under a separate "timing" key.
namespace rdrd {

using Json = nlohmann::ordered_json;

Json to_json(const Graph& g);  // {"n":..,"m":..,"edges":[[u,v],..]}
Json to_json(const GraphStats& s);
Json to_json(const ChordalityReport& r);
Json to_json(const ProductVertexMap& map);
Json to_json(const Labeling& f);  // plain label array
Json to_json(const ValidationReport& r);
Json to_json(const SolveResult& r);
Json to_json(const FormulaResult& r);
Json to_json(const BoundsResult& r);
Json to_json(const CrosscheckReport& r);
Json to_json(const LemmaReport& r);
Json to_json(const BagReport& r);
Json to_json(const X3CInstance& inst);

}  // namespace rdrd
