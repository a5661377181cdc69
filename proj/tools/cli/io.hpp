#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "hyperlat/canonical.hpp"
#include "hyperlat/lattice.hpp"
#include "hyperlat/nef_pipeline.hpp"
#include "hyperlat/resolution_graph.hpp"
#include "hyperlat/wall_chamber.hpp"

namespace hyperlat::io {

using json = nlohmann::json;

// {"mode": "diagonal"|"gram", "n" | "gram", "vectors": {name: [ints]}}
struct LatticeDoc {
  Lattice lattice = Lattice::diagonal(0);
  std::map<std::string, LatticeVector> vectors;
};

json parse_text(const std::string& text);

Int to_int(const json& j, const char* what);
LatticeVector vector_from_json(const json& j);
json to_json(const LatticeVector& v);

LatticeDoc lattice_from_json(const json& j);
json to_json(const LatticeDoc& doc);

IntMatrix matrix_from_json(const json& j);
json to_json(const IntMatrix& m);

// {"num", "den"}
json to_json(const Rational& q);
Rational rational_from_json(const json& j);

// {"num": [ints], "den": int}
json to_json(const QDivisor& m);
QDivisor qdivisor_from_json(const json& j);

// {"matrix": [[...]], "word": ["negate", ...]}; parsing checks that the word
// evaluates to the matrix.
json to_json(const Isometry& phi);
Isometry isometry_from_json(const json& j, const Lattice& lattice);

WallType wall_type_from_json(const json& j);
json to_json(const WallType& t);

json to_json(const Cycle& z);
Cycle cycle_from_json(const json& j);

// {"vertices": [{"d", "g", "sing"}], "edges": [[i, j, m]], "concurrent"?}
DualGraph graph_from_json(const json& j);
json to_json(const DualGraph& g);

// {"gram", "K", "E", "curves": [{"class", "pa"}]}
SurfaceModel model_from_json(const json& j);
json to_json(const SurfaceModel& model);

std::string dump(const json& j);

}  // namespace hyperlat::io
