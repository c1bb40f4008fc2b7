#pragma once

#include <nlohmann/json.hpp>

#include "topoglyph/arrangement.hpp"
#include "topoglyph/bounds.hpp"
#include "topoglyph/drawing.hpp"
#include "topoglyph/rotsys.hpp"
#include "topoglyph/spanning_tree.hpp"
#include "topoglyph/t_representation.hpp"

namespace topoglyph {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json to_json(const RotationSystem& r);
RotationSystem rotation_system_from_json(const json& j);

json to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const json& j);

json to_json(const Arrangement& a);
Arrangement arrangement_from_json(const json& j);

json to_json(const Drawing& d);
Drawing drawing_from_json(const json& j);

json to_json(const ATGraph& g);
json to_json(const TopoSpanningTree& t);
json to_json(const TRepresentation& t);

}  // namespace topoglyph
