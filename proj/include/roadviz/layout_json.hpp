#pragma once

// JSON dump of a drawing for golden tests and external renderers:
//
// {
//   "vertex_radius": 8, "num_labels": 2,
//   "big_circle": {"center": [x, y], "radius": R},
//   "sccs":     [{"center": [x, y], "radius": r, "angle": a, "cycle_length": c, "vertices": [...]}],
//   "vertices": [{"id": v, "position": [x, y], "scc": i}],
//   "edges":    [{"kind": "segment", "source", "target", "label", "start", "end", "stripe_offset", "length"}
//                | {"kind": "loop", "source", "target", "label", "center", "radius", "length"}]
// }

#include <string>
#include <type_traits>
#include <variant>

#include <json.hpp>

#include "roadviz/layout.hpp"

namespace roadviz {

inline nlohmann::json to_json(point p) { return nlohmann::json::array({p.x, p.y}); }

inline nlohmann::json to_json(const drawing& d) {
  using nlohmann::json;
  const layout& lay = d.layout;
  json out;
  out["vertex_radius"] = lay.vertex_radius;
  out["num_labels"] = lay.num_labels;
  out["big_circle"] = {{"center", to_json(lay.big_center)}, {"radius", lay.big_radius}};

  json sccs = json::array();
  for (const scc_circle& c : lay.sccs) {
    sccs.push_back({{"center", to_json(c.center)},
                    {"radius", c.radius},
                    {"angle", c.angle},
                    {"cycle_length", c.cycle_length},
                    {"vertices", c.order}});
  }
  out["sccs"] = std::move(sccs);

  json vertices = json::array();
  for (vertex_id v = 0; v < lay.vertex_pos.size(); ++v)
    vertices.push_back({{"id", v}, {"position", to_json(lay.vertex_pos[v])}, {"scc", lay.vertex_scc[v]}});
  out["vertices"] = std::move(vertices);

  json edges = json::array();
  for (const edge_geometry& e : d.edges) {
    json item{{"source", e.source}, {"target", e.target}, {"label", e.label}, {"length", e.length}};
    std::visit(
        [&](const auto& shape) {
          using T = std::decay_t<decltype(shape)>;
          if constexpr (std::is_same_v<T, segment>) {
            item["kind"] = "segment";
            item["start"] = to_json(shape.start);
            item["end"] = to_json(shape.end);
            item["stripe_offset"] = e.stripe_offset;
          } else {
            item["kind"] = "loop";
            item["center"] = to_json(shape.center);
            item["radius"] = shape.radius;
          }
        },
        e.shape);
    edges.push_back(std::move(item));
  }
  out["edges"] = std::move(edges);
  return out;
}

}  // namespace roadviz
