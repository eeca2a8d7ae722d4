#pragma once

#include "gq/graph.hpp"
#include "gq/structure.hpp"

namespace gq::test {

inline const GQStructure& quadrangle() {
  static const GQStructure geometry = build_quadric_quadrangle();
  return geometry;
}

inline const PointGraph& collinearity() {
  static const PointGraph graph = point_graph(quadrangle());
  return graph;
}

}  // namespace gq::test
