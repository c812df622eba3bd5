#pragma once

#include "skeletal/complex.hpp"

namespace skel {

enum class GraphIsoMode { Abstract, Similarity };

// Multigraph isomorphism on <= 16 nodes. Abstract mode ignores positions;
// similarity mode additionally requires a similarity transform matching the
// node positions (tested through normalized squared-distance profiles).
bool graph_isomorphic(const GeometricGraph& g1, const GeometricGraph& g2, GraphIsoMode mode);

} // namespace skel
