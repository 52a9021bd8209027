#pragma once

#include <span>
#include <string>

#include "sigdef/signed_graph.hpp"

namespace sigdef::io {

/// Graphviz rendering: positive edges solid, negative edges dashed, and
/// vertices in `highlight` drawn as boxes.
std::string export_dot(const SignedGraph &g, std::span<const VertexId> highlight = {});

}  // namespace sigdef::io
