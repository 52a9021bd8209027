#include "sigdef/io/dot.hpp"

#include <sstream>
#include <vector>

namespace sigdef::io {

namespace {

std::string quoted(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string export_dot(const SignedGraph &g, std::span<const VertexId> highlight) {
  std::vector<bool> boxed(g.vertex_count(), false);
  for (VertexId v : highlight) {
    if (v >= g.vertex_count()) throw GraphError("highlighted vertex out of range");
    boxed[v] = true;
  }
  std::ostringstream out;
  out << "graph sigdef {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  " << quoted(g.label(v));
    if (boxed[v]) out << " [shape=box]";
    out << ";\n";
  }
  for (const Edge &e : g.edges()) {
    out << "  " << quoted(g.label(e.u)) << " -- " << quoted(g.label(e.v));
    if (e.sign == Sign::negative) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sigdef::io
