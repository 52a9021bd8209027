#include "sigdef/io/sg_format.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

namespace sigdef::io {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

ParsedGraph parse_sg(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<NamedEdge> edges;
  std::set<std::tuple<std::string, std::string, Sign>> seen;
  std::size_t duplicates = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto tok = tokens(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (tok[0] == "v") {
      if (tok.size() != 2) throw ParseError(line_no, "expected 'v <label>'");
      vertices.emplace_back(tok[1]);
    } else if (tok[0] == "e") {
      if (tok.size() != 4) throw ParseError(line_no, "expected 'e <label> <label> <+|->'");
      if (tok[3] != "+" && tok[3] != "-") throw ParseError(line_no, "edge sign must be + or -");
      if (tok[1] == tok[2]) throw ParseError(line_no, "loop edge at '" + std::string(tok[1]) + "'");
      Sign sign = tok[3] == "+" ? Sign::positive : Sign::negative;
      std::string u(tok[1]);
      std::string v(tok[2]);
      auto key = u < v ? std::make_tuple(u, v, sign) : std::make_tuple(v, u, sign);
      if (!seen.insert(key).second) ++duplicates;
      // Endpoints are declared in order so ids follow first appearance.
      vertices.push_back(u);
      vertices.push_back(v);
      edges.push_back({std::move(u), std::move(v), sign});
    } else {
      throw ParseError(line_no, "unknown record '" + std::string(tok[0]) + "'");
    }
  }

  // build_graph interns labels in order, so repeated declarations are harmless.
  return {build_graph(edges, vertices), duplicates};
}

ParsedGraph load_sg(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sg(buf.str());
}

std::string serialize_sg(const SignedGraph &g) {
  std::ostringstream out;
  out << "# sigdef/1 vertices=" << g.vertex_count() << " positive=" << g.positive_edge_count()
      << " negative=" << g.negative_edge_count() << '\n';
  for (const auto &label : g.labels()) out << "v " << label << '\n';
  for (const Edge &e : g.edges())
    out << "e " << g.label(e.u) << ' ' << g.label(e.v) << ' ' << sign_char(e.sign) << '\n';
  return out.str();
}

}  // namespace sigdef::io
