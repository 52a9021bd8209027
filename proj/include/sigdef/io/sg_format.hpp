#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sigdef/signed_graph.hpp"

// Plain-text signed graph format (.sg), UTF-8 with LF line endings:
//
//   # comment
//   v <label>                 optional vertex declaration
//   e <label> <label> <+|->   edge
//
// Vertex ids follow first appearance. Labels are whitespace-free tokens.
namespace sigdef::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParsedGraph {
  SignedGraph graph;
  /// Same-sign repeats that were collapsed.
  std::size_t duplicate_edges = 0;
};

ParsedGraph parse_sg(std::string_view text);

/// Reads and parses a file; I/O failures throw std::runtime_error.
ParsedGraph load_sg(const std::filesystem::path &path);

/// Declares every vertex in id order, then lists the edges, so parsing the
/// output reproduces the graph exactly.
std::string serialize_sg(const SignedGraph &g);

}  // namespace sigdef::io
