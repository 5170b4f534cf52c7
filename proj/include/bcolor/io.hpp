#pragma once

#include "bcolor/coloring.hpp"
#include "bcolor/graph.hpp"
#include "bcolor/homlift.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

// Text formats. Vertex indices in files are 1-based; lines starting with 'c'
// are comments everywhere. Errors are InputError with a line number.
//
//   graph     .col         "p edge <n> <m>" then m lines "e <u> <v>"
//   labels    .col.labels  "<index> <label>" per vertex (sidecar of a .col)
//   colouring              "k <k>" then "<vertex> <color>" per vertex
//   vertex map             "map <source.col> <target.col>" then
//                          "<source vertex> <target vertex>" per source vertex
//
// A <vertex> token is the vertex label when the graph has labels, otherwise
// (or additionally) its 1-based index.

namespace bcolor::io {

Graph read_col(std::istream &in, std::vector<std::string> labels = {});
void write_col(std::ostream &out, const Graph &g, std::string_view comment = {});

std::vector<std::string> read_labels(std::istream &in, std::size_t vertex_count);
void write_labels(std::ostream &out, const Graph &g);

/// Reads `path` and, when it exists, the sidecar `path.labels`.
Graph load_graph(const std::filesystem::path &path);
/// Writes `path` and, for labelled graphs, `path.labels`.
void save_graph(const std::filesystem::path &path, const Graph &g, std::string_view comment = {});

Coloring read_coloring(std::istream &in, const Graph &g);
void write_coloring(std::ostream &out, const Graph &g, const Coloring &c);
Coloring load_coloring(const std::filesystem::path &path, const Graph &g);
void save_coloring(const std::filesystem::path &path, const Graph &g, const Coloring &c);

struct MapFile {
  std::filesystem::path source_file; // as resolved from the header
  std::filesystem::path target_file;
  VertexMap map;
};

/// Graph paths in the header are relative to the map file's directory.
MapFile load_map(const std::filesystem::path &path);
/// Writes the header with `source_ref` / `target_ref` verbatim.
void save_map(const std::filesystem::path &path, const VertexMap &f, const std::string &source_ref,
              const std::string &target_ref);

/// Resolves a vertex token (label or 1-based index) against `g`.
Vertex parse_vertex(const Graph &g, std::string_view token);

} // namespace bcolor::io
