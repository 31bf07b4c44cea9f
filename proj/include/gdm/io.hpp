#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "gdm/graph.hpp"
#include "gdm/labeling.hpp"

namespace gdm {

/// Edge-list text format: optional header "n <vertexCount>", then one
/// "u v" pair per line, 0-based. Without a header the vertex count is
/// 1 + max vertex id. The writer always emits the header and sorted edges.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

/// Labeling files are JSON records, vertex index = array index:
///   group:   {"groupSpec": "Z4xZ2", "values": [[0,1],[3,0],...]}
///   classic: {"values": [1,2,4,3]}
using AnyLabeling = std::variant<GroupLabeling, ClassicLabeling>;

AnyLabeling read_labeling(std::istream& in);
void write_labeling(std::ostream& out, const GroupLabeling& l);
void write_labeling(std::ostream& out, const ClassicLabeling& l);

AnyLabeling read_labeling_file(const std::string& path);
void write_labeling_file(const std::string& path, const GroupLabeling& l);
void write_labeling_file(const std::string& path, const ClassicLabeling& l);

} // namespace gdm
