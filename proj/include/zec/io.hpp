#pragma once

#include <string>

#include "zec/avc.hpp"
#include "zec/channel.hpp"
#include "zec/graph.hpp"

namespace zec {

// File formats. Every document is JSON; rational entries are exact "p/q" (or
// "p") strings, never floats. Serialization is canonical: sorted keys,
// two-space indentation, trailing newline, so parse/serialize round trips
// are byte-identical up to that normalization.
//
//   channel: {"input_size": 2, "output_size": 2, "rows": [["1","0"],["0","1"]]}
//   graph:   {"vertex_count": 5, "edges": [[0,1],[1,2],[2,3],[3,4],[0,4]]}
//   avc:     {"input_size": 2, "output_size": 2, "states": [[0,1],[1,0]]}

enum class FileKind { Channel, Graph, Avc };

FileKind sniff_kind(const std::string &text);

Channel parse_channel(const std::string &text);
Graph parse_graph(const std::string &text);
ZeroOneAVC parse_avc(const std::string &text);

std::string serialize_channel(const Channel &w);
std::string serialize_graph(const Graph &g);
std::string serialize_avc(const ZeroOneAVC &avc);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

}  // namespace zec
