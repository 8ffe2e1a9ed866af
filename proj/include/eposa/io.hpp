#ifndef EPOSA_IO_HPP
#define EPOSA_IO_HPP

#include <string>

#include "eposa/gadgets.hpp"
#include "eposa/graph.hpp"

#include "json.hpp"

namespace eposa {

using Json = nlohmann::ordered_json;

// graph6: N(n) header, then the upper triangle column-major (x_{0,1},
// x_{0,2}, x_{1,2}, ...) packed big-endian into 6-bit chunks offset by 63.
// The long form (n in 63..258047) is supported.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(const std::string& bytes);

// DOT export with role labels as vertex attributes.
std::string to_dot(const Graph& g);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json heinlein_to_json(const HeinleinWall& w);
HeinleinWall heinlein_from_json(const Json& j);

Json wall_to_json(const Wall& w);
Wall wall_from_json(const Json& j);

Json instance_to_json(const CounterexampleInstance& inst);
CounterexampleInstance instance_from_json(const Json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

// Recovers the a*, b*, c*, d* terminals from role labels (TerminalA..D,
// with bottleneck 0 / max as fallback for c*, d*).
std::array<VertexId, 4> detect_terminals(const Graph& g);

}  // namespace eposa

#endif
