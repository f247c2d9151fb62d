#pragma once

#include <iosfwd>
#include <string>

#include "tpw/decomposition.hpp"
#include "tpw/generators.hpp"
#include "tpw/graph.hpp"
#include "tpw/partition.hpp"

namespace tpw {

// Text formats. Vertex and bag ids are 1-based on disk and 0-based in memory.
// Lines starting with 'c' are comments unless they carry metadata:
//   c meta family=<name> <param>=<int> ... claimed_<claim>=<value> ...
//   c label <v> <text>
// Every reader throws InputError naming the offending line.

/// `p tpw <n> <m>` followed by `e <u> <v>` lines. Metadata is written when
/// `meta` is non-null.
void write_graph(std::ostream& out, const Graph& g, const InstanceMeta* meta = nullptr);
Instance read_graph(std::istream& in);

/// Graphviz rendering; labels are used when present.
void write_dot(std::ostream& out, const Graph& g, const InstanceMeta* meta = nullptr);

/// `s td <#bags> <width+1> <n>`, `b <id> <v...>`, then `<id> <id>` tree edges.
void write_decomposition(std::ostream& out, const TreeDecomposition& td, int n);
/// Returns the decomposition and the declared vertex count.
std::pair<TreeDecomposition, int> read_decomposition(std::istream& in);

/// `s tp <#bags> <width> <n>` then `b <id> <v...>`.
void write_partition(std::ostream& out, const TreePartition& p);
TreePartition read_partition(std::istream& in);

/// Parses "p" or "p/q".
Rational parse_rational(const std::string& text);

std::string to_string(const Graph& g, const InstanceMeta* meta = nullptr);
std::string to_string(const TreeDecomposition& td, int n);
std::string to_string(const TreePartition& p);

}  // namespace tpw
