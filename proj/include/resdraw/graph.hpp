#pragma once
// Graph and layout representation plus edge-list / layout file I/O.
//
// Node ids are opaque strings so external corpora can be ingested unchanged;
// everything downstream works on the dense indices assigned here. Graph and
// Layout are treated as immutable once built and are safe to share across
// threads.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "resdraw/errors.hpp"
#include "resdraw/geometry.hpp"

namespace resdraw {

/// Undirected simple graph: no self-loops, no duplicate edges.
class Graph {
public:
    /// Index of `id`, inserting it at the end of the node order if new.
    int ensure_node(const std::string& id);

    /// Adds the undirected edge a-b by id, creating missing nodes.
    /// Throws ArgumentError on self-loops and duplicate edges.
    void add_edge(const std::string& a, const std::string& b);
    void add_edge_by_index(int a, int b);

    int node_count() const { return static_cast<int>(ids_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& node_ids() const { return ids_; }
    const std::string& id_of(int u) const { return ids_[static_cast<size_t>(u)]; }
    std::optional<int> index_of(std::string_view id) const;

    /// Edges as index pairs (a < b), in insertion order.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int u) const { return adj_[static_cast<size_t>(u)]; }
    int degree(int u) const { return static_cast<int>(adj_[static_cast<size_t>(u)].size()); }
    int max_degree() const;

    bool has_edge(int a, int b) const;

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::pair<int, int>> edges_;
    std::set<std::pair<int, int>> edge_set_;
    std::vector<std::vector<int>> adj_;
};

/// Node positions, indexed by the graph's node indices.
struct Layout {
    std::vector<Point2> pos;
};

/// Integer node positions (grid drawings), indexed like Layout.
struct GridLayout {
    std::vector<std::pair<long long, long long>> pos;
};

Layout to_layout(const GridLayout& gl);

/// Parses the plain edge-list format: one "idA idB" pair per line,
/// whitespace-separated; lines whose first non-blank character is '#' are
/// comments. Node order is first-appearance order.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list for graphs without isolated nodes.
std::string serialize_edge_list(const Graph& g);

/// Parses "id x y" lines into positions for exactly the nodes of g.
Layout parse_layout(std::istream& in, const Graph& g);
Layout parse_layout(std::string_view text, const Graph& g);

/// Writes "id x y" lines in graph node order. Coordinates are printed with
/// 17 significant digits so a parse round-trip is bit-identical.
std::string write_layout(const Graph& g, const Layout& l);

/// Deterministic-for-seed uniform positions in [0, box]^2, nudged so that
/// every pair of nodes is further apart than box * 1e-6.
Layout random_layout(const Graph& g, std::uint64_t seed, double box);

} // namespace resdraw
