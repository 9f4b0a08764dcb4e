#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace netchor {

/// Dense node index in [0, N).
using NodeId = std::uint32_t;

using Edge = std::pair<NodeId, NodeId>;

/// Immutable undirected simple graph stored as sorted adjacency lists.
///
/// Construction rejects self-loops, repeated pairs and out-of-range ids.
/// Labels are optional metadata; every algorithm works on dense ids.
class Graph {
 public:
  Graph() = default;

  /// An edgeless graph on `node_count` nodes.
  explicit Graph(std::size_t node_count);

  /// Throws InputError on a self-loop, a duplicate unordered pair, an id
  /// >= node_count, or a label vector whose size is neither 0 nor node_count.
  Graph(std::size_t node_count, std::span<const Edge> edges,
        std::vector<std::string> labels = {});

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::size_t degree(NodeId node) const;
  std::span<const NodeId> neighbors(NodeId node) const;
  bool has_edge(NodeId a, NodeId b) const;

  /// Edges as (u, v) with u < v, ordered lexicographically.
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Label of `node`, or its decimal id when the graph is unlabeled.
  std::string label(NodeId node) const;

  /// Unchecked neighbor access for inner loops.
  std::span<const NodeId> neighbors_unchecked(NodeId node) const noexcept {
    return adjacency_[node];
  }

 private:
  void check_node(NodeId node) const;

  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

struct ComponentPartition {
  /// Component index per node. Components are numbered in order of their
  /// smallest member id.
  std::vector<std::size_t> component_of;
  /// Size of each component, indexed by component number.
  std::vector<std::size_t> component_sizes;
  /// Component sizes sorted descending.
  std::vector<std::size_t> sizes_descending;

  std::size_t count() const noexcept { return component_sizes.size(); }
  std::size_t largest_size() const noexcept {
    return sizes_descending.empty() ? 0 : sizes_descending.front();
  }
  /// Number of the largest component; ties go to the lower number.
  std::size_t largest_component() const;
};

ComponentPartition connected_components(const Graph& g);

struct NodeRemoval {
  Graph graph;
  /// old id -> new id; nullopt for the removed node.
  std::vector<std::optional<NodeId>> remap;
};

/// New graph without `node` and its incident edges. Surviving nodes keep
/// their relative order; labels follow their nodes.
NodeRemoval remove_node(const Graph& g, NodeId node);

/// Sum of degrees equals twice the edge count.
bool satisfies_handshake(const Graph& g);

// Edge-list text format --------------------------------------------------

/// Result of reading an edge list: labels map to dense ids in order of first
/// appearance and the graph carries them.
struct EdgeListIngestion {
  Graph graph;
  /// Repeated unordered pairs collapsed into a single edge.
  std::size_t duplicates_collapsed = 0;
  std::vector<std::string> warnings;
};

/// Parses one edge per line: two labels separated by whitespace and/or a
/// comma. Blank lines and lines starting with '#' are skipped. A line with a
/// single label declares a node without edges. Self-loops raise
/// ValidationError and any other shape raises ParseError, both carrying the
/// line number.
EdgeListIngestion parse_edge_list(std::istream& in);
EdgeListIngestion read_edge_list_file(const std::string& path);

/// Writes the graph in the edge-list format, using labels when present.
/// Isolated nodes are emitted as single-label lines so that reading the
/// output back yields the same labeled graph.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace netchor
