#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "locspec/errors.hpp"

namespace locspec {

/// Sorted, duplicate-free set of vertex indices in [0, n).
struct VertexSet {
  std::vector<int> members;

  static VertexSet from_indices(std::vector<int> idx, int n);

  /// Parses either a comma-separated list "0,3,5" or "@path" where the file
  /// holds one index per line ('#' comments and blank lines ignored).
  static VertexSet parse(const std::string& text, int n);

  int size() const { return static_cast<int>(members.size()); }
  bool empty() const { return members.empty(); }
  bool contains(int v) const;

  bool operator==(const VertexSet&) const = default;
};

/// Immutable simple connected graph on vertices 0..n-1.
class Graph {
 public:
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  /// Edge-list document: lines "u v"; blank lines and '#' comments ignored;
  /// optional header "n <count>".  Vertex count defaults to 1 + max index.
  static Graph from_edge_list(const std::string& text);

  /// Families: cycle(n>=3), hypercube(k>=1), complete(n>=2), path(n>=2),
  /// petersen.  Hypercube vertices are k-bit words, adjacency is Hamming
  /// distance 1; cycle is i ~ i+-1 mod n.
  static Graph generate(const std::string& family,
                        const std::vector<int>& params);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int u, int v) const;

  Eigen::MatrixXd adjacency_matrix() const;
  /// A * u without materializing the matrix.
  Eigen::VectorXd multiply_adjacency(const Eigen::VectorXd& u) const;

 private:
  Graph(int n, std::vector<std::pair<int, int>> edges,
        std::vector<std::vector<int>> adj)
      : n_(n), edges_(std::move(edges)), adj_(std::move(adj)) {}
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

/// Layers C_0 = C, C_k = { i : dist(i, C) = k }.  The top layer index is the
/// eccentricity of C (the covering radius when C is read as a code).
struct DistancePartition {
  std::vector<VertexSet> layers;
  std::vector<int> depth;  // per-vertex distance to C

  int eccentricity() const { return static_cast<int>(layers.size()) - 1; }
  const VertexSet& antipodal() const { return layers.back(); }
};

/// Multi-source BFS layering of V around the nonempty set c.
DistancePartition distance_partition(const Graph& g, const VertexSet& c);

/// The 16 codewords of the cyclic [7,4] Hamming code with generator
/// polynomial x^3 + x + 1, as hypercube(7) labels (label bit j = coefficient
/// of x^j).
VertexSet hamming74_codewords();

}  // namespace locspec
