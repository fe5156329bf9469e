#ifndef LEXIPHY_TREE_HPP
#define LEXIPHY_TREE_HPP

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "lexiphy/distance_matrix.hpp"

namespace lexiphy {

// Rooted binary tree with branch lengths. Node heights measure the distance
// to the deepest descendant leaf and are derived from the branch lengths at
// construction; for an ultrametric tree they equal the node's age.
// Immutable once built.
class Tree {
 public:
  struct Node {
    std::string label;    // non-empty exactly for leaves
    double length = 0.0;  // edge to the parent; 0 at the root
    double height = 0.0;
    int parent = -1;
    int left = -1;
    int right = -1;
    bool is_leaf() const { return left < 0; }
  };

  // Takes ownership of an arena of nodes. Validates that the topology is
  // binary, leaf labels are unique and non-empty, and branch lengths are
  // finite and non-negative; fills in parent links and heights.
  // Throws DuplicateLeafError or std::invalid_argument.
  static Tree build(std::vector<Node> nodes, int root);

  const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  int root() const { return root_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t leaf_count() const { return (nodes_.size() + 1) / 2; }
  double height() const { return nodes_[static_cast<std::size_t>(root_)].height; }

  // Leaf labels in ascending order.
  std::vector<std::string> leaf_labels() const;

  // Smallest leaf label below each node; used for canonical child ordering.
  const std::vector<std::string>& min_labels() const { return min_labels_; }

 private:
  Tree(std::vector<Node> nodes, int root, std::vector<std::string> min_labels)
      : nodes_(std::move(nodes)), root_(root), min_labels_(std::move(min_labels)) {}

  std::vector<Node> nodes_;
  int root_;
  std::vector<std::string> min_labels_;
};

// All root-to-leaf path lengths equal within the tolerance.
bool is_ultrametric(const Tree& t, double tol = 1e-9);

// Leaf-label sets induced by internal non-root nodes: the rooted clade set.
// Each clade is sorted; singletons and the full leaf set are excluded.
std::set<std::vector<std::string>> clades(const Tree& t);

// Same topology with every branch length (and height) multiplied by factor.
Tree scale_tree(const Tree& t, double factor);

// Pairwise leaf-to-leaf path lengths, as a TimeMatrix over the sorted leaf
// labels. On an ultrametric tree the entry for a pair is twice the height
// of their common ancestor, which is exactly what upgma() inverts.
TimeMatrix leaf_distance_matrix(const Tree& t);

}  // namespace lexiphy

#endif
