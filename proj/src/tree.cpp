#include "lexiphy/tree.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "lexiphy/errors.hpp"

namespace lexiphy {

Tree Tree::build(std::vector<Node> nodes, int root) {
  const std::size_t n = nodes.size();
  if (n == 0 || root < 0 || static_cast<std::size_t>(root) >= n) {
    throw std::invalid_argument("tree root out of range");
  }

  // Fill parents, check shape, and order the traversal from the root so
  // unreachable nodes are caught.
  for (Node& nd : nodes) nd.parent = -1;
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> stack = {root};
  std::vector<char> seen(n, 0);
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    if (id < 0 || static_cast<std::size_t>(id) >= n) {
      throw std::invalid_argument("tree child index out of range");
    }
    if (seen[static_cast<std::size_t>(id)]) {
      throw std::invalid_argument("tree contains a cycle or shared node");
    }
    seen[static_cast<std::size_t>(id)] = 1;
    order.push_back(id);
    const Node& nd = nodes[static_cast<std::size_t>(id)];
    if ((nd.left < 0) != (nd.right < 0)) {
      throw std::invalid_argument("internal nodes need exactly two children");
    }
    if (!nd.is_leaf()) {
      nodes[static_cast<std::size_t>(nd.left)].parent = id;
      nodes[static_cast<std::size_t>(nd.right)].parent = id;
      stack.push_back(nd.left);
      stack.push_back(nd.right);
    }
  }
  if (order.size() != n) {
    throw std::invalid_argument("tree contains unreachable nodes");
  }

  std::unordered_set<std::string> labels;
  for (const Node& nd : nodes) {
    if (!std::isfinite(nd.length) || nd.length < 0.0) {
      throw std::invalid_argument("branch lengths must be finite and non-negative");
    }
    if (nd.is_leaf()) {
      if (nd.label.empty()) {
        throw std::invalid_argument("leaf labels must be non-empty");
      }
      if (!labels.insert(nd.label).second) {
        throw DuplicateLeafError("duplicate leaf label \"" + nd.label + "\"");
      }
    } else if (!nd.label.empty()) {
      throw std::invalid_argument("internal nodes carry no label");
    }
  }
  nodes[static_cast<std::size_t>(root)].length = 0.0;

  // Heights and minimum leaf labels, children before parents.
  std::vector<std::string> min_labels(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Node& nd = nodes[static_cast<std::size_t>(*it)];
    if (nd.is_leaf()) {
      nd.height = 0.0;
      min_labels[static_cast<std::size_t>(*it)] = nd.label;
    } else {
      const Node& l = nodes[static_cast<std::size_t>(nd.left)];
      const Node& r = nodes[static_cast<std::size_t>(nd.right)];
      nd.height = std::max(l.height + l.length, r.height + r.length);
      min_labels[static_cast<std::size_t>(*it)] =
          std::min(min_labels[static_cast<std::size_t>(nd.left)],
                   min_labels[static_cast<std::size_t>(nd.right)]);
    }
  }
  return Tree(std::move(nodes), root, std::move(min_labels));
}

std::vector<std::string> Tree::leaf_labels() const {
  std::vector<std::string> out;
  out.reserve(leaf_count());
  for (const Node& nd : nodes_) {
    if (nd.is_leaf()) out.push_back(nd.label);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_ultrametric(const Tree& t, double tol) {
  double lo = 0.0, hi = 0.0;
  bool first = true;
  std::function<void(int, double)> walk = [&](int id, double depth) {
    const Tree::Node& nd = t.node(id);
    if (nd.is_leaf()) {
      if (first) {
        lo = hi = depth;
        first = false;
      } else {
        lo = std::min(lo, depth);
        hi = std::max(hi, depth);
      }
      return;
    }
    walk(nd.left, depth + t.node(nd.left).length);
    walk(nd.right, depth + t.node(nd.right).length);
  };
  walk(t.root(), 0.0);
  return hi - lo <= tol;
}

namespace {

// Sorted leaf labels below each node, reused by clades() and RF.
std::vector<std::string> collect_leaves(const Tree& t, int id) {
  const Tree::Node& nd = t.node(id);
  if (nd.is_leaf()) return {nd.label};
  std::vector<std::string> l = collect_leaves(t, nd.left);
  std::vector<std::string> r = collect_leaves(t, nd.right);
  std::vector<std::string> merged;
  merged.reserve(l.size() + r.size());
  std::merge(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(merged));
  return merged;
}

void collect_clades(const Tree& t, int id, bool at_root,
                    std::set<std::vector<std::string>>& out) {
  const Tree::Node& nd = t.node(id);
  if (nd.is_leaf()) return;
  if (!at_root) {
    out.insert(collect_leaves(t, id));
  }
  collect_clades(t, nd.left, false, out);
  collect_clades(t, nd.right, false, out);
}

}  // namespace

std::set<std::vector<std::string>> clades(const Tree& t) {
  std::set<std::vector<std::string>> out;
  collect_clades(t, t.root(), true, out);
  return out;
}

Tree scale_tree(const Tree& t, double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw std::invalid_argument("scale factor must be positive and finite");
  }
  std::vector<Tree::Node> nodes;
  nodes.reserve(t.node_count());
  for (std::size_t i = 0; i < t.node_count(); ++i) {
    Tree::Node nd = t.node(static_cast<int>(i));
    nd.length *= factor;
    nodes.push_back(std::move(nd));
  }
  return Tree::build(std::move(nodes), t.root());
}

TimeMatrix leaf_distance_matrix(const Tree& t) {
  // Depth of every node from the root, then D(a,b) = depth(a) + depth(b)
  // - 2 * depth(mrca).
  const std::size_t n_nodes = t.node_count();
  std::vector<double> depth(n_nodes, 0.0);
  std::vector<int> leaves;
  std::vector<int> stack = {t.root()};
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    const Tree::Node& nd = t.node(id);
    if (nd.parent >= 0) {
      depth[static_cast<std::size_t>(id)] =
          depth[static_cast<std::size_t>(nd.parent)] + nd.length;
    }
    if (nd.is_leaf()) {
      leaves.push_back(id);
    } else {
      stack.push_back(nd.left);
      stack.push_back(nd.right);
    }
  }
  std::sort(leaves.begin(), leaves.end(), [&t](int a, int b) {
    return t.node(a).label < t.node(b).label;
  });

  auto mrca = [&t](int a, int b) {
    std::unordered_set<int> ancestors;
    for (int u = a; u >= 0; u = t.node(u).parent) ancestors.insert(u);
    for (int u = b; u >= 0; u = t.node(u).parent) {
      if (ancestors.count(u)) return u;
    }
    throw std::logic_error("disconnected tree");
  };

  const std::size_t n = leaves.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int id : leaves) labels.push_back(t.node(id).label);
  std::vector<double> entries;
  entries.reserve(pair_count(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int anc = mrca(leaves[i], leaves[j]);
      entries.push_back(depth[static_cast<std::size_t>(leaves[i])] +
                        depth[static_cast<std::size_t>(leaves[j])] -
                        2.0 * depth[static_cast<std::size_t>(anc)]);
    }
  }
  return TimeMatrix(std::move(labels), std::move(entries));
}

}  // namespace lexiphy
