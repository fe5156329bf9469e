#include "lexiphy/upgma.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace lexiphy {

namespace {

struct Cluster {
  int node = -1;          // arena index
  std::size_t size = 0;   // number of leaves
  double height = 0.0;
  std::string min_label;  // smallest leaf label, for tie-breaking
};

}  // namespace

Tree upgma(const std::vector<std::string>& labels,
           const std::vector<double>& condensed) {
  const std::size_t n = labels.size();
  if (n < 2) {
    throw std::invalid_argument("upgma needs at least two labels");
  }
  if (condensed.size() != pair_count(n)) {
    throw std::invalid_argument("condensed matrix size does not match labels");
  }
  {
    std::unordered_set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != n) {
      throw std::invalid_argument("upgma labels must be unique");
    }
  }
  for (double v : condensed) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("distances must be finite and non-negative");
    }
  }

  // Working copy of the distance matrix, full square for simple updates.
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i * n + j] = d[j * n + i] = condensed[pair_index(i, j, n)];
    }
  }

  std::vector<Tree::Node> nodes;
  nodes.reserve(2 * n - 1);
  std::vector<Cluster> clusters(n);
  std::vector<std::size_t> active;
  active.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Tree::Node leaf;
    leaf.label = labels[i];
    nodes.push_back(std::move(leaf));
    clusters[i] = Cluster{static_cast<int>(i), 1, 0.0, labels[i]};
    active.push_back(i);
  }

  while (active.size() > 1) {
    // Smallest linkage distance; ties resolved by the smallest ordered pair
    // of cluster labels.
    std::size_t best_a = 0, best_b = 0;
    double best_d = 0.0;
    bool have = false;
    for (std::size_t ai = 0; ai < active.size(); ++ai) {
      for (std::size_t bi = ai + 1; bi < active.size(); ++bi) {
        const std::size_t a = active[ai];
        const std::size_t b = active[bi];
        const double dist = d[a * n + b];
        bool better = false;
        if (!have || dist < best_d) {
          better = true;
        } else if (dist == best_d) {
          const auto key = [&](std::size_t x, std::size_t y) {
            const std::string& lx = clusters[x].min_label;
            const std::string& ly = clusters[y].min_label;
            return lx < ly ? std::make_pair(lx, ly) : std::make_pair(ly, lx);
          };
          better = key(a, b) < key(best_a, best_b);
        }
        if (better) {
          best_a = a;
          best_b = b;
          best_d = dist;
          have = true;
        }
      }
    }

    const Cluster& ca = clusters[best_a];
    const Cluster& cb = clusters[best_b];
    const double height = best_d / 2.0;
    Tree::Node parent;
    parent.left = ca.node;
    parent.right = cb.node;
    const int parent_id = static_cast<int>(nodes.size());
    // Average linkage is monotone, so these never go negative beyond
    // rounding noise.
    nodes[static_cast<std::size_t>(ca.node)].length = std::max(0.0, height - ca.height);
    nodes[static_cast<std::size_t>(cb.node)].length = std::max(0.0, height - cb.height);
    nodes.push_back(std::move(parent));

    // Merged cluster reuses slot best_a; linkage to the rest is the
    // size-weighted mean of the two old rows.
    for (std::size_t k : active) {
      if (k == best_a || k == best_b) continue;
      const double mixed =
          (static_cast<double>(ca.size) * d[best_a * n + k] +
           static_cast<double>(cb.size) * d[best_b * n + k]) /
          static_cast<double>(ca.size + cb.size);
      d[best_a * n + k] = d[k * n + best_a] = mixed;
    }
    clusters[best_a] = Cluster{parent_id, ca.size + cb.size, height,
                               std::min(ca.min_label, cb.min_label)};
    std::erase(active, best_b);
  }

  const int root_id = static_cast<int>(nodes.size()) - 1;
  return Tree::build(std::move(nodes), root_id);
}

Tree upgma(const DistanceMatrix& m) { return upgma(m.labels(), m.condensed()); }

Tree upgma(const TimeMatrix& m) { return upgma(m.labels(), m.condensed()); }

}  // namespace lexiphy
