#include "lexiphy/synth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lexiphy/rng.hpp"

namespace lexiphy {

std::string padded_id(const std::string& prefix, std::size_t index,
                      std::size_t count) {
  std::size_t width = 1;
  for (std::size_t c = count; c >= 10; c /= 10) ++width;
  std::string digits = std::to_string(index);
  return prefix + std::string(width - std::min(width, digits.size()), '0') + digits;
}

Tree generate_tree(std::size_t n_leaves, std::uint64_t seed) {
  if (n_leaves < 2) {
    throw std::invalid_argument("a tree needs at least two leaves");
  }
  SplitMix64 rng = SplitMix64::keyed(seed, 0x79756c65ull, 0);  // "yule"

  struct Pending {
    int node;
    double born;  // absolute time the lineage started
  };

  std::vector<Tree::Node> nodes;
  nodes.reserve(2 * n_leaves - 1);
  nodes.emplace_back();  // root lineage
  std::vector<Pending> pending = {{0, 0.0}};

  double now = 0.0;
  while (pending.size() < n_leaves) {
    now += rng.next_exponential(static_cast<double>(pending.size()));
    const std::size_t pick = rng.next_below(pending.size());
    const int parent = pending[pick].node;
    const double parent_born = pending[pick].born;
    const int left = static_cast<int>(nodes.size());
    nodes.emplace_back();
    const int right = static_cast<int>(nodes.size());
    nodes.emplace_back();
    nodes[static_cast<std::size_t>(parent)].left = left;
    nodes[static_cast<std::size_t>(parent)].right = right;
    nodes[static_cast<std::size_t>(parent)].length = now - parent_born;
    pending[pick] = {left, now};
    pending.push_back({right, now});
  }
  now += rng.next_exponential(static_cast<double>(n_leaves));

  std::size_t leaf_no = 0;
  for (const Pending& p : pending) {
    Tree::Node& leaf = nodes[static_cast<std::size_t>(p.node)];
    leaf.label = padded_id("L", ++leaf_no, n_leaves);
    leaf.length = now - p.born;
  }
  // root's length was set as if it had a parent; build() zeroes it
  return Tree::build(std::move(nodes), 0);
}

namespace {

constexpr std::uint64_t kRootStream = ~0ull;

std::u32string random_word(SplitMix64& rng, const EvolutionParams& p) {
  const std::size_t span = p.max_word_length - p.min_word_length + 1;
  const std::size_t len = p.min_word_length + rng.next_below(span);
  std::u32string w;
  w.reserve(len);
  for (std::size_t k = 0; k < len; ++k) {
    w.push_back(p.alphabet[rng.next_below(p.alphabet.size())]);
  }
  return w;
}

void validate(const Tree& tree, const EvolutionParams& p) {
  if (tree.leaf_count() < 2) {
    throw std::invalid_argument("evolve needs a tree with at least two leaves");
  }
  if (p.rates.empty()) {
    throw std::invalid_argument("at least one meaning rate is required");
  }
  for (double r : p.rates) {
    if (!std::isfinite(r) || r < 0.0) {
      throw std::invalid_argument("rates must be finite and non-negative");
    }
  }
  if (!std::isfinite(p.mutation_rate) || p.mutation_rate < 0.0) {
    throw std::invalid_argument("mutation rate must be finite and non-negative");
  }
  if (p.alphabet.empty()) {
    throw std::invalid_argument("alphabet must be non-empty");
  }
  if (p.min_word_length < 1 || p.min_word_length > p.max_word_length) {
    throw std::invalid_argument("need 1 <= min_word_length <= max_word_length");
  }
}

}  // namespace

FamilyDataset evolve(const Tree& tree, const EvolutionParams& p) {
  validate(tree, p);
  const std::size_t n_meanings = p.rates.size();
  const std::size_t n_nodes = tree.node_count();

  // words[node][meaning]
  std::vector<std::vector<std::u32string>> words(n_nodes);
  std::vector<int> stack = {tree.root()};
  words[static_cast<std::size_t>(tree.root())].resize(n_meanings);
  for (std::size_t i = 0; i < n_meanings; ++i) {
    SplitMix64 rng = SplitMix64::keyed(p.seed, kRootStream, i);
    words[static_cast<std::size_t>(tree.root())][i] = random_word(rng, p);
  }

  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    const Tree::Node& nd = tree.node(id);
    if (nd.is_leaf()) continue;
    for (const int child : {nd.left, nd.right}) {
      const double t = tree.node(child).length;
      auto& out = words[static_cast<std::size_t>(child)];
      out.resize(n_meanings);
      for (std::size_t i = 0; i < n_meanings; ++i) {
        SplitMix64 rng =
            SplitMix64::keyed(p.seed, static_cast<std::uint64_t>(child), i);
        const std::u32string& parent_word = words[static_cast<std::size_t>(id)][i];
        if (rng.next_unit() < -std::expm1(-p.rates[i] * t)) {
          out[i] = random_word(rng, p);  // replaced by an unrelated word
          continue;
        }
        const double p_sub = -std::expm1(-p.mutation_rate * t);
        std::u32string w = parent_word;
        for (char32_t& c : w) {
          if (rng.next_unit() < p_sub && p.alphabet.size() > 1) {
            // substitute with a different character
            const std::size_t shift = 1 + rng.next_below(p.alphabet.size() - 1);
            const std::size_t cur = p.alphabet.find(c);
            c = p.alphabet[(cur + shift) % p.alphabet.size()];
          }
        }
        out[i] = std::move(w);
      }
      stack.push_back(child);
    }
  }

  std::vector<int> leaf_ids;
  for (std::size_t id = 0; id < n_nodes; ++id) {
    if (tree.node(static_cast<int>(id)).is_leaf()) {
      leaf_ids.push_back(static_cast<int>(id));
    }
  }
  std::sort(leaf_ids.begin(), leaf_ids.end(), [&tree](int a, int b) {
    return tree.node(a).label < tree.node(b).label;
  });

  std::vector<std::string> languages;
  languages.reserve(leaf_ids.size());
  std::vector<std::vector<Cell>> cells;
  cells.reserve(leaf_ids.size());
  for (int id : leaf_ids) {
    languages.push_back(tree.node(id).label);
    std::vector<Cell> row;
    row.reserve(n_meanings);
    for (std::size_t i = 0; i < n_meanings; ++i) {
      row.push_back({Word::normalize(
          unicode::encode_utf8(words[static_cast<std::size_t>(id)][i]))});
    }
    cells.push_back(std::move(row));
  }
  std::vector<std::string> meanings;
  meanings.reserve(n_meanings);
  for (std::size_t i = 0; i < n_meanings; ++i) {
    meanings.push_back(padded_id("m", i + 1, n_meanings));
  }
  return FamilyDataset(std::move(languages), std::move(meanings), std::move(cells));
}

std::vector<double> two_rate_classes(std::size_t meaning_count, double slow,
                                     double fast, double fraction_slow) {
  if (!(fraction_slow >= 0.0 && fraction_slow <= 1.0)) {
    throw std::invalid_argument("fraction_slow must lie in [0,1]");
  }
  const std::size_t n_slow = static_cast<std::size_t>(
      std::llround(fraction_slow * static_cast<double>(meaning_count)));
  std::vector<double> rates(meaning_count, fast);
  for (std::size_t i = 0; i < std::min(n_slow, meaning_count); ++i) {
    rates[i] = slow;
  }
  return rates;
}

}  // namespace lexiphy
