#ifndef LEXIPHY_SYNTH_HPP
#define LEXIPHY_SYNTH_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lexiphy/dataset.hpp"
#include "lexiphy/tree.hpp"

namespace lexiphy {

// Parameters of the stochastic wordlist simulator.
struct EvolutionParams {
  // Per-meaning replacement intensity, in replacements per unit branch
  // length; its size fixes the number of meanings.
  std::vector<double> rates;
  // Per-character substitution intensity along a branch.
  double mutation_rate = 0.1;
  std::u32string alphabet = U"abcdefghijklmnopqrstuvwxyz";
  std::size_t min_word_length = 3;
  std::size_t max_word_length = 8;
  std::uint64_t seed = 0;
};

// Random ultrametric binary tree from a Yule process: starting from one
// lineage, wait an exponential time with rate equal to the number of
// pending lineages, then split one chosen uniformly; one further
// exponential wait follows the last split. Leaves are labelled L1..Ln with
// zero padding. Deterministic given the seed.
Tree generate_tree(std::size_t n_leaves, std::uint64_t seed);

// Evolves one word per meaning down the tree. The root word is drawn
// uniformly (length in [min,max], characters from the alphabet). Along an
// edge of length t, meaning i is replaced by a fresh random word with
// probability 1 - exp(-rates[i]*t); otherwise each character independently
// changes to a different alphabet character with probability
// 1 - exp(-mutation_rate*t). Every (edge, meaning) pair uses its own keyed
// random stream, so the output is identical no matter how the tree is
// traversed. Leaves become languages; meanings are named m1..mM with zero
// padding; no cell is missing.
FamilyDataset evolve(const Tree& tree, const EvolutionParams& params);

// Convenience rate vector: the first round(fraction_slow * meaning_count)
// meanings evolve at the slow rate, the rest at the fast rate.
std::vector<double> two_rate_classes(std::size_t meaning_count, double slow,
                                     double fast, double fraction_slow);

// Zero-padded identifier such as L007 or m042.
std::string padded_id(const std::string& prefix, std::size_t index,
                      std::size_t count);

}  // namespace lexiphy

#endif
