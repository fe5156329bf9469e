// lexiphy: automated lexicostatistics from tab-separated wordlists.
// Distances, per-meaning stability, list-length diagnostics, divergence
// times and UPGMA trees, all deterministic for identical inputs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lexiphy/chronology.hpp"
#include "lexiphy/dataset.hpp"
#include "lexiphy/errors.hpp"
#include "lexiphy/lexstat.hpp"
#include "lexiphy/newick.hpp"
#include "lexiphy/report.hpp"
#include "lexiphy/robinson_foulds.hpp"
#include "lexiphy/synth.hpp"
#include "lexiphy/tree.hpp"
#include "lexiphy/upgma.hpp"
#include "lexiphy/wordlist_io.hpp"

namespace {

using namespace lexiphy;

constexpr int kExitUsage = 1;
constexpr int kExitFormat = 2;
constexpr int kExitComputation = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Failing pipeline stage, named in every diagnostic.
std::string g_stage = "startup";

void set_stage(const std::string& stage) { g_stage = stage; }

SynonymPolicy policy_from(const std::string& name) {
  return name == "min" ? SynonymPolicy::kMin : SynonymPolicy::kFirst;
}

FamilyDataset load(const std::string& path) {
  set_stage("parse");
  return parse_wordlist(std::filesystem::path(path));
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw UsageError("cannot open output file \"" + path + "\"");
  }
  out << bytes;
}

struct DistancesArgs {
  std::string file;
  std::string meanings = "all";
  std::string synonyms = "first";
};

int run_distances(const DistancesArgs& a) {
  const FamilyDataset ds = load(a.file);
  const SynonymPolicy policy = policy_from(a.synonyms);
  set_stage("distances");
  std::optional<DistanceMatrix> m;
  if (a.meanings == "all") {
    m = language_distance(ds, policy);
  } else {
    const std::size_t n = std::stoull(a.meanings.substr(4));
    set_stage("stability");
    const StabilityTable t = stability(ds, policy);
    set_stage("distances");
    m = truncated_distance(ds, t, n, policy);
  }
  std::cout << matrix_csv(*m);
  return 0;
}

int run_stability(const std::string& file) {
  const FamilyDataset ds = load(file);
  set_stage("stability");
  std::cout << stability_csv(stability(ds));
  return 0;
}

int run_correlate(const std::string& file, std::vector<std::size_t> grid) {
  const FamilyDataset ds = load(file);
  set_stage("stability");
  const StabilityTable t = stability(ds);
  set_stage("correlate");
  if (grid.empty()) grid = default_grid(ds.meaning_count());
  std::cout << correlation_csv(correlation_curve(ds, t, grid));
  return 0;
}

int run_rf_curve(const std::string& file, std::vector<std::size_t> grid) {
  const FamilyDataset ds = load(file);
  set_stage("stability");
  const StabilityTable t = stability(ds);
  set_stage("rf-curve");
  if (grid.empty()) grid = default_grid(ds.meaning_count());
  std::cout << rf_csv(rf_curve(ds, t, grid));
  return 0;
}

struct TreeArgs {
  std::string file;
  std::size_t top_n = 0;  // 0 = all meanings
  double epsilon = 0.0;   // 0 = no time transform
  std::string calibrate_arg;
};

CalibrationPoint parse_calibration(const std::string& arg) {
  const std::size_t c1 = arg.find(':');
  const std::size_t c2 = c1 == std::string::npos ? std::string::npos : arg.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos || arg.find(':', c2 + 1) != std::string::npos) {
    throw UsageError("--calibrate expects <langA>:<langB>:<time>");
  }
  CalibrationPoint p;
  p.lang_a = arg.substr(0, c1);
  p.lang_b = arg.substr(c1 + 1, c2 - c1 - 1);
  try {
    std::size_t used = 0;
    p.known_time = std::stod(arg.substr(c2 + 1), &used);
    if (used != arg.size() - c2 - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw UsageError("--calibrate time \"" + arg.substr(c2 + 1) + "\" is not a number");
  }
  if (p.lang_a.empty() || p.lang_b.empty()) {
    throw UsageError("--calibrate expects two language names");
  }
  return p;
}

int run_tree(const TreeArgs& a) {
  const FamilyDataset ds = load(a.file);
  set_stage("distances");
  std::optional<DistanceMatrix> m;
  if (a.top_n == 0) {
    m = language_distance(ds);
  } else {
    set_stage("stability");
    const StabilityTable t = stability(ds);
    set_stage("distances");
    m = truncated_distance(ds, t, a.top_n);
  }
  set_stage("tree");
  std::string newick;
  if (!a.calibrate_arg.empty()) {
    const CalibrationPoint p = parse_calibration(a.calibrate_arg);
    set_stage("calibrate");
    const double epsilon = calibrate(*m, p);
    set_stage("tree");
    newick = newick_serialize(upgma(divergence_time(*m, epsilon)));
  } else if (a.epsilon > 0.0) {
    newick = newick_serialize(upgma(divergence_time(*m, a.epsilon)));
  } else {
    newick = newick_serialize(upgma(*m));
  }
  std::cout << newick << '\n';
  return 0;
}

int run_times(const std::string& file, double epsilon) {
  const FamilyDataset ds = load(file);
  set_stage("distances");
  const DistanceMatrix m = language_distance(ds);
  set_stage("times");
  std::cout << matrix_csv(divergence_time(m, epsilon));
  return 0;
}

struct SynthArgs {
  std::size_t languages = 0;
  std::size_t meanings = 0;
  double slow = 0.05;
  double fast = 1.0;
  double fraction_slow = 0.5;
  std::uint64_t seed = 0;
  std::string out;        // dataset TSV, default stdout
  std::string tree_out;   // ground-truth Newick
  std::string rates_out;  // ground-truth rates CSV
};

int run_synth(const SynthArgs& a) {
  set_stage("synth");
  Tree tree = generate_tree(a.languages, a.seed);
  // unit height makes the rates direct per-root-path intensities
  tree = scale_tree(tree, 1.0 / tree.height());
  EvolutionParams params;
  params.rates = two_rate_classes(a.meanings, a.slow, a.fast, a.fraction_slow);
  params.seed = a.seed;
  const FamilyDataset ds = evolve(tree, params);
  write_output(a.out, write_wordlist(ds));
  if (!a.tree_out.empty()) {
    write_output(a.tree_out, newick_serialize(tree) + "\n");
  }
  if (!a.rates_out.empty()) {
    write_output(a.rates_out, rates_csv(ds.meanings(), params.rates));
  }
  return 0;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Automated lexicostatistics: distances, stability, divergence times and trees from tab-separated wordlists"};
  app.require_subcommand(1);

  DistancesArgs dist_args;
  CLI::App* distances = app.add_subcommand(
      "distances", "Language distance matrix as CSV");
  distances->add_option("file", dist_args.file, "wordlist TSV")->required();
  distances
      ->add_option("--meanings", dist_args.meanings,
                   "\"all\" or \"top:<n>\" for the n most stable meanings")
      ->check([](const std::string& v) -> std::string {
        if (v == "all") return {};
        if (v.rfind("top:", 0) == 0 && v.size() > 4 &&
            v.find_first_not_of("0123456789", 4) == std::string::npos &&
            v.substr(4) != "0") {
          return {};
        }
        return "expected \"all\" or \"top:<n>\"";
      });
  distances->add_option("--synonyms", dist_args.synonyms, "synonym policy")
      ->check(CLI::IsMember({"first", "min"}));

  std::string stability_file;
  CLI::App* stab = app.add_subcommand(
      "stability", "Per-meaning stability table as CSV, most stable first");
  stab->add_option("file", stability_file, "wordlist TSV")->required();

  std::string correlate_file;
  std::vector<std::size_t> correlate_grid;
  CLI::App* correlate = app.add_subcommand(
      "correlate", "Correlation c(n) between top-n and full-list distances");
  correlate->add_option("file", correlate_file, "wordlist TSV")->required();
  correlate->add_option("--grid", correlate_grid, "list lengths n")->delimiter(',');

  std::string rf_file;
  std::vector<std::size_t> rf_grid;
  CLI::App* rf = app.add_subcommand(
      "rf-curve", "Robinson-Foulds difference between top-n and full-list trees");
  rf->add_option("file", rf_file, "wordlist TSV")->required();
  rf->add_option("--grid", rf_grid, "list lengths n")->delimiter(',');

  TreeArgs tree_args;
  CLI::App* tree = app.add_subcommand("tree", "UPGMA tree as Newick");
  tree->add_option("file", tree_args.file, "wordlist TSV")->required();
  tree->add_option("--top-n", tree_args.top_n, "use only the n most stable meanings")
      ->check(CLI::PositiveNumber);
  CLI::Option* eps_opt =
      tree->add_option("--epsilon", tree_args.epsilon,
                       "decay rate; branch lengths become time units")
          ->check(CLI::PositiveNumber);
  tree->add_option("--calibrate", tree_args.calibrate_arg,
                   "<langA>:<langB>:<time> attested divergence to fix the rate")
      ->excludes(eps_opt);

  std::string times_file;
  double times_epsilon = 0.0;
  CLI::App* times = app.add_subcommand("times", "Divergence time matrix as CSV");
  times->add_option("file", times_file, "wordlist TSV")->required();
  times->add_option("--epsilon", times_epsilon, "decay rate")
      ->required()
      ->check(CLI::PositiveNumber);

  SynthArgs synth_args;
  CLI::App* synth = app.add_subcommand(
      "synth", "Simulate a wordlist family with known ground truth");
  synth->add_option("--languages", synth_args.languages, "number of languages")
      ->required()
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
  synth->add_option("--meanings", synth_args.meanings, "number of meanings")
      ->required()
      ->check(CLI::PositiveNumber);
  synth->add_option("--slow", synth_args.slow, "slow replacement rate")
      ->check(CLI::NonNegativeNumber);
  synth->add_option("--fast", synth_args.fast, "fast replacement rate")
      ->check(CLI::NonNegativeNumber);
  synth->add_option("--fraction-slow", synth_args.fraction_slow,
                    "fraction of meanings in the slow class")
      ->check(CLI::Range(0.0, 1.0));
  synth->add_option("--seed", synth_args.seed, "master random seed");
  synth->add_option("--out", synth_args.out, "dataset TSV path (default stdout)");
  synth->add_option("--tree-out", synth_args.tree_out, "true tree Newick path");
  synth->add_option("--rates-out", synth_args.rates_out, "true rates CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "lexiphy: usage: " << e.what() << '\n';
    return kExitUsage;
  }

  if (distances->parsed()) return run_distances(dist_args);
  if (stab->parsed()) return run_stability(stability_file);
  if (correlate->parsed()) return run_correlate(correlate_file, correlate_grid);
  if (rf->parsed()) return run_rf_curve(rf_file, rf_grid);
  if (tree->parsed()) return run_tree(tree_args);
  if (times->parsed()) return run_times(times_file, times_epsilon);
  if (synth->parsed()) return run_synth(synth_args);
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "lexiphy: usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "lexiphy: " << g_stage << ": " << e.what() << '\n';
    return kExitFormat;
  } catch (const DuplicateIdentifierError& e) {
    std::cerr << "lexiphy: " << g_stage << ": " << e.what() << '\n';
    return kExitFormat;
  } catch (const EmptyDatasetError& e) {
    std::cerr << "lexiphy: " << g_stage << ": " << e.what() << '\n';
    return kExitFormat;
  } catch (const DatasetError& e) {
    std::cerr << "lexiphy: " << g_stage << ": " << e.what() << '\n';
    return kExitFormat;
  } catch (const Utf8Error& e) {
    std::cerr << "lexiphy: " << g_stage << ": " << e.what() << '\n';
    return kExitFormat;
  } catch (const std::exception& e) {
    std::cerr << "lexiphy: " << g_stage << ": " << e.what() << '\n';
    return kExitComputation;
  }
}
