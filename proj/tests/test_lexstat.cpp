#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "lexiphy/errors.hpp"
#include "lexiphy/lexstat.hpp"

using namespace lexiphy;
using testutil::make_dataset;

namespace {
Cell C(std::initializer_list<const char*> forms) {
  Cell c;
  for (const char* f : forms) c.push_back(Word::normalize(f));
  return c;
}
}  // namespace

TEST_CASE("cell distance under both synonym policies") {
  CHECK(cell_distance(C({"sun"}), C({"sun"}), SynonymPolicy::kFirst) == 0.0);
  CHECK(cell_distance(C({"hund", "dog"}), C({"dog"}), SynonymPolicy::kMin) == 0.0);
  // first-form comparison: hund -> dog takes 4 edits over length 4
  CHECK(cell_distance(C({"hund", "dog"}), C({"dog"}), SynonymPolicy::kFirst) == 1.0);
  CHECK(cell_distance(C({"gato", "chat"}), C({"cat"}), SynonymPolicy::kMin) ==
        doctest::Approx(0.25));
}

TEST_CASE("language distance averages cell distances") {
  const auto ds = make_dataset({"A", "B"}, {"m1", "m2"},
                               {{"cat", "sun"}, {"bat", "sun"}});
  const DistanceMatrix m = language_distance(ds);
  CHECK(m.at(0, 1) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(m.at(1, 0) == m.at(0, 1));
  CHECK(m.at(0, 0) == 0.0);
  CHECK(m.support(0, 1) == 2);
}

TEST_CASE("identical lexicons give zero distance") {
  const auto ds = make_dataset({"A", "B"}, {"m1", "m2"},
                               {{"cat", "sun"}, {"cat", "sun"}});
  CHECK(language_distance(ds).at(0, 1) == 0.0);
}

TEST_CASE("missing cells shrink the average and the support") {
  const auto ds = make_dataset({"A", "B"}, {"m1", "m2"},
                               {{"cat", "sun"}, {"bat", "?"}});
  const DistanceMatrix m = language_distance(ds);
  CHECK(m.at(0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(m.support(0, 1) == 1);
}

TEST_CASE("a pair with no shared meanings is an error") {
  const auto ds = make_dataset({"A", "B"}, {"m1", "m2"},
                               {{"cat", "?"}, {"?", "sun"}});
  CHECK_THROWS_AS(language_distance(ds), NoSharedMeaningsError);
}

TEST_CASE("datasets reject invariant violations at construction") {
  CHECK_THROWS_AS(make_dataset({"A"}, {"m1"}, {{"cat"}}), EmptyDatasetError);
  CHECK_THROWS_AS(make_dataset({"A", "B"}, {}, {{}, {}}), EmptyDatasetError);
  CHECK_THROWS_AS(make_dataset({"A", "A"}, {"m1"}, {{"cat"}, {"bat"}}),
                  DuplicateIdentifierError);
  CHECK_THROWS_AS(make_dataset({"A", "B"}, {"m1"}, {{"cat"}, {"?"}}), DatasetError);
}

TEST_CASE("stability of the three-language example") {
  const auto ds = make_dataset({"A", "B", "C"}, {"m1"}, {{"cat"}, {"cat"}, {"bat"}});
  const StabilityTable t = stability(ds);
  CHECK(std::abs(t.row(0).value - 7.0 / 9.0) < 1e-15);
  CHECK(t.row(0).pairs_compared == 3);
  CHECK(t.row(0).rank == 1);
}

TEST_CASE("identical forms everywhere give stability one") {
  const auto ds = make_dataset({"A", "B", "C"}, {"m1", "m2"},
                               {{"sun", "moon"}, {"sun", "moon"}, {"sun", "moon"}});
  for (const auto& row : stability(ds).rows()) {
    CHECK(row.value == 1.0);
  }
}

TEST_CASE("a meaning present in fewer than two languages is an error") {
  const auto ds = make_dataset({"A", "B"}, {"m1", "m2"},
                               {{"cat", "sun"}, {"bat", "?"}});
  CHECK_THROWS_AS(stability(ds), InsufficientCoverageError);
}

TEST_CASE("ranking is by descending stability, ties by identifier") {
  const auto ds =
      make_dataset({"A", "B"}, {"zz", "aa", "mm"},
                   {{"sun", "cat", "fire"}, {"sun", "bat", "tree"}});
  // zz identical (S=1), aa one edit of three (S=2/3), mm disjoint (S<=1/2)
  const StabilityTable t = stability(ds);
  const auto names = rank_meanings(t);
  REQUIRE(names.size() == 3);
  CHECK(names[0] == "zz");
  CHECK(names[1] == "aa");
  CHECK(names[2] == "mm");

  const auto tie_ds = make_dataset({"A", "B"}, {"bb", "aa"},
                                   {{"sun", "sun"}, {"sun", "sun"}});
  const auto tie_names = rank_meanings(stability(tie_ds));
  CHECK(tie_names[0] == "aa");
  CHECK(tie_names[1] == "bb");
}

TEST_CASE("ranking is deterministic across repeated runs") {
  const auto ds = make_dataset(
      {"A", "B", "C"}, {"m1", "m2", "m3", "m4"},
      {{"sol", "agua", "rex", "unu"},
       {"sol", "akva", "rex", "one"},
       {"sun", "wasser", "rex", "en"}});
  const auto first = rank_meanings(stability(ds));
  for (int i = 0; i < 5; ++i) {
    CHECK(rank_meanings(stability(ds)) == first);
  }
}

TEST_CASE("truncation keeps the most stable meanings") {
  const auto ds = make_dataset({"A", "B"}, {"m1", "m2"},
                               {{"cat", "sun"}, {"bat", "sun"}});
  const StabilityTable t = stability(ds);
  // m2 identical across languages, so top-1 keeps it
  const DistanceMatrix top1 = truncated_distance(ds, t, 1);
  CHECK(top1.at(0, 1) == 0.0);
  CHECK(top1.support(0, 1) == 1);
}

TEST_CASE("full-length truncation is bit-identical to the full matrix") {
  const auto ds = make_dataset(
      {"A", "B", "C"}, {"m1", "m2", "m3"},
      {{"sol", "agua", "unu"}, {"sol", "akva", "one"}, {"sun", "wasser", "en"}});
  const StabilityTable t = stability(ds);
  const DistanceMatrix full = language_distance(ds);
  const DistanceMatrix truncated = truncated_distance(ds, t, 3);
  CHECK(truncated.condensed() == full.condensed());
  CHECK(truncated.support_counts() == full.support_counts());
}

TEST_CASE("language order does not affect distances or stability") {
  const auto ds = make_dataset(
      {"A", "B", "C"}, {"m1", "m2"},
      {{"sol", "agua"}, {"sole", "akva"}, {"sun", "water"}});
  const auto permuted = make_dataset(
      {"C", "A", "B"}, {"m1", "m2"},
      {{"sun", "water"}, {"sol", "agua"}, {"sole", "akva"}});
  const DistanceMatrix m1 = language_distance(ds);
  const DistanceMatrix m2 = language_distance(permuted);
  for (const auto& [x, y] : {std::pair{"A", "B"}, {"A", "C"}, {"B", "C"}}) {
    CHECK(m1.at(m1.index_of(x), m1.index_of(y)) ==
          m2.at(m2.index_of(x), m2.index_of(y)));
  }
  const auto s1 = stability(ds);
  const auto s2 = stability(permuted);
  for (std::size_t i = 0; i < s1.size(); ++i) {
    CHECK(s1.row(i).value == s2.row(i).value);
  }
}

TEST_CASE("duplicating a language leaves original distances unchanged") {
  const auto ds = make_dataset(
      {"A", "B"}, {"m1", "m2"}, {{"sol", "agua"}, {"sun", "water"}});
  const auto extended = make_dataset(
      {"A", "B", "A2"}, {"m1", "m2"},
      {{"sol", "agua"}, {"sun", "water"}, {"sol", "agua"}});
  const DistanceMatrix m1 = language_distance(ds);
  const DistanceMatrix m2 = language_distance(extended);
  CHECK(m1.at(0, 1) == m2.at(m2.index_of("A"), m2.index_of("B")));
  CHECK(m2.at(m2.index_of("A"), m2.index_of("A2")) == 0.0);
}

namespace {
DistanceMatrix tiny_matrix(std::vector<double> entries) {
  return DistanceMatrix({"A", "B", "C"}, std::move(entries), {1, 1, 1});
}
}  // namespace

TEST_CASE("correlation of a matrix with itself is exactly one") {
  const DistanceMatrix m = tiny_matrix({0.1, 0.5, 0.9});
  CHECK(correlation(m, m) == 1.0);
}

TEST_CASE("correlation detects exact linear relations") {
  CHECK(correlation(tiny_matrix({0.0, 0.1, 0.2}), tiny_matrix({0.0, 0.2, 0.4})) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(correlation(tiny_matrix({0.0, 0.1, 0.2}), tiny_matrix({0.2, 0.1, 0.0})) ==
        doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("correlation is symmetric and affine invariant") {
  const DistanceMatrix a = tiny_matrix({0.12, 0.55, 0.31});
  const DistanceMatrix b = tiny_matrix({0.40, 0.20, 0.90});
  CHECK(correlation(a, b) == doctest::Approx(correlation(b, a)).epsilon(1e-15));
  // positive affine transform of one side
  const DistanceMatrix b2 = tiny_matrix({0.25, 0.15, 0.50});  // 0.5*b + 0.05
  CHECK(correlation(a, b2) == doctest::Approx(correlation(a, b)).epsilon(1e-12));
}

TEST_CASE("constant entries make correlation undefined") {
  CHECK_THROWS_AS(correlation(tiny_matrix({0.3, 0.3, 0.3}), tiny_matrix({0.0, 0.1, 0.2})),
                  DegenerateVarianceError);
  CHECK_THROWS_AS(correlation(tiny_matrix({0.0, 0.1, 0.2}), tiny_matrix({0.3, 0.3, 0.3})),
                  DegenerateVarianceError);
}

TEST_CASE("correlation requires identical labels") {
  const DistanceMatrix a = tiny_matrix({0.1, 0.2, 0.3});
  const DistanceMatrix b({"A", "B", "X"}, {0.1, 0.2, 0.3}, {1, 1, 1});
  CHECK_THROWS_AS(correlation(a, b), std::invalid_argument);
}

TEST_CASE("correlation curve ends at exactly one") {
  const auto ds = make_dataset(
      {"A", "B", "C"}, {"m1", "m2", "m3"},
      {{"sol", "agua", "unu"}, {"sol", "akva", "one"}, {"sun", "wasser", "en"}});
  const StabilityTable t = stability(ds);
  const std::vector<std::size_t> grid = {3};
  const auto curve = correlation_curve(ds, t, grid);
  REQUIRE(curve.size() == 1);
  CHECK(curve[0].first == 3);
  CHECK(curve[0].second == 1.0);
}

TEST_CASE("default grid steps by ten and always ends at M") {
  CHECK(default_grid(30) == std::vector<std::size_t>{10, 20, 30});
  CHECK(default_grid(35) == std::vector<std::size_t>{10, 20, 30, 35});
  CHECK(default_grid(7) == std::vector<std::size_t>{7});
}
