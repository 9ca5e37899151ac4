#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "skillfence/cost_matrix.hpp"

using namespace skillfence;

TEST_CASE("learn_cost_matrix rejects a corpus without alternates") {
  auto dict = parse_dict("HELLO  HH AH0 L OW1\n");
  CHECK_THROWS_WITH(learn_cost_matrix(dict),
                    Catch::Matchers::ContainsSubstring("no alternate"));
}

TEST_CASE("identical variants produce no substitution evidence") {
  auto dict = parse_dict(
      "WORD  W ER1 D\n"
      "WORD(2)  W ER1 D\n");
  auto m = learn_cost_matrix(dict);
  for (const auto& a : m.inventory())
    for (const auto& b : m.inventory())
      CHECK(m.sub_cost(a, b) == (a == b ? 0.0 : 1.0));
  CHECK(m.substitution_counts().empty());
}

TEST_CASE("single alternate pair drives the read-vowel cost to zero") {
  // One pair [R IY D] / [R EH D]: the alignment has one mismatch column
  // (IY, EH). Substitutions are counted in both directions, so
  // SF(IY,EH) = SF(EH,IY) = 1 while F(IY) = F(EH) = 1, giving
  // cost = 1 - (1+1)/(1+1) = 0: every occurrence of either vowel is an
  // interchange with the other.
  auto dict = parse_dict(
      "READ  R IY1 D\n"
      "READ(2)  R EH1 D\n");

  // oracle: the chosen alignment must be among the optimal ones
  auto pairs = dict.alt_pairs();
  REQUIRE(pairs.size() == 1);
  auto aln = needleman_wunsch(pairs[0].first.phonemes, pairs[0].second.phonemes);
  auto oracle = oracles::enumerate_alignments(pairs[0].first.phonemes,
                                              pairs[0].second.phonemes);
  CHECK(aln.score == oracle.best_score);

  auto m = learn_cost_matrix(dict);
  CHECK(m.substitution_counts().at({"IY", "EH"}) == 1);
  CHECK(m.substitution_counts().at({"EH", "IY"}) == 1);
  CHECK(m.occurrence_counts().at("IY") == 1);
  CHECK(m.occurrence_counts().at("EH") == 1);
  CHECK(m.occurrence_counts().at("R") == 2);
  CHECK(m.sub_cost("IY", "EH") == 0.0);

  // a never-substituted pair stays at the maximum
  CHECK(m.sub_cost("IY", "EH") < m.sub_cost("IY", "T"));
  CHECK(m.sub_cost("IY", "T") == 1.0);
}

TEST_CASE("cost matrix is symmetric with zero diagonal and unit range") {
  auto dict = parse_dict(
      "READ  R IY1 D\n"
      "READ(2)  R EH1 D\n"
      "ROUTE  R UW1 T\n"
      "ROUTE(2)  R AW1 T\n"
      "EITHER  IY1 DH ER0\n"
      "EITHER(2)  AY1 DH ER0\n"
      "CARAMEL  K EH1 R AH0 M AH0 L\n"
      "CARAMEL(2)  K AA1 R M AH0 L\n");
  auto m = learn_cost_matrix(dict);
  for (const auto& a : m.inventory()) {
    CHECK(m.sub_cost(a, a) == 0.0);
    for (const auto& b : m.inventory()) {
      CHECK(m.sub_cost(a, b) == m.sub_cost(b, a));
      CHECK(m.sub_cost(a, b) >= 0.0);
      CHECK(m.sub_cost(a, b) <= 1.0);
    }
  }
  CHECK(m.indel_cost() == 1.0);
}

TEST_CASE("unknown phonemes cost 1 against anything but themselves") {
  auto dict = parse_dict(
      "READ  R IY1 D\n"
      "READ(2)  R EH1 D\n");
  auto m = learn_cost_matrix(dict);
  CHECK(m.sub_cost("ZH", "R") == 1.0);
  CHECK(m.sub_cost("ZH", "ZH") == 0.0);
  CHECK(m.index_of("ZH") == -1);
}

TEST_CASE("cost matrix round-trips through JSON") {
  auto dict = parse_dict(
      "READ  R IY1 D\n"
      "READ(2)  R EH1 D\n"
      "ROUTE  R UW1 T\n"
      "ROUTE(2)  R AW1 T\n");
  auto m = learn_cost_matrix(dict);
  auto j = m.to_json();
  auto m2 = CostMatrix::from_json(j);
  CHECK(m2.inventory() == m.inventory());
  CHECK(m2.indel_cost() == m.indel_cost());
  for (const auto& a : m.inventory())
    for (const auto& b : m.inventory())
      CHECK(m2.sub_cost(a, b) == m.sub_cost(a, b));
  CHECK(m2.occurrence_counts() == m.occurrence_counts());
  CHECK(m2.substitution_counts() == m.substitution_counts());
  CHECK(canonical_dump(m2.to_json()) == canonical_dump(j));
}
