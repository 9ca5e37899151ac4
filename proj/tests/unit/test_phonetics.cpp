#include <catch2/catch_amalgamated.hpp>

#include "skillfence/phonetics.hpp"

using namespace skillfence;

namespace {

const char* kSmallDict =
    ";;; test fixture\n"
    "READ  R IY1 D\n"
    "READ(2)  R EH1 D\n"
    "FIT  F IH1 T\n"
    "BIT  B IH1 T\n"
    "DAILY  D EY1 L IY0\n"
    "HOROSCOPE  HH AO1 R AH0 S K OW2 P\n";

}  // namespace

TEST_CASE("parse_dict handles variants and comments") {
  auto dict = parse_dict(kSmallDict);
  CHECK(dict.word_count() == 5);
  REQUIRE(dict.variants("READ") != nullptr);
  CHECK(dict.variants("READ")->size() == 2);
  CHECK(dict.alt_pair_count() == 1);

  // stress digits are stripped, file order preserved
  auto& read = *dict.variants("READ");
  CHECK(read[0].phonemes == std::vector<Phoneme>{"R", "IY", "D"});
  CHECK(read[1].phonemes == std::vector<Phoneme>{"R", "EH", "D"});
}

TEST_CASE("parse_dict with a single variant yields no alt pairs") {
  auto dict = parse_dict("HELLO  HH AH0 L OW1\n");
  CHECK(dict.word_count() == 1);
  CHECK(dict.alt_pair_count() == 0);
  CHECK(dict.alt_pairs().empty());
}

TEST_CASE("parse_dict inventory collects stress-stripped symbols") {
  auto dict = parse_dict(kSmallDict);
  const auto& inv = dict.inventory();
  CHECK(std::find(inv.begin(), inv.end(), "IY") != inv.end());
  CHECK(std::find(inv.begin(), inv.end(), "IY0") == inv.end());
  for (const auto& p : inv) CHECK(is_valid_phoneme(p));
}

TEST_CASE("parse_dict rejects malformed lines with line numbers") {
  SECTION("no phonemes") {
    try {
      parse_dict("READ  R IY D\nWORDONLY\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SECTION("unbalanced parenthesis suffix") {
    CHECK_THROWS_AS(parse_dict("READ(2  R EH D\n"), ParseError);
    CHECK_THROWS_AS(parse_dict("(2)  R EH D\n"), ParseError);
  }
  SECTION("invalid phoneme token") {
    CHECK_THROWS_AS(parse_dict("READ  R I5Y D\n"), ParseError);
    CHECK_THROWS_AS(parse_dict("READ  r iy d\n"), ParseError);
  }
}

TEST_CASE("parse_dict accepts CRLF and arbitrary whitespace runs") {
  auto dict = parse_dict("READ\tR IY1 D\r\nREAD(2)   R  EH1  D\r\n");
  CHECK(dict.alt_pair_count() == 1);
}

TEST_CASE("phrase_to_phonemes concatenates first pronunciations") {
  auto dict = parse_dict(kSmallDict);
  auto seq = phrase_to_phonemes("fit bit", dict);
  CHECK(seq.phonemes == std::vector<Phoneme>{"F", "IH", "T", "B", "IH", "T"});
  CHECK(seq.source_phrase == "fit bit");

  // case-insensitive, whitespace-normalizing
  auto seq2 = phrase_to_phonemes("  FIT   Bit ", dict);
  CHECK(seq2.phonemes == seq.phonemes);
}

TEST_CASE("phrase_to_phonemes respects overrides before dictionary") {
  auto dict = parse_dict(kSmallDict);
  PronunciationOverrides ov;
  ov["phit"] = {"F", "IH", "T"};

  auto seq = phrase_to_phonemes("phit bit", dict, ov);
  CHECK(seq.phonemes == std::vector<Phoneme>{"F", "IH", "T", "B", "IH", "T"});

  // whole-phrase override wins over per-word lookups
  PronunciationOverrides whole;
  whole["fit bit"] = {"Z", "Z"};
  auto seq2 = phrase_to_phonemes("fit bit", dict, whole);
  CHECK(seq2.phonemes == std::vector<Phoneme>{"Z", "Z"});
}

TEST_CASE("phrase_to_phonemes reports all OOV words") {
  auto dict = parse_dict(kSmallDict);
  try {
    phrase_to_phonemes("zxqv fit blorp", dict);
    FAIL("expected OovError");
  } catch (const OovError& e) {
    CHECK(e.words() == std::vector<std::string>{"zxqv", "blorp"});
  }
}

TEST_CASE("parse_overrides validates phoneme arrays") {
  auto ov = parse_overrides(Json::parse(R"({"Phit": ["F", "IH1", "T"]})"));
  CHECK(ov.at("phit") == std::vector<Phoneme>{"F", "IH", "T"});

  CHECK_THROWS_AS(parse_overrides(Json::parse(R"({"x": "FIT"})")), ParseError);
  CHECK_THROWS_AS(parse_overrides(Json::parse(R"({"x": []})")), ParseError);
  CHECK_THROWS_AS(parse_overrides(Json::parse(R"({"x": ["f!t"]})")), ParseError);
}
