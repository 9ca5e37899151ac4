#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "skillfence/canonical.hpp"
#include "skillfence/errors.hpp"
#include "skillfence/phonetics.hpp"

namespace skillfence {

// Marketplace skill metadata as scraped from a listing, plus the resolved
// phoneme sequence of its invocation phrase.
struct Skill {
  std::string id;
  std::string name;
  std::string invocation;
  PhonemeSeq phonemes;
  std::string amazon_url;
  std::vector<std::string> metadata_urls;
  std::uint64_t reviews = 0;
  bool account_linking = false;
  std::optional<std::vector<Phoneme>> pronunciation_override;
};

using Catalog = std::vector<Skill>;

inline void check_unique_ids(const Catalog& catalog) {
  std::set<std::string> seen;
  for (const auto& skill : catalog) {
    if (skill.id.empty()) throw ValidationError("skill with empty id");
    if (skill.invocation.empty())
      throw ValidationError("skill '" + skill.id + "' has empty invocation");
    if (!seen.insert(skill.id).second)
      throw ValidationError("duplicate skill id '" + skill.id + "'");
  }
}

inline const Skill* find_skill(const Catalog& catalog, const std::string& id) {
  for (const auto& skill : catalog)
    if (skill.id == id) return &skill;
  return nullptr;
}

inline Json skill_to_json(const Skill& skill) {
  Json j;
  j["id"] = skill.id;
  j["name"] = skill.name;
  j["invocation"] = skill.invocation;
  j["amazon_url"] = skill.amazon_url;
  j["metadata_urls"] = skill.metadata_urls;
  j["reviews"] = skill.reviews;
  j["account_linking"] = skill.account_linking;
  if (skill.pronunciation_override)
    j["pronunciation_override"] = *skill.pronunciation_override;
  return j;
}

inline Skill skill_from_json(const Json& j) {
  Skill s;
  s.id = j.at("id").get<std::string>();
  s.name = j.at("name").get<std::string>();
  s.invocation = j.at("invocation").get<std::string>();
  s.amazon_url = j.at("amazon_url").get<std::string>();
  s.metadata_urls = j.at("metadata_urls").get<std::vector<std::string>>();
  s.reviews = j.at("reviews").get<std::uint64_t>();
  s.account_linking = j.at("account_linking").get<bool>();
  if (j.contains("pronunciation_override")) {
    auto seq = j.at("pronunciation_override").get<std::vector<std::string>>();
    std::vector<Phoneme> phonemes;
    for (const auto& tok : seq) {
      Phoneme p = strip_stress(tok);
      if (!is_valid_phoneme(p))
        throw ParseError("skill '" + s.id + "' has invalid override phoneme '" +
                         tok + "'");
      phonemes.push_back(std::move(p));
    }
    if (phonemes.empty())
      throw ParseError("skill '" + s.id + "' has empty pronunciation_override");
    s.pronunciation_override = std::move(phonemes);
  }
  return s;
}

// JSON Lines, one skill object per line. Blank lines are skipped.
inline Catalog parse_catalog_jsonl(const std::string& text) {
  Catalog catalog;
  int line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
      throw ParseError("invalid catalog JSON object", line_no);
    try {
      catalog.push_back(skill_from_json(j));
    } catch (const Json::exception& e) {
      throw ParseError(std::string("catalog entry: ") + e.what(), line_no);
    }
  }
  check_unique_ids(catalog);
  return catalog;
}

inline std::string catalog_to_jsonl(const Catalog& catalog) {
  std::string out;
  for (const auto& skill : catalog) out += skill_to_json(skill).dump() + "\n";
  return out;
}

// Fills in every skill's phoneme sequence. A per-skill pronunciation
// override wins over the shared overrides map and the dictionary.
inline void resolve_phonemes(Catalog& catalog, const PronunciationDict& dict,
                             const PronunciationOverrides& overrides = {}) {
  std::vector<std::string> oov;
  for (auto& skill : catalog) {
    if (skill.pronunciation_override) {
      skill.phonemes.phonemes = *skill.pronunciation_override;
      skill.phonemes.source_phrase = skill.invocation;
      continue;
    }
    try {
      skill.phonemes = phrase_to_phonemes(skill.invocation, dict, overrides);
    } catch (const OovError& e) {
      for (const auto& w : e.words()) oov.push_back(skill.id + ":" + w);
    }
  }
  if (!oov.empty()) throw OovError(std::move(oov));
}

}  // namespace skillfence
