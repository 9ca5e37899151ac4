#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skillfence/canonical.hpp"
#include "skillfence/errors.hpp"

namespace skillfence {

// ARPABET symbol with stress digits removed ("IH", not "IH1").
using Phoneme = std::string;

struct PhonemeSeq {
  std::vector<Phoneme> phonemes;
  std::string source_phrase;

  bool operator==(const PhonemeSeq& other) const {
    return phonemes == other.phonemes;
  }
};

inline bool is_valid_phoneme(std::string_view symbol) {
  if (symbol.empty()) return false;
  return std::all_of(symbol.begin(), symbol.end(),
                     [](unsigned char c) { return c >= 'A' && c <= 'Z'; });
}

// "AH0" -> "AH". Stress carries no information for confusability here.
inline Phoneme strip_stress(std::string_view token) {
  auto end = token.size();
  while (end > 0 && std::isdigit(static_cast<unsigned char>(token[end - 1])))
    --end;
  return std::string(token.substr(0, end));
}

namespace detail {

inline std::string to_upper_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

inline std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

inline std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

// Splits "READ(2)" into {"READ", 2}. A bare word maps to variant 1.
// Throws on an unbalanced or empty parenthesis suffix.
inline std::pair<std::string, int> split_variant_suffix(const std::string& word,
                                                        int line_no) {
  if (word.empty()) throw ParseError("empty word", line_no);
  if (word.back() != ')') {
    if (word.find('(') != std::string::npos && word.find(')') == std::string::npos)
      throw ParseError("unbalanced parenthesis in word '" + word + "'", line_no);
    return {word, 1};
  }
  auto open = word.rfind('(');
  if (open == std::string::npos || open == 0)
    throw ParseError("unbalanced parenthesis in word '" + word + "'", line_no);
  std::string digits = word.substr(open + 1, word.size() - open - 2);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) {
        return std::isdigit(c);
      }))
    throw ParseError("malformed variant suffix in word '" + word + "'", line_no);
  return {word.substr(0, open), std::stoi(digits)};
}

}  // namespace detail

// Pronunciation lexicon in the CMU dictionary text format, together with the
// alternate-pronunciation pairs that drive cost learning: every unordered
// pair of variant pronunciations of the same word.
class PronunciationDict {
 public:
  using AltPair = std::pair<PhonemeSeq, PhonemeSeq>;

  void add(const std::string& word, PhonemeSeq pron) {
    auto [it, inserted] = entries_.try_emplace(word);
    if (inserted) word_order_.push_back(word);
    it->second.push_back(std::move(pron));
  }

  bool contains(const std::string& word) const {
    return entries_.count(word) > 0;
  }

  // First (primary) pronunciation, or nullptr when the word is unknown.
  const PhonemeSeq* lookup(const std::string& word) const {
    auto it = entries_.find(word);
    if (it == entries_.end() || it->second.empty()) return nullptr;
    return &it->second.front();
  }

  const std::vector<PhonemeSeq>* variants(const std::string& word) const {
    auto it = entries_.find(word);
    return it == entries_.end() ? nullptr : &it->second;
  }

  size_t word_count() const { return entries_.size(); }

  std::vector<AltPair> alt_pairs() const {
    std::vector<AltPair> pairs;
    for (const auto& word : word_order_) {
      const auto& prons = entries_.at(word);
      for (size_t i = 0; i < prons.size(); ++i)
        for (size_t j = i + 1; j < prons.size(); ++j)
          pairs.emplace_back(prons[i], prons[j]);
    }
    return pairs;
  }

  size_t alt_pair_count() const {
    size_t n = 0;
    for (const auto& [word, prons] : entries_)
      n += prons.size() * (prons.size() - 1) / 2;
    return n;
  }

  // Every distinct stress-stripped symbol seen while parsing.
  const std::vector<Phoneme>& inventory() const { return inventory_; }

  void set_inventory(std::vector<Phoneme> inv) { inventory_ = std::move(inv); }

 private:
  std::unordered_map<std::string, std::vector<PhonemeSeq>> entries_;
  std::vector<std::string> word_order_;
  std::vector<Phoneme> inventory_;
};

// Parses CMU dictionary text: "WORD  PH1 PH2 ...", variants as "WORD(2)",
// comment lines starting with ";;;", trailing "# ..." comments after the
// phonemes. Stress digits are stripped. Any whitespace run separates tokens.
inline PronunciationDict parse_dict(const std::string& dict_text) {
  PronunciationDict dict;
  std::map<Phoneme, bool> seen;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= dict_text.size()) {
    size_t eol = dict_text.find('\n', pos);
    if (eol == std::string::npos) eol = dict_text.size();
    std::string_view line(dict_text.data() + pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) {
      if (pos > dict_text.size()) break;
      continue;
    }
    if (line.substr(0, 3) == ";;;") continue;

    auto tokens = detail::split_whitespace(line);
    if (tokens.size() < 2)
      throw ParseError("dictionary entry has no phonemes", line_no);

    auto [word, variant] = detail::split_variant_suffix(tokens[0], line_no);
    (void)variant;  // variants are ordered by file position, not by index

    PhonemeSeq pron;
    pron.source_phrase = word;
    pron.phonemes.reserve(tokens.size() - 1);
    for (size_t i = 1; i < tokens.size(); ++i) {
      if (tokens[i][0] == '#') break;  // trailing comment
      Phoneme p = strip_stress(tokens[i]);
      if (!is_valid_phoneme(p))
        throw ParseError("invalid phoneme token '" + tokens[i] + "'", line_no);
      seen[p] = true;
      pron.phonemes.push_back(std::move(p));
    }
    if (pron.phonemes.empty())
      throw ParseError("dictionary entry has no phonemes", line_no);
    dict.add(word, std::move(pron));
  }

  std::vector<Phoneme> inv;
  inv.reserve(seen.size());
  for (const auto& [p, _] : seen) inv.push_back(p);
  dict.set_inventory(std::move(inv));
  return dict;
}

// Explicit pronunciations keyed by lowercase word or whole phrase. Checked
// before any dictionary lookup; the only escape hatch for OOV words.
using PronunciationOverrides = std::map<std::string, std::vector<Phoneme>>;

inline PronunciationOverrides parse_overrides(const Json& j) {
  if (!j.is_object()) throw ParseError("overrides must be a JSON object");
  PronunciationOverrides out;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_array())
      throw ParseError("override for '" + key + "' must be an array");
    std::vector<Phoneme> seq;
    for (const auto& item : value) {
      if (!item.is_string())
        throw ParseError("override for '" + key + "' has a non-string phoneme");
      Phoneme p = strip_stress(item.get<std::string>());
      if (!is_valid_phoneme(p))
        throw ParseError("override for '" + key + "' has invalid phoneme '" +
                         item.get<std::string>() + "'");
      seq.push_back(std::move(p));
    }
    if (seq.empty()) throw ParseError("override for '" + key + "' is empty");
    out[detail::to_lower_ascii(key)] = std::move(seq);
  }
  return out;
}

// Converts a phrase to phonemes: whole-phrase override first, then per word
// an override or the word's first dictionary pronunciation. Unknown words
// are an error; there is no grapheme-to-phoneme fallback.
inline PhonemeSeq phrase_to_phonemes(
    const std::string& phrase, const PronunciationDict& dict,
    const PronunciationOverrides& overrides = {}) {
  auto words = detail::split_whitespace(detail::to_lower_ascii(phrase));
  if (words.empty()) throw ValidationError("empty invocation phrase");

  std::string normalized;
  for (const auto& w : words) {
    if (!normalized.empty()) normalized += ' ';
    normalized += w;
  }

  PhonemeSeq out;
  out.source_phrase = phrase;

  if (auto it = overrides.find(normalized); it != overrides.end()) {
    out.phonemes = it->second;
    return out;
  }

  std::vector<std::string> missing;
  for (const auto& word : words) {
    if (auto it = overrides.find(word); it != overrides.end()) {
      out.phonemes.insert(out.phonemes.end(), it->second.begin(), it->second.end());
      continue;
    }
    const PhonemeSeq* pron = dict.lookup(detail::to_upper_ascii(word));
    if (pron == nullptr) {
      missing.push_back(word);
      continue;
    }
    out.phonemes.insert(out.phonemes.end(), pron->phonemes.begin(),
                        pron->phonemes.end());
  }
  if (!missing.empty()) throw OovError(std::move(missing));
  return out;
}

}  // namespace skillfence
