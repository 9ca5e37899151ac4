#pragma once

#include <array>
#include <string>
#include <string_view>
#include <unordered_set>

namespace skillfence {

// Pinned snapshot of common public suffixes (ICANN section), bundled so
// registrable-root extraction is reproducible offline. Hosts under unknown
// TLDs fall back to the standard rule: the last label is the public suffix.
// Snapshot id: psl-snapshot-2024-06, trimmed to suffixes the toolkit and its
// corpora can encounter.
inline constexpr std::array kPublicSuffixSnapshot = {
    // generic
    "com", "net", "org", "edu", "gov", "mil", "int", "info", "biz", "name",
    "io", "dev", "app", "ai", "co", "me", "tv", "fm", "am", "ly", "sh", "gg",
    "to", "cc", "ws", "xyz", "online", "site", "store", "tech", "cloud",
    "live", "news", "blog", "shop", "wiki", "space", "fit", "health",
    // country code
    "us", "uk", "ca", "au", "de", "fr", "jp", "cn", "in", "br", "mx", "ru",
    "nl", "se", "no", "fi", "dk", "es", "it", "ch", "at", "be", "pl", "pt",
    "ie", "nz", "za", "kr", "tw", "hk", "sg", "il", "tr", "ar", "cl", "gr",
    "cz", "hu", "ro", "sk", "ua", "eu",
    // second-level registries
    "co.uk", "org.uk", "net.uk", "ac.uk", "gov.uk", "me.uk", "ltd.uk",
    "plc.uk", "com.au", "net.au", "org.au", "edu.au", "gov.au", "id.au",
    "co.nz", "net.nz", "org.nz", "ac.nz", "govt.nz", "co.jp", "ne.jp",
    "or.jp", "ac.jp", "go.jp", "gr.jp", "com.br", "net.br", "org.br",
    "gov.br", "com.mx", "org.mx", "gob.mx", "com.cn", "net.cn", "org.cn",
    "gov.cn", "com.tw", "org.tw", "com.hk", "com.sg", "co.in", "net.in",
    "org.in", "gov.in", "firm.in", "co.kr", "or.kr", "co.za", "org.za",
    "com.ar", "com.tr", "com.ua", "co.il", "org.il", "com.pl", "net.pl",
    "org.pl", "co.at", "or.at", "com.gr", "com.ru", "com.cy",
};

namespace detail {

inline const std::unordered_set<std::string>& public_suffix_set() {
  static const std::unordered_set<std::string> set(kPublicSuffixSnapshot.begin(),
                                                   kPublicSuffixSnapshot.end());
  return set;
}

inline bool is_numeric_label(std::string_view label) {
  if (label.empty()) return false;
  for (char c : label)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace detail

// Registrable root of a host per the public-suffix algorithm: the longest
// matching public suffix plus one label. Returns "" when the host has no
// registrable root (the host is itself a suffix, is empty, or is an IPv4
// address).
inline std::string registrable_root(std::string_view host) {
  std::string h(host);
  for (char& c : h) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  while (!h.empty() && h.back() == '.') h.pop_back();
  if (h.empty()) return "";

  std::vector<std::string> labels;
  size_t pos = 0;
  while (pos <= h.size()) {
    size_t dot = h.find('.', pos);
    if (dot == std::string::npos) dot = h.size();
    if (dot == pos) return "";  // empty label
    labels.push_back(h.substr(pos, dot - pos));
    pos = dot + 1;
    if (pos > h.size()) break;
  }
  if (labels.size() < 2) return "";

  bool all_numeric = true;
  for (const auto& l : labels)
    if (!detail::is_numeric_label(l)) all_numeric = false;
  if (all_numeric) return "";  // IPv4 literal

  const auto& suffixes = detail::public_suffix_set();
  if (suffixes.count(h)) return "";  // the host is itself a public suffix

  // longest public suffix that leaves at least one label in front
  size_t suffix_labels = 1;  // unknown TLD: last label is the suffix
  for (size_t take = labels.size() - 1; take >= 1; --take) {
    std::string candidate;
    for (size_t i = labels.size() - take; i < labels.size(); ++i) {
      if (!candidate.empty()) candidate += '.';
      candidate += labels[i];
    }
    if (suffixes.count(candidate)) {
      suffix_labels = take;
      break;
    }
  }
  if (labels.size() <= suffix_labels) return "";

  std::string root;
  for (size_t i = labels.size() - suffix_labels - 1; i < labels.size(); ++i) {
    if (!root.empty()) root += '.';
    root += labels[i];
  }
  return root;
}

}  // namespace skillfence
