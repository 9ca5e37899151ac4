#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "skillfence/canonical.hpp"
#include "skillfence/catalog.hpp"
#include "skillfence/corpus.hpp"
#include "skillfence/graph.hpp"
#include "skillfence/urls.hpp"

namespace skillfence {

// Domains whose pages prove nothing about skill ownership: anyone can host
// content there.
inline const std::vector<std::string>& default_hosting_denylist() {
  static const std::vector<std::string> list = {
      "amazonaws.com",     "cloudfront.net",   "amazon.com",
      "googleusercontent.com", "appspot.com",  "firebaseapp.com",
      "web.app",           "azurewebsites.net", "windows.net",
      "herokuapp.com",     "github.io",        "gitlab.io",
      "netlify.app",       "vercel.app",       "wixsite.com",
      "weebly.com",        "wordpress.com",    "blogspot.com",
      "google.com",
  };
  return list;
}

// Registrable roots of a skill's metadata URLs: deduplicated, lowercased,
// sorted, minus shared-hosting domains. Unparseable URLs are skipped with a
// warning rather than failing the skill.
inline std::vector<std::string> extract_domains(
    const Skill& skill,
    const std::vector<std::string>& denylist = default_hosting_denylist(),
    std::vector<std::string>* warnings = nullptr) {
  std::set<std::string> roots;
  for (const auto& url : skill.metadata_urls) {
    std::string root = registrable_root_of_url(url);
    if (root.empty()) {
      if (warnings)
        warnings->push_back("skill '" + skill.id + "': cannot extract domain from '" +
                            url + "'");
      continue;
    }
    if (std::find(denylist.begin(), denylist.end(), root) != denylist.end())
      continue;
    roots.insert(root);
  }
  return {roots.begin(), roots.end()};
}

// href values of anchor tags, in document order. Static extraction only:
// quoted or bare attribute values, case-insensitive tag and attribute names.
inline std::vector<std::string> extract_hrefs(const std::string& html) {
  std::vector<std::string> out;
  auto lower = [](char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  };
  size_t i = 0;
  const size_t n = html.size();
  while (i < n) {
    if (html[i] != '<') {
      ++i;
      continue;
    }
    size_t tag_start = i + 1;
    if (tag_start >= n || lower(html[tag_start]) != 'a') {
      ++i;
      continue;
    }
    size_t after = tag_start + 1;
    if (after < n && !std::isspace(static_cast<unsigned char>(html[after])) &&
        html[after] != '>' && html[after] != '/') {
      ++i;  // <abbr> etc., not an anchor
      continue;
    }
    size_t close = html.find('>', tag_start);
    if (close == std::string::npos) break;
    std::string tag = html.substr(tag_start, close - tag_start);
    std::string tag_lower = tag;
    for (char& c : tag_lower) c = lower(c);

    size_t pos = 0;
    while ((pos = tag_lower.find("href", pos)) != std::string::npos) {
      size_t p = pos + 4;
      while (p < tag.size() && std::isspace(static_cast<unsigned char>(tag[p]))) ++p;
      if (p >= tag.size() || tag[p] != '=') {
        pos += 4;
        continue;
      }
      ++p;
      while (p < tag.size() && std::isspace(static_cast<unsigned char>(tag[p]))) ++p;
      if (p >= tag.size()) break;
      std::string value;
      if (tag[p] == '"' || tag[p] == '\'') {
        char quote = tag[p];
        size_t end = tag.find(quote, p + 1);
        if (end == std::string::npos) break;
        value = tag.substr(p + 1, end - p - 1);
      } else {
        size_t end = p;
        while (end < tag.size() && !std::isspace(static_cast<unsigned char>(tag[end])))
          ++end;
        value = tag.substr(p, end - p);
      }
      if (!value.empty()) out.push_back(value);
      break;
    }
    i = close + 1;
  }
  return out;
}

struct BacklinkIdentity {
  std::string domain;
  std::string cert_sha256;
};

// First non-user-generated page (by domain order, then url order) whose body
// hyperlinks to the skill's marketplace listing. Plain-text mentions of the
// URL do not count; the match is on canonicalized href values.
inline std::optional<BacklinkIdentity> find_backlink(
    const Skill& skill, const std::vector<const PageRecord*>& pages) {
  const std::string target = canonicalize_url(skill.amazon_url);
  std::vector<const PageRecord*> ordered = pages;
  std::sort(ordered.begin(), ordered.end(),
            [](const PageRecord* a, const PageRecord* b) {
              if (a->domain != b->domain) return a->domain < b->domain;
              return a->url < b->url;
            });
  for (const auto* page : ordered) {
    if (page->user_generated) continue;
    for (const auto& href : extract_hrefs(page->body)) {
      if (canonicalize_url(href) == target)
        return BacklinkIdentity{page->domain, page->cert_sha256};
    }
  }
  return std::nullopt;
}

struct MapperEntry {
  std::string skill_id;
  std::string amazon_url;
  std::string domain;
  std::string cert_sha256;
  std::vector<Neighbor> neighbors;

  bool operator==(const MapperEntry&) const = default;
};

// Versioned association of securely identified skills with their domains,
// certificates, and phonetic neighbors.
struct MapperTable {
  std::int64_t version = 1;
  double threshold = 0.0;
  std::vector<MapperEntry> entries;  // sorted by skill_id

  const MapperEntry* find(const std::string& skill_id) const {
    for (const auto& e : entries)
      if (e.skill_id == skill_id) return &e;
    return nullptr;
  }
};

inline Json mapper_entry_to_json(const MapperEntry& e) {
  Json j;
  j["skill_id"] = e.skill_id;
  j["amazon_url"] = e.amazon_url;
  j["domain"] = e.domain;
  j["cert_sha256"] = e.cert_sha256;
  Json neighbors = Json::array();
  for (const auto& nb : e.neighbors) {
    Json n;
    n["id"] = nb.id;
    n["distance"] = nb.distance;
    neighbors.push_back(std::move(n));
  }
  j["neighbors"] = std::move(neighbors);
  return j;
}

inline MapperEntry mapper_entry_from_json(const Json& j) {
  MapperEntry e;
  e.skill_id = j.at("skill_id").get<std::string>();
  e.amazon_url = j.at("amazon_url").get<std::string>();
  e.domain = j.at("domain").get<std::string>();
  e.cert_sha256 = j.at("cert_sha256").get<std::string>();
  for (const auto& n : j.at("neighbors"))
    e.neighbors.push_back({n.at("id").get<std::string>(),
                           n.at("distance").get<double>()});
  return e;
}

inline Json mapper_table_to_json(const MapperTable& t) {
  Json j;
  j["version"] = t.version;
  j["threshold"] = t.threshold;
  Json entries = Json::array();
  for (const auto& e : t.entries) entries.push_back(mapper_entry_to_json(e));
  j["entries"] = std::move(entries);
  return j;
}

inline MapperTable mapper_table_from_json(const Json& j) {
  MapperTable t;
  t.version = j.at("version").get<std::int64_t>();
  t.threshold = j.at("threshold").get<double>();
  for (const auto& e : j.at("entries"))
    t.entries.push_back(mapper_entry_from_json(e));
  return t;
}

// One entry per skill whose backlink verifies against the page source.
// Neighbor lists may reference skills without identities: disabling a skill
// requires no identity. Pure in all inputs.
inline MapperTable build_mapper_table(const Catalog& catalog,
                                      const PhoneticGraph& graph,
                                      const PageSource& pages,
                                      std::vector<std::string>* warnings = nullptr) {
  check_unique_ids(catalog);
  MapperTable table;
  table.version = 1;
  table.threshold = graph.threshold();

  std::vector<const Skill*> ordered;
  for (const auto& s : catalog) ordered.push_back(&s);
  std::sort(ordered.begin(), ordered.end(),
            [](const Skill* a, const Skill* b) { return a->id < b->id; });

  for (const auto* skill : ordered) {
    auto domains = extract_domains(*skill, default_hosting_denylist(), warnings);
    std::vector<const PageRecord*> candidate_pages;
    for (const auto& domain : domains) {
      auto found = pages.pages_for(domain);
      candidate_pages.insert(candidate_pages.end(), found.begin(), found.end());
    }
    auto identity = find_backlink(*skill, candidate_pages);
    if (!identity) continue;
    MapperEntry entry;
    entry.skill_id = skill->id;
    entry.amazon_url = skill->amazon_url;
    entry.domain = identity->domain;
    entry.cert_sha256 = identity->cert_sha256;
    entry.neighbors = graph.neighbors(skill->id);
    table.entries.push_back(std::move(entry));
  }
  return table;
}

inline MapperTable build_mapper_table(const Catalog& catalog,
                                      const CostMatrix& costs, double threshold,
                                      const PageSource& pages,
                                      std::vector<std::string>* warnings = nullptr) {
  return build_mapper_table(catalog, build_graph(catalog, costs, threshold),
                            pages, warnings);
}

// Delta between consecutive table versions. Carries the new threshold so
// applying a delta reproduces the successor table byte-for-byte.
struct MapperDelta {
  std::int64_t base_version = 0;
  double threshold = 0.0;
  std::vector<MapperEntry> added;
  std::vector<MapperEntry> changed;
  std::vector<std::string> removed;
};

inline Json mapper_delta_to_json(const MapperDelta& d) {
  Json j;
  j["base_version"] = d.base_version;
  j["threshold"] = d.threshold;
  Json added = Json::array();
  for (const auto& e : d.added) added.push_back(mapper_entry_to_json(e));
  j["added"] = std::move(added);
  Json changed = Json::array();
  for (const auto& e : d.changed) changed.push_back(mapper_entry_to_json(e));
  j["changed"] = std::move(changed);
  j["removed"] = d.removed;
  return j;
}

inline MapperDelta mapper_delta_from_json(const Json& j) {
  MapperDelta d;
  d.base_version = j.at("base_version").get<std::int64_t>();
  d.threshold = j.at("threshold").get<double>();
  for (const auto& e : j.at("added")) d.added.push_back(mapper_entry_from_json(e));
  for (const auto& e : j.at("changed"))
    d.changed.push_back(mapper_entry_from_json(e));
  d.removed = j.at("removed").get<std::vector<std::string>>();
  return d;
}

inline MapperDelta diff_tables(const MapperTable& old_table,
                               const MapperTable& new_table) {
  if (new_table.version != old_table.version + 1)
    throw ValidationError("diff requires consecutive versions");
  MapperDelta delta;
  delta.base_version = old_table.version;
  delta.threshold = new_table.threshold;

  std::map<std::string, const MapperEntry*> old_by_id;
  for (const auto& e : old_table.entries) old_by_id[e.skill_id] = &e;
  std::set<std::string> new_ids;
  for (const auto& e : new_table.entries) {
    new_ids.insert(e.skill_id);
    auto it = old_by_id.find(e.skill_id);
    if (it == old_by_id.end())
      delta.added.push_back(e);
    else if (!(*it->second == e))
      delta.changed.push_back(e);
  }
  for (const auto& e : old_table.entries)
    if (!new_ids.count(e.skill_id)) delta.removed.push_back(e.skill_id);
  std::sort(delta.removed.begin(), delta.removed.end());
  return delta;
}

inline MapperTable apply_delta(const MapperTable& old_table,
                               const MapperDelta& delta) {
  if (delta.base_version != old_table.version)
    throw ValidationError("delta base version " +
                          std::to_string(delta.base_version) +
                          " does not match table version " +
                          std::to_string(old_table.version));
  std::map<std::string, MapperEntry> merged;
  for (const auto& e : old_table.entries) merged[e.skill_id] = e;
  for (const auto& id : delta.removed) merged.erase(id);
  for (const auto& e : delta.changed) {
    if (!merged.count(e.skill_id))
      throw ValidationError("changed entry '" + e.skill_id + "' not in table");
    merged[e.skill_id] = e;
  }
  for (const auto& e : delta.added) {
    if (merged.count(e.skill_id))
      throw ValidationError("added entry '" + e.skill_id + "' already in table");
    merged[e.skill_id] = e;
  }

  MapperTable next;
  next.version = old_table.version + 1;
  next.threshold = delta.threshold;
  for (auto& [id, e] : merged) next.entries.push_back(std::move(e));
  return next;
}

}  // namespace skillfence
