#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "skillfence/canonical.hpp"
#include "skillfence/errors.hpp"
#include "skillfence/urls.hpp"

namespace skillfence {

// A crawled page standing in for live fetching: body HTML plus the serving
// domain's certificate fingerprint. user_generated marks pages whose content
// is attacker-writable (forums, comments); those never establish identity.
struct PageRecord {
  std::string url;
  std::string domain;
  std::string body;
  bool user_generated = false;
  std::string cert_sha256;
};

// Where pages for a domain come from. The toolkit ships the corpus-backed
// implementation; a live crawler would plug in here.
class PageSource {
 public:
  virtual ~PageSource() = default;

  // Pages in deterministic (url-sorted) order; empty when none are known.
  virtual std::vector<const PageRecord*> pages_for(const std::string& domain) const = 0;
};

class PageCorpus : public PageSource {
 public:
  static PageCorpus from_records(std::vector<PageRecord> records) {
    PageCorpus corpus;
    for (auto& r : records) {
      if (registrable_root_of_url(r.url) != r.domain)
        throw ValidationError("corpus page '" + r.url +
                              "' does not belong to domain '" + r.domain + "'");
      corpus.by_domain_[r.domain].push_back(std::move(r));
    }
    for (auto& [domain, pages] : corpus.by_domain_) {
      std::sort(pages.begin(), pages.end(),
                [](const PageRecord& a, const PageRecord& b) { return a.url < b.url; });
      corpus.page_count_ += pages.size();
    }
    return corpus;
  }

  // Manifest: JSON array of {"url","domain","path","user_generated",
  // "cert_sha256"}; path points at the page HTML relative to the manifest.
  static PageCorpus load(const std::filesystem::path& manifest_path) {
    Json manifest = read_json_file(manifest_path);
    if (!manifest.is_array())
      throw ParseError("corpus manifest must be a JSON array");
    auto base = manifest_path.parent_path();
    std::vector<PageRecord> records;
    for (const auto& item : manifest) {
      PageRecord r;
      r.url = item.at("url").get<std::string>();
      r.domain = item.at("domain").get<std::string>();
      r.user_generated = item.at("user_generated").get<bool>();
      r.cert_sha256 = item.at("cert_sha256").get<std::string>();
      r.body = read_text_file(base / item.at("path").get<std::string>());
      records.push_back(std::move(r));
    }
    return from_records(std::move(records));
  }

  std::vector<const PageRecord*> pages_for(const std::string& domain) const override {
    std::vector<const PageRecord*> out;
    auto it = by_domain_.find(domain);
    if (it == by_domain_.end()) return out;
    out.reserve(it->second.size());
    for (const auto& r : it->second) out.push_back(&r);
    return out;
  }

  // First page's certificate per domain (pages are url-sorted).
  std::map<std::string, std::string> domain_certs() const {
    std::map<std::string, std::string> out;
    for (const auto& [domain, pages] : by_domain_)
      if (!pages.empty()) out[domain] = pages.front().cert_sha256;
    return out;
  }

  size_t page_count() const { return page_count_; }
  size_t domain_count() const { return by_domain_.size(); }

 private:
  std::map<std::string, std::vector<PageRecord>> by_domain_;
  size_t page_count_ = 0;
};

}  // namespace skillfence
