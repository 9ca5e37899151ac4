#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "skillfence/suffix_list.hpp"

namespace skillfence {

struct ParsedUrl {
  bool valid = false;
  std::string scheme;
  std::string host;
  std::string port;
  std::string path;
  std::string query;     // without '?'
  std::string fragment;  // without '#'
};

inline ParsedUrl parse_url(std::string_view url) {
  ParsedUrl out;
  auto scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos || scheme_end == 0) return out;
  out.scheme = std::string(url.substr(0, scheme_end));
  for (char& c : out.scheme)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (char c : out.scheme)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
      return out;

  std::string_view rest = url.substr(scheme_end + 3);
  auto frag = rest.find('#');
  if (frag != std::string_view::npos) {
    out.fragment = std::string(rest.substr(frag + 1));
    rest = rest.substr(0, frag);
  }
  auto q = rest.find('?');
  if (q != std::string_view::npos) {
    out.query = std::string(rest.substr(q + 1));
    rest = rest.substr(0, q);
  }
  auto slash = rest.find('/');
  std::string_view authority = slash == std::string_view::npos ? rest : rest.substr(0, slash);
  out.path = slash == std::string_view::npos ? "" : std::string(rest.substr(slash));

  auto at = authority.rfind('@');  // drop userinfo
  if (at != std::string_view::npos) authority = authority.substr(at + 1);
  auto colon = authority.rfind(':');
  if (colon != std::string_view::npos) {
    out.port = std::string(authority.substr(colon + 1));
    authority = authority.substr(0, colon);
  }
  if (authority.empty()) return out;
  out.host = std::string(authority);
  for (char& c : out.host)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  out.valid = true;
  return out;
}

namespace detail {

inline bool is_tracking_param(std::string_view key) {
  return key.substr(0, 4) == "utm_" || key == "ref" || key == "tag";
}

}  // namespace detail

// Canonical form used for link matching and distinct-page counting:
// lowercase scheme and host, default port dropped, fragment dropped,
// utm_*/ref/tag query parameters dropped, single trailing slash stripped.
// Unparseable input comes back unchanged.
inline std::string canonicalize_url(const std::string& url) {
  ParsedUrl p = parse_url(url);
  if (!p.valid) return url;

  if ((p.scheme == "http" && p.port == "80") ||
      (p.scheme == "https" && p.port == "443"))
    p.port.clear();

  std::string path = p.path;
  if (path.size() > 1 && path.back() == '/') path.pop_back();
  if (path == "/") path.clear();

  std::string query;
  size_t pos = 0;
  while (pos <= p.query.size() && !p.query.empty()) {
    size_t amp = p.query.find('&', pos);
    if (amp == std::string::npos) amp = p.query.size();
    std::string_view param(p.query.data() + pos, amp - pos);
    auto eq = param.find('=');
    std::string_view key = eq == std::string_view::npos ? param : param.substr(0, eq);
    if (!param.empty() && !detail::is_tracking_param(key)) {
      if (!query.empty()) query += '&';
      query += std::string(param);
    }
    pos = amp + 1;
    if (pos > p.query.size()) break;
  }

  std::string out = p.scheme + "://" + p.host;
  if (!p.port.empty()) out += ":" + p.port;
  out += path;
  if (!query.empty()) out += "?" + query;
  return out;
}

inline std::string registrable_root_of_url(const std::string& url) {
  ParsedUrl p = parse_url(url);
  if (!p.valid) return "";
  return registrable_root(p.host);
}

}  // namespace skillfence
