#include <catch2/catch_amalgamated.hpp>

#include "skillfence/suffix_list.hpp"
#include "skillfence/urls.hpp"

using namespace skillfence;

TEST_CASE("registrable root follows the public suffix list") {
  CHECK(registrable_root("www.fitbit.com") == "fitbit.com");
  CHECK(registrable_root("help.fitbit.com") == "fitbit.com");
  CHECK(registrable_root("fitbit.com") == "fitbit.com");
  CHECK(registrable_root("FitBit.COM") == "fitbit.com");
  CHECK(registrable_root("a.b.example.co.uk") == "example.co.uk");
  CHECK(registrable_root("s3.amazonaws.com") == "amazonaws.com");
  // unknown TLD: last label is the suffix
  CHECK(registrable_root("service.internal.corp") == "internal.corp");
}

TEST_CASE("registrable root rejects degenerate hosts") {
  CHECK(registrable_root("com") == "");
  CHECK(registrable_root("co.uk") == "");
  CHECK(registrable_root("") == "");
  CHECK(registrable_root("localhost") == "");
  CHECK(registrable_root("192.168.0.1") == "");
  CHECK(registrable_root("bad..host.com") == "");
}

TEST_CASE("parse_url splits components") {
  auto p = parse_url("HTTPS://User@Www.Fitbit.com:8443/Path/x?a=1#frag");
  REQUIRE(p.valid);
  CHECK(p.scheme == "https");
  CHECK(p.host == "www.fitbit.com");
  CHECK(p.port == "8443");
  CHECK(p.path == "/Path/x");
  CHECK(p.query == "a=1");
  CHECK(p.fragment == "frag");

  CHECK_FALSE(parse_url("not a url").valid);
  CHECK_FALSE(parse_url("mailto:x@y.com").valid);
  CHECK_FALSE(parse_url("https://").valid);
}

TEST_CASE("canonicalize_url normalizes for link matching") {
  CHECK(canonicalize_url("HTTPS://WWW.Amazon.com/dp/B01D4F1J0M/") ==
        "https://www.amazon.com/dp/B01D4F1J0M");
  CHECK(canonicalize_url("https://www.amazon.com/dp/B01D4F1J0M#reviews") ==
        "https://www.amazon.com/dp/B01D4F1J0M");
  CHECK(canonicalize_url(
            "https://www.amazon.com/dp/B01D4F1J0M?utm_source=x&ref=dev&tag=aff") ==
        "https://www.amazon.com/dp/B01D4F1J0M");
  CHECK(canonicalize_url("https://www.amazon.com/dp/B01?utm_x=1&page=2") ==
        "https://www.amazon.com/dp/B01?page=2");
  CHECK(canonicalize_url("https://x.com:443/a") == "https://x.com/a");
  CHECK(canonicalize_url("http://x.com:80/") == "http://x.com");
  CHECK(canonicalize_url("https://x.com/") == "https://x.com");
  // path-internal slashes survive, only one trailing slash is stripped
  CHECK(canonicalize_url("https://x.com/a/b/") == "https://x.com/a/b");
  // unparseable input is returned unchanged
  CHECK(canonicalize_url("::garbage::") == "::garbage::");
}

TEST_CASE("canonicalization is idempotent") {
  const std::string urls[] = {
      "https://www.amazon.com/dp/B01D4F1J0M/?utm_source=x&p=1#f",
      "http://sub.example.co.uk:80/deep/path/",
      "https://x.com",
  };
  for (const auto& u : urls)
    CHECK(canonicalize_url(canonicalize_url(u)) == canonicalize_url(u));
}
