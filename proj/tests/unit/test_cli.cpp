#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "cryptobench/bundle.hpp"
#include "cryptobench/report.hpp"

using namespace cryptobench;

TEST_CASE("bundled assets match their checksums", "[cli]") {
  CHECK(bundle::names().size() == bundle::kAssets.size());
  for (const bundle::Asset& a : bundle::kAssets) {
    INFO(a.name);
    CHECK(bundle::checksum_ok(a));
    CHECK_FALSE(a.content.empty());
  }
  CHECK(bundle::find("nope") == nullptr);
  CHECK_THROWS_AS(bundle::asset("nope"), InvalidInput);
  CHECK(bundle::resolve("bundled:table8") == bundle::asset("table8"));
  CHECK_THROWS_AS(bundle::resolve("/nonexistent/file"), InvalidInput);
}

TEST_CASE("override directory replaces assets by name", "[cli]") {
  const auto dir = std::filesystem::temp_directory_path() / "cryptobench_bundle_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "table8") << "S1 = y\n";
  ::setenv("CRYPTOBENCH_BUNDLE_DIR", dir.c_str(), 1);
  CHECK(bundle::asset("table8") == "S1 = y\n");
  CHECK(bundle::asset("table7") == std::string(bundle::find("table7")->content));
  ::unsetenv("CRYPTOBENCH_BUNDLE_DIR");
  CHECK(bundle::asset("table8") != "S1 = y\n");
  std::filesystem::remove_all(dir);
}

TEST_CASE("line splitting", "[cli]") {
  CHECK(bundle::lines("a\r\n\n; note\nb") == std::vector<std::string>{"a", "b"});
  CHECK(bundle::lines("").empty());
}

TEST_CASE("report text is fixed and ordered", "[cli]") {
  Report r("demo");
  r.add_input("x");
  r.metric("count", 3);
  r.metric("name", "abc");
  r.metric("flag", true);
  r.check("first", true);
  r.skip("second", "why");
  CHECK(r.passed());
  // inputs = fnv1a64("x\x1f") from the offset basis.
  CHECK(r.serialize() ==
        "command=demo\ninputs=" + hex64(fnv1a64("x\x1f")) +
            "\nmetric.count=3\nmetric.name=abc\nmetric.flag=true\n"
            "check.first=pass\ncheck.second=skip why\noutcome=pass\n");
  r.check("third", false, "bad");
  CHECK_FALSE(r.passed());
  CHECK(r.serialize().ends_with("check.third=fail bad\noutcome=fail\n"));
}

TEST_CASE("equal inputs give equal reports", "[cli]") {
  auto make = [](std::string_view in) {
    Report r("x");
    r.add_input(in);
    r.add_input("tail");
    return r.serialize();
  };
  CHECK(make("a") == make("a"));
  CHECK(make("a") != make("b"));
  // The separator keeps ("ab", "") and ("a", "b") apart.
  Report p("x"), q("x");
  p.add_input("ab");
  p.add_input("");
  q.add_input("a");
  q.add_input("b");
  CHECK(p.serialize() != q.serialize());
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}
