#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sextic/cli.hpp"
#include "sextic/examples.hpp"
#include "sextic/json_io.hpp"

using namespace sextic;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("sextic_cli_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("emitted example verifies") {
    const auto dir = scratch("ex1");
    REQUIRE(run({"example", "1", "--emit", dir.string()}).code == kExitSuccess);
    const auto r = run({"verify", "--ring", (dir / "ring.json").string(), "--resolvent", (dir / "res.json").string()});
    CHECK(r.code == kExitSuccess);
    CHECK(r.out.rfind("pass", 0) == 0);
  }

  TEST_CASE("mismatched pair fails with the first triple") {
    const auto d1 = scratch("mm1");
    const auto d2 = scratch("mm2");
    REQUIRE(run({"example", "1", "--emit", d1.string()}).code == 0);
    REQUIRE(run({"example", "2", "--p", "2", "--emit", d2.string()}).code == 0);
    const auto r = run({"--json", "verify", "--ring", (d2 / "ring.json").string(), "--resolvent",
                        (d1 / "res.json").string()});
    CHECK(r.code == kExitFailure);
    const Json j = parse_json(r.out);
    CHECK_FALSE(j["pass"].get<bool>());
    CHECK(j["failures"][0].contains("x"));
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"verify", "--ring", "x.json"}).code == kExitUsage);
    CHECK(run({"example", "2"}).code == kExitUsage);
    CHECK(run({"example", "6"}).code == kExitUsage);
    CHECK(run({"conductor", "--ring", "/nonexistent/ring.json"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitSuccess);
  }

  TEST_CASE("emit, parse, emit is byte stable") {
    const auto dir = scratch("bytes");
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"example", "1"}, {"example", "2", "--p", "3"}, {"example", "4", "--p", "2"}, {"example", "5"}}) {
      auto a = args;
      a.push_back("--emit");
      a.push_back(dir.string());
      REQUIRE(run(a).code == 0);
    }
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      const std::string text = slurp(entry.path());
      const Json j = parse_json(text);
      const bool is_ring = entry.path().filename().string().find("ring") != std::string::npos;
      const Json again = is_ring ? ring_to_json(ring_from_json(j)) : [&] {
        const auto f = resolvent_from_json(j);
        return resolvent_to_json(f.data, f.lattice);
      }();
      CHECK(dump(again) == text);
      ++files;
    }
    CHECK(files == 6);
    // Ring round trip through the CLI.
    const auto out = dir / "again.json";
    REQUIRE(run({"ring-from-resolvent", "--resolvent", (dir / "A18_res.json").string(), "-o", out.string()}).code == 0);
    CHECK(parse_json(slurp(out))["c"].size() == 10);
  }

  TEST_CASE("report schema") {
    const auto dir = scratch("report");
    REQUIRE(run({"example", "2", "--p", "2", "--emit", dir.string()}).code == 0);
    const auto r = run({"--json", "resolvents", "--ring", (dir / "ring.json").string()});
    REQUIRE(r.code == 0);
    const Json j = parse_json(r.out);
    CHECK(j["conductor"] == "2");
    CHECK(j["resolvents"].size() == 3);
    for (const auto& e : j["resolvents"]) {
      CHECK(e["numerical"].get<bool>());
      CHECK(e["index_in_M0"] == "2");
    }
    CHECK(dump(parse_json(r.out)) == r.out);
  }

  TEST_CASE("other subcommands") {
    const auto dir = scratch("misc");
    REQUIRE(run({"example", "3", "--emit", dir.string()}).code == 0);
    const auto ring = (dir / "ring.json").string();
    const auto sm = run({"--json", "strong-maximal", "--ring", ring, "--primes", "2,3"});
    CHECK(sm.code == 0);
    CHECK(parse_json(sm.out)["numerical_count"] == 1);
    const auto vd = run({"--json", "very-degenerate", "--ring", ring, "--mod", "2"});
    CHECK(vd.code == 0);
    CHECK(parse_json(vd.out).contains("very_degenerate"));
    const auto cr = run({"construct-resolvent", "--ring", ring});
    CHECK(cr.code == 0);
    CHECK(parse_json(cr.out).contains("phi"));
    const auto d5 = scratch("ex5");
    REQUIRE(run({"example", "5", "--emit", d5.string()}).code == 0);
    const auto a18 = run({"--json", "very-degenerate", "--ring", (d5 / "A18_ring.json").string()});
    CHECK(parse_json(a18.out)["type"] == "A18");
    CHECK(run({"very-degenerate", "--ring", ring, "--mod", "4"}).code == kExitUsage);
  }
}
