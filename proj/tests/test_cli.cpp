#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "pcat/cli.hpp"
#include "pcat/partition.hpp"

using namespace pcat;

namespace {

  struct Result {
    int         status = 0;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          status = cli::run(std::move(args), out, err);
    return {status, out.str(), err.str()};
  }

  std::filesystem::path temp_file(std::string const& name,
                                  std::string const& text) {
    auto const path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
  }

  std::vector<std::string> lines(std::string const& text) {
    std::vector<std::string> out;
    std::istringstream       in(text);
    for (std::string line; std::getline(in, line);) {
      out.push_back(line);
    }
    return out;
  }

}  // namespace

TEST_CASE("member") {
  auto const r = run({"member", "--family", "H'_loc", "--partition",
                      "|wbwb|0,0,0,0"});
  CHECK(r.status == 0);
  CHECK(r.out == "true\n");
  auto const s = run({"member", "--family", "H'_loc", "--partition",
                      "|wwbb|0,0,0,0"});
  CHECK(s.status == 0);
  CHECK(s.out == "false\n");
}

TEST_CASE("usage errors") {
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"member", "--family", "H'_loc"}).status == 2);
  CHECK(run({"member", "--family", "Q_loc", "--partition", "||"}).status == 2);
  CHECK(run({"member", "--family", "H_loc(4,3)", "--partition", "||"}).status == 2);
  CHECK(run({"member", "--family", "O_loc", "--partition", "|wx|0,0"}).status == 2);
  CHECK(run({"enumerate", "--upper", "9", "--lower", "9"}).status == 2);
  CHECK(run({"verify", "--suite", "nonsense"}).status == 2);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("missing files") {
  auto const r = run({"closure", "--gens", "/nonexistent/gens.txt",
                      "--max-points", "4"});
  CHECK(r.status == 3);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("enumerate") {
  CHECK(run({"enumerate", "--upper", "0", "--lower", "4", "--noncrossing",
             "--count"})
            .out
        == "224\n");
  auto const r = run({"enumerate", "--upper", "0", "--lower", "2"});
  CHECK(r.status == 0);
  auto const all = lines(r.out);
  CHECK(all.size() == 8);
  for (auto const& line : all) {
    CHECK_NOTHROW(parse_text(line));
  }
}

TEST_CASE("closure and classify") {
  auto const gens = temp_file("pcat_test_gens.txt", "# four block\n|wbwb|0,0,0,0\n");
  auto const out  = std::filesystem::temp_directory_path() / "pcat_test_out.txt";
  auto const c    = run({"closure", "--gens", gens.string(), "--max-points",
                         "4", "--out", out.string()});
  CHECK(c.status == 0);
  std::ifstream in(out);
  std::string   header;
  std::getline(in, header);
  CHECK(header.rfind("# closure bound=4 generators=1", 0) == 0);

  auto const k = run({"classify", "--gens", gens.string(), "--max-points", "8"});
  CHECK(k.status == 0);
  CHECK(k.out.find("case=H") != std::string::npos);
  CHECK(k.out.find("colorization=local") != std::string::npos);

  auto const j = run({"--report", "structured", "classify", "--gens",
                      gens.string(), "--max-points", "6"});
  CHECK(j.status == 0);
  auto const doc = nlohmann::json::parse(j.out);
  CHECK(doc.is_object());

  std::filesystem::remove(gens);
  std::filesystem::remove(out);
}

TEST_CASE("verify and separate") {
  auto const v = run({"verify", "--suite", "o", "--max-points", "6"});
  CHECK(v.status == 0);
  CHECK(v.out.find("0 failures") != std::string::npos);

  auto const s = run({"verify", "--suite", "family", "--family", "O_glob(2)",
                      "--max-points", "6", "--report", "structured"});
  CHECK(s.status == 0);
  auto const doc = nlohmann::json::parse(s.out);
  CHECK(doc.at("failures") == 0);

  auto const w = run({"separate", "--a", "O_glob(2)", "--b", "O_glob(4)",
                      "--max-points", "4"});
  CHECK(w.status == 0);
  CHECK(w.out == "|ww|0,0\n");
  auto const none = run({"separate", "--a", "H_loc(6,3)", "--b", "H_loc(6,3)",
                         "--max-points", "6"});
  CHECK(none.out == "none with at most 6 points\n");
}

TEST_CASE("render") {
  auto const r = run({"render", "--partition", "|wb|0,0"});
  CHECK(r.status == 0);
  CHECK(r.out == "+-+\n| |\no *\n|wb|0,0\n");
  for (char const* text : {"w|w|0,0", "ww|ww|0,1,1,0", "wbw|bw|0,1,0,2,2",
                           "|wwbb|0,1,1,0", "||"}) {
    auto const d = lines(run({"render", "--partition", text}).out);
    REQUIRE_FALSE(d.empty());
    CHECK(parse_text(d.back()) == parse_text(text));
  }
  auto const u = run({"render", "--unicode", "--partition", "|wb|0,0"});
  CHECK(u.out.find("∘") != std::string::npos);
  CHECK(u.out.find("●") != std::string::npos);
}

TEST_CASE("thread variable") {
  ::setenv("PCAT_THREADS", "zero", 1);
  CHECK(run({"member", "--family", "O_loc", "--partition", "||"}).status == 2);
  ::setenv("PCAT_THREADS", "2", 1);
  CHECK(run({"member", "--family", "O_loc", "--partition", "||"}).status == 0);
  ::unsetenv("PCAT_THREADS");
}
