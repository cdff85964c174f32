#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "multidesign/design_io.hpp"
#include "multidesign/feasibility.hpp"
#include "multidesign/verifier.hpp"

using namespace multidesign;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "multidesign");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "multidesign_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch_dir() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("construct") {
  const Result r13 = run({"construct", "--n", "13", "--kind", "decomposition"});
  CHECK(r13.code == cli::kOk);
  CHECK(parse_design_json(r13.out).blocks.size() == 11);

  const Result r7 = run({"construct", "--n", "7", "--kind", "decomposition"});
  CHECK(r7.code == cli::kFailure);
  CHECK(r7.out.find("\"decomposition_exists\": false") != std::string::npos);
  CHECK_FALSE(r7.err.empty());

  const Result r10 = run({"construct", "--n", "10", "--kind", "covering"});
  CHECK(r10.code == cli::kOk);
  CHECK(parse_design_json(r10.out).padding.size() == 3);

  CHECK(run({"construct", "--n", "5"}).code == cli::kUsage);
  CHECK(run({"construct", "--n", "8", "--kind", "cover"}).code == cli::kUsage);
  CHECK(run({"construct"}).code == cli::kUsage);
  CHECK(run({"construct", "--n", "13", "-o", "/nonexistent-dir/x.json"}).code == cli::kUsage);

  const Result text = run({"construct", "--n", "6", "--format", "text"});
  CHECK(text.code == cli::kOk);
  CHECK(text.out.find("[0,2,4;3,5,1]") != std::string::npos);
}

TEST_CASE("construct writes files that verify") {
  const std::string path = (scratch_dir() / "k14.json").string();
  CHECK(run({"construct", "--n", "14", "--kind", "packing", "--output", path}).code == cli::kOk);
  CHECK(parse_design_json(read_file(path)).leave.size() == 1);
  const Result v = run({"verify", path});
  CHECK(v.code == cli::kOk);
  CHECK(v.out.rfind("valid", 0) == 0);
}

TEST_CASE("verify") {
  const Result exported = run({"catalog", "--export", "decomposition-13"});
  REQUIRE(exported.code == cli::kOk);
  CHECK(run({"verify", write_file("k13.json", exported.out)}).code == cli::kOk);

  Design broken = parse_design_json(exported.out);
  Block& last = broken.blocks.back();
  auto v = last.vertices();
  v[0] = v[0] == 12 ? 11 : 12;
  last = last.is_hexagon() ? Block::hexagon(v) : Block::prism({v[0], v[1], v[2]}, {v[3], v[4], v[5]});
  const Result bad = run({"verify", write_file("broken.json", emit_design_json(broken))});
  CHECK(bad.code == cli::kFailure);
  CHECK(bad.out.find("[block 10]") != std::string::npos);

  Design packing = parse_design_json(run({"catalog", "--export", "packing-8"}).out);
  packing.leave.push_back(block_edges(packing.blocks[0]).front());
  CHECK(run({"verify", write_file("overlap.json", emit_design_json(packing))}).code == cli::kFailure);

  const Result json_report = run({"verify", "--format", "json", write_file("overlap.json", emit_design_json(packing))});
  CHECK(json_report.out.find("\"valid\": false") != std::string::npos);

  CHECK(run({"verify", write_file("garbage.json", "{not json")}).code == cli::kUsage);
  CHECK(run({"verify", (scratch_dir() / "missing.json").string()}).code == cli::kUsage);
}

TEST_CASE("classify") {
  const Result r = run({"classify", "--n", "9"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("decomposition exists: no") != std::string::npos);
  CHECK(r.out.find("minimum leave: 3") != std::string::npos);
  CHECK(r.out.find("minimum padding: 3") != std::string::npos);
  CHECK(r.out.find("note:") != std::string::npos);

  const Result j = run({"classify", "--n", "13", "--format", "json"});
  CHECK(j.code == cli::kOk);
  CHECK(j.out.find("\"decomposition_exists\": true") != std::string::npos);
  CHECK(run({"classify", "--n", "3"}).code == cli::kUsage);
}

TEST_CASE("search") {
  const Result r7 = run({"search", "--n", "7"});
  CHECK(r7.code == cli::kFailure);
  CHECK(r7.out.find("exhausted") != std::string::npos);
  CHECK(r7.out.find("nodes") != std::string::npos);

  const Result bip = run({"search", "--host", "bipartite:6x6", "--blocks", "hexagon", "--format", "json"});
  CHECK(bip.code == cli::kOk);
  CHECK(bip.out.find("\"design\"") != std::string::npos);

  const std::string path = (scratch_dir() / "k6.json").string();
  CHECK(run({"search", "--n", "6", "--output", path}).code == cli::kOk);
  CHECK(verify_design(parse_design_json(read_file(path))).valid);

  CHECK(run({"search", "--n", "13", "--budget", "1"}).code == cli::kInconclusive);
  CHECK(run({"search", "--n", "7", "--kind", "packing", "--bound", "3"}).code == cli::kFailure);
  CHECK(run({"search", "--n", "8", "--kind", "packing", "--bound", "1"}).code == cli::kOk);
  CHECK(run({"search", "--n", "7", "--kind", "packing"}).code == cli::kUsage);
  CHECK(run({"search"}).code == cli::kUsage);
  CHECK(run({"search", "--n", "6", "--host", "complete:6"}).code == cli::kUsage);
  CHECK(run({"search", "--host", "wheel:6"}).code == cli::kUsage);
  CHECK(run({"search", "--n", "9", "--blocks", "hexagon"}).code == cli::kOk);
  CHECK(run({"search", "--n", "9", "--blocks", "both", "--allow-single-type"}).code == cli::kOk);

  const Result cert = run({"search", "--n", "7", "--certify"});
  CHECK(cert.code == cli::kFailure);
  CHECK(cert.out.find("both certificates agree") != std::string::npos);
  CHECK(run({"search", "--n", "8", "--certify"}).code == cli::kUsage);
}

TEST_CASE("catalog") {
  const Result list = run({"catalog"});
  CHECK(list.code == cli::kOk);
  CHECK(list.out.find("decomposition-13: 7 hexagon(s), 4 prism(s)") != std::string::npos);
  CHECK(list.out.find("packing-17: 18 hexagon(s), 3 prism(s), leave 1") != std::string::npos);
  CHECK(run({"catalog", "--export", "triangle-3"}).code == cli::kUsage);
  CHECK(run({"catalog", "--export", "packing-12"}).code == cli::kUsage);
  CHECK(run({"catalog", "--format", "json"}).out.find("\"bipartite-6x4\"") != std::string::npos);
}

TEST_CASE("construct and verify round trip for every admissible order up to 200") {
  for (std::uint32_t n = 6; n <= 200; ++n) {
    const bool decomposable = classify(n).decomposition_exists;
    for (const char* kind : {"decomposition", "packing", "covering"}) {
      if (!decomposable && std::string(kind) == "decomposition") continue;
      CAPTURE(n);
      CAPTURE(kind);
      const Result c = run({"construct", "--n", std::to_string(n), "--kind", kind});
      REQUIRE(c.code == cli::kOk);
      const std::string path = write_file("round_trip.json", c.out);
      CHECK(run({"verify", path}).code == cli::kOk);
    }
  }
}

TEST_CASE("unknown subcommands and flags") {
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"classify", "--n", "9", "--colour"}).code == cli::kUsage);
  CHECK(run({"classify", "--n", "9", "--format", "yaml"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}
