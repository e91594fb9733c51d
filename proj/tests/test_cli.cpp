// End-to-end tests for the cylo command-line tool: each case runs the real
// binary in a subprocess and checks the exit code and output text, the same
// way a user or script would observe it.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <variant>

#include "cylo/catalog.hpp"
#include "cylo/document.hpp"
#include "cylo/duality.hpp"
#include "cylo/frame.hpp"
#include "json.hpp"

using namespace cylo;
using Json = nlohmann::json;

namespace {

struct RunResult {
  int rc = -1;
  std::string out;
};

/// Run the installed CLI with the given argument string and capture stdout.
/// When merge_stderr is set, diagnostics on stderr are captured as well;
/// otherwise they are discarded so expected error chatter stays quiet.
RunResult run_cli(const std::string& args, bool merge_stderr = false, const std::string& env = "") {
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += std::string(CYLO_CLI_PATH) + " " + args + " </dev/null";
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

/// Scratch directory for the documents the CLI reads; unique per process so
/// parallel ctest jobs cannot trample each other's files.
const std::filesystem::path& scratch() {
  static const std::filesystem::path dir = [] {
    std::filesystem::path d =
        std::filesystem::temp_directory_path() / ("cylo_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_doc(const std::string& name, const std::string& text) {
  std::filesystem::path p = scratch() / name;
  std::ofstream f(p, std::ios::binary);
  REQUIRE(f.good());
  f << text;
  f.close();
  return p.string();
}

std::string algebra_doc(const std::string& catalog_name) {
  return write_doc(catalog_name + ".json", to_json(catalog_algebra(catalog_name)));
}

}  // namespace

TEST_CASE("version flag reports the tool name and version") {
  RunResult r = run_cli("--version");
  CHECK(r.rc == 0);
  CHECK(r.out == "cylo 0.1.0\n");
}

TEST_CASE("validate accepts a catalog algebra document") {
  RunResult r = run_cli("validate " + algebra_doc("B4"));
  CHECK(r.rc == 0);
  CHECK(contains(r.out, "== B4"));
  CHECK(contains(r.out, "ok   ortho.involution"));
  CHECK(contains(r.out, "10 checks, all passed"));
}

TEST_CASE("validate reports failing checks with witnesses and exits 1") {
  std::string path = write_doc("m1.json", to_json(catalog_mutant("m1").algebra));
  RunResult r = run_cli("validate " + path);
  CHECK(r.rc == 1);
  CHECK(contains(r.out, "FAIL ortho.meet-complement [a]"));
  CHECK(contains(r.out, "10 checks, 2 FAILED"));
}

TEST_CASE("validate --seed-catalog runs the whole battery green") {
  RunResult r = run_cli("validate --seed-catalog");
  CHECK(r.rc == 0);
  CHECK(contains(r.out, "== PS4"));
  CHECK(contains(r.out, "== mOL12"));
  CHECK(contains(r.out, "== swap-PS4"));
  CHECK(!contains(r.out, "FAIL"));
}

TEST_CASE("validate aggregates multiple files and fails if any fails") {
  std::string good = algebra_doc("B4");
  std::string bad = write_doc("m1b.json", to_json(catalog_mutant("m1").algebra));
  RunResult r = run_cli("validate " + good + " " + bad);
  CHECK(r.rc == 1);
  CHECK(contains(r.out, "== B4"));
  CHECK(contains(r.out, "== m1"));
}

TEST_CASE("validate without inputs is a usage error") {
  RunResult r = run_cli("validate", /*merge_stderr=*/true);
  CHECK(r.rc == 2);
  CHECK(contains(r.out, "nothing to validate"));
}

TEST_CASE("filters lists the proper filters with the oracle cross-check") {
  RunResult r = run_cli("filters " + algebra_doc("B4"));
  CHECK(r.rc == 0);
  CHECK(contains(r.out, "3 proper filters (cross-checked against the subset scan)"));
  CHECK(contains(r.out, "↑a = {a, 1}  prime"));
  CHECK(contains(r.out, "↑b = {b, 1}  prime"));
  CHECK(contains(r.out, "↑1 = {1}"));
}

TEST_CASE("filters --json emits machine-readable spectrum data") {
  RunResult r = run_cli("filters --json " + algebra_doc("B4"));
  CHECK(r.rc == 0);
  Json j = Json::parse(r.out);
  CHECK(j["count"] == 3);
  CHECK(j["oracle_checked"] == true);
  CHECK(j["filters"][0]["name"] == "↑a");
  CHECK(j["filters"][0]["prime"] == true);
  CHECK(j["filters"][2]["generator"] == "1");
  CHECK(j["filters"][2]["prime"] == false);
}

TEST_CASE("filters rejects multiple input files") {
  std::string p = algebra_doc("B4");
  RunResult r = run_cli("filters " + p + " " + p, /*merge_stderr=*/true);
  CHECK(r.rc == 2);
  CHECK(contains(r.out, "exactly one algebra document"));
}

TEST_CASE("spectrum summarizes the dual space in text mode") {
  RunResult r = run_cli("spectrum " + algebra_doc("B4"));
  CHECK(r.rc == 0);
  CHECK(contains(r.out, "S0(B4): 3 points, 4 basic opens, 5 opens"));
  CHECK(contains(r.out, "compact open biorthogonally closed 4"));
  CHECK(contains(r.out, "points: ↑a ↑b ↑1"));
}

TEST_CASE("spectrum --json emits a space document the library can parse back") {
  RunResult r = run_cli("spectrum --json " + algebra_doc("B4"));
  CHECK(r.rc == 0);
  Document doc = parse_document(r.out);
  REQUIRE(kind_of(doc) == std::string("space"));
  const FiniteSpace& X = std::get<FiniteSpace>(doc);
  CHECK(X.name == "S0(B4)");
  CHECK(X.n() == 3);
  CHECK(X.has_perp());
}

TEST_CASE("spectrum --boolean rejects a non-distributive algebra") {
  RunResult r = run_cli("spectrum --boolean " + algebra_doc("MO2"), /*merge_stderr=*/true);
  CHECK(r.rc == 2);
  CHECK(contains(r.out, "Boolean track"));
  CHECK(contains(r.out, "distributive"));
}

TEST_CASE("complete certifies the canonical completion of a catalog algebra") {
  RunResult r = run_cli("complete " + algebra_doc("B4"));
  CHECK(r.rc == 0);
  CHECK(contains(r.out, "== canonical completion of B4"));
  CHECK(contains(r.out, "ok   dense.meet-of-joins"));
  CHECK(contains(r.out, "exhaustive: scanned all 256 subset pairs"));
  CHECK(contains(r.out, "ok   extension.ocomp"));
  CHECK(!contains(r.out, "FAIL"));
}

TEST_CASE("complete --boolean runs the regular-open completion on a Boolean algebra") {
  RunResult r = run_cli("complete --boolean " + algebra_doc("B4-triv2"));
  CHECK(r.rc == 0);
  CHECK(contains(r.out, "ok   embed.injective"));
  CHECK(!contains(r.out, "FAIL"));
}

TEST_CASE("complete --boolean rejects a non-distributive algebra") {
  RunResult r = run_cli("complete --boolean " + algebra_doc("MO2"), /*merge_stderr=*/true);
  CHECK(r.rc == 2);
  CHECK(contains(r.out, "fails distributive"));
}

TEST_CASE("dualize chains algebra to space to algebra through documents") {
  RunResult space = run_cli("dualize " + algebra_doc("B4"));
  REQUIRE(space.rc == 0);
  {
    Document doc = parse_document(space.out);
    REQUIRE(kind_of(doc) == std::string("space"));
    CHECK(std::get<FiniteSpace>(doc).name == "S0(B4)");
  }
  std::string space_path = write_doc("s0b4.json", space.out);
  RunResult alg = run_cli("dualize " + space_path);
  REQUIRE(alg.rc == 0);
  Document doc = parse_document(alg.out);
  REQUIRE(kind_of(doc) == std::string("algebra"));
  const CylindricOrtholattice& A = std::get<CylindricOrtholattice>(doc);
  CHECK(A.name == "A0(S0(B4))");
  CHECK(A.lat.size() == 4);
  CHECK(validate_cylindric(A).ok());
}

TEST_CASE("dualize turns a hom document into a map document") {
  std::string path = write_doc("swap.json", to_json(catalog_hom("swap-PS4")));
  RunResult r = run_cli("dualize " + path);
  CHECK(r.rc == 0);
  Document doc = parse_document(r.out);
  CHECK(kind_of(doc) == std::string("map"));
}

TEST_CASE("dualize rejects a frame document") {
  Limits lim;
  std::string path =
      write_doc("frame.json", to_json(goldblatt_frame(catalog_algebra("B4"), lim)));
  RunResult r = run_cli("dualize " + path, /*merge_stderr=*/true);
  CHECK(r.rc == 2);
  CHECK(contains(r.out, "dualize expects an algebra, space, hom, or map document"));
}

TEST_CASE("roundtrip certifies the double dual of an algebra") {
  RunResult r = run_cli("roundtrip " + algebra_doc("B4"));
  CHECK(r.rc == 0);
  CHECK(contains(r.out, "φ: B4 → A0(S0(B4))"));
  CHECK(contains(r.out, "ok   rep.onto"));
  CHECK(contains(r.out, "8 checks, all passed"));
}

TEST_CASE("roundtrip certifies the double dual of a space") {
  RunResult space = run_cli("spectrum --json " + algebra_doc("B4"));
  REQUIRE(space.rc == 0);
  std::string path = write_doc("s0b4_rt.json", space.out);
  RunResult r = run_cli("roundtrip " + path);
  CHECK(r.rc == 0);
  CHECK(!contains(r.out, "FAIL"));
}

TEST_CASE("roundtrip rejects a hom document") {
  std::string path = write_doc("swap_rt.json", to_json(catalog_hom("swap-PS4")));
  RunResult r = run_cli("roundtrip " + path, /*merge_stderr=*/true);
  CHECK(r.rc == 2);
  CHECK(contains(r.out, "roundtrip expects an algebra or space document"));
}

TEST_CASE("hom-dual verifies the dual map and the commuting square") {
  std::string path = write_doc("swap_hd.json", to_json(catalog_hom("swap-PS4")));
  RunResult r = run_cli("hom-dual " + path);
  CHECK(r.rc == 0);
  CHECK(contains(r.out, "ok   map.spectral"));
  CHECK(contains(r.out, "ok   square.hom"));
  CHECK(!contains(r.out, "FAIL"));
}

TEST_CASE("hom-dual rejects an algebra document") {
  RunResult r = run_cli("hom-dual " + algebra_doc("B4"), /*merge_stderr=*/true);
  CHECK(r.rc == 2);
  CHECK(contains(r.out, "hom-dual expects a hom or map document"));
}

TEST_CASE("coincide --seed-catalog proves coincidence on the Boolean entries") {
  RunResult r = run_cli("coincide --seed-catalog");
  CHECK(r.rc == 0);
  CHECK(contains(r.out, "== coincidence over the proper filters of PS4"));
  CHECK(contains(r.out, "both families have 16 members and coincide"));
  CHECK(contains(r.out, "MO2 is not distributive (witness a, a⊥, b)"));
  CHECK(contains(r.out,
                 "biorthogonally closed family has 6 members, regular-open family has 16"));
  CHECK(contains(r.out, "the families differ"));
  CHECK(!contains(r.out, "FAIL"));
}

TEST_CASE("coincide honours --max-size with the resource-guard exit code") {
  RunResult r = run_cli("coincide " + algebra_doc("PS4") + " --max-size 100",
                        /*merge_stderr=*/true);
  CHECK(r.rc == 3);
  CHECK(contains(r.out, "exceeds the scan guard"));
}

TEST_CASE("CYLO_MAX_SIZE applies when --max-size is absent and yields to it otherwise") {
  std::string path = algebra_doc("PS4");
  RunResult guarded = run_cli("coincide " + path, /*merge_stderr=*/true, "CYLO_MAX_SIZE=100");
  CHECK(guarded.rc == 3);
  RunResult overridden =
      run_cli("coincide " + path + " --max-size 2000000", false, "CYLO_MAX_SIZE=100");
  CHECK(overridden.rc == 0);
  CHECK(contains(overridden.out, "both families have 16 members and coincide"));
}

TEST_CASE("dot renders an algebra as Graphviz") {
  RunResult r = run_cli("dot " + algebra_doc("B4"));
  CHECK(r.rc == 0);
  CHECK(contains(r.out, "digraph \"B4\""));
  CHECK(contains(r.out, "rankdir=BT"));
}

TEST_CASE("dot rejects a hom document") {
  std::string path = write_doc("swap_dot.json", to_json(catalog_hom("swap-PS4")));
  RunResult r = run_cli("dot " + path, /*merge_stderr=*/true);
  CHECK(r.rc == 2);
  CHECK(contains(r.out, "no DOT rendering for hom documents"));
}

TEST_CASE("unreadable and malformed inputs exit 2") {
  std::string garbage = write_doc("garbage.json", "this is not json");
  RunResult bad = run_cli("validate " + garbage, /*merge_stderr=*/true);
  CHECK(bad.rc == 2);
  CHECK(contains(bad.out, "invalid JSON"));

  RunResult missing =
      run_cli("validate " + (scratch() / "no_such_file.json").string(), /*merge_stderr=*/true);
  CHECK(missing.rc == 2);

  RunResult unknown = run_cli("frobnicate", /*merge_stderr=*/true);
  CHECK(unknown.rc == 2);
}

TEST_CASE("repeated runs emit byte-identical JSON and DOT output") {
  std::string ps4 = algebra_doc("PS4");
  RunResult a1 = run_cli("spectrum --json " + ps4);
  RunResult a2 = run_cli("spectrum --json " + ps4);
  REQUIRE(a1.rc == 0);
  REQUIRE(a2.rc == 0);
  CHECK(a1.out == a2.out);

  RunResult d1 = run_cli("dot " + ps4);
  RunResult d2 = run_cli("dot " + ps4);
  REQUIRE(d1.rc == 0);
  REQUIRE(d2.rc == 0);
  CHECK(d1.out == d2.out);
}

TEST_CASE("--out writes the result to a file and keeps stdout quiet") {
  std::string target = (scratch() / "b4.dot").string();
  RunResult r = run_cli("dot --out " + target + " " + algebra_doc("B4"));
  CHECK(r.rc == 0);
  CHECK(r.out.empty());
  std::ifstream f(target, std::ios::binary);
  REQUIRE(f.good());
  std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(contains(content, "digraph \"B4\""));

  RunResult denied = run_cli("dot --out /no-such-dir/x.dot " + algebra_doc("B4"),
                             /*merge_stderr=*/true);
  CHECK(denied.rc == 2);
  CHECK(contains(denied.out, "cannot write"));
}
