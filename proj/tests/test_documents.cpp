#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <variant>

#include "cylo/catalog.hpp"
#include "cylo/document.hpp"
#include "cylo/dot.hpp"
#include "cylo/duality.hpp"
#include "cylo/frame.hpp"

using namespace cylo;

namespace {

/// Serialize, parse, serialize again; both texts must agree byte for byte.
void roundtrip(const std::string& text, const char* kind) {
  Document doc = parse_document(text);
  CHECK(kind_of(doc) == std::string(kind));
  CHECK(to_json(doc) == text);
}

}  // namespace

TEST_CASE("algebra documents survive a parse round trip byte for byte") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    roundtrip(to_json(catalog_algebra(name)), "algebra");
  }
}

TEST_CASE("frame documents survive a parse round trip byte for byte") {
  for (const auto& name : {"B4", "MO2", "PS4", "mOL12"}) {
    CAPTURE(name);
    roundtrip(to_json(goldblatt_frame(catalog_algebra(name))), "frame");
  }
}

TEST_CASE("space documents survive a parse round trip byte for byte") {
  roundtrip(to_json(spectrum_space(catalog_algebra("MO2"))), "space");
  roundtrip(to_json(spectrum_space(catalog_algebra("PS4"))), "space");
  roundtrip(to_json(boolean_spectrum(catalog_algebra("B4-triv2"))), "space");
}

TEST_CASE("hom and map documents survive a parse round trip byte for byte") {
  for (const auto& name : catalog_hom_names()) {
    CAPTURE(name);
    roundtrip(to_json(catalog_hom(name)), "hom");
    roundtrip(to_json(dual_of_hom(catalog_hom(name))), "map");
  }
}

TEST_CASE("parsed algebras are usable, not just storable") {
  Document doc = parse_document(to_json(catalog_algebra("PS4")));
  const auto* A = std::get_if<CylindricOrtholattice>(&doc);
  REQUIRE(A != nullptr);
  CHECK(A->name == "PS4");
  CHECK(A->dims() == 2);
  CHECK(A->boolean_axiom5);
  CHECK(validate_cylindric(*A).ok());
}

TEST_CASE("serialization is deterministic across independent rebuilds") {
  CHECK(to_json(catalog_algebra("mOL12")) == to_json(catalog_algebra("mOL12")));
  CHECK(to_json(goldblatt_frame(catalog_algebra("PS4"))) ==
        to_json(goldblatt_frame(catalog_algebra("PS4"))));
  CHECK(to_dot(catalog_algebra("B8")) == to_dot(catalog_algebra("B8")));
  CHECK(to_dot(spectrum_space(catalog_algebra("MO2"))) ==
        to_dot(spectrum_space(catalog_algebra("MO2"))));
}

TEST_CASE("malformed documents raise parse errors") {
  CHECK_THROWS_AS(parse_document("{"), ParseError);
  CHECK_THROWS_AS(parse_document("[1, 2]"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"format": "cylo/2", "kind": "algebra"})"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"format": "cylo/1", "kind": "poset"})"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"format": "cylo/1", "kind": "algebra"})"), ParseError);
  CHECK_THROWS_AS(load_document("/nonexistent/file.json"), ParseError);
}

TEST_CASE("structural mistakes in payloads are named") {
  // Duplicate element names.
  CHECK_THROWS_AS(parse_document(R"({"format": "cylo/1", "kind": "algebra", "algebra": {
    "name": "dup", "elements": ["0", "0"], "covers": [[0, 1]],
    "ocomp": [1, 0], "exists": [], "delta": []}})"),
                  ParseError);
  // Cover referencing an element that does not exist.
  CHECK_THROWS_AS(parse_document(R"({"format": "cylo/1", "kind": "algebra", "algebra": {
    "name": "oob", "elements": ["0", "1"], "covers": [[0, 7]],
    "ocomp": [1, 0], "exists": [], "delta": []}})"),
                  ParseError);
  // Quantifiers without a diagonal.
  CHECK_THROWS_AS(parse_document(R"({"format": "cylo/1", "kind": "algebra", "algebra": {
    "name": "nodelta", "elements": ["0", "1"], "covers": [[0, 1]],
    "ocomp": [1, 0], "exists": [[0, 1]]}})"),
                  ParseError);
  // Relations and diagonals must travel together.
  CHECK_THROWS_AS(parse_document(R"({"format": "cylo/1", "kind": "space", "space": {
    "name": "lonely", "points": ["x"], "basis": [[0]], "rels": [[[0, 0]]]}})"),
                  ParseError);
}

TEST_CASE("a parsed order that is not a lattice is rejected") {
  // Two minimal upper bounds for {a, b}.
  CHECK_THROWS_AS(parse_document(R"({"format": "cylo/1", "kind": "algebra", "algebra": {
    "name": "nolattice", "elements": ["0", "a", "b", "c", "d"],
    "covers": [[0, 1], [0, 2], [1, 3], [1, 4], [2, 3], [2, 4]],
    "ocomp": [0, 1, 2, 3, 4], "exists": [], "delta": []}})"),
                  StructuralError);
}

TEST_CASE("DOT output has the advertised shape") {
  std::string alg = to_dot(catalog_algebra("PS4"));
  CHECK(alg.find("digraph") != std::string::npos);
  CHECK(alg.find("rankdir=BT") != std::string::npos);
  CHECK(alg.find("style=dashed") != std::string::npos);
  CHECK(alg.find("δ01") != std::string::npos);

  std::string frm = to_dot(goldblatt_frame(catalog_algebra("PS4")));
  CHECK(frm.find("digraph") != std::string::npos);
  CHECK(frm.find("R0") != std::string::npos);

  std::string spc = to_dot(spectrum_space(catalog_algebra("B4")));
  CHECK(spc.find("digraph") != std::string::npos);
  CHECK(spc.find("↑a") != std::string::npos);
}
