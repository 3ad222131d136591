#include <doctest.h>

#include "helpers.hpp"
#include "mmpw/errors.hpp"
#include "mmpw/io.hpp"

using namespace mmpw;
using io::json;

namespace {

std::string parse_failure(const std::string& text) {
  try {
    io::datum_from_json(io::parse_document(text));
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("rationals serialize as strings") {
  CHECK(io::to_json(Rat(-3, 4)) == json("-3/4"));
  CHECK(io::to_json(QVector{1, Rat(1, 2)}) == json::array({"1", "1/2"}));
  CHECK(io::rat_from_json(json("6/4")) == Rat(3, 2));
  CHECK(io::rat_from_json(json(5)) == 5);
  CHECK_THROWS_AS(io::rat_from_json(json(0.5)), ParseError);
  CHECK_THROWS_AS(io::rat_from_json(json("x")), ParseError);
}

TEST_CASE("ring datum round trip") {
  for (const auto& [name, d] : builtin_examples()) {
    CAPTURE(name);
    const std::string text = io::dump(io::to_json(d));
    CHECK(io::datum_from_json(io::parse_document(text)) == d);
    CHECK(io::dump(io::to_json(io::datum_from_json(io::parse_document(text)))) == text);
  }
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const RingDatum d = testing::small_instance(seed, 1 + seed % 3, 6, 3, 10);
    CHECK(io::datum_from_json(io::to_json(d)) == d);
  }
}

TEST_CASE("nef cones may be given by rays") {
  const json doc = io::parse_document(R"({
    "r": 1,
    "generators": [{"deg": [1, 0], "mults": {}}, {"deg": [0, 1], "mults": {}}],
    "numerical_map": [["1", "0"], ["0", "1"]],
    "nef": {"rays": [["0", "1"], ["1", "1"]]}
  })");
  const RingDatum d = io::datum_from_json(doc);
  REQUIRE(d.nef);
  CHECK(d.nef->cone == testing::cone2({{0, 1}, {1, 1}}));
}

TEST_CASE("parse errors carry a position or a path") {
  const std::string truncated = parse_failure(R"({"r": 1, "generators": [)");
  CHECK(truncated.find("byte") != std::string::npos);

  CHECK(parse_failure(R"({"generators": []})").find("\"r\"") != std::string::npos);
  const std::string deg = parse_failure(R"({"r": 1, "generators": [{"deg": [1, "x"]}]})");
  CHECK(deg.find("/generators/0/deg/1") != std::string::npos);
  const std::string mult =
      parse_failure(R"({"r": 1, "valuations": ["E"], "generators": [{"deg": [1, 0], "mults": {"E": 0.5}}]})");
  CHECK(mult.find("/generators/0/mults/E") != std::string::npos);
  CHECK(parse_failure(R"([1, 2])").find("object") != std::string::npos);
  CHECK(parse_failure(R"({"r": 1, "generators": [], "nef": {"ineqs": [["1", "0"]]}})").find("numerical_map") !=
        std::string::npos);
}

TEST_CASE("fan documents round trip") {
  for (const auto& [name, d] : builtin_examples()) {
    CAPTURE(name);
    const ChamberDecomposition dec = chamber_decomposition(d);
    const json doc = io::to_json(dec);
    const ChamberDecomposition back = io::decomposition_from_json(doc);
    CHECK(back.fan == dec.fan);
    CHECK(back.functionals == dec.functionals);
    CHECK(io::fan_from_json(io::parse_document(io::dump(doc))) == dec.fan);
  }
  const LinearityFan lf = linearity_fan(testing::e1(), "E");
  const json doc = io::to_json(lf);
  CHECK(io::decomposition_from_json(doc).functionals.at("E") == lf.functionals);
}

TEST_CASE("fan documents are checked") {
  json doc = io::to_json(chamber_decomposition(testing::builtin("two-walls")));
  std::swap(doc["cells"][0], doc["cells"][1]);
  CHECK_THROWS_AS(io::decomposition_from_json(doc), ParseError);

  doc = io::to_json(chamber_decomposition(testing::builtin("two-walls")));
  doc["functionals"]["A"].erase(0);
  CHECK_THROWS_AS(io::decomposition_from_json(doc), ParseError);
}

TEST_CASE("trace round trip") {
  for (const char* name : {"blowup-P2", "two-walls", "flat", "stellar-3d"}) {
    CAPTURE(name);
    const RingDatum& d = testing::builtin(name);
    const ChamberWalk w = order_chambers(chamber_fan(d), make_segment(d, *d.segment_h));
    std::optional<NefClassification> cls;
    if (d.nef) cls = classify_nef(w, d);
    const MmpTrace t = emit_trace(w, cls);
    CHECK(io::trace_from_json(io::parse_document(io::dump(io::to_json(t)))) == t);
  }
  json bad = io::to_json(emit_trace(order_chambers(chamber_fan(testing::e1()),
                                                   make_segment(testing::e1(), QVector{0, 1}))));
  bad["steps"][0]["kind"] = "flip";
  CHECK_THROWS_AS(io::trace_from_json(bad), ParseError);
}

TEST_CASE("dump is canonical") {
  const json a = io::parse_document(R"({"b": 1, "a": [1, 2]})");
  CHECK(io::dump(a) == "{\n  \"a\": [\n    1,\n    2\n  ],\n  \"b\": 1\n}\n");
}

TEST_CASE("cones in documents") {
  const PolyCone half = PolyCone::from_inequalities(2, std::vector<QVector>{{1, 0}});
  CHECK(io::cone_from_json(io::to_json(half), 2) == half);
  CHECK_THROWS_AS(io::cone_from_json(io::to_json(half), 3), ParseError);
  CHECK_THROWS_AS(io::cone_from_json(json::object(), 2), ParseError);
}
