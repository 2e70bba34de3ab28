#include <doctest.h>

#include "lexstate/cli.hpp"
#include "lexstate/io.hpp"
#include "roundtrip.hpp"

using namespace lexstate;

namespace {

std::string structural_message(const std::string& text) {
  try {
    io::parse_structure(io::parse_json(text));
  } catch (const StructuralError& e) {
    return e.what();
  }
  return {};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("every corpus document round trips byte for byte") {
  std::size_t checked = 0;
  for (const auto& [name, text] : cli::corpus_documents()) {
    CAPTURE(name);
    const auto again = roundtrip::reserialize(name, text);
    if (!again) continue;
    CHECK(*again == text);
    ++checked;
  }
  CHECK(checked > 60);
}

TEST_CASE("parse then serialize then parse is the identity") {
  const Algebra b2 = corpus::boolean_algebra(1);
  const io::Structure s = io::parse_structure(io::to_json(b2));
  REQUIRE(std::holds_alternative<Algebra>(s));
  CHECK(std::get<Algebra>(s) == b2);
  CHECK(std::get<Algebra>(s).finite().size() == 2);

  const io::Structure r = io::parse_structure(io::parse_json(R"({"kind":"rotation","rank":1})"));
  CHECK(std::get<Algebra>(r) == Algebra(RotationAlgebra(1)));

  const Algebra p = Algebra::product({corpus::boolean_algebra(2), RotationAlgebra(1), RotationAlgebra(2)});
  CHECK(io::parse_algebra(io::to_json(p)) == p);

  const FiniteSemihoop g = corpus::godel_semihoop(4);
  CHECK(io::parse_semihoop(io::to_json(g)) == g);
  const FiniteLMonoid m = corpus::truncated_addition(3);
  CHECK(io::parse_lmonoid(io::to_json(m)) == m);

  const io::Structure cone = io::parse_structure(io::parse_json(R"({"kind":"cone","rank":2})"));
  CHECK(std::get<SymbolicConeHoop>(cone).rank() == 2);
  const io::Structure cm = io::parse_structure(io::parse_json(R"({"kind":"cone-monoid","rank":2,"order":"reversed"})"));
  CHECK(std::get<SymbolicCancellativeMonoid>(cm).order() == ConeOrder::reversed);
}

TEST_CASE("canonical format") {
  const std::string text = io::format(io::to_json(Algebra(corpus::boolean_algebra(1))));
  CHECK(text.back() == '\n');
  CHECK(contains(text, "\"times\": [\n    [0,0],\n    [0,1]\n  ]"));
}

TEST_CASE("structural errors name the field") {
  CHECK(contains(structural_message(R"({"size":2,"times":[[0,0],[0]],"impl":[[1,1],[0,1]],"meet":[[0,0],[0,1]],"join":[[0,1],[1,1]],"bot":0,"top":1})"),
                 "table 'times' row 1 has 1 entries, expected 2"));
  CHECK(contains(structural_message(R"({"size":2,"times":[[0,0],[0,2]],"impl":[[1,1],[0,1]],"meet":[[0,0],[0,1]],"join":[[0,1],[1,1]],"bot":0,"top":1})"),
                 "times"));
  CHECK(contains(structural_message(R"({"size":2,"times":[[0,0],[0,1]],"meet":[[0,0],[0,1]],"join":[[0,1],[1,1]],"bot":0,"top":1})"),
                 "missing field 'impl'"));
  CHECK(contains(structural_message(R"({"size":2,"times":[[0,0],[0,1]],"impl":[[1,1],[0,1]],"meet":[[0,0],[0,1]],"join":[[0,1],[1,1]],"bot":0,"top":7})"),
                 "top"));
  CHECK(contains(structural_message(R"({"kind":"rotation","rank":0})"), "rank"));
  CHECK(contains(structural_message(R"({"kind":"torus"})"), "kind"));
  CHECK(contains(structural_message(R"({"hello":1})"), "expected field"));
  CHECK_THROWS_AS(io::parse_json("{not json"), StructuralError);
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), StructuralError);
}

TEST_CASE("states and fractions") {
  CHECK(io::parse_fraction(io::Json("-3/6"), "x") == Rational(-1, 2));
  CHECK(io::parse_fraction(io::Json(4), "x") == Rational(4));
  CHECK_THROWS_AS(io::parse_fraction(io::Json("1/0"), "x"), StructuralError);
  CHECK_THROWS_AS(io::parse_fraction(io::Json(0.5), "x"), StructuralError);

  const io::SemihoopState w = io::parse_state(io::parse_json(R"({"lambda":["1/2","3"]})"));
  CHECK(std::get<WeightState>(w).lambda == std::vector<Rational>{Rational(1, 2), Rational(3)});
  const io::SemihoopState t = io::parse_state(io::parse_json(R"({"values":{"0":"-1","1":"0"}})"));
  CHECK(std::get<TableState>(t).values == std::vector<Rational>{Rational(-1), Rational(0)});
  CHECK_THROWS_AS(io::parse_state(io::parse_json(R"({"values":{"0":"-1","2":"0"}})")), StructuralError);
}

TEST_CASE("hyperstate documents") {
  const Algebra a = Algebra::product({corpus::boolean_algebra(2), RotationAlgebra(1)});
  const Frame f(a, 2);
  const Hyperstate s = io::parse_hyperstate(
      io::parse_json(R"J({"measure":{"(0;+[0])":"1/2","(1;-[0])":"1/4","(2;-[0])":"1/4"},"lambda":["1/2"]})J"), f);
  const auto& params = std::get<HyperstateParams>(s.form);
  CHECK(params.p.weights == std::vector<Rational>{Rational(1, 2), Rational(1, 4), Rational(1, 4)});
  CHECK(params.lambda == std::vector<Rational>{Rational(1, 2)});

  CHECK_THROWS_AS(io::parse_hyperstate(io::parse_json(R"J({"measure":{"(3;+[0])":"1"},"lambda":["1"]})J"), f),
                  StructuralError);
  CHECK_THROWS_AS(io::parse_hyperstate(io::parse_json(R"J({"measure":{"(0;+[0])":"1"},"lambda":["1"]})J"), f),
                  StructuralError);
  CHECK_THROWS_AS(
      io::parse_hyperstate(
          io::parse_json(R"J({"measure":{"(0;+[0])":"1/2","(1;-[0])":"1/4","(2;-[0])":"1/4"},"lambda":[]})J"), f),
      StructuralError);
  CHECK_THROWS_AS(io::parse_hyperstate(io::parse_json(R"J({"table":{"(0;+[0])":"2+e0"}})J"), f), StructuralError);
  CHECK_THROWS_AS(io::parse_hyperstate(io::parse_json(R"J({"table":{"(9;+[0])":"1+e0"}})J"), f), StructuralError);
}
