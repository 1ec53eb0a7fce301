#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "twistalg/problem_file.hpp"
#include "twistalg/report.hpp"

using namespace twistalg;

namespace {

std::string source_path(const std::string& rel) { return std::string(TWISTALG_SOURCE_DIR) + "/" + rel; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void same_spec(const ProblemSpec& a, const ProblemSpec& b) {
  CHECK(a.name == b.name);
  CHECK(a.p == b.p);
  CHECK(a.l_orders == b.l_orders);
  REQUIRE(a.components.size() == b.components.size());
  for (std::size_t c = 0; c < a.components.size(); ++c) {
    CHECK(a.components[c].n == b.components[c].n);
    CHECK(a.components[c].rank == b.components[c].rank);
  }
  CHECK(a.action == b.action);
  REQUIRE(a.form.size() == b.form.size());
  for (std::size_t k = 0; k < a.form.size(); ++k) {
    CHECK(a.form[k].i == b.form[k].i);
    CHECK(a.form[k].j == b.form[k].j);
    CHECK(a.form[k].order == b.form[k].order);
    CHECK(a.form[k].exponent == b.form[k].exponent);
  }
}

int parse_error_line(const std::string& text) {
  try {
    parse_problem_text(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

Errc validation_code(const std::string& text) {
  try {
    validate_problem(parse_problem_text(text));
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::ParseError;
}

const char* kQuantumPlane = R"(p = 5
l_orders = [4, 4]
[[component]]
n = 1
r = 2
[action]
g1 = [[[2, 0], [0, 1]]]
g2 = [[[1, 0], [0, 2]]]
[[form]]
i = 1
j = 2
order = 4
exponent = 1
)";

}  // namespace

TEST_CASE("shipped problem files match the built-in examples") {
  same_spec(load_problem(source_path("problems/quantum_plane.toml")), quantum_plane_spec());
  same_spec(load_problem(source_path("problems/ks3.toml")), ks3_spec());
  same_spec(load_problem(source_path("problems/c2_4_c3_2.toml")), c2_4_c3_2_spec());
}

TEST_CASE("write and parse round trip") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 10; ++k) {
    const ProblemSpec spec = random_problem(rng);
    same_spec(parse_problem_text(write_problem_text(spec)), spec);
  }
}

TEST_CASE("parse errors name the offending line") {
  CHECK(parse_error_line(kQuantumPlane) == 0);
  CHECK(parse_error_line("p = 5\nl_orders [4]\n") == 2);
  CHECK(parse_error_line("p = 5\nl_orders = [4, 4\n\n") == 4);
  CHECK(parse_error_line("p = 5\np = 7\n") == 2);
  CHECK(parse_error_line("p = 5\nl_orders = [4]\ncolour = 3\n") == 3);
  CHECK(parse_error_line("p = 5\nl_orders = [4]\n[[component]]\nn = 1\nr = 2\n[action]\ng1 = [[[1, 0], [0]]]\n") == 7);
  CHECK(parse_error_line("p = 5\nl_orders = [4]\n[[component]]\nn = 1\nr = 1\n[action]\ng2 = [[[1]]]\n") == 7);
  CHECK(parse_error_line("p = \"five\"\n") == 1);
  CHECK(parse_error_line("p = 5 # comment\nl_orders = [4]\n[shape]\n") == 3);
}

TEST_CASE("validation rejects bad data") {
  CHECK(validation_code(kQuantumPlane) == Errc::ParseError);  // i.e. no error

  std::string noncommuting = R"(p = 5
l_orders = [4, 4]
[[component]]
n = 1
r = 2
[action]
g1 = [[[0, 1], [4, 0]]]
g2 = [[[2, 0], [0, 1]]]
)";
  CHECK(validation_code(noncommuting) == Errc::ValidationError);

  std::string bad_order = kQuantumPlane;
  bad_order.replace(bad_order.find("order = 4"), 9, "order = 8");
  CHECK(validation_code(bad_order) == Errc::ValidationError);

  std::string p_order = "p = 3\nl_orders = [3]\n[[component]]\nn = 1\nr = 1\n[action]\ng1 = [[[1]]]\n";
  CHECK(validation_code(p_order) == Errc::ValidationError);
}

TEST_CASE("presentation JSON round trip") {
  for (const auto& spec : {quantum_plane_spec(), ks3_spec(), c2_4_c3_2_spec()}) {
    const Pipeline pl = run_pipeline(spec);
    CHECK(presentation_from_json(presentation_to_json(pl.q)) == pl.q);
  }
  std::mt19937_64 rng(5);
  for (int k = 0; k < 5; ++k) {
    const Pipeline pl = run_pipeline(random_problem(rng));
    CHECK(presentation_from_json(presentation_to_json(pl.q)) == pl.q);
  }
  CHECK_THROWS_AS(presentation_from_json("{\n  \"p\": 5,\n  oops\n}"), ParseError);
  CHECK_THROWS_AS(presentation_from_json("{\"p\": 5}"), ParseError);
}

TEST_CASE("reports match the golden files byte for byte") {
  for (const std::string name : {"quantum_plane", "ks3", "c2_4_c3_2"}) {
    CAPTURE(name);
    const Pipeline pl = run_pipeline(load_problem(source_path("problems/" + name + ".toml")));
    PresentationReport r{&pl, 0, verify_all(pl, Level::Quick, 0), std::nullopt};
    CHECK(report_text(r) == slurp(source_path("tests/golden/" + name + ".txt")));
    CHECK(report_json(r) == slurp(source_path("tests/golden/" + name + ".json")));
    CHECK(quiver_dot(pl.q) == slurp(source_path("tests/golden/" + name + ".dot")));
  }
}

TEST_CASE("report content for the quantum plane") {
  const Pipeline pl = run_pipeline(quantum_plane_spec());
  PresentationReport r{&pl, 0, verify_all(pl, Level::Full, 0), std::nullopt};
  const std::string text = report_text(r);
  CHECK(text.find("vertices (1)") != std::string::npos);
  CHECK(text.find("arrows (2)") != std::string::npos);
  CHECK(text.find("q = zeta_4^1") != std::string::npos);
  CHECK(text.find("dim A = 25") != std::string::npos);
  CHECK(text.find("dim M = 16") != std::string::npos);
  CHECK(text.find("dim k(P x| H)e = 400") != std::string::npos);
  CHECK(text.find("Witt-vector lifts are not computed") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("oracle report serializes without timings by default") {
  const Pipeline pl = run_pipeline(ks3_spec());
  const OracleReport rep = run_oracle(pl);
  CHECK(rep.passed());
  CHECK(oracle_json(rep).find("elapsed_ms") == std::string::npos);
  CHECK(oracle_json(rep, true).find("elapsed_ms") != std::string::npos);
}
