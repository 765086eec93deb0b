#include "doctest.h"
#include "tropmat/io.hpp"
#include "tropmat/matroid.hpp"

using namespace tropmat;

TEST_CASE("matroid parsing, both forms") {
  const Matroid u23 = uniform_matroid(2, 3);
  CHECK(parse_matroid("{\"n\": 3, \"rank\": 2, \"bases\": [[1,2],[1,3],[2,3]]}") ==
        u23);
  CHECK(parse_matroid("n=3 d=2\n12 13 23\n") == u23);
  CHECK(parse_matroid("n=0 d=0\n-\n") == uniform_matroid(0, 0));
  CHECK(parse_matroid(matroid_to_json(u23)) == u23);
  CHECK(parse_matroid(matroid_to_terse(u23)) == u23);

  CHECK_THROWS_AS(parse_matroid("nonsense"), ParseError);
  CHECK_THROWS_AS(parse_matroid("{\"n\": 3}"), ParseError);
  CHECK_THROWS_AS(parse_matroid("n=3 d=1\n12 13 23\n"), ParseError);
  CHECK_THROWS_AS(parse_matroid("n=3 d=2\n12 34\n"), ParseError);
}

TEST_CASE("terse form beyond nine elements uses commas") {
  const Matroid u1_10 = uniform_matroid(1, 10);
  CHECK(parse_matroid(matroid_to_terse(u1_10)) == u1_10);
}

TEST_CASE("matrix parsing") {
  const BMatrix a = parse_bmatrix("101\n011\n");
  CHECK(a.rows == 2);
  CHECK(a.cols == 3);
  CHECK(a.row == std::vector<Mask>{mask_of({1, 3}), mask_of({2, 3})});
  CHECK(parse_bmatrix(
            "{\"rows\": 2, \"cols\": 3, \"data\": [\"101\", \"011\"]}") == a);
  CHECK(bmatrix_to_text(a) == "101\n011\n");
  CHECK(bmatrix_rows_string(a) == "101 / 011");
  CHECK_THROWS_AS(parse_bmatrix("10\n011\n"), ParseError);
  CHECK_THROWS_AS(parse_bmatrix("12\n"), ParseError);
}

TEST_CASE("multivector round trip") {
  const Multivector v = multivector(3, 2, {mask_of({1, 2}), mask_of({2, 3})});
  CHECK(parse_multivector(multivector_to_json(v)) == v);
}

TEST_CASE("map parsing") {
  const PointedMap f = parse_pointed_map(
      "{\"source_n\": 3, \"target_n\": 2, \"images\": [1, 2, 0]}");
  CHECK(f.images == std::vector<int>{1, 2, 0});
  CHECK_FALSE(looks_multivalued(
      "{\"source_n\": 1, \"target_n\": 1, \"images\": [1]}"));
  CHECK(looks_multivalued("{\"images\": [[1, 2], []]}"));
  const MultiMap g = parse_multimap("{\"target_n\": 2, \"images\": [[1, 2], []]}");
  CHECK(g.source_n == 2);
  CHECK(g.images == std::vector<Mask>{mask_of({1, 2}), 0});
  CHECK_THROWS_AS(parse_pointed_map(
                      "{\"source_n\": 2, \"target_n\": 1, \"images\": [3, 0]}"),
                  ParseError);
}

TEST_CASE("set system parsing") {
  const SetSystem s = parse_set_system("{\"n\": 3, \"sets\": [[1, 2], [2, 3]]}");
  CHECK(s.n == 3);
  CHECK(s.sets == std::vector<Mask>{mask_of({1, 2}), mask_of({2, 3})});
}

TEST_CASE("lattice exports") {
  const Matroid u23 = uniform_matroid(2, 3);
  const std::string dot = lattice_to_dot(u23);
  CHECK(dot.find("digraph flats") != std::string::npos);
  CHECK(dot.find("{1,2,3}") != std::string::npos);
  const std::string json = lattice_to_json(u23);
  CHECK(json.find("\"nodes\"") != std::string::npos);
  CHECK(json.find("\"edges\"") != std::string::npos);
}

TEST_CASE("suite report serialization") {
  SuiteReport r{"demo"};
  r.tested = 7;
  r.ms = 3;
  const std::string j = suite_report_to_json(r);
  CHECK(j.find("\"suite\":\"demo\"") != std::string::npos);
  CHECK(j.find("\"tested\":7") != std::string::npos);
}
