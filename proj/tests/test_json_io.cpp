#include <filesystem>

#include "cx1/catalog.hpp"
#include "cx1/errors.hpp"
#include "cx1/json_io.hpp"
#include "doctest.h"

using namespace cx1;

namespace {

template <typename T, typename F>
void round_trip(const T& value, F parse) {
  std::string first = dump_canonical(to_json(value));
  std::string second = dump_canonical(to_json(parse(parse_json(first, "test"))));
  CHECK(first == second);
}

}  // namespace

TEST_CASE("integers") {
  Integer big("1180591620717411303424");  // 2^70
  CHECK(to_json(big).is_string());
  CHECK(to_json(Integer(-5)).is_number_integer());
  CHECK(integer_from_json(to_json(big), "x") == big);
  CHECK(integer_from_json(Json("-12"), "x") == -12);
  CHECK_THROWS_AS(integer_from_json(Json(1.5), "x"), InputError);
  CHECK_THROWS_AS(integer_from_json(Json("12a"), "x"), InputError);
  CHECK(int_vector_from_csv("1,1,-1") == make_vector({1, 1, -1}));
  CHECK_THROWS_AS(int_vector_from_csv("1,x"), InputError);
}

TEST_CASE("parse errors carry the position") {
  try {
    parse_json("{\"n\": 3,, }", "broken.json");
    FAIL("expected an input error");
  } catch (const InputError& e) {
    std::string what = e.what();
    CHECK(what.find("broken.json") != std::string::npos);
    CHECK(what.find("at byte 9") != std::string::npos);
  }
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("round trips") {
  CatalogEntry g = g42_entry();
  round_trip(g.fixed_points.front().weights, weight_system_from_json);
  round_trip(g.data.sponge, sponge_from_json);
  round_trip(g.data, chardata_from_json);
  round_trip(f3_entry().data, chardata_from_json);
  round_trip(simplex_polytope(3), polytope_from_json);
  CharacteristicFunction lambda{{"1", make_vector({1, 0})}, {"2", make_vector({0, 1})}};
  std::string a = dump_canonical(lambda_to_json(lambda));
  CHECK(a == dump_canonical(lambda_to_json(lambda_from_json(parse_json(a, "l")))));
}

TEST_CASE("round trip preserves meaning") {
  CharacteristicData cd = g42_entry().data;
  CharacteristicData back = chardata_from_json(to_json(cd));
  CHECK(back.mu == cd.mu);
  CHECK(back.euler_sign == cd.euler_sign);
  CHECK(back.ambient.kind == cd.ambient.kind);
  CHECK(back.sponge.complex.size() == cd.sponge.complex.size());
  for (const auto& c : cd.sponge.complex.cells()) {
    Incidence a = back.sponge.complex.boundary(c.id), b = cd.sponge.complex.boundary(c.id);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("output is byte stable") {
  std::string a = dump_canonical(to_json(g42_entry()));
  std::string b = dump_canonical(to_json(g42_entry()));
  CHECK(a == b);
  CHECK(a.back() == '\n');
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(weight_system_from_json(parse_json("{\"n\": 3, \"weights\": [[1,0],[0,1]]}", "w")), InputError);
  CHECK_THROWS_AS(weight_system_from_json(parse_json("{\"n\": 3, \"weights\": [[1,0],[0,1],[1]]}", "w")),
                  InputError);
  CHECK_THROWS_AS(weight_system_from_json(parse_json("{\"n\": 3, \"weights\": 3}", "w")), InputError);
  Json cd = to_json(g42_entry().data);
  cd["ambient"] = "torus";
  CHECK_THROWS_AS(chardata_from_json(cd), InputError);
}

TEST_CASE("report format") {
  Report r;
  r.pass("a", "fine");
  r.fail("b", "broken");
  Json j = results_json(r);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["check"] == "a");
  CHECK(j[0]["status"] == "pass");
  CHECK(j[1]["status"] == "fail");
  CHECK(j[1]["detail"] == "broken");
}
