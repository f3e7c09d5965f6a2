#include "doctest.h"

#include "hibi/errors.hpp"
#include "hibi/io.hpp"

using namespace hibi;
using nlohmann::json;

TEST_CASE("poset JSON") {
  Poset p = parse_poset_json(R"({"elements": ["a", "b", "c"], "covers": [["a", "c"], ["b", "c"]]})");
  CHECK(p.size() == 3);
  CHECK(p.labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(p.covers() == std::vector<Cover>{{0, 2}, {1, 2}});
  CHECK(parse_poset_json(R"({"elements": ["x"]})").size() == 1);
  CHECK(parse_poset_json(R"({"elements": [], "covers": []})").size() == 0);

  json round = poset_to_json(p);
  CHECK(parse_poset_json(round.dump()) == p);
  CHECK(round["covers"] == json::parse(R"([["a","c"],["b","c"]])"));

  CHECK_THROWS_AS(parse_poset_json("{"), InputError);
  CHECK_THROWS_AS(parse_poset_json("[]"), InputError);
  CHECK_THROWS_AS(parse_poset_json(R"({"covers": []})"), InputError);
  CHECK_THROWS_AS(parse_poset_json(R"({"elements": ["a", "a"]})"), InputError);
  CHECK_THROWS_AS(parse_poset_json(R"({"elements": [1]})"), InputError);
  CHECK_THROWS_AS(parse_poset_json(R"({"elements": ["a"], "covers": [["a", "z"]]})"),
                  InputError);
  CHECK_THROWS_AS(parse_poset_json(R"({"elements": ["a"], "covers": [["a"]]})"), InputError);
  CHECK_THROWS_AS(
      parse_poset_json(R"({"elements": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]})"),
      InputError);
}

TEST_CASE("poset text") {
  Poset p = parse_poset_text("# a chain\n3\n0 1\n\n1 2\n");
  CHECK(p.size() == 3);
  CHECK(p.is_chain());
  CHECK(parse_poset_text("2\n").covers().empty());
  CHECK_THROWS_AS(parse_poset_text(""), InputError);
  CHECK_THROWS_AS(parse_poset_text("x\n"), InputError);
  CHECK_THROWS_AS(parse_poset_text("2\n0\n"), InputError);
  CHECK_THROWS_AS(parse_poset_text("2\n0 1 2\n"), InputError);
  CHECK_THROWS_AS(parse_poset_text("2\n0 5\n"), InputError);
  CHECK_THROWS_AS(parse_poset_text("2\n-1 0\n"), InputError);
}

TEST_CASE("format dispatch and files") {
  CHECK(parse_poset("  \n{\"elements\": [\"a\"]}").label(0) == "a");
  CHECK(parse_poset("1\n").size() == 1);
  CHECK_THROWS_AS(read_poset_file("/nonexistent/poset.json"), InputError);
}

TEST_CASE("exact integers in JSON") {
  CHECK(bigint_to_json(BigInt(42)) == json(42));
  CHECK(bigint_to_json(BigInt(-7)) == json(-7));
  BigInt big = BigInt(1) << 80;
  CHECK(bigint_to_json(big) == json("1208925819614629174706176"));
  BigInt edge = std::numeric_limits<std::int64_t>::max();
  CHECK(bigint_to_json(edge).is_number_integer());
  CHECK(bigint_to_json(edge + 1).is_string());
}

TEST_CASE("report JSON") {
  auto r = analyze(Poset::antichain(2));
  json j = to_json(r);
  CHECK(j["is_level"] == true);
  CHECK(j["type"] == 1);
  CHECK(j["h_vector"] == json::parse("[1,1]"));
  CHECK(j["rank_phat"] == 2);
  CHECK(j["dim"] == 3);
  CHECK(j["poset"]["size"] == 2);
  // Keys serialize in sorted order.
  std::string dumped = j.dump();
  CHECK(dumped.find("\"dim\"") < dumped.find("\"filter_purity\""));
  CHECK(dumped.find("\"h_vector\"") < dumped.find("\"is_level\""));
  CHECK(dumped == to_json(analyze(Poset::antichain(2))).dump());

  auto s = to_json(check_level(SchubertSpec::from_gamma(2, 4, {1, 3})));
  CHECK(s["gamma"] == json::parse("[1,3]"));
  CHECK(s["a"] == json::parse("[2,4]"));
  CHECK(s["nn_embedding"]["found"] == true);
  CHECK(s["hibi"]["is_level"] == true);

  auto g = to_json(verify_sagbi(SchubertSpec::from_gamma(2, 4, {1, 2}), 2));
  CHECK(g["all_passed"] == true);
  CHECK(g["scans"][2]["standard_monomials"] == 20);
}
