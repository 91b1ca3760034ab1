#include <doctest.h>

#include <json.hpp>

#include "giftex/io.hpp"

using namespace giftex;

TEST_CASE("kind letters") {
  CHECK(parse_kind("E") == ValueKind::E);
  CHECK(parse_kind("g") == ValueKind::G);
  CHECK(parse_kind("H") == ValueKind::H);
  CHECK_FALSE(parse_kind("X"));
  CHECK_FALSE(parse_kind(""));
  CHECK(kind_letter(ValueKind::H) == 'H');
}

TEST_CASE("table dumps") {
  auto g2 = dump_values(ValueKind::G, StealLimit(2), 5);
  CHECK(to_csv(g2) == "n,value\n0,1\n1,3\n2,31\n3,842\n4,45296\n5,4061871\n");

  auto e1 = dump_e(build_e_table(StealLimit(1), 2));
  CHECK(to_csv(e1) == "n,k,value\n0,0,1\n1,0,0\n1,1,1\n1,2,1\n2,0,0\n2,1,0\n2,2,1\n2,3,3\n2,4,3\n");

  auto h1 = dump_values(ValueKind::H, StealLimit(1), 3);
  CHECK(to_csv(h1) == "n,value\n1,1\n2,4\n3,42\n");

  CHECK_THROWS_AS(dump_values(ValueKind::E, StealLimit(1), 3), std::invalid_argument);
}

TEST_CASE("JSON values are decimal strings") {
  auto j = nlohmann::json::parse(to_json(dump_values(ValueKind::G, StealLimit(8), 5)));
  CHECK(j.at("kind") == "G");
  CHECK(j.at("sigma") == 8);
  CHECK(j.at("entries")[5].at("value") == "476872353039366288373555323");
  CHECK_FALSE(j.at("entries")[0].contains("k"));
  auto e = nlohmann::json::parse(to_json(dump_e(build_e_table(StealLimit(1), 1))));
  CHECK(e.at("entries")[2].at("k") == 1);
}

TEST_CASE("CSV and JSON round trips") {
  for (unsigned s = 0; s <= 4; ++s) {
    auto e = dump_e(build_e_table(StealLimit(s), 7));
    CHECK(parse_csv(to_csv(e), ValueKind::E, s) == e);
    CHECK(parse_json(to_json(e)) == e);
    for (auto kind : {ValueKind::G, ValueKind::H}) {
      auto v = dump_values(kind, StealLimit(s), 12);
      CHECK(parse_csv(to_csv(v), kind, s) == v);
      CHECK(parse_json(to_json(v)) == v);
    }
  }
}

TEST_CASE("malformed tables are rejected") {
  CHECK_THROWS_AS(parse_csv("", ValueKind::G, 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("n,k,value\n0,0,1\n", ValueKind::G, 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("n,value\n0\n", ValueKind::G, 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("n,value\n0,1.5\n", ValueKind::G, 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("n,value\n0,-\n", ValueKind::G, 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_json(R"({"kind":"Q","sigma":1,"entries":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_json(R"({"kind":"G","sigma":1,"entries":[{"n":0,"value":7}]})"),
                  std::invalid_argument);
  CHECK(parse_csv("n,value\r\n0,1\r\n", ValueKind::G, 0).entries.size() == 1);
}

TEST_CASE("embedded fixtures") {
  const auto& recs = embedded_fixtures();
  CHECK(recs.size() == 684);
  std::size_t e = 0, g = 0, errata = 0;
  for (const auto& r : recs) {
    CHECK(r.source.rfind("table-", 0) == 0);
    if (r.kind == ValueKind::E) ++e;
    if (r.kind == ValueKind::G) ++g;
    if (r.erratum) {
      ++errata;
      CHECK(r.sigma == 1);
      CHECK(r.n == 8);
      CHECK(r.k == 13);
      CHECK(r.value == "945945");
      CHECK(*r.erratum == "270270");
    }
  }
  CHECK(e == 630);
  CHECK(g == 54);
  CHECK(errata == 1);
}

TEST_CASE("fixture spot values") {
  auto find = [](ValueKind kind, unsigned sigma, long n, std::optional<long> k) {
    for (const auto& r : embedded_fixtures())
      if (r.kind == kind && r.sigma == sigma && r.n == n && r.k == k) return r.value;
    return std::string();
  };
  CHECK(find(ValueKind::E, 3, 4, 13) == "725725");
  CHECK(find(ValueKind::G, 8, 5, std::nullopt) == "476872353039366288373555323");
  CHECK(find(ValueKind::E, 2, 2, 4) == "7");
}

TEST_CASE("check_fixtures on the embedded set") {
  auto out = check_fixtures(embedded_fixtures());
  CHECK(out.pass());
  CHECK(out.checked == 684);
  CHECK(out.matched == 683);
  CHECK(out.errata_confirmed == 1);
  CHECK(out.cross_checks > 0);
}

TEST_CASE("check_fixtures reports diffs") {
  auto recs = embedded_fixtures();
  for (auto& r : recs)
    if (r.kind == ValueKind::E && r.sigma == 2 && r.n == 3 && r.k == 5) r.value = "26";
  auto out = check_fixtures(recs);
  CHECK_FALSE(out.pass());
  CHECK(out.matched == 682);
  bool named = false;
  for (const auto& d : out.diffs) named = named || d.find("E_2(3,5) [table-4]: expected 26") != std::string::npos;
  CHECK(named);

  auto wrong = embedded_fixtures();
  for (auto& r : wrong)
    if (r.erratum) r.erratum = "945945";
  CHECK_FALSE(check_fixtures(wrong).pass());

  std::vector<FixtureRecord> h{{ValueKind::H, 1, 3, std::nullopt, "42", std::nullopt, "text"}};
  CHECK(check_fixtures(h).pass());
  h[0].value = "41";
  CHECK_FALSE(check_fixtures(h).pass());
}

TEST_CASE("parse_fixtures") {
  auto recs = parse_fixtures(
      R"({"records":[{"kind":"G","sigma":2,"n":3,"value":"842","source":"table-8"}]})");
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].kind == ValueKind::G);
  CHECK_FALSE(recs[0].k);
  CHECK_THROWS_AS(parse_fixtures("[]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fixtures(R"({"records":[{"kind":"Z"}]})"), std::invalid_argument);
}

TEST_CASE("parse_bfile") {
  auto v = parse_bfile("# G_1\n0 1\n1 2\n\n2\t7\n  3 37  \n");
  REQUIRE(v.size() == 4);
  CHECK(v[2] == std::pair<long, Integer>{2, 7});
  CHECK(v[3].second == 37);
  CHECK_THROWS_AS(parse_bfile("0 1\n12\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bfile("0 x\n"), std::invalid_argument);
  CHECK(parse_bfile("").empty());
}
