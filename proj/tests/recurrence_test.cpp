#include <doctest.h>

#include <json.hpp>

#include "giftex/recurrence.hpp"

using namespace giftex;

namespace {

const Recurrence1D& seq(const std::string& name) { return registry().sequences.at(name); }
const Recurrence2D& tab(const std::string& name) { return registry().tables.at(name); }

Polynomial P(const char* text) { return Polynomial::parse(text); }

}  // namespace

TEST_CASE("registry contents") {
  const auto& reg = registry();
  CHECK(reg.names() == std::vector<std::string>{"G1d", "E1d", "E2d", "G2d", "G2e", "G3e", "G4e",
                                                 "G4e-corrected", "E3app"});
  for (const auto& name : reg.names()) CHECK(reg.contains(name));
  CHECK_FALSE(reg.contains("G5e"));

  CHECK(seq("G1d").coefficient(1) == P("2*n - 1"));
  CHECK(seq("G1d").coefficient(2) == 1);
  CHECK(tab("E2d").coefficient({1, 3}) == P("9/2*n^2 - 9/2*n + 1"));
  CHECK(tab("E3app").coefficient({7, 7}) == ratio(58, 3));
  CHECK(seq("G2e").leading == P("n - 2"));
  CHECK_FALSE(seq("G2e").monic());
  CHECK(seq("G2d").seeds == std::vector<Integer>{1, 3, 31, 842});
}

TEST_CASE("registry depths") {
  CHECK(seq("G1d").depth() == 2);
  CHECK(tab("E1d").depth() == 2);
  CHECK(tab("E2d").depth() == 4);
  CHECK(seq("G2d").depth() == 4);
  CHECK(seq("G2e").depth() == 3);
  CHECK(seq("G3e").depth() == 7);
  CHECK(tab("E3app").depth() == 7);
  CHECK(seq("G4e").depth() == 11);
  CHECK(seq("G4e-corrected").depth() == 11);
  CHECK(tab("E3app").terms.size() == 23);
  CHECK(tab("E2d").terms.size() == 8);
}

TEST_CASE("G4e keeps the duplicated offset; the corrected variant moves it") {
  const auto& printed = seq("G4e");
  const auto& fixed = seq("G4e-corrected");
  CHECK(printed.coefficient(10).is_zero());
  CHECK(printed.coefficient(11) == P("1593990*n - 14522219") / 972 + Polynomial(ratio(310343, 648)));
  CHECK(fixed.coefficient(10) == P("1593990*n - 14522219") / 972);
  CHECK(fixed.coefficient(11) == ratio(310343, 648));
}

TEST_CASE("verify_1d examples") {
  auto g1 = g_sequence(StealLimit(1), 100);
  CHECK(verify_1d(seq("G1d"), g1, 2, 100).pass);

  auto g2 = g_sequence(StealLimit(2), 60);
  CHECK(verify_1d(seq("G2e"), g2, 3, 60).pass);

  Recurrence1D bad = seq("G1d");
  bad.terms[0].coeff = P("2*n");
  auto rep = verify_1d(bad, g1, 2, 100);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.first_failure.size() == 1);
  CHECK(rep.first_failure[0] == 2);
  CHECK(rep.residual == -2);

  CHECK_THROWS_AS(verify_1d(seq("G1d"), g1, 2, 101), std::invalid_argument);
}

TEST_CASE("verify_2d examples") {
  CHECK(verify_2d(tab("E1d"), build_e_table(StealLimit(1), 40), 2, 40).pass);
  CHECK(verify_2d(tab("E2d"), build_e_table(StealLimit(2), 30), 4, 30).pass);
  CHECK(verify_2d(tab("E3app"), build_e_table(StealLimit(3), 20), 7, 20).pass);
  CHECK_THROWS_AS(verify_2d(tab("E1d"), build_e_table(StealLimit(1), 10), 2, 11), std::invalid_argument);

  Recurrence2D bad = tab("E2d");
  bad.terms.back().coeff = 2;
  auto rep = verify_2d(bad, build_e_table(StealLimit(2), 12), 4, 12);
  CHECK_FALSE(rep.pass);
  CHECK(rep.first_failure.size() == 2);
}

TEST_CASE("verify_named over the registry") {
  CHECK(verify_named("G1d", 300).pass);
  CHECK(verify_named("E1d", 60).pass);
  CHECK(verify_named("E2d", 40).pass);
  CHECK(verify_named("G2d", 60).pass);
  CHECK(verify_named("G2e", 60).pass);
  CHECK(verify_named("G3e", 40).pass);
  CHECK(verify_named("E3app", 25).pass);
  CHECK(verify_named("G4e-corrected", 30).pass);
  auto printed = verify_named("G4e", 30);
  CHECK_FALSE(printed.pass);
  CHECK(printed.first_failure == std::vector<long>{11});
  CHECK_THROWS_AS(verify_named("nope", 10), std::out_of_range);
}

TEST_CASE("reports do not depend on jobs") {
  Recurrence1D bad = seq("G1d");
  bad.terms[1].coeff = 2;
  auto g1 = g_sequence(StealLimit(1), 80);
  auto one = verify_1d(bad, g1, 2, 80, 1);
  for (unsigned jobs : {2u, 3u, 8u, 200u}) {
    auto many = verify_1d(bad, g1, 2, 80, jobs);
    CHECK(many.to_text() == one.to_text());
    CHECK(many.to_json() == one.to_json());
  }
  auto a = verify_named("E2d", 30, 1);
  auto b = verify_named("E2d", 30, 4);
  CHECK(a.to_text() == b.to_text());
  CHECK(a.checked == b.checked);
}

TEST_CASE("report serialization") {
  auto ok = verify_named("G1d", 20);
  auto j = nlohmann::json::parse(ok.to_json());
  CHECK(j.at("name") == "G1d");
  CHECK(j.at("range") == nlohmann::json::array({2, 20}));
  CHECK(j.at("pass") == true);
  CHECK(j.at("first_failure").is_null());
  CHECK(j.at("residual") == "0");
  CHECK(ok.to_text().rfind("G1d n=2..20 pass", 0) == 0);

  auto bad = verify_named("G4e", 12);
  auto jb = nlohmann::json::parse(bad.to_json());
  CHECK(jb.at("pass") == false);
  CHECK(jb.at("first_failure") == nlohmann::json::array({11}));
  CHECK(jb.at("residual") == "3011671/243");
  CHECK(bad.to_text().find("FAIL at n=11") != std::string::npos);
}

TEST_CASE("summing E-level recurrences over k gives the G-level ones") {
  auto g1 = sum_over_k(tab("E1d"), "sum-E1d");
  CHECK(g1.coefficient(1) == seq("G1d").coefficient(1));
  CHECK(g1.coefficient(2) == seq("G1d").coefficient(2));

  auto g2 = sum_over_k(tab("E2d"), "sum-E2d");
  for (unsigned i = 1; i <= 4; ++i) CHECK(g2.coefficient(i) == seq("G2d").coefficient(i));

  auto g3 = sum_over_k(tab("E3app"), "sum-E3app");
  for (unsigned i = 1; i <= 7; ++i) CHECK(g3.coefficient(i) == seq("G3e").coefficient(i));

  CHECK(verify_1d(g2, g_sequence(StealLimit(2), 40), 4, 40).pass);
  CHECK(verify_1d(g3, g_sequence(StealLimit(3), 30), 7, 30).pass);
}

TEST_CASE("generate reproduces the tables") {
  for (const char* name : {"G1d", "G2d", "G2e", "G3e", "G4e-corrected"}) {
    const auto& rec = seq(name);
    auto values = generate(rec, 25);
    CHECK(values == g_sequence(rec.sigma, 25).values);
  }
  Recurrence1D g0{"g0", StealLimit(0), 1, {{1, 1}}, 1, {1}};
  CHECK(generate(g0, 5) == std::vector<Integer>(6, 1));
  Recurrence1D unseeded = seq("G1d");
  unseeded.seeds.clear();
  CHECK_THROWS_AS(generate(unseeded, 5), std::invalid_argument);
  Recurrence1D halves{"halves", StealLimit(0), 2, {{1, 1}}, 1, {1}};
  CHECK_THROWS_AS(generate(halves, 3), std::domain_error);
  CHECK_THROWS_AS(generate(seq("G4e"), 12), std::domain_error);
}

TEST_CASE("d2_summand") {
  Rational sum(0);
  for (long c = 0; c <= 4; ++c) sum += d2_summand(2, 4, c);
  CHECK(sum == 7);
  CHECK(d2_summand(3, 4, 1) == 0);
  CHECK(d2_summand(1, 2, 0) == 1);
  CHECK(d2_summand(2, 4, -1) == 0);
  auto t = build_e_table(StealLimit(2), 10);
  for (long n = 0; n <= 10; ++n)
    for (long k = 0; k <= 3 * n + 1; ++k) {
      Rational s(0);
      for (long c = 0; c <= k; ++c) s += d2_summand(n, k, c);
      CHECK(s == Rational(t(n, k)));
    }
}

TEST_CASE("Celine certificate") {
  auto cert = celine_certificate();
  CHECK(cert.nonzero_count() == 19);
  CHECK(cert.at(0, 0, 1) == -8);
  CHECK(cert.at(4, 4, 1) == 1);
  CHECK(cert.at(4, 4, 4).is_zero());
  CHECK(celine_certificate_constants().nonzero_count() == 19);
  CHECK(celine_certificate_constants().support() == cert.support());

  auto grid = celine_interior_grid(cert.support(), 4, 12);
  CHECK_FALSE(grid.empty());
  CHECK(celine_annihilation_check(cert, grid).pass);
  CHECK_THROWS_AS(celine_annihilation_check(cert, {}), std::invalid_argument);

  auto report = celine_check(cert, 4, 15, 20);
  CHECK(report.annihilation.pass);
  CHECK(report.collapse.pass);
  CHECK(report.collapse_matches_e2d);
  CHECK(report.pass());
}

TEST_CASE("Celine negative controls") {
  auto cert = celine_certificate();
  cert.entries[{4, 4, 1}] = Polynomial();
  CHECK_FALSE(celine_check(cert, 4, 12, 12).pass());

  auto constants = celine_certificate_constants();
  auto grid = celine_interior_grid(constants.support(), 4, 15);
  CHECK_FALSE(celine_annihilation_check(constants, grid).pass);

  auto table = build_e_table(StealLimit(2), 20);
  CHECK(check_forward_identity("shifted", e2d_shifted(), table, 0, 16).pass);
  CHECK_FALSE(check_forward_identity("quoted", e2d_shifted_quoted(), table, 0, 16).pass);
  CHECK(same_identity(celine_collapse(celine_certificate()), e2d_shifted()));
  CHECK_FALSE(same_identity(e2d_shifted_quoted(), e2d_shifted()));
}

TEST_CASE("solve_celine recovers the certificate") {
  auto cert = celine_certificate();
  auto solved = solve_celine(cert.support(), 2, 6, 12);
  REQUIRE(solved.has_value());
  for (const auto& idx : cert.support()) CHECK(solved->at(idx.r, idx.s, idx.t) == cert.at(idx.r, idx.s, idx.t));
}

TEST_CASE("structure_check") {
  auto e1 = structure_check(tab("E1d"), StealLimit(1));
  CHECK(e1.expected_depth == 2);
  CHECK(e1.pass());
  auto e2 = structure_check(tab("E2d"), StealLimit(2));
  CHECK(e2.expected_depth == 4);
  CHECK(e2.pass());
  auto e3 = structure_check(tab("E3app"), StealLimit(3));
  CHECK(e3.expected_depth == 7);
  CHECK(e3.pass());
  CHECK(tab("E3app").coefficient({1, 1}).is_constant());
  CHECK_FALSE(e3.note.empty());

  for (unsigned s = 0; s <= 5; ++s)
    CHECK(conjectured_depth(StealLimit(s)) == std::vector<unsigned>{1, 2, 4, 7, 11, 16}[s]);

  Recurrence2D below = tab("E2d");
  below.terms.push_back({{2, 1}, 1});
  auto r = structure_check(below, StealLimit(2));
  CHECK_FALSE(r.zero_pattern_ok);
  CHECK_FALSE(r.violations.empty());

  Recurrence2D steep = tab("E1d");
  steep.terms[1].coeff = P("n");
  CHECK_FALSE(structure_check(steep, StealLimit(1)).degree_ok);
  CHECK_FALSE(structure_check(tab("E1d"), StealLimit(2)).depth_ok);
}

TEST_CASE("recurrence JSON schema") {
  auto j = nlohmann::json::parse(to_json(tab("E2d")));
  CHECK(j.at("name") == "E2d");
  CHECK(j.at("depth") == 4);
  CHECK(j.at("shifts").size() == j.at("coeffs").size());
  bool found = false;
  for (std::size_t i = 0; i < j.at("shifts").size(); ++i) {
    if (j["shifts"][i] == nlohmann::json::array({1, 3})) {
      found = true;
      CHECK(j["coeffs"][i]["numerators"] == nlohmann::json::array({"2", "-9", "9"}));
      CHECK(j["coeffs"][i]["denominator"] == "2");
    }
  }
  CHECK(found);
  auto g = nlohmann::json::parse(to_json(seq("G2e")));
  CHECK(g.at("depth") == 3);
  CHECK(g.contains("leading"));
}
