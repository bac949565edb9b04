#include <doctest.h>

#include <cmath>
#include <sstream>

#include "eulerfan/io.hpp"

using namespace eulerfan;
using namespace eulerfan::io;

namespace {

const GasModel kGas(1.5);

json sample_input() {
  return json{{"c_v", 1.5},
              {"left", {{"rho", 1.0}, {"u", 0.0}, {"v", 0.5}, {"p", 1.0}}},
              {"right", {{"rho", 1.0}, {"u", 0.0}, {"v", 0.0}, {"p", 2.0}}}};
}

}  // namespace

TEST_CASE("riemann data round trip") {
  const auto d = read_riemann_data(sample_input());
  CHECK(d.gas.c_v() == 1.5);
  CHECK(d.left.v == 0.5);
  const json again = write_riemann_data(d);
  const auto d2 = read_riemann_data(again);
  CHECK(d2.right.p == d.right.p);
  CHECK(dump(again) == dump(write_riemann_data(d2)));
}

TEST_CASE("parse errors name the offending field") {
  json doc = sample_input();
  doc.erase("c_v");
  CHECK_THROWS_WITH_AS(read_riemann_data(doc), "missing field: c_v",
                       parse_error);
  doc = sample_input();
  doc["left"].erase("rho");
  CHECK_THROWS_WITH_AS(read_riemann_data(doc), "missing field: rho",
                       parse_error);
  doc = sample_input();
  doc["right"]["p"] = "two";
  CHECK_THROWS_WITH_AS(read_riemann_data(doc), "field is not a number: p",
                       parse_error);
  doc = sample_input();
  doc["left"]["rho"] = -1.0;
  CHECK_THROWS_AS(read_riemann_data(doc), parse_error);
}

TEST_CASE("quintuple document round trip") {
  const auto found = subsolution::find(
      {kGas,
       {1.0, 0.0, std::sqrt(0.95 / 3.0), 1.0},
       {1.0, 0.0, 0.0, 2.0}});
  const auto q = verifier::lift(found.sub);
  const json doc = write_quintuple(q);
  const auto q2 = read_quintuple(doc);
  CHECK(q2.mu0 == q.mu0);
  CHECK(q2.region[0].gamma == q.region[0].gamma);
  CHECK(q2.region[1].C == q.region[1].C);
  const auto rep = verifier::verify_subsolution(q2);
  CHECK(rep.pass);
}

TEST_CASE("subsolution document round trip recovers the certificate") {
  const auto found = subsolution::find(
      {kGas,
       {1.0, 0.2, std::sqrt(0.95 / 3.0), 1.0},
       {1.0, 0.0, 0.0, 2.0}});
  const json doc = write_subsolution(found);
  const auto back = read_subsolution(doc);
  CHECK(back.h == found.h);
  CHECK(back.sub.eps_tilde2 == found.sub.eps_tilde2);
  CHECK(back.report.pass);
  CHECK(dump(write_subsolution(back)) == dump(doc));
}

TEST_CASE("report and pattern documents carry every condition") {
  const auto found = subsolution::find(
      {kGas, {1.0, 0.0, std::sqrt(0.95 / 3.0), 1.0}, {1.0, 0.0, 0.0, 2.0}});
  const json rep = write_report(found.report);
  CHECK(rep.at("kind") == "verification_report");
  CHECK(rep.at("conditions").size() == found.report.conditions.size());
  CHECK(rep.at("conditions").size() == 21);  // 15 interface + 2 order + 4

  const auto pattern = riemann1d::classify(read_riemann_data(sample_input()));
  const json pat = write_pattern(pattern);
  CHECK(pat.at("table_row") == pattern.table_row());
  CHECK(pat.at("middle").is_object());
}

TEST_CASE("deterministic serialization") {
  const auto d = read_riemann_data(sample_input());
  const auto pattern = riemann1d::classify(d);
  CHECK(dump(write_pattern(pattern)) == dump(write_pattern(pattern)));
  const std::string c1 = curves_dsv(d, 33);
  const std::string c2 = curves_dsv(d, 33);
  CHECK(c1 == c2);
}

TEST_CASE("curves table: monotone columns bracketing the star state") {
  const auto d = read_riemann_data(sample_input());
  const auto m = riemann1d::solve_middle(d);
  const std::string table = curves_dsv(d, 101);
  std::istringstream in(table);
  std::string header;
  std::getline(in, header);
  CHECK(header == "p,v_shock1,v_wave3");
  double prev1 = 0, prev3 = 0;
  bool first = true;
  int rows = 0;
  double best_gap = 1e300, best_p = 0;
  for (std::string line; std::getline(in, line);) {
    ++rows;
    double p, v1, v3;
    CHECK(std::sscanf(line.c_str(), "%lf,%lf,%lf", &p, &v1, &v3) == 3);
    if (!first) {
      CHECK(v1 < prev1);  // 1-curve decreasing in p
      CHECK(v3 > prev3);  // 3-curve increasing in p
    }
    if (std::abs(v1 - v3) < best_gap) {
      best_gap = std::abs(v1 - v3);
      best_p = p;
    }
    prev1 = v1;
    prev3 = v3;
    first = false;
  }
  CHECK(rows == 101);
  // sampled intersection approximates the star state on the log grid
  CHECK(std::abs(best_p - m.p) / m.p < 0.05);
}

TEST_CASE("profile samples document") {
  const auto d = read_riemann_data(sample_input());
  const auto pattern = riemann1d::classify(d);
  const auto profile = riemann1d::build_profile(d, pattern);
  const json doc = write_profile_samples(profile, {-10.0, 0.0, 10.0});
  CHECK(doc.at("kind") == "selfsimilar_profile");
  CHECK(doc.at("samples").size() == 3);
  CHECK(doc.at("samples").at(0).at("rho") == 1.0);
  CHECK(doc.at("samples").at(2).at("p") == 2.0);
}

TEST_CASE("patched document schema") {
  const auto ps = patching::assemble(
      {kGas, {1, 0, std::sqrt(1.0 / 3.0), 1}, {1, 0, 0, 2}});
  const json doc = write_patched(ps);
  CHECK(doc.at("kind") == "patched_solution");
  CHECK(doc.at("case") == "fan_shock");
  CHECK(doc.at("trailing").at("kind") == "shock");
  CHECK(doc.at("compatibility_margin").get<double>() > 0.0);
  CHECK(doc.at("fan").at("report").at("pass") == true);
}
