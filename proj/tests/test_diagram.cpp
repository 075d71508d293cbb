#include "doctest.h"
#include "khoss/diagram.hpp"

#include <map>
#include <set>

using namespace khoss;

namespace {

// Brute-force orientation oracle: try every over-strand direction assignment
// and keep those where each edge has exactly one head and one tail.
std::vector<std::vector<int>> oracle_orientations(const LinkDiagram& d) {
  int n = d.n();
  std::vector<std::vector<int>> good;
  for (int mask = 0; mask < (1 << n); ++mask) {
    // role[edge][occurrence] with 1 = head
    std::map<int, int> heads, total;
    for (int xi = 0; xi < n; ++xi) {
      const auto& e = d.crossings[xi].edges;
      bool o = (mask >> xi) & 1;  // over enters at slot 1
      heads[e[0]] += 1;
      heads[e[o ? 1 : 3]] += 1;
      for (int p = 0; p < 4; ++p) total[e[p]] += 1;
    }
    bool ok = true;
    for (auto& [label, cnt] : total) {
      (void)label;
      if (cnt != 2) ok = false;
    }
    for (auto& [label, h] : heads)
      if (h != 1 || total[label] != 2) ok = false;
    if (ok) {
      std::vector<int> signs(n);
      for (int xi = 0; xi < n; ++xi) signs[xi] = ((mask >> xi) & 1) ? 1 : -1;
      good.push_back(signs);
    }
  }
  return good;
}

}  // namespace

TEST_CASE("hopf link pd") {
  LinkDiagram d = parse_pd("X(1,4,2,3) X(3,2,4,1)");
  CHECK(d.n() == 2);
  CHECK(d.components.size() == 2);
  CHECK(!d.split);
  CHECK(serialize_pd(d) == "X(1,4,2,3) X(3,2,4,1)");
}

TEST_CASE("empty pd") {
  CHECK_THROWS_AS(parse_pd(""), DiagramError);
  LinkDiagram u = parse_pd("", true);
  CHECK(u.n() == 0);
  CHECK(u.zero_crossing_unknot);
}

TEST_CASE("pd errors") {
  CHECK_THROWS_AS(parse_pd("X(1,2,3)"), DiagramError);
  CHECK_THROWS_AS(parse_pd("Y(1,2,3,4)"), DiagramError);
  // label 5 appears once
  CHECK_THROWS_AS(parse_pd("X(1,4,2,3) X(3,2,4,5)"), DiagramError);
}

TEST_CASE("trefoil signs match the propagation oracle") {
  LinkDiagram d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
  CHECK(d.n() == 3);
  auto [np, nm] = d.sign_counts();
  CHECK(np + nm == 3);
  CHECK(np == 3);
  CHECK(nm == 0);

  auto solutions = oracle_orientations(d);
  REQUIRE(!solutions.empty());
  std::vector<int> mine(3);
  for (int i = 0; i < 3; ++i) mine[i] = d.crossings[i].sign;
  bool found = false;
  for (const auto& s : solutions) found = found || s == mine;
  CHECK(found);
}

TEST_CASE("hopf signs against oracle") {
  LinkDiagram d = parse_pd("X(1,4,2,3) X(3,2,4,1)");
  auto solutions = oracle_orientations(d);
  REQUIRE(!solutions.empty());
  std::vector<int> mine(2);
  for (int i = 0; i < 2; ++i) mine[i] = d.crossings[i].sign;
  bool found = false;
  for (const auto& s : solutions) found = found || s == mine;
  CHECK(found);
  auto [np, nm] = d.sign_counts();
  CHECK(np + nm == 2);
  CHECK(np == 2);  // positive Hopf link
}

TEST_CASE("planar map face counts") {
  // round unknot
  PlanarMap u = build_planar_map(parse_pd("", true));
  CHECK(u.faces == 2);
  CHECK(u.euler_ok);
  // hopf: V=2, E=4 so F=4
  PlanarMap h = build_planar_map(parse_pd("X(1,4,2,3) X(3,2,4,1)"));
  CHECK(h.euler_ok);
  CHECK(h.faces == 4);
  // trefoil standard projection: 5 faces including the outer one
  PlanarMap t = build_planar_map(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"));
  CHECK(t.euler_ok);
  CHECK(t.faces == 5);
}

TEST_CASE("braid closures") {
  LinkDiagram hopf = parse_braid(2, {1, 1});
  CHECK(hopf.n() == 2);
  CHECK(hopf.components.size() == 2);
  auto [np, nm] = hopf.sign_counts();
  CHECK(np == 2);
  CHECK(nm == 0);

  LinkDiagram t35 = parse_braid_text("3: 1 2 1 2 1 2 1 2 1 2");
  CHECK(t35.n() == 10);
  CHECK(t35.components.size() == 1);
  auto [p5, m5] = t35.sign_counts();
  CHECK(p5 == 10);
  CHECK(m5 == 0);

  LinkDiagram u = parse_braid(1, {});
  CHECK(u.n() == 0);
  CHECK(u.zero_crossing_unknot);

  CHECK_THROWS_AS(parse_braid(2, {2}), DiagramError);
  CHECK_THROWS_AS(parse_braid(3, {1}), DiagramError);  // strand 3 unused

  LinkDiagram neg = parse_braid(2, {-1, -1, -1});
  auto [pn, mn] = neg.sign_counts();
  CHECK(pn == 0);
  CHECK(mn == 3);
}

TEST_CASE("r1 and r2 unknot diagrams parse and are planar") {
  LinkDiagram r1 = parse_pd("X(1,2,2,1)");
  CHECK(r1.n() == 1);
  CHECK(r1.components.size() == 1);
  CHECK(build_planar_map(r1).euler_ok);

  LinkDiagram r2 = parse_pd("X(1,4,2,1) X(2,4,3,3)");
  CHECK(r2.n() == 2);
  CHECK(r2.components.size() == 1);
  CHECK(build_planar_map(r2).euler_ok);
  CHECK(r2.writhe() == 0);
}

TEST_CASE("split diagram flagged") {
  // two disjoint kinks
  LinkDiagram d = parse_pd("X(1,2,2,1) X(3,4,4,3)");
  CHECK(d.split);
  CHECK(d.components.size() == 2);
}
