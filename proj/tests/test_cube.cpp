#include "doctest.h"
#include "khoss/cube.hpp"
#include "oracles.hpp"

using namespace khoss;

TEST_CASE("resolution circle counts") {
  LinkDiagram u = parse_pd("", true);
  CHECK(resolve(u, 0).circle_count() == 1);

  LinkDiagram hopf = parse_pd("X(1,4,2,3) X(3,2,4,1)");
  CHECK(resolve(hopf, 0b00).circle_count() == 2);
  CHECK(resolve(hopf, 0b11).circle_count() == 2);
  CHECK(resolve(hopf, 0b01).circle_count() == 1);
  CHECK(resolve(hopf, 0b10).circle_count() == 1);

  LinkDiagram tre = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
  CHECK(resolve(tre, 0b000).circle_count() == 2);
}

TEST_CASE("edge surgery changes circle count by one") {
  for (const char* pd :
       {"X(1,4,2,3) X(3,2,4,1)", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",
        "X(1,4,2,1) X(2,4,3,3)"}) {
    LinkDiagram d = parse_pd(pd);
    ResolutionTable rt(d);
    for_each_face(d.n(), 1, [&](uint32_t I, uint32_t J, const std::vector<int>&) {
      int ci = rt.get(I).circle_count();
      int cj = rt.get(J).circle_count();
      CHECK(std::abs(ci - cj) == 1);
    });
  }
}

TEST_CASE("face enumeration counts") {
  int c1 = 0, c2 = 0;
  for_each_face(2, 1, [&](uint32_t, uint32_t, const std::vector<int>&) { ++c1; });
  for_each_face(2, 2, [&](uint32_t, uint32_t, const std::vector<int>&) { ++c2; });
  CHECK(c1 == 4);
  CHECK(c2 == 1);
  int total = 0;
  for_each_face_alldim(3, [&](uint32_t, uint32_t, const std::vector<int>&) { ++total; });
  CHECK(total == 27 - 8);  // 3^n - 2^n
}

TEST_CASE("gradings") {
  LinkDiagram u = parse_pd("", true);
  ResolutionTable rt(u);
  Basis b(u, rt);
  REQUIRE(b.size() == 2);
  CHECK(b.gen(0).h == 0);
  CHECK(b.gen(0).delta + b.gen(1).delta == 0);
  CHECK(std::abs(b.gen(0).delta) == 1);

  LinkDiagram t35 = parse_braid_text("3: 1 2 1 2 1 2 1 2 1 2");
  ResolutionTable rt35(t35);
  Basis b35(t35, rt35);
  for (int i = 0; i < b35.size(); ++i) {
    const Generator& g = b35.gen(i);
    CHECK(g.delta == g.q - 2 * g.h);
    CHECK((g.q - g.delta) % 2 == 0);
  }
}

TEST_CASE("euler characteristic equals the bracket state sum") {
  for (const char* spec :
       {"pd X(1,4,2,3) X(3,2,4,1)", "pd X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",
        "pd X(1,2,2,1)", "pd X(1,4,2,1) X(2,4,3,3)", "braid 2: -1 -1 -1",
        "braid 3: 1 -2 1 -2", "braid 2: 1 1 1 1 1"}) {
    std::string s(spec);
    LinkDiagram d = s.rfind("pd ", 0) == 0 ? parse_pd(s.substr(3))
                                           : parse_braid_text(s.substr(6));
    ResolutionTable rt(d);
    Basis basis(d, rt);
    auto chi = oracle::euler_characteristic(basis);
    auto jones = oracle::unnormalized_jones(d, rt);
    CHECK(chi == jones);
  }
}

TEST_CASE("braid decoration") {
  LinkDiagram t35 = parse_braid_text("3: 1 2 1 2 1 2 1 2 1 2");
  Decoration t1 = braid_decoration(t35);
  Decoration t2 = braid_decoration(t35);
  CHECK(t1.bits == t2.bits);
  CHECK(t1.n == 10);

  LinkDiagram pd = parse_pd("X(1,4,2,3) X(3,2,4,1)");
  CHECK_THROWS_AS(braid_decoration(pd), DiagramError);

  LinkDiagram u = parse_braid(1, {});
  CHECK(braid_decoration(u).n == 0);
}

TEST_CASE("decoration parsing") {
  LinkDiagram hopf = parse_pd("X(1,4,2,3) X(3,2,4,1)");
  CHECK(parse_decoration("auto", hopf).bits == 0);
  CHECK(parse_decoration("10", hopf).bits == 0b01);
  CHECK(parse_decoration("01", hopf).bits == 0b10);
  CHECK_THROWS_AS(parse_decoration("1", hopf), DiagramError);
  CHECK_THROWS_AS(parse_decoration("12", hopf), DiagramError);
}
