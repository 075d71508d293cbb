#include "doctest.h"
#include "khoss/configuration.hpp"
#include "khoss/differential.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace khoss;

namespace {

Configuration ref(int t) { return TwoDimTable::standard().ref[t]; }

Configuration split_edge() {
  Configuration c;
  c.arcs = 1;
  c.circles = {{1, {{0, false, true}, {0, true, true}}}};
  return c;
}

Configuration join_edge() {
  Configuration c;
  c.arcs = 1;
  c.circles = {{1, {{0, false, false}}}, {2, {{0, true, false}}}};
  return c;
}

}  // namespace

TEST_CASE("references are sphere embeddings and pairwise distinct") {
  for (int t = 1; t <= 16; ++t) {
    CAPTURE(t);
    CHECK(connected(ref(t)));
    CHECK(sphere_embedding_ok(ref(t)));
    CHECK(ref(t).arcs == 2);
  }
  for (int s = 1; s <= 16; ++s)
    for (int t = s + 1; t <= 16; ++t) {
      CAPTURE(s);
      CAPTURE(t);
      CHECK(!isomorphic(ref(s), ref(t), true));
    }
}

TEST_CASE("reverse and mirror are involutions") {
  for (int t = 1; t <= 16; ++t) {
    CHECK(isomorphic(reverse(reverse(ref(t))), ref(t), false));
    CHECK(isomorphic(mirror(mirror(ref(t))), ref(t), false));
  }
  CHECK(isomorphic(reverse(reverse(split_edge())), split_edge(), false));
}

TEST_CASE("dual of a split edge is a join edge") {
  Configuration ds = dualize(split_edge());
  CHECK(ds.circles.size() == 2);
  CHECK(ds.arcs == 1);
  Configuration act = active_part(ds);
  CHECK(classify(act, TwoDimTable::standard()).kind == ConfigClass::Join);

  Configuration dj = dualize(join_edge());
  CHECK(dj.circles.size() == 1);
  CHECK(classify(dj, TwoDimTable::standard()).kind == ConfigClass::Split);
}

TEST_CASE("dual dual is reverse") {
  CHECK(isomorphic(dualize(dualize(split_edge())), reverse(split_edge()), false));
  CHECK(isomorphic(dualize(dualize(join_edge())), reverse(join_edge()), false));
  for (int t = 1; t <= 16; ++t) {
    CAPTURE(t);
    CHECK(isomorphic(dualize(dualize(ref(t))), reverse(ref(t)), false));
  }
}

TEST_CASE("duality and mirror pairing tables") {
  auto dual_type = [&](int t) {
    return classify_two_dim(dualize(ref(t)), TwoDimTable::standard());
  };
  auto mirror_type = [&](int t) {
    return classify_two_dim(mirror(ref(t)), TwoDimTable::standard());
  };
  CHECK(dual_type(1) == 9);
  CHECK(dual_type(2) == 4);
  CHECK(dual_type(3) == 5);
  CHECK(dual_type(6) == 14);
  CHECK(dual_type(7) == 15);
  CHECK(dual_type(8) == 16);
  CHECK(dual_type(10) == 12);
  CHECK(dual_type(11) == 13);
  // * is an involution up to reversal
  CHECK(dual_type(9) == 1);
  CHECK(dual_type(4) == 2);
  CHECK(dual_type(5) == 3);
  CHECK(dual_type(14) == 6);
  CHECK(dual_type(15) == 7);
  CHECK(dual_type(16) == 8);
  CHECK(dual_type(12) == 10);
  CHECK(dual_type(13) == 11);
  for (int t : {1, 2, 3, 4, 5, 9, 10, 11, 12, 13}) {
    CAPTURE(t);
    CHECK(mirror_type(t) == t);
  }
  CHECK(mirror_type(6) == 14);
  CHECK(mirror_type(7) == 15);
  CHECK(mirror_type(8) == 16);
  CHECK(mirror_type(14) == 6);
  CHECK(mirror_type(15) == 7);
  CHECK(mirror_type(16) == 8);
}

TEST_CASE("active part and connectivity") {
  Configuration c = join_edge();
  c.circles.push_back({3, {}});  // passive circle
  std::vector<int> passive;
  Configuration act = active_part(c, &passive);
  CHECK(act.circles.size() == 2);
  CHECK(passive == std::vector<int>{3});

  Configuration empty;
  empty.arcs = 0;
  empty.circles = {{1, {}}, {2, {}}};
  std::vector<int> p2;
  CHECK(active_part(empty, &p2).circles.empty());
  CHECK(p2.size() == 2);
}

TEST_CASE("hand-built families classify") {
  // two circles joined by three parallel arcs
  Configuration a3;
  a3.arcs = 3;
  a3.circles = {
      {1, {{0, false, false}, {1, false, false}, {2, false, false}}},
      {2, {{2, true, false}, {1, true, false}, {0, true, false}}}};
  REQUIRE(sphere_embedding_ok(a3));
  ConfigClass ca = classify(a3, TwoDimTable::standard());
  CHECK(ca.kind == ConfigClass::A);
  CHECK(ca.k == 3);

  Configuration b3 = mirror(dualize(a3));
  ConfigClass cb = classify(b3, TwoDimTable::standard());
  CHECK(cb.kind == ConfigClass::B);

  // classification is reversal invariant on these
  CHECK(classify(reverse(a3), TwoDimTable::standard()).kind == ConfigClass::A);
  CHECK(classify(reverse(b3), TwoDimTable::standard()).kind == ConfigClass::B);
}

TEST_CASE("naturality: self isomorphism and relabeled copies") {
  for (int t : {1, 6, 8, 11}) {
    Configuration c = ref(t);
    CHECK(isomorphic(c, c, false));
    Configuration relabeled = c;
    for (auto& cw : relabeled.circles) cw.id += 100;
    if (relabeled.circles[0].sites.size() > 1) {
      auto& s = relabeled.circles[0].sites;
      std::rotate(s.begin(), s.begin() + 1, s.end());
    }
    CHECK(isomorphic(c, relabeled, false));
  }
  CHECK(!isomorphic(split_edge(), join_edge(), true));
}

TEST_CASE("conjugation classes: reversal matches reference") {
  for (int t = 1; t <= 16; ++t) {
    CAPTURE(t);
    CHECK(classify_two_dim(reverse(ref(t)), TwoDimTable::standard()) == t);
  }
}

TEST_CASE("two-dim classification is exhaustive over diagram faces") {
  std::mt19937_64 rng(5);
  for (const char* spec :
       {"2: 1 1", "2: 1 1 1", "2: -1 -1 -1", "3: 1 -2 1 -2", "2: 1 -1 1",
        "3: 1 2 1 2"}) {
    LinkDiagram d = parse_braid_text(spec);
    ResolutionTable rt(d);
    Basis basis(d, rt);
    for (int rep = 0; rep < 4; ++rep) {
      Decoration t;
      t.n = d.n();
      t.bits = (uint32_t)(rng() & ((1u << d.n()) - 1));
      FaceContext ctx{&d, &rt, &basis, t, false, &TwoDimTable::standard()};
      for_each_face(d.n(), 2,
                    [&](uint32_t I, uint32_t J, const std::vector<int>& coords) {
                      Configuration c = face_configuration(ctx, I, J, coords);
                      Configuration act = active_part(c);
                      if (!connected(act)) return;
                      int ty = classify_two_dim(act, TwoDimTable::standard());
                      CHECK(ty >= 1);
                      CHECK(ty <= 16);
                      CHECK(sphere_embedding_ok(act));
                    });
    }
  }
}

TEST_CASE("debug serialization mentions every circle") {
  std::string s = debug_string(ref(8));
  CHECK(s.find("0t") != std::string::npos);
  CHECK(s.find("#arcs=2") != std::string::npos);
}
