#include "khoss/verify.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace khoss {

RuleCheckStats& RuleCheckStats::operator+=(const RuleCheckStats& o) {
  faces += o.faces;
  duality += o.duality;
  conjugation += o.conjugation;
  grading += o.grading;
  filtration += o.filtration;
  extension += o.extension;
  return *this;
}

namespace {

// transfer the passive bits of a starting monomial to the ending side
struct PassivePairs {
  uint32_t mask_i = 0, mask_j = 0;
  std::vector<std::pair<int, int>> bits;  // (bit in I, bit in J)
};

PassivePairs face_passives(const FaceContext& ctx, uint32_t I, uint32_t J,
                           const std::vector<int>& coords) {
  PassivePairs pp;
  const Resolution& RI = ctx.rt->get(I);
  const Resolution& RJ = ctx.rt->get(J);
  std::set<int> ai, aj;
  for (int x : coords) {
    ai.insert(RI.strand_circle[x][0]);
    ai.insert(RI.strand_circle[x][1]);
    aj.insert(RJ.strand_circle[x][0]);
    aj.insert(RJ.strand_circle[x][1]);
  }
  std::vector<int> pi, pj;
  for (int i = 0; i < RI.circle_count(); ++i)
    if (!ai.count(i)) pi.push_back(i);
  for (int j = 0; j < RJ.circle_count(); ++j)
    if (!aj.count(j)) pj.push_back(j);
  for (size_t b = 0; b < pi.size(); ++b) {
    pp.bits.push_back({pi[b], pj[b]});
    pp.mask_i |= uint32_t(1) << pi[b];
    pp.mask_j |= uint32_t(1) << pj[b];
  }
  return pp;
}

}  // namespace

RuleCheckStats check_rules(const FaceContext& ctx, long max_faces) {
  RuleCheckStats st;
  const LinkDiagram& d = *ctx.d;
  bool done = false;
  for_each_face_alldim(d.n(), [&](uint32_t I, uint32_t J, const std::vector<int>& coords) {
    if (done) return;
    if (max_faces && st.faces >= max_faces) {
      done = true;
      return;
    }
    ++st.faces;
    int k = (int)coords.size();
    const Resolution& RI = ctx.rt->get(I);
    const Resolution& RJ = ctx.rt->get(J);
    int ci = RI.circle_count(), cj = RJ.circle_count();
    uint32_t full_i = (uint32_t(1) << ci) - 1, full_j = (uint32_t(1) << cj) - 1;

    auto M = face_matrix(ctx, I, J, coords);

    // grading rule
    for (uint32_t a = 0; a <= full_i; ++a)
      for (uint32_t b : M[a])
        if (grading_gr(b, cj) - grading_gr(a, ci) != k - 2) ++st.grading;

    // filtration rule over every marked edge
    for (int e : d.edge_labels) {
      int xi = RI.circle_of_edge.at(e);
      int yj = RJ.circle_of_edge.at(e);
      for (uint32_t a = 0; a <= full_i; ++a) {
        if (!((a >> xi) & 1)) continue;
        for (uint32_t b : M[a])
          if (!((b >> yj) & 1)) {
            ++st.filtration;
            break;
          }
      }
    }

    // conjugation: reversing every arc leaves the map unchanged
    {
      FaceContext rc = ctx;
      for (int x : coords) rc.t = rc.t.flipped(x);
      auto Mr = face_matrix(rc, I, J, coords);
      if (Mr != M) ++st.conjugation;
    }

    // duality: coefficients of the mirrored dual are the transposes under
    // monomial complements
    {
      auto Dm = face_dual_mirror_matrix(ctx, I, J, coords);
      std::vector<std::vector<uint32_t>> Mt(size_t(1) << ci);
      for (uint32_t bm = 0; bm <= full_j; ++bm)
        for (uint32_t am : Dm[bm]) Mt[am ^ full_i].push_back(bm ^ full_j);
      for (auto& v : Mt) std::sort(v.begin(), v.end());
      if (Mt != M) ++st.duality;
    }

    // extension: passive tensor factors ride along unchanged
    {
      PassivePairs pp = face_passives(ctx, I, J, coords);
      bool bad = false;
      for (uint32_t a = 0; a <= full_i && !bad; ++a) {
        uint32_t expect_pass = 0;
        for (auto [bi, bj] : pp.bits)
          if ((a >> bi) & 1) expect_pass |= uint32_t(1) << bj;
        for (uint32_t b : M[a])
          if ((b & pp.mask_j) != expect_pass) {
            bad = true;
            break;
          }
        // active part must not depend on the passive assignment
        uint32_t a_act = a & ~pp.mask_i;
        if (M[a].size() != M[a_act].size()) bad = true;
      }
      if (bad) ++st.extension;
    }
  });
  return st;
}

bool check_d_squared(const FaceContext& ctx) {
  SparseMapF2 dm = assemble_d(ctx);
  return dm.compose(dm).is_zero();
}

bool check_decoration_relation(const FaceContext& ctx, int m) {
  FaceContext c2 = ctx;
  c2.t = ctx.t.flipped(m);
  SparseMapF2 d1 = assemble_d(ctx);
  SparseMapF2 d2 = assemble_d(c2);
  SparseMapF2 H = assemble_Hm(ctx, m);
  SparseMapF2 rhs = d1.plus(H.compose(d1)).plus(d1.compose(H));
  return d2 == rhs;
}

bool check_decoration_iso(const FaceContext& ctx, int m) {
  FaceContext c2 = ctx;
  c2.t = ctx.t.flipped(m);
  SparseMapF2 d1 = assemble_d(ctx);
  SparseMapF2 d2 = assemble_d(c2);
  SparseMapF2 G = decoration_iso(ctx, m);
  if (!(G.compose(d1) == d2.compose(G))) return false;
  // involution: (id + H)^2 = id since H^2 = 0
  SparseMapF2 GG = G.compose(G);
  for (int c = 0; c < GG.cols(); ++c)
    if (GG.column(c) != std::vector<int>{c}) return false;
  std::vector<int> deltas(ctx.basis->size());
  for (int i = 0; i < ctx.basis->size(); ++i) deltas[i] = ctx.basis->gen(i).delta;
  return delta_homology(deltas, d1) == delta_homology(deltas, d2);
}

bool check_transverse_cycle(const FaceContext& ctx) {
  std::vector<int> z = transverse_cycle(ctx);
  SparseMapF2 dm = assemble_d(ctx);
  return dm.apply(z).empty();
}

Decoration random_decoration(std::mt19937_64& rng, int n) {
  Decoration t;
  t.n = n;
  if (n > 0) t.bits = (uint32_t)(rng() & ((uint64_t(1) << n) - 1));
  return t;
}

LinkDiagram random_braid_diagram(std::mt19937_64& rng, int max_crossings) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    int strands = 2 + (int)(rng() % 3);
    int len = std::max(strands - 1, 1 + (int)(rng() % (uint64_t)max_crossings));
    if (len > max_crossings) len = max_crossings;
    std::vector<int> word(len);
    for (int& w : word) {
      w = 1 + (int)(rng() % (uint64_t)(strands - 1));
      if (rng() & 1) w = -w;
    }
    try {
      return parse_braid(strands, word);
    } catch (const DiagramError&) {
      continue;  // some strand unused; try again
    }
  }
  throw std::runtime_error("could not generate a random braid");
}

std::map<int, int> subcomplex_delta_ranks(const FaceContext& ctx,
                                          const Subcomplex& sc) {
  std::vector<int> deltas(sc.gens.size());
  for (size_t i = 0; i < sc.gens.size(); ++i)
    deltas[i] = ctx.basis->gen(sc.gens[i]).delta + sc.delta_shift;
  return delta_homology(deltas, sc.map);
}

std::vector<PageTable> subcomplex_pages(const FaceContext& ctx, const Subcomplex& sc) {
  std::vector<int> deltas(sc.gens.size()), hs(sc.gens.size());
  for (size_t i = 0; i < sc.gens.size(); ++i) {
    deltas[i] = ctx.basis->gen(sc.gens[i]).delta + sc.delta_shift;
    hs[i] = ctx.basis->gen(sc.gens[i]).h;
  }
  return spectral_pages(hs, deltas, sc.map, ctx.d->n() + 1);
}

}  // namespace khoss
