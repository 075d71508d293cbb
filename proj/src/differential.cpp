#include "khoss/differential.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace khoss {

namespace {

// tail of the surgery arc sits on strand 0 for decoration bit 0
bool site_is_head(int strand, bool dec_bit) { return strand != (dec_bit ? 1 : 0); }

struct FaceData {
  Configuration config;              // full configuration over I's circles
  std::vector<int> passive_ri;       // circle indices in RI
  std::vector<int> passive_rj;       // matching circle indices in RJ
  std::vector<int> active_ri;        // active circle indices in RI
  std::vector<int> active_rj;        // active ending circle indices in RJ
  uint32_t active_ri_mask = 0;
  uint32_t active_rj_mask = 0;
};

Configuration build_face_config(const Resolution& RI, const Decoration& t,
                                const std::vector<int>& coords, bool mirror_variant) {
  Configuration c;
  c.arcs = (int)coords.size();
  std::vector<int> coord_pos(32, -1);
  for (int p = 0; p < (int)coords.size(); ++p) coord_pos[coords[p]] = p;
  for (const ResCircle& rc : RI.circles) {
    CircleWord w;
    w.id = rc.id;
    for (const auto& v : rc.visits) {
      int p = coord_pos[v.crossing];
      if (p < 0) continue;
      Site s;
      s.arc = p;
      s.head = site_is_head(v.strand, t.bit(v.crossing));
      s.left = arc_side_left(0, v.enter_slot);
      if (mirror_variant) s.left = !s.left;
      w.sites.push_back(s);
    }
    c.circles.push_back(std::move(w));
  }
  return c;
}

FaceData build_face_data(const FaceContext& ctx, uint32_t I, uint32_t J,
                         const std::vector<int>& coords) {
  FaceData fd;
  const Resolution& RI = ctx.rt->get(I);
  const Resolution& RJ = ctx.rt->get(J);
  fd.config = build_face_config(RI, ctx.t, coords, ctx.mirror_variant);
  for (int ci = 0; ci < (int)RI.circles.size(); ++ci) {
    if (fd.config.circles[ci].sites.empty())
      fd.passive_ri.push_back(ci);
    else {
      fd.active_ri.push_back(ci);
      fd.active_ri_mask |= uint32_t(1) << ci;
    }
  }
  // passive circles persist into J with the same id; active ending circles
  // are the J circles through the changed crossings
  std::set<int> arj;
  for (int x : coords) {
    arj.insert(RJ.strand_circle[x][0]);
    arj.insert(RJ.strand_circle[x][1]);
  }
  fd.active_rj.assign(arj.begin(), arj.end());
  for (int ci : fd.active_rj) fd.active_rj_mask |= uint32_t(1) << ci;
  for (int ci = 0; ci < (int)RJ.circles.size(); ++ci) {
    if (fd.active_rj_mask & (uint32_t(1) << ci)) continue;
    fd.passive_rj.push_back(ci);
  }
  if (fd.passive_ri.size() != fd.passive_rj.size())
    throw std::runtime_error("face passive circles do not persist");
  for (size_t i = 0; i < fd.passive_ri.size(); ++i)
    if (RI.circles[fd.passive_ri[i]].id != RJ.circles[fd.passive_rj[i]].id)
      throw std::runtime_error("face passive circle ids mismatch");
  return fd;
}

// rule terms as (mask over RI circles, mask over RJ circles), active part only
void rule_terms(const FaceContext& ctx, const FaceData& fd, uint32_t I, uint32_t J,
                const std::vector<int>& coords, const ConfigClass& cls,
                std::vector<std::pair<uint32_t, uint32_t>>& terms) {
  const Resolution& RI = ctx.rt->get(I);
  const Resolution& RJ = ctx.rt->get(J);
  (void)RI;
  auto central_start_mask = [&]() -> uint32_t {
    // active starting circle meeting every arc
    for (int ci : fd.active_ri) {
      bool all = true;
      for (int a = 0; a < fd.config.arcs && all; ++a)
        all = fd.config.circle_meets_arc(ci, a);
      if (all) return uint32_t(1) << ci;
    }
    throw std::runtime_error("central starting circle missing");
  };
  auto central_end_mask = [&]() -> uint32_t {
    for (int ci : fd.active_rj) {
      bool all = true;
      for (int x : coords)
        if (RJ.strand_circle[x][0] != ci && RJ.strand_circle[x][1] != ci) {
          all = false;
          break;
        }
      if (all) return uint32_t(1) << ci;
    }
    throw std::runtime_error("central ending circle missing");
  };

  switch (cls.kind) {
    case ConfigClass::Split: {
      int x = coords[0];
      uint32_t y1 = uint32_t(1) << RJ.strand_circle[x][0];
      uint32_t y2 = uint32_t(1) << RJ.strand_circle[x][1];
      if (y1 == y2) throw std::runtime_error("split edge with one ending circle");
      terms.push_back({0, y1});
      terms.push_back({0, y2});
      terms.push_back({fd.active_ri_mask, y1 | y2});
      break;
    }
    case ConfigClass::Join: {
      int x = coords[0];
      uint32_t y = uint32_t(1) << RJ.strand_circle[x][0];
      uint32_t x1 = uint32_t(1) << fd.active_ri[0];
      uint32_t x2 = uint32_t(1) << fd.active_ri[1];
      terms.push_back({0, 0});
      terms.push_back({x1, y});
      terms.push_back({x2, y});
      break;
    }
    case ConfigClass::A:
      terms.push_back({0, 0});
      break;
    case ConfigClass::B:
      terms.push_back({fd.active_ri_mask, fd.active_rj_mask});
      break;
    case ConfigClass::C:
      terms.push_back({0, 0});
      break;
    case ConfigClass::D:
      terms.push_back({fd.active_ri_mask, fd.active_rj_mask});
      break;
    case ConfigClass::E:
      terms.push_back({fd.active_ri_mask & ~central_start_mask(), central_end_mask()});
      break;
    case ConfigClass::TwoDim: {
      int ty = cls.type;
      if (ty == 1) {
        terms.push_back({0, 0});
      } else if (ty >= 2 && ty <= 7) {
        // the two-arc cases of the E rule; for types 4 and 5 the lone
        // starting circle is central and the source monomial is 1
        terms.push_back({fd.active_ri_mask & ~central_start_mask(), central_end_mask()});
      } else if (ty == 8) {
        terms.push_back({0, 0});
        terms.push_back({fd.active_ri_mask, fd.active_rj_mask});
      } else if (ty == 9) {
        terms.push_back({fd.active_ri_mask, fd.active_rj_mask});
      }
      break;
    }
    default:
      break;
  }
}

// expand passive tensor factors and emit global entries
template <typename Emit>
void expand_terms(const FaceContext& ctx, const FaceData& fd, uint32_t I, uint32_t J,
                  const std::vector<std::pair<uint32_t, uint32_t>>& terms,
                  const Emit& emit) {
  (void)ctx;
  (void)I;
  (void)J;
  size_t np = fd.passive_ri.size();
  for (uint32_t sub = 0; sub < (uint32_t(1) << np); ++sub) {
    uint32_t vi = 0, vj = 0;
    for (size_t b = 0; b < np; ++b)
      if ((sub >> b) & 1) {
        vi |= uint32_t(1) << fd.passive_ri[b];
        vj |= uint32_t(1) << fd.passive_rj[b];
      }
    for (const auto& [am, bm] : terms) emit(am | vi, bm | vj);
  }
}

}  // namespace

Configuration face_configuration(const FaceContext& ctx, uint32_t I, uint32_t J,
                                 const std::vector<int>& coords) {
  (void)J;
  return build_face_config(ctx.rt->get(I), ctx.t, coords, ctx.mirror_variant);
}

Configuration face_dual_mirror_configuration(const FaceContext& ctx, uint32_t I,
                                             uint32_t J,
                                             const std::vector<int>& coords) {
  (void)I;
  const Resolution& RJ = ctx.rt->get(J);
  Configuration c;
  c.arcs = (int)coords.size();
  std::vector<int> coord_pos(32, -1);
  for (int p = 0; p < (int)coords.size(); ++p) coord_pos[coords[p]] = p;
  for (const ResCircle& rc : RJ.circles) {
    CircleWord w;
    w.id = rc.id;
    for (const auto& v : rc.visits) {
      int p = coord_pos[v.crossing];
      if (p < 0) continue;
      Site s;
      s.arc = p;
      // the rotated arc leaves the strand holding slot 0 of the 1-smoothing
      // for decoration bit 0
      s.head = site_is_head(v.strand, ctx.t.bit(v.crossing));
      s.left = arc_side_left(1, v.enter_slot);
      if (ctx.mirror_variant) s.left = !s.left;
      w.sites.push_back(s);
    }
    c.circles.push_back(std::move(w));
  }
  return mirror(c);
}

void eval_face(const FaceContext& ctx, uint32_t I, uint32_t J,
               const std::vector<int>& coords,
               std::vector<std::pair<int, int>>& out) {
  FaceData fd = build_face_data(ctx, I, J, coords);
  Configuration act = active_part(fd.config);
  ConfigClass cls = classify(act, *ctx.table);
  if (!cls.contributes()) return;
  std::vector<std::pair<uint32_t, uint32_t>> terms;
  rule_terms(ctx, fd, I, J, coords, cls, terms);
  expand_terms(ctx, fd, I, J, terms, [&](uint32_t am, uint32_t bm) {
    out.push_back({ctx.basis->index_of(I, am), ctx.basis->index_of(J, bm)});
  });
}

std::vector<std::vector<uint32_t>> face_matrix(const FaceContext& ctx, uint32_t I,
                                               uint32_t J,
                                               const std::vector<int>& coords) {
  const Resolution& RI = ctx.rt->get(I);
  std::vector<std::vector<uint32_t>> m(size_t(1) << RI.circle_count());
  FaceData fd = build_face_data(ctx, I, J, coords);
  Configuration act = active_part(fd.config);
  ConfigClass cls = classify(act, *ctx.table);
  if (!cls.contributes()) return m;
  std::vector<std::pair<uint32_t, uint32_t>> terms;
  rule_terms(ctx, fd, I, J, coords, cls, terms);
  expand_terms(ctx, fd, I, J, terms,
               [&](uint32_t am, uint32_t bm) { m[am].push_back(bm); });
  for (auto& v : m) std::sort(v.begin(), v.end());
  return m;
}

std::vector<std::vector<uint32_t>> face_dual_mirror_matrix(
    const FaceContext& ctx, uint32_t I, uint32_t J, const std::vector<int>& coords) {
  // evaluate the mirrored dual configuration: V(J) -> V(I)
  const Resolution& RI = ctx.rt->get(I);
  const Resolution& RJ = ctx.rt->get(J);
  std::vector<std::vector<uint32_t>> m(size_t(1) << RJ.circle_count());

  Configuration full = face_dual_mirror_configuration(ctx, I, J, coords);
  std::vector<int> passive_rj, active_rj;
  uint32_t active_rj_mask = 0;
  for (int ci = 0; ci < (int)RJ.circles.size(); ++ci) {
    if (full.circles[ci].sites.empty())
      passive_rj.push_back(ci);
    else {
      active_rj.push_back(ci);
      active_rj_mask |= uint32_t(1) << ci;
    }
  }
  std::vector<int> passive_ri, active_ri;
  uint32_t active_ri_mask = 0;
  {
    std::set<int> ari;
    for (int x : coords) {
      ari.insert(RI.strand_circle[x][0]);
      ari.insert(RI.strand_circle[x][1]);
    }
    active_ri.assign(ari.begin(), ari.end());
    for (int ci : active_ri) active_ri_mask |= uint32_t(1) << ci;
    for (int ci = 0; ci < (int)RI.circles.size(); ++ci)
      if (!(active_ri_mask & (uint32_t(1) << ci))) passive_ri.push_back(ci);
  }
  if (passive_ri.size() != passive_rj.size())
    throw std::runtime_error("dual face passive mismatch");

  Configuration act = active_part(full);
  ConfigClass cls = classify(act, *ctx.table);
  if (!cls.contributes()) return m;

  auto central_start_mask = [&]() -> uint32_t {
    for (int ci : active_rj) {
      bool all = true;
      for (int a = 0; a < full.arcs && all; ++a) all = full.circle_meets_arc(ci, a);
      if (all) return uint32_t(1) << ci;
    }
    throw std::runtime_error("central starting circle missing (dual)");
  };
  auto central_end_mask = [&]() -> uint32_t {
    // ending circles of the dual face live in resolution I; its dual arcs sit
    // at the 0-smoothing strands
    for (int ci : active_ri) {
      bool all = true;
      for (int x : coords)
        if (RI.strand_circle[x][0] != ci && RI.strand_circle[x][1] != ci) {
          all = false;
          break;
        }
      if (all) return uint32_t(1) << ci;
    }
    throw std::runtime_error("central ending circle missing (dual)");
  };

  std::vector<std::pair<uint32_t, uint32_t>> terms;  // (mask over RJ, mask over RI)
  switch (cls.kind) {
    case ConfigClass::Split: {
      int x = coords[0];
      uint32_t y1 = uint32_t(1) << RI.strand_circle[x][0];
      uint32_t y2 = uint32_t(1) << RI.strand_circle[x][1];
      terms.push_back({0, y1});
      terms.push_back({0, y2});
      terms.push_back({active_rj_mask, y1 | y2});
      break;
    }
    case ConfigClass::Join: {
      int x = coords[0];
      uint32_t y = uint32_t(1) << RI.strand_circle[x][0];
      terms.push_back({0, 0});
      for (int ci : active_rj) terms.push_back({uint32_t(1) << ci, y});
      break;
    }
    case ConfigClass::A:
      terms.push_back({0, 0});
      break;
    case ConfigClass::B:
    case ConfigClass::D:
      terms.push_back({active_rj_mask, active_ri_mask});
      break;
    case ConfigClass::C:
      terms.push_back({0, 0});
      break;
    case ConfigClass::E:
      terms.push_back({active_rj_mask & ~central_start_mask(), central_end_mask()});
      break;
    case ConfigClass::TwoDim: {
      int ty = cls.type;
      if (ty == 1) terms.push_back({0, 0});
      else if (ty >= 2 && ty <= 7)
        terms.push_back({active_rj_mask & ~central_start_mask(), central_end_mask()});
      else if (ty == 8) {
        terms.push_back({0, 0});
        terms.push_back({active_rj_mask, active_ri_mask});
      } else if (ty == 9)
        terms.push_back({active_rj_mask, active_ri_mask});
      break;
    }
    default:
      break;
  }
  size_t np = passive_rj.size();
  for (uint32_t sub = 0; sub < (uint32_t(1) << np); ++sub) {
    uint32_t vj = 0, vi = 0;
    for (size_t b = 0; b < np; ++b)
      if ((sub >> b) & 1) {
        vj |= uint32_t(1) << passive_rj[b];
        vi |= uint32_t(1) << passive_ri[b];
      }
    for (const auto& [am, bm] : terms) m[am | vj].push_back(bm | vi);
  }
  for (auto& v : m) std::sort(v.begin(), v.end());
  return m;
}

SparseMapF2 assemble_dk(const FaceContext& ctx, int k) {
  std::vector<std::pair<int, int>> entries;
  for_each_face(ctx.d->n(), k, [&](uint32_t I, uint32_t J, const std::vector<int>& coords) {
    eval_face(ctx, I, J, coords, entries);
  });
  int n = ctx.basis->size();
  return SparseMapF2::from_entries(n, n, std::move(entries));
}

SparseMapF2 assemble_d(const FaceContext& ctx) {
  std::vector<std::pair<int, int>> entries;
  for_each_face_alldim(ctx.d->n(),
                       [&](uint32_t I, uint32_t J, const std::vector<int>& coords) {
                         eval_face(ctx, I, J, coords, entries);
                       });
  int n = ctx.basis->size();
  return SparseMapF2::from_entries(n, n, std::move(entries));
}

SparseMapF2 assemble_Hm(const FaceContext& ctx, int m) {
  std::vector<std::pair<int, int>> entries;
  int n = ctx.d->n();
  uint32_t mask = (n == 32 ? ~uint32_t(0) : (uint32_t(1) << n) - 1);
  uint32_t rest = mask & ~(uint32_t(1) << m);
  uint32_t sub = 0;
  const std::vector<int> coords{m};
  while (true) {
    uint32_t I = sub, J = sub | (uint32_t(1) << m);
    // H is orientation independent: split 1 -> 1, join x1x2 -> y1
    const Resolution& RI = ctx.rt->get(I);
    const Resolution& RJ = ctx.rt->get(J);
    int c0 = RI.strand_circle[m][0], c1 = RI.strand_circle[m][1];
    std::vector<std::pair<uint32_t, uint32_t>> terms;
    FaceData fd = build_face_data(ctx, I, J, coords);
    if (c0 == c1) {
      terms.push_back({0, 0});  // split
    } else {
      uint32_t y = uint32_t(1) << RJ.strand_circle[m][0];
      terms.push_back({(uint32_t(1) << c0) | (uint32_t(1) << c1), y});  // join
    }
    expand_terms(ctx, fd, I, J, terms, [&](uint32_t am, uint32_t bm) {
      entries.push_back({ctx.basis->index_of(I, am), ctx.basis->index_of(J, bm)});
    });
    if (sub == rest) break;
    sub = (sub - rest) & rest;
  }
  int nb = ctx.basis->size();
  return SparseMapF2::from_entries(nb, nb, std::move(entries));
}

SparseMapF2 assemble_khovanov_d1(const LinkDiagram& d, const ResolutionTable& rt,
                                 const Basis& basis) {
  std::vector<std::pair<int, int>> entries;
  for_each_face(d.n(), 1, [&](uint32_t I, uint32_t J, const std::vector<int>& coords) {
    int x = coords[0];
    const Resolution& RI = rt.get(I);
    const Resolution& RJ = rt.get(J);
    // match circles by id: untouched circles persist
    std::map<int, int> idxI, idxJ;
    for (int i = 0; i < RI.circle_count(); ++i) idxI[RI.circles[i].id] = i;
    for (int j = 0; j < RJ.circle_count(); ++j) idxJ[RJ.circles[j].id] = j;
    int a0 = RI.strand_circle[x][0], a1 = RI.strand_circle[x][1];
    int b0 = RJ.strand_circle[x][0], b1 = RJ.strand_circle[x][1];
    std::vector<int> persistI, persistJ;
    for (int i = 0; i < RI.circle_count(); ++i)
      if (i != a0 && i != a1) persistI.push_back(i);
    for (int j = 0; j < RJ.circle_count(); ++j)
      if (j != b0 && j != b1) persistJ.push_back(j);
    std::vector<std::pair<uint32_t, uint32_t>> terms;
    if (a0 == a1) {
      // split: 1 -> y1 + y2, x -> y1 y2
      uint32_t y1 = uint32_t(1) << b0, y2 = uint32_t(1) << b1;
      terms.push_back({0, y1});
      terms.push_back({0, y2});
      terms.push_back({uint32_t(1) << a0, y1 | y2});
    } else {
      uint32_t y = uint32_t(1) << b0;
      terms.push_back({0, 0});
      terms.push_back({uint32_t(1) << a0, y});
      terms.push_back({uint32_t(1) << a1, y});
    }
    if (persistI.size() != persistJ.size())
      throw std::runtime_error("edge persistence mismatch");
    size_t np = persistI.size();
    for (size_t b = 0; b < np; ++b)
      if (RI.circles[persistI[b]].id != RJ.circles[persistJ[b]].id)
        throw std::runtime_error("edge persistent circle ids mismatch");
    for (uint32_t sub = 0; sub < (uint32_t(1) << np); ++sub) {
      uint32_t vi = 0, vj = 0;
      for (size_t b = 0; b < np; ++b)
        if ((sub >> b) & 1) {
          vi |= uint32_t(1) << persistI[b];
          vj |= uint32_t(1) << persistJ[b];
        }
      for (const auto& [am, bm] : terms)
        entries.push_back({basis.index_of(I, am | vi), basis.index_of(J, bm | vj)});
    }
  });
  int n = basis.size();
  return SparseMapF2::from_entries(n, n, std::move(entries));
}

SparseMapF2 decoration_iso(const FaceContext& ctx, int m) {
  SparseMapF2 H = assemble_Hm(ctx, m);
  int n = ctx.basis->size();
  std::vector<std::pair<int, int>> entries;
  for (int i = 0; i < n; ++i) entries.push_back({i, i});
  for (int c = 0; c < n; ++c)
    for (int r : H.column(c)) entries.push_back({c, r});
  return SparseMapF2::from_entries(n, n, std::move(entries));
}

Subcomplex reduced_subcomplex(const FaceContext& ctx, const SparseMapF2& d_full,
                              int basepoint_edge) {
  Subcomplex sc;
  sc.q_shift = 1;
  sc.delta_shift = 1;
  const Basis& basis = *ctx.basis;
  std::vector<int> local(basis.size(), -1);
  for (int i = 0; i < basis.size(); ++i) {
    const Generator& g = basis.gen(i);
    const Resolution& R = ctx.rt->get(g.I);
    auto it = R.circle_of_edge.find(basepoint_edge);
    if (it == R.circle_of_edge.end())
      throw std::runtime_error("basepoint edge missing from diagram");
    if ((g.mono >> it->second) & 1) {
      local[i] = (int)sc.gens.size();
      sc.gens.push_back(i);
    }
  }
  std::vector<std::pair<int, int>> entries;
  for (int li = 0; li < (int)sc.gens.size(); ++li) {
    for (int r : d_full.column(sc.gens[li])) {
      if (local[r] < 0)
        throw std::runtime_error("reduced subcomplex not closed under the differential");
      entries.push_back({li, local[r]});
    }
  }
  sc.map = SparseMapF2::from_entries((int)sc.gens.size(), (int)sc.gens.size(),
                                     std::move(entries));
  return sc;
}

Subcomplex full_subcomplex(const FaceContext& ctx, const SparseMapF2& d_full) {
  Subcomplex sc;
  sc.gens.resize(ctx.basis->size());
  for (int i = 0; i < (int)sc.gens.size(); ++i) sc.gens[i] = i;
  sc.map = d_full;
  return sc;
}

std::vector<int> transverse_cycle(const FaceContext& ctx) {
  const LinkDiagram& d = *ctx.d;
  if (!d.from_braid) throw DiagramError("transverse element needs a braid diagram");
  uint32_t I = 0;
  for (int i = 0; i < d.n(); ++i)
    if (d.crossings[i].sign < 0) I |= uint32_t(1) << i;
  const Resolution& R = ctx.rt->get(I);
  if (R.circle_count() != d.braid_strands)
    throw std::runtime_error("oriented resolution does not give the strand circles");
  uint32_t full = (uint32_t(1) << R.circle_count()) - 1;
  return {ctx.basis->index_of(I, full)};
}

}  // namespace khoss
