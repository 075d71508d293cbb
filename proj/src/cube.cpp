#include "khoss/cube.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace khoss {

int Resolution::circle_index_of_id(int id) const {
  for (int i = 0; i < (int)circles.size(); ++i)
    if (circles[i].id == id) return i;
  return -1;
}

namespace {

bool is_head_slot(const Crossing& x, int slot) {
  if (slot == 0) return true;
  if (slot == 2) return false;
  int over_in = x.over_in_at_b ? 1 : 3;
  return slot == over_in;
}

}  // namespace

Resolution resolve(const LinkDiagram& d, uint32_t bits) {
  Resolution r;
  r.bits = bits;
  r.weight = std::popcount(bits);
  int n = d.n();
  if (d.zero_crossing_unknot) {
    ResCircle c;
    c.id = 1;
    c.edges = {1};
    r.circles.push_back(c);
    r.circle_of_edge[1] = 0;
    return r;
  }

  // occurrences of each edge label
  std::map<int, std::vector<std::pair<int, int>>> occ;  // label -> (crossing, slot)
  for (int xi = 0; xi < n; ++xi)
    for (int p = 0; p < 4; ++p) occ[d.crossings[xi].edges[p]].push_back({xi, p});

  std::map<int, bool> edge_done;
  std::vector<ResCircle> circles;
  for (int label : d.edge_labels) {
    if (edge_done[label]) continue;
    ResCircle c;
    c.id = label;
    // start along the edge's own orientation: head occurrence is the target
    auto [o1, o2] = std::pair(occ[label][0], occ[label][1]);
    auto target = is_head_slot(d.crossings[o1.first], o1.second) ? o1 : o2;
    int e = label;
    std::pair<int, int> tgt = target;
    do {
      edge_done[e] = true;
      c.edges.push_back(e);
      c.id = std::min(c.id, e);
      auto [x, slot] = tgt;
      int bit = (bits >> x) & 1;
      c.visits.push_back({x, strand_index(bit, slot), slot});
      int out_slot = strand_partner_slot(bit, slot);
      e = d.crossings[x].edges[out_slot];
      // continue to the other occurrence of e
      auto& os = occ[e];
      tgt = (os[0] == std::pair(x, out_slot)) ? os[1] : os[0];
    } while (e != label || tgt != target);
    circles.push_back(std::move(c));
  }
  std::sort(circles.begin(), circles.end(),
            [](const ResCircle& a, const ResCircle& b) { return a.id < b.id; });
  r.circles = std::move(circles);

  r.strand_circle.assign(n, {-1, -1});
  r.strand_visit.assign(n, {-1, -1});
  for (int ci = 0; ci < (int)r.circles.size(); ++ci) {
    const ResCircle& c = r.circles[ci];
    for (int vi = 0; vi < (int)c.visits.size(); ++vi) {
      const auto& v = c.visits[vi];
      r.strand_circle[v.crossing][v.strand] = ci;
      r.strand_visit[v.crossing][v.strand] = vi;
    }
    for (int e : c.edges) r.circle_of_edge[e] = ci;
  }
  return r;
}

ResolutionTable::ResolutionTable(const LinkDiagram& d) : d_(&d) {
  int n = d.n();
  table_.resize(size_t(1) << n);
  for (uint32_t I = 0; I < (uint32_t(1) << n); ++I) table_[I] = resolve(d, I);
}

void for_each_face(int n, int k,
                   const std::function<void(uint32_t, uint32_t,
                                            const std::vector<int>&)>& fn) {
  if (k < 1 || k > n) return;
  std::vector<int> coords(k);
  for (int i = 0; i < k; ++i) coords[i] = i;
  while (true) {
    uint32_t S = 0;
    for (int c : coords) S |= uint32_t(1) << c;
    uint32_t rest = ~S & ((n == 32 ? ~uint32_t(0) : (uint32_t(1) << n) - 1));
    // enumerate assignments of the other coordinates
    uint32_t sub = 0;
    while (true) {
      fn(sub, sub | S, coords);
      if (sub == rest) break;
      sub = (sub - rest) & rest;
    }
    // next combination
    int i = k - 1;
    while (i >= 0 && coords[i] == n - k + i) --i;
    if (i < 0) break;
    ++coords[i];
    for (int j = i + 1; j < k; ++j) coords[j] = coords[j - 1] + 1;
  }
}

void for_each_face_alldim(
    int n, const std::function<void(uint32_t, uint32_t,
                                    const std::vector<int>&)>& fn) {
  for (int k = 1; k <= n; ++k) for_each_face(n, k, fn);
}

int grading_gr(uint32_t mono, int circle_count) {
  return circle_count - 2 * std::popcount(mono);
}

Basis::Basis(const LinkDiagram& d, const ResolutionTable& rt) {
  int n = d.n();
  auto [np, nm] = d.sign_counts();
  std::vector<uint32_t> order;
  order.reserve(size_t(1) << n);
  for (uint32_t I = 0; I < (uint32_t(1) << n); ++I) order.push_back(I);
  std::sort(order.begin(), order.end(), [](uint32_t a, uint32_t b) {
    int wa = std::popcount(a), wb = std::popcount(b);
    return wa != wb ? wa < wb : a < b;
  });
  offset_.assign(size_t(1) << n, 0);
  for (uint32_t I : order) {
    offset_[I] = (int)gens_.size();
    const Resolution& r = rt.get(I);
    int c = r.circle_count();
    int w = r.weight;
    for (uint32_t mono = 0; mono < (uint32_t(1) << c); ++mono) {
      Generator g;
      g.I = I;
      g.mono = mono;
      int gr = grading_gr(mono, c);
      g.h = w - nm;
      g.q = gr + w + np - 2 * nm;
      g.delta = g.q - 2 * g.h;
      gens_.push_back(g);
    }
  }
  for (int i = 0; i < (int)gens_.size(); ++i)
    delta_index_[gens_[i].delta].push_back(i);
}

const std::vector<int>& Basis::by_delta(int delta) const {
  static const std::vector<int> empty;
  auto it = delta_index_.find(delta);
  return it == delta_index_.end() ? empty : it->second;
}

std::vector<int> Basis::deltas() const {
  std::vector<int> out;
  for (const auto& [k, v] : delta_index_) {
    (void)v;
    out.push_back(k);
  }
  return out;
}

Decoration braid_decoration(const LinkDiagram& d) {
  if (!d.from_braid) throw DiagramError("braid decoration needs a braid-built diagram");
  Decoration t;
  t.n = d.n();
  for (int i = 0; i < d.n(); ++i) {
    const Crossing& x = d.crossings[i];
    if (!x.braid_tagged) throw DiagramError("diagram not braid-tagged");
    // Vertical arcs point up, horizontal arcs point right. In the braid
    // builder both cases put the arc tail on the strand holding the first PD
    // edge, which is decoration bit 0.
    // parallel 0-smoothing: strand 0 = left vertical strand, arc points right.
    // cap/cup 0-smoothing: strand 0 = bottom cap, arc points up.
    (void)x;
  }
  t.bits = 0;
  return t;
}

Decoration parse_decoration(const std::string& spec, const LinkDiagram& d) {
  Decoration t;
  t.n = d.n();
  if (spec == "auto" || spec.empty()) return t;
  if (spec == "braid") return braid_decoration(d);
  if ((int)spec.size() != d.n())
    throw DiagramError("decoration bitstring length must equal the crossing count");
  for (int i = 0; i < (int)spec.size(); ++i) {
    if (spec[i] == '1')
      t.bits |= uint32_t(1) << i;
    else if (spec[i] != '0')
      throw DiagramError("decoration bitstring must be over {0,1}");
  }
  return t;
}

}  // namespace khoss
