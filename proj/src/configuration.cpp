#include "khoss/configuration.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace khoss {

Configuration::End Configuration::find_end(int arc, bool head) const {
  for (int ci = 0; ci < (int)circles.size(); ++ci) {
    const auto& sites = circles[ci].sites;
    for (int p = 0; p < (int)sites.size(); ++p)
      if (sites[p].arc == arc && sites[p].head == head) return {ci, p};
  }
  return {};
}

int Configuration::circles_meeting_arc_count(int circle_index) const {
  std::set<int> arcs_met;
  for (const Site& s : circles[circle_index].sites) arcs_met.insert(s.arc);
  return (int)arcs_met.size();
}

bool Configuration::circle_meets_arc(int circle_index, int arc) const {
  for (const Site& s : circles[circle_index].sites)
    if (s.arc == arc) return true;
  return false;
}

int Configuration::site_count() const {
  int n = 0;
  for (const auto& c : circles) n += (int)c.sites.size();
  return n;
}

Configuration reverse(const Configuration& c) {
  Configuration out = c;
  for (auto& cw : out.circles)
    for (auto& s : cw.sites) s.head = !s.head;
  return out;
}

Configuration mirror(const Configuration& c) {
  Configuration out = c;
  for (auto& cw : out.circles)
    for (auto& s : cw.sites) s.left = !s.left;
  return out;
}

Configuration active_part(const Configuration& c, std::vector<int>* passive_ids) {
  Configuration out;
  out.arcs = c.arcs;
  for (const auto& cw : c.circles) {
    if (cw.sites.empty()) {
      if (passive_ids) passive_ids->push_back(cw.id);
    } else {
      out.circles.push_back(cw);
    }
  }
  return out;
}

bool connected(const Configuration& c) {
  int n = (int)c.circles.size();
  if (n <= 1) return true;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int a = 0; a < c.arcs; ++a) {
    auto t = c.find_end(a, false), h = c.find_end(a, true);
    if (t.circle < 0 || h.circle < 0) continue;
    parent[find(t.circle)] = find(h.circle);
  }
  int root = find(0);
  for (int i = 1; i < n; ++i)
    if (find(i) != root) return false;
  return true;
}

namespace {

// loose ends at a severed site
enum EndKind { kIn = 0, kOut = 1 };

struct SiteRef {
  int circle = -1, pos = -1;
};

EndKind left_end_kind(const Site& s) {
  // the strand on the arc's left at this endpoint is the incoming one
  // exactly when tail-ness agrees with the side bit
  return (!s.head) == s.left ? kIn : kOut;
}

}  // namespace

Configuration dualize(const Configuration& c) {
  Configuration out;
  out.arcs = c.arcs;
  int next_id = 1;

  // passive circles persist
  for (const auto& cw : c.circles)
    if (cw.sites.empty()) out.circles.push_back(cw);

  struct Conn {       // one band side of one arc
    SiteRef t, h;     // tail-site end and head-site end
    EndKind tk, hk;
    bool visited = false;
  };
  std::vector<std::array<Conn, 2>> conns(c.arcs);  // [arc][0]=right, [1]=left
  for (int a = 0; a < c.arcs; ++a) {
    auto te = c.find_end(a, false), he = c.find_end(a, true);
    if (te.circle < 0 || he.circle < 0)
      throw std::runtime_error("dualize: arc endpoint missing");
    const Site& ts = c.circles[te.circle].sites[te.pos];
    const Site& hs = c.circles[he.circle].sites[he.pos];
    EndKind tl = left_end_kind(ts), hl = left_end_kind(hs);
    conns[a][1] = {{te.circle, te.pos}, {he.circle, he.pos}, tl, hl, false};
    conns[a][0] = {{te.circle, te.pos},
                   {he.circle, he.pos},
                   tl == kIn ? kOut : kIn,
                   hl == kIn ? kOut : kIn,
                   false};
  }

  // walking away from a loose end along its segment lands at the next site
  auto walk = [&](SiteRef s, EndKind k) -> std::pair<SiteRef, EndKind> {
    const auto& sites = c.circles[s.circle].sites;
    int m = (int)sites.size();
    if (k == kOut)  // forward along the segment starting here
      return {{s.circle, (s.pos + 1) % m}, kIn};
    return {{s.circle, (s.pos - 1 + m) % m}, kOut};
  };

  // which connection owns a given loose end, and whether it is the tail side
  auto conn_of = [&](SiteRef s, EndKind k) -> std::tuple<int, int, bool> {
    const Site& site = c.circles[s.circle].sites[s.pos];
    int a = site.arc;
    bool at_tail = !site.head;
    for (int side = 0; side < 2; ++side) {
      const Conn& cn = conns[a][side];
      if (at_tail && cn.t.circle == s.circle && cn.t.pos == s.pos && cn.tk == k)
        return {a, side, true};
      if (!at_tail && cn.h.circle == s.circle && cn.h.pos == s.pos && cn.hk == k)
        return {a, side, false};
    }
    throw std::runtime_error("dualize: loose end without connection");
  };

  for (int a0 = 0; a0 < c.arcs; ++a0) {
    for (int side0 = 0; side0 < 2; ++side0) {
      if (conns[a0][side0].visited) continue;
      CircleWord y;
      y.id = next_id++;
      int a = a0, side = side0;
      bool from_tail = true;  // seed jump crosses tail -> head
      while (true) {
        Conn& cn = conns[a][side];
        if (cn.visited) break;
        cn.visited = true;
        // dual-arc endpoint marker: the right band side carries the dual
        // tail, the left one the dual head; side bit from crossing direction
        Site marker;
        marker.arc = a;
        marker.head = side == 1;
        marker.left = (side == 0) ? from_tail : !from_tail;
        y.sites.push_back(marker);
        // land on the far side of the band and walk the segment
        auto [land, land_kind] =
            from_tail ? std::pair(cn.h, cn.hk) : std::pair(cn.t, cn.tk);
        auto [stop, stop_kind] = walk(land, land_kind);
        auto [na, nside, at_tail] = conn_of(stop, stop_kind);
        a = na;
        side = nside;
        from_tail = at_tail;
      }
      out.circles.push_back(std::move(y));
    }
  }
  return out;
}

namespace {

Site flipped_site(const Site& s) { return {s.arc, s.head, !s.left}; }

// try to match circle word a against b with given offset/flip; arc_map is a
// partial bijection
bool word_match(const std::vector<Site>& a, const std::vector<Site>& b, int offset,
                bool flip, std::vector<int>& arc_map, std::vector<int>& arc_map_rev) {
  int m = (int)a.size();
  std::vector<std::pair<int, int>> added;
  auto undo = [&]() {
    for (auto [x, y] : added) {
      arc_map[x] = -1;
      arc_map_rev[y] = -1;
    }
  };
  for (int k = 0; k < m; ++k) {
    Site sb = flip ? flipped_site(b[((offset - k) % m + m) % m]) : b[(offset + k) % m];
    const Site& sa = a[k];
    if (sa.head != sb.head || sa.left != sb.left) {
      undo();
      return false;
    }
    if (arc_map[sa.arc] == -1 && arc_map_rev[sb.arc] == -1) {
      arc_map[sa.arc] = sb.arc;
      arc_map_rev[sb.arc] = sa.arc;
      added.push_back({sa.arc, sb.arc});
    } else if (arc_map[sa.arc] != sb.arc) {
      undo();
      return false;
    }
  }
  return true;
}

bool iso_search(const Configuration& a, const Configuration& b, size_t i,
                std::vector<bool>& used, std::vector<int>& arc_map,
                std::vector<int>& arc_map_rev) {
  if (i == a.circles.size()) return true;
  const auto& wa = a.circles[i].sites;
  for (size_t j = 0; j < b.circles.size(); ++j) {
    if (used[j]) continue;
    const auto& wb = b.circles[j].sites;
    if (wa.size() != wb.size()) continue;
    int m = (int)wa.size();
    used[j] = true;
    if (m == 0) {
      if (iso_search(a, b, i + 1, used, arc_map, arc_map_rev)) return true;
    } else {
      for (int offset = 0; offset < m; ++offset) {
        for (int flip = 0; flip < 2; ++flip) {
          std::vector<int> save_map = arc_map, save_rev = arc_map_rev;
          if (word_match(wa, wb, offset, flip, arc_map, arc_map_rev)) {
            if (iso_search(a, b, i + 1, used, arc_map, arc_map_rev)) return true;
          }
          arc_map = std::move(save_map);
          arc_map_rev = std::move(save_rev);
        }
      }
    }
    used[j] = false;
  }
  return false;
}

bool isomorphic_exact(const Configuration& a, const Configuration& b) {
  if (a.arcs != b.arcs || a.circles.size() != b.circles.size()) return false;
  if (a.site_count() != b.site_count()) return false;
  std::vector<bool> used(b.circles.size(), false);
  std::vector<int> arc_map(a.arcs, -1), arc_map_rev(b.arcs, -1);
  return iso_search(a, b, 0, used, arc_map, arc_map_rev);
}

}  // namespace

bool isomorphic(const Configuration& a, const Configuration& b, bool up_to_reversal) {
  if (isomorphic_exact(a, b)) return true;
  if (up_to_reversal) return isomorphic_exact(reverse(a), b);
  return false;
}

std::string debug_string(const Configuration& c) {
  std::ostringstream os;
  for (const auto& cw : c.circles) {
    os << cw.id << ":(";
    for (size_t i = 0; i < cw.sites.size(); ++i) {
      if (i) os << " ";
      const Site& s = cw.sites[i];
      os << s.arc << (s.head ? "h" : "t") << (s.left ? "L" : "R");
    }
    os << ") ";
  }
  os << "#arcs=" << c.arcs;
  return os.str();
}

bool sphere_embedding_ok(const Configuration& c) {
  // connected configurations only; faces of the traced rotation system must
  // number arcs + 2
  if (!connected(c)) return false;
  int total_sites = c.site_count();
  for (const auto& cw : c.circles)
    if (cw.sites.empty()) return false;

  // directed edge ids: per circle segment 2 directions, per arc 2 directions
  // segment p of circle ci runs from site p to site p+1
  std::vector<int> seg_base(c.circles.size() + 1, 0);
  for (size_t ci = 0; ci < c.circles.size(); ++ci)
    seg_base[ci + 1] = seg_base[ci] + (int)c.circles[ci].sites.size();
  int S = total_sites;
  auto fwd = [&](int ci, int p) { return 2 * (seg_base[ci] + p); };
  auto bwd = [&](int ci, int p) { return 2 * (seg_base[ci] + p) + 1; };
  auto arc_f = [&](int a) { return 2 * S + 2 * a; };
  auto arc_b = [&](int a) { return 2 * S + 2 * a + 1; };
  int H = 2 * S + 2 * c.arcs;

  std::vector<int> twin(H), nxt(H, -1);
  for (size_t ci = 0; ci < c.circles.size(); ++ci) {
    int m = (int)c.circles[ci].sites.size();
    for (int p = 0; p < m; ++p) {
      twin[fwd(ci, p)] = bwd(ci, p);
      twin[bwd(ci, p)] = fwd(ci, p);
    }
  }
  for (int a = 0; a < c.arcs; ++a) {
    twin[arc_f(a)] = arc_b(a);
    twin[arc_b(a)] = arc_f(a);
  }
  // rotation at each site vertex: ccw order (out-seg, arc, in-seg-reversed)
  // when the arc leaves to the left, else (out-seg, in-seg-reversed, arc)
  for (size_t ci = 0; ci < c.circles.size(); ++ci) {
    int m = (int)c.circles[ci].sites.size();
    for (int p = 0; p < m; ++p) {
      const Site& s = c.circles[ci].sites[p];
      int out_seg = fwd(ci, p);
      int in_rev = bwd(ci, (p - 1 + m) % m);
      int arc = s.head ? arc_b(s.arc) : arc_f(s.arc);
      if (s.left) {
        nxt[out_seg] = arc;
        nxt[arc] = in_rev;
        nxt[in_rev] = out_seg;
      } else {
        nxt[out_seg] = in_rev;
        nxt[in_rev] = arc;
        nxt[arc] = out_seg;
      }
    }
  }
  // faces = orbits of h -> nxt(twin(h))
  std::vector<bool> seen(H, false);
  int faces = 0;
  for (int h0 = 0; h0 < H; ++h0) {
    if (seen[h0]) continue;
    int h = h0;
    while (!seen[h]) {
      seen[h] = true;
      h = nxt[twin[h]];
      if (h < 0) return false;
    }
    ++faces;
  }
  return faces == c.arcs + 2;
}

Configuration subconfiguration(const Configuration& c, int arc_i, int arc_j) {
  Configuration out;
  out.arcs = 2;
  for (const auto& cw : c.circles) {
    CircleWord w;
    w.id = cw.id;
    for (const Site& s : cw.sites) {
      if (s.arc == arc_i) w.sites.push_back({0, s.head, s.left});
      if (s.arc == arc_j) w.sites.push_back({1, s.head, s.left});
    }
    out.circles.push_back(std::move(w));
  }
  return out;
}

namespace {

CircleWord make_word(int id, std::initializer_list<Site> sites) {
  CircleWord w;
  w.id = id;
  w.sites = sites;
  return w;
}

Configuration make_config(int arcs, std::initializer_list<CircleWord> circles) {
  Configuration c;
  c.arcs = arcs;
  c.circles = circles;
  return c;
}

constexpr bool T = true, F = false;

}  // namespace

TwoDimTable TwoDimTable::build(const Choices& ch) {
  TwoDimTable tbl;
  // two circles joined by two arcs through the same region
  Configuration ladder_par = make_config(
      2, {make_word(1, {{0, F, F}, {1, F, F}}), make_word(2, {{0, T, F}, {1, T, F}})});
  Configuration ladder_anti = make_config(
      2, {make_word(1, {{0, F, F}, {1, T, F}}), make_word(2, {{0, T, F}, {1, F, F}})});
  // three circles around a common region, middle one meeting both arcs
  Configuration tripod_aligned = make_config(
      2, {make_word(1, {{0, F, F}, {1, F, F}}), make_word(2, {{0, T, F}}),
          make_word(3, {{1, T, F}})});
  Configuration tripod_mixed = make_config(
      2, {make_word(1, {{0, F, F}, {1, T, F}}), make_word(2, {{0, T, F}}),
          make_word(3, {{1, F, F}})});
  // nested chain: one leaf inside the middle circle, one outside
  Configuration nested_aligned = make_config(
      2, {make_word(1, {{0, F, T}, {1, F, F}}), make_word(2, {{0, T, F}}),
          make_word(3, {{1, T, F}})});
  Configuration nested_mixed = make_config(
      2, {make_word(1, {{0, F, T}, {1, T, F}}), make_word(2, {{0, T, F}}),
          make_word(3, {{1, F, F}})});
  // join arc plus a chord on the far side of the joined circle
  Configuration offside_a = make_config(
      2, {make_word(1, {{0, F, F}, {1, F, T}, {1, T, T}}), make_word(2, {{0, T, F}})});
  Configuration offside_b = make_config(
      2, {make_word(1, {{0, F, F}, {1, T, T}, {1, F, T}}), make_word(2, {{0, T, F}})});
  // join arc plus a chord through the joining region
  Configuration inside_a = make_config(
      2, {make_word(1, {{0, F, F}, {1, F, F}, {1, T, F}}), make_word(2, {{0, T, F}})});
  Configuration inside_b = make_config(
      2, {make_word(1, {{0, F, F}, {1, T, F}, {1, F, F}}), make_word(2, {{0, T, F}})});
  // one circle, linked chords on opposite sides
  Configuration inter_a = make_config(
      2, {make_word(1, {{0, F, T}, {1, F, F}, {0, T, T}, {1, T, F}})});
  Configuration inter_b = make_config(
      2, {make_word(1, {{0, F, T}, {1, T, F}, {0, T, T}, {1, F, F}})});

  tbl.ref[1] = ladder_par;
  tbl.ref[9] = ladder_anti;
  tbl.ref[2] = ch.tripod_aligned_is_2 ? tripod_aligned : tripod_mixed;
  tbl.ref[10] = ch.tripod_aligned_is_2 ? tripod_mixed : tripod_aligned;
  tbl.ref[3] = ch.nested_aligned_is_3 ? nested_aligned : nested_mixed;
  tbl.ref[11] = ch.nested_aligned_is_3 ? nested_mixed : nested_aligned;
  tbl.ref[6] = ch.offside_first_is_6 ? offside_a : offside_b;
  tbl.ref[14] = mirror(tbl.ref[6]);
  tbl.ref[7] = ch.inside_first_is_7 ? inside_a : inside_b;
  tbl.ref[15] = mirror(tbl.ref[7]);
  tbl.ref[8] = ch.interleaved_first_is_8 ? inter_a : inter_b;
  tbl.ref[16] = mirror(tbl.ref[8]);
  tbl.ref[4] = dualize(tbl.ref[2]);
  tbl.ref[5] = dualize(tbl.ref[3]);
  tbl.ref[12] = dualize(tbl.ref[10]);
  tbl.ref[13] = dualize(tbl.ref[11]);
  return tbl;
}

const TwoDimTable& TwoDimTable::standard() {
  static const TwoDimTable tbl = build(Choices{});
  return tbl;
}

bool ConfigClass::contributes() const {
  switch (kind) {
    case Zero: return false;
    case TwoDim: return (type >= 1 && type <= 9);
    default: return true;
  }
}

std::string ConfigClass::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Zero: os << "zero"; break;
    case Split: os << "split"; break;
    case Join: os << "join"; break;
    case TwoDim: os << "type" << type; break;
    case A: os << "A" << k; break;
    case B: os << "B" << k; break;
    case C: os << "C(" << p << "," << q << ")"; break;
    case D: os << "D(" << p << "," << q << ")"; break;
    case E: os << "E(" << p << "," << q << ")"; break;
  }
  return os.str();
}

int classify_two_dim(const Configuration& c, const TwoDimTable& table) {
  int found = 0;
  for (int t = 1; t <= 16; ++t) {
    if (isomorphic(c, table.ref[t], true)) {
      if (found) throw std::runtime_error("two-dimensional configuration matches types " +
                                          std::to_string(found) + " and " + std::to_string(t));
      found = t;
    }
  }
  if (!found)
    throw std::runtime_error("unclassifiable two-dimensional configuration: " +
                             debug_string(c));
  return found;
}

namespace {

// classify the active part of the two-arc subconfiguration; 0 when
// disconnected
int pair_type(const Configuration& c, int i, int j, const TwoDimTable& table) {
  Configuration act = active_part(subconfiguration(c, i, j));
  if (!connected(act)) return 0;
  return classify_two_dim(act, table);
}

bool all_pairs_are(const Configuration& c, const TwoDimTable& table,
                   const std::set<int>& allowed) {
  for (int i = 0; i < c.arcs; ++i)
    for (int j = i + 1; j < c.arcs; ++j)
      if (!allowed.count(pair_type(c, i, j, table))) return false;
  return true;
}

bool is_A_shape(const Configuration& c, const TwoDimTable& table, int k) {
  if ((int)c.circles.size() != 2) return false;
  Configuration dl = dualize(c);
  if ((int)dl.circles.size() != k) return false;
  return all_pairs_are(c, table, {1});
}

// single starting circle with arcs on both sides, every cross-side pair
// interleaved (type 8)
bool is_C_shape(const Configuration& c, const TwoDimTable& table, int* p_out,
                int* q_out) {
  if (c.circles.size() != 1) return false;
  std::vector<int> side_of(c.arcs, -1);
  for (int a = 0; a < c.arcs; ++a) {
    auto t = c.find_end(a, false), h = c.find_end(a, true);
    if (t.circle != 0 || h.circle != 0) return false;
    const Site& ts = c.circles[0].sites[t.pos];
    const Site& hs = c.circles[0].sites[h.pos];
    if (ts.left != hs.left)
      throw std::runtime_error("arc endpoints disagree about their side");
    side_of[a] = ts.left ? 1 : 0;
  }
  int p = (int)std::count(side_of.begin(), side_of.end(), 0);
  int q = c.arcs - p;
  if (p < 1 || q < 1) return false;
  for (int i = 0; i < c.arcs; ++i)
    for (int j = i + 1; j < c.arcs; ++j) {
      if (side_of[i] == side_of[j]) continue;
      if (pair_type(c, i, j, table) != 8) return false;
    }
  if (p_out) *p_out = std::max(p, q);
  if (q_out) *q_out = std::min(p, q);
  return true;
}

bool is_E_shape(const Configuration& c, const TwoDimTable& table, int e, int* p_out,
                int* q_out) {
  if (!all_pairs_are(c, table, {2, 3, 4, 5, 6, 7})) return false;
  int s = (int)c.circles.size();
  int p = s - 1, q = e - 1;
  if (p + q != c.arcs) return false;
  // the central starting circle meets every arc
  int central = 0;
  for (int ci = 0; ci < s; ++ci) {
    bool all = true;
    for (int a = 0; a < c.arcs && all; ++a) all = c.circle_meets_arc(ci, a);
    if (all) ++central;
  }
  if (central != 1 && !(s == 1)) return false;
  if (p_out) *p_out = p;
  if (q_out) *q_out = q;
  return true;
}

}  // namespace

ConfigClass classify(const Configuration& c, const TwoDimTable& table) {
  ConfigClass out;
  out.k = c.arcs;
  if (c.arcs == 0) return out;
  for (const auto& cw : c.circles)
    if (cw.sites.empty())
      throw std::runtime_error("classify expects the active part");
  if (!connected(c)) return out;

  if (c.arcs == 1) {
    auto t = c.find_end(0, false), h = c.find_end(0, true);
    out.kind = t.circle == h.circle ? ConfigClass::Split : ConfigClass::Join;
    return out;
  }
  if (c.arcs == 2) {
    out.kind = ConfigClass::TwoDim;
    out.type = classify_two_dim(c, table);
    return out;
  }

  int k = c.arcs;
  int s = (int)c.circles.size();
  Configuration dl = dualize(c);
  int e = (int)dl.circles.size();

  if (s == 2 && e == k && is_A_shape(c, table, k)) {
    out.kind = ConfigClass::A;
    return out;
  }
  if (s == k && e == 2 && is_A_shape(mirror(dl), table, k)) {
    out.kind = ConfigClass::B;
    return out;
  }
  if (s == 1) {
    int p, q;
    if (is_C_shape(c, table, &p, &q)) {
      out.kind = ConfigClass::C;
      out.p = p;
      out.q = q;
      return out;
    }
  }
  if (e == 1) {
    int p, q;
    if (is_C_shape(mirror(dl), table, &p, &q)) {
      out.kind = ConfigClass::D;
      out.p = p;
      out.q = q;
      return out;
    }
  }
  {
    int p, q;
    if (is_E_shape(c, table, e, &p, &q)) {
      out.kind = ConfigClass::E;
      out.p = p;
      out.q = q;
      return out;
    }
  }
  return out;
}

std::vector<ConfigClass> classify_all_matches(const Configuration& c,
                                              const TwoDimTable& table) {
  std::vector<ConfigClass> out;
  if (c.arcs < 3 || !connected(c)) return out;
  int k = c.arcs;
  int s = (int)c.circles.size();
  Configuration dl = dualize(c);
  int e = (int)dl.circles.size();
  int p, q;
  if (s == 2 && e == k && is_A_shape(c, table, k))
    out.push_back({ConfigClass::A, 0, 0, 0, k, });
  if (s == k && e == 2 && is_A_shape(mirror(dl), table, k))
    out.push_back({ConfigClass::B, 0, 0, 0, k});
  if (s == 1 && is_C_shape(c, table, &p, &q))
    out.push_back({ConfigClass::C, 0, p, q, k});
  if (e == 1 && is_C_shape(mirror(dl), table, &p, &q))
    out.push_back({ConfigClass::D, 0, p, q, k});
  if (is_E_shape(c, table, e, &p, &q))
    out.push_back({ConfigClass::E, 0, p, q, k});
  return out;
}

}  // namespace khoss
