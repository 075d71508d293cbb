#include "khoss/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace khoss {

std::pair<int, int> LinkDiagram::sign_counts() const {
  int p = 0, m = 0;
  for (const auto& x : crossings) (x.sign > 0 ? p : m)++;
  return {p, m};
}

int LinkDiagram::writhe() const {
  auto [p, m] = sign_counts();
  return p - m;
}

int LinkDiagram::distinguished_component() const {
  int target = basepoint ? *basepoint
                         : (edge_labels.empty() ? 0 : edge_labels.front());
  for (int i = 0; i < (int)components.size(); ++i)
    for (int e : components[i])
      if (e == target) return i;
  return 0;
}

namespace {

struct Slot {
  int crossing;
  int pos;  // 0..3
};

// Role of a slot as head (incoming) or tail (outgoing) of its edge, expressed
// as affine function  role = base + coef * o  of the crossing's over-direction
// bit o (o = 1 means over-strand enters at slot 1, exits at slot 3).
// role 1 = head (edge points into the crossing).
void slot_role(int pos, int& base, int& coef) {
  switch (pos) {
    case 0: base = 1; coef = 0; break;  // under-strand in
    case 2: base = 0; coef = 0; break;  // under-strand out
    case 1: base = 0; coef = 1; break;
    case 3: base = 1; coef = 1; break;
    default: base = 0; coef = 0; break;
  }
}

// Assign over-strand directions so every edge has exactly one head and one
// tail occurrence. Unconstrained crossings (components never passing under)
// default to o = 1.
std::vector<int> solve_orientations(const std::vector<Crossing>& xs,
                                    const std::map<int, std::vector<Slot>>& occ) {
  int n = (int)xs.size();
  // Union-find with parity over variables o_0..o_{n-1} plus constant node n.
  std::vector<int> parent(n + 1), par(n + 1, 0);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::pair<int, int>(int)> find = [&](int v) -> std::pair<int, int> {
    if (parent[v] == v) return {v, 0};
    auto [r, p] = find(parent[v]);
    parent[v] = r;
    par[v] ^= p;
    return {r, par[v]};
  };
  auto unite = [&](int a, int b, int rel) -> bool {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent[ra] = rb;
    par[ra] = pa ^ pb ^ rel;
    return true;
  };
  const int kOne = n;  // constant-1 node
  for (const auto& [label, slots] : occ) {
    int b1, c1, b2, c2;
    slot_role(slots[0].pos, b1, c1);
    slot_role(slots[1].pos, b2, c2);
    // exactly one head: role1 + role2 = 1  (mod 2)
    int rhs = 1 ^ b1 ^ b2;
    int x1 = c1 ? slots[0].crossing : -1;
    int x2 = c2 ? slots[1].crossing : -1;
    bool ok;
    if (x1 >= 0 && x2 >= 0)
      ok = unite(x1, x2, rhs);
    else if (x1 >= 0)
      ok = unite(x1, kOne, rhs ^ 1);
    else if (x2 >= 0)
      ok = unite(x2, kOne, rhs ^ 1);
    else
      ok = (rhs == 0);
    if (!ok)
      throw DiagramError("edge " + std::to_string(label) +
                         ": inconsistent strand orientations");
  }
  find(kOne);
  std::vector<int> o(n, 1);
  for (int i = 0; i < n; ++i) {
    auto [r, p] = find(i);
    auto [r1, p1] = find(kOne);
    if (r == r1)
      o[i] = p ^ p1 ^ 1;  // node kOne represents value 1
    // else free: keep default 1
  }
  return o;
}

std::vector<std::vector<int>> trace_components(const LinkDiagram& d,
                                               const std::map<int, std::vector<Slot>>& occ) {
  // successor of an oriented edge: enter a crossing at its head slot, leave
  // along the same strand at the matching tail slot.
  std::map<int, int> succ;
  for (const auto& [label, slots] : occ) {
    (void)slots;
    succ[label] = -1;
  }
  for (int xi = 0; xi < (int)d.crossings.size(); ++xi) {
    const Crossing& x = d.crossings[xi];
    int under_in = x.edges[0], under_out = x.edges[2];
    int over_in = x.over_in_at_b ? x.edges[1] : x.edges[3];
    int over_out = x.over_in_at_b ? x.edges[3] : x.edges[1];
    succ[under_in] = under_out;
    succ[over_in] = over_out;
  }
  std::vector<std::vector<int>> comps;
  std::map<int, bool> seen;
  for (const auto& [label, s] : succ) {
    if (seen[label]) continue;
    std::vector<int> cyc;
    int e = label;
    while (!seen[e]) {
      seen[e] = true;
      cyc.push_back(e);
      e = succ[e];
      if (e < 0) throw DiagramError("open strand during component trace");
    }
    comps.push_back(std::move(cyc));
  }
  return comps;
}

}  // namespace

LinkDiagram parse_pd(const std::string& text, bool allow_empty_unknot) {
  LinkDiagram d;
  d.source_text = text;
  std::vector<std::array<int, 4>> raw;
  size_t i = 0;
  auto skip_ws = [&]() {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != 'X' && text[i] != 'x')
      throw DiagramError("malformed token at position " + std::to_string(i) +
                         ": expected 'X'");
    ++i;
    skip_ws();
    if (i >= text.size() || text[i] != '(')
      throw DiagramError("malformed token: expected '(' after X");
    ++i;
    std::array<int, 4> e{};
    for (int k = 0; k < 4; ++k) {
      skip_ws();
      size_t start = i;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
      if (i == start) throw DiagramError("malformed token: expected edge label");
      e[k] = std::stoi(text.substr(start, i - start));
      if (e[k] <= 0) throw DiagramError("edge labels must be positive");
      skip_ws();
      char want = k < 3 ? ',' : ')';
      if (i >= text.size() || text[i] != want)
        throw DiagramError(std::string("malformed token: expected '") + want + "'");
      ++i;
    }
    raw.push_back(e);
    skip_ws();
  }
  if (raw.empty()) {
    if (!allow_empty_unknot) throw DiagramError("empty diagram");
    d.zero_crossing_unknot = true;
    d.edge_labels = {1};
    d.components = {{1}};
    return d;
  }

  std::map<int, std::vector<Slot>> occ;
  for (int xi = 0; xi < (int)raw.size(); ++xi) {
    Crossing x;
    x.edges = raw[xi];
    d.crossings.push_back(x);
    for (int p = 0; p < 4; ++p) occ[raw[xi][p]].push_back({xi, p});
  }
  for (const auto& [label, slots] : occ) {
    if (slots.size() != 2)
      throw DiagramError("edge label " + std::to_string(label) + " occurs " +
                         std::to_string(slots.size()) + " times, expected 2");
    d.edge_labels.push_back(label);
  }

  std::vector<int> o = solve_orientations(d.crossings, occ);
  for (int xi = 0; xi < (int)d.crossings.size(); ++xi) {
    d.crossings[xi].over_in_at_b = o[xi] == 1;
    d.crossings[xi].sign = o[xi] == 1 ? +1 : -1;
  }

  d.components = trace_components(d, occ);

  PlanarMap pm = build_planar_map(d);
  if (!pm.euler_ok)
    throw DiagramError("incidence structure is not planar (face count fails the Euler formula)");
  d.split = pm.components > 1;
  return d;
}

LinkDiagram parse_braid(int strands, const std::vector<int>& word) {
  if (strands < 1) throw DiagramError("braid needs at least one strand");
  for (int w : word) {
    if (w == 0 || std::abs(w) >= strands)
      throw DiagramError("braid generator " + std::to_string(w) +
                         " out of range for " + std::to_string(strands) + " strands");
  }
  if (word.empty()) {
    if (strands != 1)
      throw DiagramError("empty braid word only supported for a single strand");
    LinkDiagram d;
    d.zero_crossing_unknot = true;
    d.from_braid = true;
    d.braid_strands = 1;
    d.edge_labels = {1};
    d.components = {{1}};
    return d;
  }

  // Strand positions run bottom to top; at generator ±i the strands at
  // positions i, i+1 cross. Edge ids are assigned per vertical segment and the
  // closure identifies the top of each strand with its bottom.
  int next_edge = 1;
  std::vector<int> cur(strands);
  std::vector<int> first(strands);
  for (int s = 0; s < strands; ++s) cur[s] = first[s] = next_edge++;
  std::vector<bool> touched(strands, false);

  LinkDiagram d;
  d.from_braid = true;
  d.braid_strands = strands;
  for (int w : word) {
    int i = std::abs(w) - 1;
    touched[i] = touched[i + 1] = true;
    int ni = next_edge++, ni1 = next_edge++;
    Crossing x;
    x.braid_tagged = true;
    if (w > 0) {
      // positive: left strand passes under, entering bottom-left (slot 0).
      // slots ccw from bottom-left: (SW, SE, NE, NW)
      x.edges = {cur[i], cur[i + 1], ni1, ni};
      x.braid_zero_parallel = true;
    } else {
      // negative: right strand passes under, entering bottom-right.
      // slots ccw from bottom-right: (SE, NE, NW, SW)
      x.edges = {cur[i + 1], ni1, ni, cur[i]};
      x.braid_zero_parallel = false;
    }
    d.crossings.push_back(x);
    cur[i] = ni;
    cur[i + 1] = ni1;
  }
  for (int s = 0; s < strands; ++s)
    if (!touched[s])
      throw DiagramError("strand " + std::to_string(s + 1) +
                         " unused by the braid word");

  // closure: rewrite top edge ids to the bottom ones
  std::map<int, int> rename;
  for (int s = 0; s < strands; ++s) rename[cur[s]] = first[s];
  for (auto& x : d.crossings)
    for (auto& e : x.edges)
      if (auto it = rename.find(e); it != rename.end()) e = it->second;

  // relabel edges 1..2n in first-appearance order for tidy serialization
  std::map<int, int> compact;
  for (auto& x : d.crossings)
    for (auto& e : x.edges)
      if (!compact.count(e)) {
        int id = (int)compact.size() + 1;
        compact[e] = id;
      }
  for (auto& x : d.crossings)
    for (auto& e : x.edges) e = compact[e];

  std::map<int, std::vector<Slot>> occ;
  for (int xi = 0; xi < (int)d.crossings.size(); ++xi)
    for (int p = 0; p < 4; ++p) occ[d.crossings[xi].edges[p]].push_back({xi, p});
  for (const auto& [label, slots] : occ) {
    if (slots.size() != 2)
      throw DiagramError("braid closure produced a bad edge multiplicity");
    d.edge_labels.push_back(label);
  }
  std::vector<int> o = solve_orientations(d.crossings, occ);
  for (int xi = 0; xi < (int)d.crossings.size(); ++xi) {
    d.crossings[xi].over_in_at_b = o[xi] == 1;
    d.crossings[xi].sign = o[xi] == 1 ? +1 : -1;
  }
  d.components = trace_components(d, occ);
  PlanarMap pm = build_planar_map(d);
  if (!pm.euler_ok) throw DiagramError("braid closure failed the planarity check");
  d.split = pm.components > 1;

  std::ostringstream os;
  os << strands << ":";
  for (int w : word) os << " " << w;
  d.source_text = os.str();
  return d;
}

LinkDiagram parse_braid_text(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw DiagramError("braid input must look like \"<strands>: w1 w2 ...\"");
  int strands = 0;
  try {
    strands = std::stoi(text.substr(0, colon));
  } catch (...) {
    throw DiagramError("bad strand count in braid input");
  }
  std::istringstream is(text.substr(colon + 1));
  std::vector<int> word;
  int w;
  while (is >> w) word.push_back(w);
  if (!is.eof()) throw DiagramError("bad braid word token");
  return parse_braid(strands, word);
}

std::string serialize_pd(const LinkDiagram& d) {
  if (d.zero_crossing_unknot) return "";
  std::ostringstream os;
  for (int i = 0; i < (int)d.crossings.size(); ++i) {
    if (i) os << " ";
    const auto& e = d.crossings[i].edges;
    os << "X(" << e[0] << "," << e[1] << "," << e[2] << "," << e[3] << ")";
  }
  return os.str();
}

PlanarMap build_planar_map(const LinkDiagram& d) {
  PlanarMap pm;
  int n = d.n();
  pm.vertices = n;
  if (n == 0) {
    // a bare circle: one edge-cycle, two faces on the sphere
    pm.faces = 2;
    pm.edge_count = 0;
    pm.components = 1;
    pm.euler_ok = true;
    return pm;
  }
  int H = 4 * n;
  pm.twin.assign(H, -1);
  std::map<int, std::vector<int>> occ;
  for (int xi = 0; xi < n; ++xi)
    for (int p = 0; p < 4; ++p) occ[d.crossings[xi].edges[p]].push_back(4 * xi + p);
  for (const auto& [label, hs] : occ) {
    (void)label;
    if (hs.size() != 2) throw DiagramError("bad edge multiplicity");
    pm.twin[hs[0]] = hs[1];
    pm.twin[hs[1]] = hs[0];
  }
  pm.edge_count = H / 2;

  // faces: orbits of h -> ccw-next(twin(h))
  auto ccw_next = [&](int h) { return (h & ~3) | ((h + 1) & 3); };
  pm.face_of.assign(H, -1);
  int fcount = 0;
  for (int h0 = 0; h0 < H; ++h0) {
    if (pm.face_of[h0] >= 0) continue;
    int h = h0;
    do {
      pm.face_of[h] = fcount;
      h = ccw_next(pm.twin[h]);
    } while (h != h0);
    ++fcount;
  }
  pm.faces = fcount;

  // connected components of the crossing graph
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int p = 0; p < 4; ++p) {
        int w = pm.twin[4 * v + p] / 4;
        if (comp[w] < 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  pm.components = ncomp;

  // Euler per component: faces traced within one component belong to it
  std::vector<int> vcnt(ncomp, 0), ecnt(ncomp, 0), fcnt(ncomp, 0);
  for (int v = 0; v < n; ++v) vcnt[comp[v]]++;
  for (int h = 0; h < H; ++h)
    if (h < pm.twin[h]) ecnt[comp[h / 4]]++;
  std::vector<int> fseen(fcount, -1);
  for (int h = 0; h < H; ++h) {
    int f = pm.face_of[h];
    if (fseen[f] < 0) {
      fseen[f] = comp[h / 4];
      fcnt[comp[h / 4]]++;
    }
  }
  pm.euler_ok = true;
  for (int c = 0; c < ncomp; ++c)
    if (vcnt[c] - ecnt[c] + fcnt[c] != 2) pm.euler_ok = false;
  return pm;
}

}  // namespace khoss
