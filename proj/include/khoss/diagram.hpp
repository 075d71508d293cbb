#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace khoss {

struct DiagramError : std::exception {
  std::string msg;
  explicit DiagramError(std::string m) : msg(std::move(m)) {}
  const char* what() const noexcept override { return msg.c_str(); }
};

// One crossing of a planar diagram. edges[] lists the four incident PD edge
// labels counterclockwise, starting at the incoming under-strand.
struct Crossing {
  std::array<int, 4> edges{};
  int sign = 0;             // +1/-1 from the two strand orientations
  bool over_in_at_b = true; // over-strand enters at edges[1], exits at edges[3]
  // set for braid-built diagrams: the 0-smoothing keeps the strands parallel
  // (surgery arc horizontal) as opposed to the cap/cup smoothing (arc vertical)
  bool braid_tagged = false;
  bool braid_zero_parallel = false;
};

struct LinkDiagram {
  std::vector<Crossing> crossings;
  std::vector<int> edge_labels;              // sorted, each occurring twice
  std::vector<std::vector<int>> components;  // oriented link components (edge cycles)
  std::optional<int> basepoint;              // edge label for the reduced theory
  bool split = false;                        // diagram graph is disconnected
  bool zero_crossing_unknot = false;
  bool from_braid = false;
  int braid_strands = 0;
  std::string source_text;

  int n() const { return (int)crossings.size(); }
  std::pair<int, int> sign_counts() const;  // (n_plus, n_minus)
  int writhe() const;
  // Component index containing the basepoint (default: component of the
  // minimal edge label).
  int distinguished_component() const;
};

LinkDiagram parse_pd(const std::string& text, bool allow_empty_unknot = false);
LinkDiagram parse_braid(int strands, const std::vector<int>& word);
// "k: w1 w2 ..." with signed generator indices
LinkDiagram parse_braid_text(const std::string& text);
std::string serialize_pd(const LinkDiagram& d);

// Half-edge planar map of the underlying 4-valent graph. Half-edge index is
// 4*crossing + slot; rotation is the counterclockwise slot order.
struct PlanarMap {
  std::vector<int> twin;      // other occurrence of the same edge
  std::vector<int> face_of;   // face index per half-edge
  int vertices = 0;
  int edge_count = 0;
  int faces = 0;
  int components = 0;
  bool euler_ok = false;  // V - E + F == 2 per connected component
};

PlanarMap build_planar_map(const LinkDiagram& d);

}  // namespace khoss
