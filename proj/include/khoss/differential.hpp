#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "khoss/configuration.hpp"
#include "khoss/f2.hpp"

namespace khoss {

enum class Theory { Khovanov, Standard, Mirror, Reduced };

struct FaceContext {
  const LinkDiagram* d = nullptr;
  const ResolutionTable* rt = nullptr;
  const Basis* basis = nullptr;
  Decoration t;
  bool mirror_variant = false;
  const TwoDimTable* table = &TwoDimTable::standard();
};

// The decorated configuration of a face: circles of I plus one oriented arc
// per changed coordinate, embedded via the diagram.
Configuration face_configuration(const FaceContext& ctx, uint32_t I, uint32_t J,
                                 const std::vector<int>& coords);
// The mirrored dual of the face configuration, built on the circles of J with
// the 90-degree rotated arcs.
Configuration face_dual_mirror_configuration(const FaceContext& ctx, uint32_t I,
                                             uint32_t J,
                                             const std::vector<int>& coords);

// Appends the matrix entries (column, row) of the face map to `out`.
void eval_face(const FaceContext& ctx, uint32_t I, uint32_t J,
               const std::vector<int>& coords,
               std::vector<std::pair<int, int>>& out);

// Local form of the face map for rule checks: nonzero images per starting
// monomial mask, as sorted lists of ending monomial masks.
std::vector<std::vector<uint32_t>> face_matrix(const FaceContext& ctx, uint32_t I,
                                               uint32_t J,
                                               const std::vector<int>& coords);
// Same for the mirrored dual face map V(J) -> V(I).
std::vector<std::vector<uint32_t>> face_dual_mirror_matrix(
    const FaceContext& ctx, uint32_t I, uint32_t J, const std::vector<int>& coords);

SparseMapF2 assemble_dk(const FaceContext& ctx, int k);
SparseMapF2 assemble_d(const FaceContext& ctx);
SparseMapF2 assemble_Hm(const FaceContext& ctx, int m);  // m = crossing index, 0-based
// Khovanov differential assembled from plain merge/split edge maps, without
// the configuration classifier. Used as the independent route.
SparseMapF2 assemble_khovanov_d1(const LinkDiagram& d, const ResolutionTable& rt,
                                 const Basis& basis);

// G = id + H_m, the filtered chain isomorphism between decorations differing
// at crossing m.
SparseMapF2 decoration_iso(const FaceContext& ctx, int m);

struct Subcomplex {
  std::vector<int> gens;   // basis indices, ascending
  SparseMapF2 map;         // in local indices
  int q_shift = 0, delta_shift = 0;
};

// Span of the generators divisible by the circle through the basepoint.
Subcomplex reduced_subcomplex(const FaceContext& ctx, const SparseMapF2& d_full,
                              int basepoint_edge);
Subcomplex full_subcomplex(const FaceContext& ctx, const SparseMapF2& d_full);

// Product of all strand circles at the braid-oriented resolution.
std::vector<int> transverse_cycle(const FaceContext& ctx);

}  // namespace khoss
