#pragma once

#include "torcay/cayley.hpp"
#include "torcay/types.hpp"

#include <array>
#include <filesystem>
#include <utility>
#include <vector>

namespace torcay {

/// Cartesian image of hexagonal-basis coordinates, with unit bond length:
/// e1 = (1, 0), e2 = (-1/2, sqrt(3)/2).
Eigen::Vector2d hex_to_cartesian(double x, double y);

/// Flat positions of the X_{p,q} vertices in the plane. A vertex (t, +-)
/// sits at t +- e0 with e0 = e1 + e2; the torus fundamental domain is the
/// rectangle spanned by the orthogonal vectors span_u = p*v1 and
/// span_v = q*(-v1 + 2*v2), of lengths sqrt(3)*p and 3*q bond units.
struct PlanarLayout {
  Int p = 0;
  Int q = 0;
  double gap = 0.0;
  FullereneGraph graph;
  std::vector<Eigen::Vector2d> positions;  // Cartesian, bond length = 1
  std::vector<Eigen::Vector2d> uv;         // fractions of (span_u, span_v), in [0,1)^2
  Eigen::Vector2d span_u;
  Eigen::Vector2d span_v;
};

/// Builds X_{p,q} and its planar coordinates. Throws if the graph has
/// multi-edges (degenerate parameters).
PlanarLayout planar_layout(Int p, Int q);

struct EdgeStats {
  double min_length = 0.0;
  double max_length = 0.0;
  double mean_length = 0.0;
  double ratio = 0.0;  // max / min
};

/// Image of the layout on the torus of revolution. The radii come from the
/// circumference conditions 2*pi*r = |span_u| and 2*pi*R = |span_v|, so both
/// directions unroll at unit scale on the centerline.
struct Embedding3D {
  Int p = 0;
  Int q = 0;
  double gap = 0.0;
  double tube_radius = 0.0;  // r
  double ring_radius = 0.0;  // R
  std::vector<Eigen::Vector3d> positions;
  std::vector<std::pair<Int, Int>> edges;
  std::vector<double> edge_lengths;  // 3D chord lengths, same order as edges
  std::vector<std::array<Int, 6>> faces;
  EdgeStats stats;
};

/// Maps (u, v) fractions to ((R + r cos phi) cos psi, (R + r cos phi) sin psi,
/// r sin phi) with phi = 2*pi*u, psi = 2*pi*v. Throws when r >= R
/// (self-intersecting torus, i.e. sqrt(3)*p >= 3*q).
Embedding3D torus_map(const PlanarLayout& layout);

/// XYZ export: atom count, then a comment line `p=P q=Q gap=G`, then one
/// `C x y z` line per vertex (coordinates times bond_scale, 6 decimals).
void export_xyz(const Embedding3D& embedding, double bond_scale,
                const std::filesystem::path& path);

/// Wavefront OBJ export: `v` per vertex, `l` per edge, `f` per hexagonal
/// face, all with 1-based indices.
void export_obj(const Embedding3D& embedding, const std::filesystem::path& path);

}  // namespace torcay
